#include "heightline/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

namespace heightline {

namespace {

std::int64_t plotted_count(const Spectrum& s, PlotOptions opt) {
  return s.p.value() - (opt.include_last ? 0 : 1);
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

constexpr int kWidth = 960;
constexpr int kHeight = 540;
constexpr int kLeft = 70;
constexpr int kRight = 20;
constexpr int kTop = 40;
constexpr int kBottom = 50;

}  // namespace

void write_plot_csv(const Spectrum& s, std::ostream& os, PlotOptions opt) {
  os << "# p=" << s.p.value() << " method=" << to_string(s.method) << '\n';
  os << "a,height,k_min\n";
  const std::int64_t count = plotted_count(s, opt);
  for (std::int64_t a = 0; a < count; ++a) {
    const auto& rec = s.heights[static_cast<std::size_t>(a)];
    os << rec.a << ',' << rec.h << ',' << rec.k_min << '\n';
  }
}

void write_plot_svg(const Spectrum& s, std::ostream& os, PlotOptions opt) {
  const std::int64_t count = plotted_count(s, opt);
  std::int64_t h_max = 1;
  for (std::int64_t a = 0; a < count; ++a) h_max = std::max(h_max, s.h(a));
  const std::int64_t x_max = std::max<std::int64_t>(count - 1, 1);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](std::int64_t a) { return kLeft + plot_w * static_cast<double>(a) / static_cast<double>(x_max); };
  auto py = [&](std::int64_t h) {
    return kTop + plot_h * (1.0 - static_cast<double>(h) / static_cast<double>(h_max));
  };
  const double radius = count > 500 ? 1.2 : 3.0;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"16\">Heights for the prime " << s.p.value() << "</text>\n";

  const std::string x0 = fixed2(kLeft), x1 = fixed2(kLeft + plot_w);
  const std::string y0 = fixed2(kTop + plot_h), y1 = fixed2(kTop);
  os << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\"/>\n";
  os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1 << "\"/>\n";
  os << "</g>\n";
  os << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<text x=\"" << x0 << "\" y=\"" << fixed2(kTop + plot_h + 18) << "\" text-anchor=\"middle\">0</text>\n";
  os << "<text x=\"" << x1 << "\" y=\"" << fixed2(kTop + plot_h + 18) << "\" text-anchor=\"middle\">" << x_max
     << "</text>\n";
  os << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << y0 << "\" text-anchor=\"end\">0</text>\n";
  os << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << y1 << "\" text-anchor=\"end\">" << h_max << "</text>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">a</text>\n";
  os << "<text x=\"16\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\">h(a)</text>\n";
  os << "</g>\n";

  os << "<g class=\"marks\" fill=\"steelblue\">\n";
  for (std::int64_t a = 0; a < count; ++a) {
    os << "<circle class=\"mark\" cx=\"" << fixed2(px(a)) << "\" cy=\"" << fixed2(py(s.h(a))) << "\" r=\""
       << fixed2(radius) << "\" data-a=\"" << a << "\" data-h=\"" << s.h(a) << "\"/>\n";
  }
  os << "</g>\n";
  os << "</svg>\n";
}

}  // namespace heightline
