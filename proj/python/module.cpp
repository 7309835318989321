#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "heightline/heightline.hpp"

namespace py = pybind11;
using namespace heightline;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object builtin_int = py::module_::import("builtins").attr("int");
  return fraction(builtin_int(to_string(r.num())), builtin_int(to_string(r.den())));
}

Rational from_number(const py::handle& x) {
  py::object f = py::module_::import("fractions").attr("Fraction")(x);
  return Rational(static_cast<int128>(f.attr("numerator").cast<std::int64_t>()),
                  static_cast<int128>(f.attr("denominator").cast<std::int64_t>()));
}

HeightMethod method_of(const std::string& s) { return parse_height_method(s); }

py::dict window_dict(const BoundWindow& w) {
  py::dict d;
  d["lo"] = to_fraction(w.lo);
  d["hi"] = to_fraction(w.hi);
  d["bound"] = to_fraction(w.bound);
  d["ell"] = w.ell;
  d["m"] = w.m;
  d["w"] = w.w ? to_fraction(*w.w) : py::none();
  return d;
}

py::dict report_dict(const VerificationReport& r) {
  py::list checks;
  for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, to_string(c.status), c.detail));
  py::dict d;
  d["p"] = r.p.value();
  d["overall"] = to_string(r.overall);
  d["checks"] = checks;
  d["summary"] = summarize(r);
  return d;
}

}  // namespace

PYBIND11_MODULE(_heightline, m) {
  m.doc() = "Heights of points on the projective line over a prime field.";

  py::register_exception<NotInvertibleError>(m, "NotInvertibleError", PyExc_ValueError);
  py::register_exception<HypothesisNotMetError>(m, "HypothesisNotMetError", PyExc_ValueError);
  py::register_exception<TooLargeError>(m, "TooLargeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("is_odd_prime", &is_odd_prime, py::arg("n"));
  m.def(
      "mod_inverse", [](std::int64_t a, std::int64_t p) { return mod_inverse(a, PrimeModulus(p)); }, py::arg("a"),
      py::arg("p"));

  py::class_<HeightRecord>(m, "HeightRecord")
      .def_readonly("a", &HeightRecord::a)
      .def_readonly("h", &HeightRecord::h)
      .def_readonly("k_min", &HeightRecord::k_min)
      .def("__eq__", [](const HeightRecord& x, const HeightRecord& y) { return x == y; })
      .def("__repr__", [](const HeightRecord& r) {
        return "HeightRecord(a=" + std::to_string(r.a) + ", h=" + std::to_string(r.h) +
               ", k_min=" + std::to_string(r.k_min) + ")";
      });

  m.def(
      "naive_height", [](std::int64_t a, std::int64_t p) { return naive_height(a, PrimeModulus(p)); }, py::arg("a"),
      py::arg("p"));
  m.def(
      "fast_height", [](std::int64_t a, std::int64_t p) { return fast_height(a, PrimeModulus(p)); }, py::arg("a"),
      py::arg("p"));
  m.def(
      "height",
      [](std::int64_t a, std::int64_t p, const std::string& method) {
        return line_height(a, PrimeModulus(p), method_of(method)).h;
      },
      py::arg("a"), py::arg("p"), py::arg("method") = "fast");
  m.def(
      "residue_records",
      [](std::int64_t a, std::int64_t p) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const auto& r : residue_records(a, PrimeModulus(p)).expand()) out.emplace_back(r.k, r.r);
        return out;
      },
      py::arg("a"), py::arg("p"), "Record minima (k, ka mod p), expanded. Can have p-1 entries.");
  m.def(
      "record_runs",
      [](std::int64_t a, std::int64_t p) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t>> out;
        for (const auto& r : residue_records(a, PrimeModulus(p)).runs()) out.emplace_back(r.k0, r.r0, r.dk, r.dr, r.count);
        return out;
      },
      py::arg("a"), py::arg("p"), "Record minima as runs (k0, r0, dk, dr, count).");
  m.def(
      "point_height",
      [](const std::vector<std::int64_t>& coords, std::int64_t p) {
        const auto pt = normalize_point(coords, PrimeModulus(p));
        return py::make_tuple(std::vector<std::int64_t>(pt.coords().begin(), pt.coords().end()), height_point(pt));
      },
      py::arg("coords"), py::arg("p"), "Returns (normalized coordinates, height).");

  m.def(
      "line_bound",
      [](std::int64_t a, std::int64_t p, std::int64_t ell, std::int64_t mm) {
        return line_bound(a, PrimeModulus(p), ell, mm);
      },
      py::arg("a"), py::arg("p"), py::arg("ell"), py::arg("m"));
  m.def(
      "hyperbola_H",
      [](const py::object& x, std::int64_t p, std::int64_t ell, std::int64_t mm) {
        return to_fraction(hyperbola_H(from_number(x), PrimeModulus(p), ell, mm));
      },
      py::arg("x"), py::arg("p"), py::arg("ell"), py::arg("m"));
  m.def(
      "window_bound",
      [](std::int64_t p, std::int64_t ell, std::int64_t mm, const py::object& w) {
        return window_dict(window_bound(PrimeModulus(p), ell, mm, from_number(w)));
      },
      py::arg("p"), py::arg("ell"), py::arg("m"), py::arg("w"));
  m.def(
      "height_p_minus_b", [](std::int64_t p, std::int64_t b) { return height_p_minus_b(PrimeModulus(p), b); },
      py::arg("p"), py::arg("b"));
  m.def(
      "height_half_p_minus_b",
      [](std::int64_t p, std::int64_t b) { return height_half_p_minus_b(PrimeModulus(p), b); }, py::arg("p"),
      py::arg("b"));
  m.def(
      "classify_peak",
      [](std::int64_t a, std::int64_t p) {
        const auto c = classify_peak(a, PrimeModulus(p));
        return py::make_tuple(to_string(c.cls), c.predicted);
      },
      py::arg("a"), py::arg("p"), "Returns (class, predicted) with class in A1, A2, A3, NonPeak.");

  py::class_<Spectrum>(m, "Spectrum")
      .def_property_readonly("p", [](const Spectrum& s) { return s.p.value(); })
      .def_property_readonly("method", [](const Spectrum& s) { return to_string(s.method); })
      .def_property_readonly("heights",
                             [](const Spectrum& s) {
                               std::vector<std::int64_t> out;
                               for (const auto& r : s.heights) out.push_back(r.h);
                               return out;
                             })
      .def_property_readonly("records", [](const Spectrum& s) { return s.heights; })
      .def_readonly("infinity_height", &Spectrum::infinity_height)
      .def_property_readonly("compute_seconds",
                             [](const Spectrum& s) { return std::chrono::duration<double>(s.compute_time).count(); })
      .def("h", &Spectrum::h, py::arg("a"))
      .def("__len__", [](const Spectrum& s) { return s.heights.size(); })
      .def("__eq__", [](const Spectrum& x, const Spectrum& y) { return x == y; })
      .def("to_csv",
           [](const Spectrum& s) {
             std::ostringstream os;
             write_spectrum_csv(s, os);
             return os.str();
           })
      .def_static(
          "from_csv",
          [](const std::string& text) {
            std::istringstream is(text);
            return read_spectrum_csv(is);
          },
          py::arg("text"))
      .def(
          "plot_csv",
          [](const Spectrum& s, bool include_last) {
            std::ostringstream os;
            write_plot_csv(s, os, {include_last});
            return os.str();
          },
          py::arg("include_last") = false)
      .def(
          "plot_svg",
          [](const Spectrum& s, bool include_last) {
            std::ostringstream os;
            write_plot_svg(s, os, {include_last});
            return os.str();
          },
          py::arg("include_last") = false)
      .def("__repr__", [](const Spectrum& s) {
        return "Spectrum(p=" + std::to_string(s.p.value()) + ", method=" + to_string(s.method) + ")";
      });

  m.def(
      "compute_spectrum",
      [](std::int64_t p, const std::string& method, unsigned workers) {
        const PrimeModulus pm(p);
        const auto hm = method_of(method);
        py::gil_scoped_release release;
        return compute_spectrum(pm, hm, workers);
      },
      py::arg("p"), py::arg("method") = "fast", py::arg("workers") = 0);
  m.def(
      "extract_peaks",
      [](const Spectrum& s, std::int64_t b) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const auto& pk : extract_peaks(s, b)) out.emplace_back(pk.a, pk.h);
        return out;
      },
      py::arg("spectrum"), py::arg("b"));
  m.def(
      "verify_theorems",
      [](std::int64_t p, const std::string& method) {
        return report_dict(verify_theorems(PrimeModulus(p), method_of(method)));
      },
      py::arg("p"), py::arg("method") = "fast");
  m.def(
      "verify_spectrum", [](const Spectrum& s) { return report_dict(verify_spectrum(s)); }, py::arg("spectrum"));
  m.def("primes_in_range", &primes_in_range, py::arg("lo"), py::arg("hi"));
  m.def(
      "scan_conjecture",
      [](std::int64_t b, std::int64_t lo, std::int64_t hi) {
        std::ostringstream os;
        print_scan(os, scan_conjecture(b, lo, hi));
        return os.str();
      },
      py::arg("b"), py::arg("p_lo"), py::arg("p_hi"), "Returns the printed scan report.");

  m.def(
      "projective_point_count",
      [](std::int64_t p, std::size_t d) { return projective_point_count(PrimeModulus(p), d); }, py::arg("p"),
      py::arg("d"));
  m.def(
      "points",
      [](std::int64_t p, std::size_t d) {
        std::vector<std::vector<std::int64_t>> out;
        auto stream = enumerate_points(PrimeModulus(p), d);
        while (auto pt = stream.next()) out.emplace_back(pt->coords().begin(), pt->coords().end());
        return out;
      },
      py::arg("p"), py::arg("d"));
  m.def(
      "space_spectrum",
      [](std::int64_t p, std::size_t d) {
        const PrimeModulus pm(p);
        py::gil_scoped_release release;
        return space_spectrum(pm, d).histogram;
      },
      py::arg("p"), py::arg("d"), "Histogram {height: count} over P^{d-1}(F_p).");
}
