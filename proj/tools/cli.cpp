#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "heightline/heightline.hpp"

namespace heightline::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_i64(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

PrimeModulus parse_prime(const std::string& s) {
  const std::int64_t n = parse_i64(s, "prime");
  if (n <= 0 || n > kMaxModulus || !is_odd_prime(n)) throw UsageError(s + " is not an odd prime");
  return PrimeModulus(n);
}

/// Writes to the file at `path`, or to `out` when path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write to " + path);
  write(file);
  file.flush();
  if (!file) throw UsageError("write to " + path + " failed");
}

struct Options {
  std::string p, p_hi, a_or_point, method = "fast", output, format = "csv";
  std::int64_t b = 0, d = 2, reps = 100, seed = 1;
  std::vector<std::string> primes;
  bool include_last = false, verbose_points = false;
};

int cmd_height(const Options& o, std::ostream& out) {
  const PrimeModulus p = parse_prime(o.p);
  if (o.a_or_point.find(',') != std::string::npos) {
    std::vector<std::int64_t> coords;
    std::stringstream ss(o.a_or_point);
    for (std::string field; std::getline(ss, field, ',');) coords.push_back(parse_i64(field, "coordinate"));
    const ProjectivePoint pt = normalize_point(coords, p);
    out << "h(" << pt.to_string() << ") = " << height_point(pt) << '\n';
    return kOk;
  }
  const std::int64_t a = parse_i64(o.a_or_point, "residue");
  const HeightRecord rec = line_height(a, p, parse_height_method(o.method));
  out << "h(" << rec.a << ") = " << rec.h << " at k = " << rec.k_min << '\n';
  return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const Spectrum s = compute_spectrum(parse_prime(o.p), parse_height_method(o.method));
  emit(o.output, out, [&](std::ostream& os) { write_spectrum_csv(s, os); });
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const std::int64_t lo = parse_i64(o.p, "lower bound");
  const std::int64_t hi = o.p_hi.empty() ? lo : parse_i64(o.p_hi, "upper bound");
  if (lo > hi) throw UsageError("empty range [" + o.p + ", " + o.p_hi + "]");
  if (lo < 1 || hi > kMaxModulus) throw UsageError("range must lie within [1, 2^62]");
  const auto primes = primes_in_range(lo, hi);
  if (primes.empty()) throw UsageError("no odd primes in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  const HeightMethod method = parse_height_method(o.method);
  bool failed = false;
  for (std::int64_t n : primes) {
    const VerificationReport r = verify_theorems(PrimeModulus(n), method);
    out << summarize(r) << '\n';
    failed |= r.overall == Overall::fail;
  }
  if (primes.back() < kPeakTheoremMinPrime) {
    err << "notice: the peak theorems need p >= " << kPeakTheoremMinPrime
        << "; only the exact-value formulas were checked in this range\n";
  }
  return failed ? kCheckFailed : kOk;
}

int cmd_peaks(const Options& o, std::ostream& out) {
  if (o.b < 1) throw UsageError("b must be positive");
  const Spectrum s = compute_spectrum(parse_prime(o.p));
  out << "a,height\n";
  for (const auto& pk : extract_peaks(s, o.b)) out << pk.a << ',' << pk.h << '\n';
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const std::int64_t lo = parse_i64(o.p, "lower bound");
  const std::int64_t hi = parse_i64(o.p_hi, "upper bound");
  if (lo < 1 || hi > kMaxModulus) throw UsageError("range must lie within [1, 2^62]");
  print_scan(out, scan_conjecture(o.b, lo, hi));
  return kOk;
}

int cmd_plot(const Options& o, std::ostream& out) {
  const Spectrum s = compute_spectrum(parse_prime(o.p), parse_height_method(o.method));
  const PlotOptions opt{.include_last = o.include_last};
  emit(o.output, out, [&](std::ostream& os) {
    if (o.format == "svg") {
      write_plot_svg(s, os, opt);
    } else {
      write_plot_csv(s, os, opt);
    }
  });
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  if (o.reps < 1) throw UsageError("--reps must be positive");
  std::vector<PrimeModulus> primes;
  for (const auto& s : o.primes) primes.push_back(parse_prime(s));

  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(static_cast<std::uint64_t>(o.seed));
  bool disagree = false;
  out << std::left << std::setw(22) << "p" << std::right << std::setw(8) << "reps" << std::setw(16) << "fast_mean_ns"
      << std::setw(16) << "naive_mean_ns" << std::setw(12) << "speedup" << "  agree\n";
  for (const PrimeModulus p : primes) {
    std::uniform_int_distribution<std::int64_t> pick(0, p.value() - 1);
    std::vector<std::int64_t> samples(static_cast<std::size_t>(o.reps));
    std::generate(samples.begin(), samples.end(), [&] { return pick(rng); });

    std::vector<HeightRecord> fast(samples.size()), naive(samples.size());
    const auto t0 = clock::now();
    for (std::size_t i = 0; i < samples.size(); ++i) fast[i] = fast_height(samples[i], p);
    const auto t1 = clock::now();
    for (std::size_t i = 0; i < samples.size(); ++i) naive[i] = naive_height(samples[i], p);
    const auto t2 = clock::now();

    const bool agree = fast == naive;
    disagree |= !agree;
    const double fast_ns = std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(o.reps);
    const double naive_ns = std::chrono::duration<double, std::nano>(t2 - t1).count() / static_cast<double>(o.reps);
    out << std::left << std::setw(22) << p.value() << std::right << std::setw(8) << o.reps << std::fixed
        << std::setprecision(1) << std::setw(16) << fast_ns << std::setw(16) << naive_ns << std::setw(12)
        << (fast_ns > 0 ? naive_ns / fast_ns : 0.0) << "  " << (agree ? "yes" : "NO") << '\n';
    out.unsetf(std::ios::floatfield);
  }
  return disagree ? kCheckFailed : kOk;
}

int cmd_space(const Options& o, std::ostream& out) {
  const PrimeModulus p = parse_prime(o.p);
  if (o.d < 2) throw UsageError("d must be at least 2");
  const auto d = static_cast<std::size_t>(o.d);
  if (o.verbose_points) {
    projective_point_count(p, d);
    emit(o.output, out, [&](std::ostream& os) {
      os << "# p=" << p.value() << " d=" << d << "\npoint,height\n";
      auto stream = enumerate_points(p, d);
      while (auto pt = stream.next()) os << '"' << pt->to_string() << "\"," << height_point(*pt) << '\n';
    });
    return kOk;
  }
  const SpaceSpectrum s = space_spectrum(p, d);
  emit(o.output, out, [&](std::ostream& os) { write_histogram_csv(s, os); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heights on the finite projective line"};
  app.name("heightline");
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> methods{"naive", "fast"};

  auto* height = app.add_subcommand("height", "Height of a line point a, or of a comma-separated projective point");
  height->add_option("p", o.p, "odd prime")->required();
  height->add_option("a", o.a_or_point, "residue a, or coordinates like 1,2,3")->required();
  height->add_option("--method", o.method, "naive or fast")->check(CLI::IsMember(methods));

  auto* spectrum = app.add_subcommand("spectrum", "Write the full spectrum as CSV");
  spectrum->add_option("p", o.p, "odd prime")->required();
  spectrum->add_option("--method", o.method)->check(CLI::IsMember(methods));
  spectrum->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check the peak theorems and exact-value formulas per prime");
  verify->add_option("p_lo", o.p, "lower end of the prime range")->required();
  verify->add_option("p_hi", o.p_hi, "upper end (default: p_lo)");
  verify->add_option("--method", o.method)->check(CLI::IsMember(methods));

  auto* peaks = app.add_subcommand("peaks", "List every a with b*h(a) > p (for b = 1, the a with h(a) = p)");
  peaks->add_option("p", o.p, "odd prime")->required();
  peaks->add_option("b", o.b, "threshold divisor")->required();

  auto* scan = app.add_subcommand("scan", "Bucket the heights above p/b by nearest p/j for each prime in a range");
  scan->add_option("b", o.b)->required();
  scan->add_option("p_lo", o.p)->required();
  scan->add_option("p_hi", o.p_hi)->required();

  auto* plot = app.add_subcommand("plot", "Emit plot data (csv) or an SVG scatter of a -> h(a)");
  plot->add_option("p", o.p, "odd prime")->required();
  plot->add_option("--format", o.format)->check(CLI::IsMember({"csv", "svg"}));
  plot->add_flag("--include-last", o.include_last, "also plot a = p-1");
  plot->add_option("--method", o.method)->check(CLI::IsMember(methods));
  plot->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Time fast_height against naive_height on random a");
  bench->add_option("p", o.primes, "odd primes")->required();
  bench->add_option("--reps", o.reps, "samples per prime");
  bench->add_option("--seed", o.seed, "RNG seed");

  auto* space = app.add_subcommand("space", "Height histogram over all of P^{d-1}(F_p)");
  space->add_option("p", o.p, "odd prime")->required();
  space->add_option("d", o.d, "number of homogeneous coordinates (>= 2)")->required();
  space->add_flag("--points", o.verbose_points, "list every point instead of the histogram");
  space->add_option("-o,--output", o.output, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (height->parsed()) return cmd_height(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (peaks->parsed()) return cmd_peaks(o, out);
    if (scan->parsed()) return cmd_scan(o, out);
    if (plot->parsed()) return cmd_plot(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
    if (space->parsed()) return cmd_space(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    // Broken internal invariant, e.g. overlapping peak sets.
    err << "internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace heightline::cli
