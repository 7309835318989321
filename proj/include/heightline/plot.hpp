#pragma once

#include <iosfwd>

#include "heightline/spectrum.hpp"

namespace heightline {

struct PlotOptions {
  /// By default the plotted range is a = 0..p-2; include_last adds a = p-1.
  bool include_last = false;
};

/// Plot series in spectrum CSV row syntax: the two header lines, then one
/// row per plotted a. No point-at-infinity row.
void write_plot_csv(const Spectrum& s, std::ostream& os, PlotOptions opt = {});

/// Deterministic SVG scatter of (a, h(a)): one <circle class="mark"> per
/// plotted a, plus axes and labels. Byte-identical for identical input.
void write_plot_svg(const Spectrum& s, std::ostream& os, PlotOptions opt = {});

}  // namespace heightline
