#pragma once

#include <string>

#include "takagi/coefficients.hpp"
#include "takagi/rational.hpp"

namespace takagi {

struct RenderOptions {
  unsigned n = 4;              // strip level to draw
  std::size_t samples = 4096;  // certified polyline resolution
  int width = 900;
  int height = 560;
  Rational eps = Rational(1, 10000);  // certification radius for the curve
  int precision = 4;                  // decimals in emitted coordinates
};

struct RenderResult {
  std::string svg;  // shaded strip band, the partial-sum graph, and a
                    // certified polyline of f whose stroke covers the radius
  std::string csv;  // companion table: x,center,radius
};

// Deterministic for a fixed sequence and options: all coordinates are
// rendered from exact rationals with fixed precision.
RenderResult render_figure(const CoefficientSequence& seq, const RenderOptions& options);

}  // namespace takagi
