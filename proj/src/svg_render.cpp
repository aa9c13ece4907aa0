#include "takagi/svg_render.hpp"

#include <sstream>

#include "takagi/counting.hpp"
#include "takagi/errors.hpp"
#include "takagi/evaluation.hpp"
#include "takagi/piecewise_linear.hpp"

namespace takagi {

namespace {

struct Mapper {
  Rational x_scale, y_scale, y_max;
  int margin;

  std::string x(const Rational& wx, int precision) const {
    return decimal_string(Rational(margin) + wx * x_scale, precision);
  }
  std::string y(const Rational& wy, int precision) const {
    return decimal_string(Rational(margin) + (y_max - wy) * y_scale, precision);
  }
};

}  // namespace

RenderResult render_figure(const CoefficientSequence& seq, const RenderOptions& options) {
  if (options.samples < 2) throw DomainError("need at least 2 samples");
  Strip strip = make_strip(seq, options.n);
  const PiecewiseLinearFunction& center = strip.center;

  // certified samples of f
  std::vector<std::pair<Rational, CertifiedValue>> curve;
  curve.reserve(options.samples + 1);
  for (std::size_t s = 0; s <= options.samples; ++s) {
    Rational x = make_rational(Int(static_cast<unsigned long>(s)),
                               Int(static_cast<unsigned long>(options.samples)));
    curve.emplace_back(x, eval_certified(seq, x, options.eps));
  }

  Rational y_lo = center.min_value() - strip.halfwidth;
  Rational y_hi = center.max_value() + strip.halfwidth;
  for (const auto& [x, cv] : curve) {
    if (cv.lo() < y_lo) y_lo = cv.lo();
    if (cv.hi() > y_hi) y_hi = cv.hi();
  }
  if (y_lo == y_hi) y_hi = y_lo + 1;  // degenerate: flat zero picture
  Rational pad = (y_hi - y_lo) / 20;
  y_lo -= pad;
  y_hi += pad;

  const int margin = 40;
  Mapper map{Rational(options.width - 2 * margin),
             Rational(options.height - 2 * margin) / (y_hi - y_lo), y_hi, margin};

  const int prec = options.precision;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height
      << "\">\n";
  svg << "<rect width=\"" << options.width << "\" height=\"" << options.height
      << "\" fill=\"white\"/>\n";

  // strip band: upper boundary forward, lower boundary reversed
  svg << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.55\" stroke=\"none\" points=\"";
  for (std::size_t t = 0; t < center.grid_size(); ++t) {
    svg << map.x(center.grid_x(t), prec) << ","
        << map.y(center.value_at_grid(t) + strip.halfwidth, prec) << " ";
  }
  for (std::size_t t = center.grid_size(); t-- > 0;) {
    svg << map.x(center.grid_x(t), prec) << ","
        << map.y(center.value_at_grid(t) - strip.halfwidth, prec);
    if (t != 0) svg << " ";
  }
  svg << "\"/>\n";

  // partial sum
  svg << "<polyline fill=\"none\" stroke=\"#08519c\" stroke-width=\"1.2\" points=\"";
  for (std::size_t t = 0; t < center.grid_size(); ++t) {
    if (t) svg << " ";
    svg << map.x(center.grid_x(t), prec) << "," << map.y(center.value_at_grid(t), prec);
  }
  svg << "\"/>\n";

  // certified curve; stroke width covers the certification radius
  Rational max_radius(0);
  for (const auto& [x, cv] : curve)
    if (cv.radius > max_radius) max_radius = cv.radius;
  Rational stroke = 2 * max_radius * map.y_scale;
  if (stroke < Rational(7, 10)) stroke = Rational(7, 10);
  svg << "<polyline fill=\"none\" stroke=\"#d7301f\" stroke-width=\""
      << decimal_string(stroke, prec) << "\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t s = 0; s < curve.size(); ++s) {
    if (s) svg << " ";
    svg << map.x(curve[s].first, prec) << "," << map.y(curve[s].second.center, prec);
  }
  svg << "\"/>\n";
  svg << "</svg>\n";

  std::ostringstream csv;
  csv << "x,center,radius\n";
  for (const auto& [x, cv] : curve) {
    csv << decimal_string(x, 8) << "," << decimal_string(cv.center, 12) << ","
        << decimal_string(cv.radius, 12) << "\n";
  }
  return RenderResult{svg.str(), csv.str()};
}

}  // namespace takagi
