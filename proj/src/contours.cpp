#include "fourier_interp/contours.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fourier_interp {

namespace {

constexpr double kJoinTol = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ArcSegment origin_arc(double radius, double from, double to) { return {0.0, radius, from, to}; }

}  // namespace

cplx point_at(const Segment& seg, double s) {
  return std::visit(overloaded{
                        [&](const LineSegment& l) { return l.from + s * (l.to - l.from); },
                        [&](const ArcSegment& a) {
                          return a.center + std::polar(a.radius, a.angle_from + s * (a.angle_to - a.angle_from));
                        },
                    },
                    seg);
}

cplx tangent_at(const Segment& seg, double s) {
  return std::visit(overloaded{
                        [&](const LineSegment& l) { return l.to - l.from; },
                        [&](const ArcSegment& a) {
                          const double span = a.angle_to - a.angle_from;
                          return kI * span * std::polar(a.radius, a.angle_from + s * span);
                        },
                    },
                    seg);
}

double segment_length(const Segment& seg) {
  return std::visit(overloaded{
                        [](const LineSegment& l) { return std::abs(l.to - l.from); },
                        [](const ArcSegment& a) { return a.radius * std::fabs(a.angle_to - a.angle_from); },
                    },
                    seg);
}

Contour::Contour(std::vector<Segment> segments, int orientation)
    : segments_(std::move(segments)), orientation_(orientation >= 0 ? +1 : -1) {
  if (segments_.empty()) {
    throw NumericalError(ErrorKind::InvalidArgument, "contour needs at least one segment");
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    for (int k = 1; k < 64; ++k) {
      if (!(point_at(segments_[i], k / 64.0).imag() > 0.0)) {
        throw NumericalError(ErrorKind::InvalidArgument, "contour leaves the upper half-plane");
      }
    }
    if (i + 1 < segments_.size() && std::abs(point_at(segments_[i], 1.0) - point_at(segments_[i + 1], 0.0)) > kJoinTol) {
      throw NumericalError(ErrorKind::InvalidArgument, "contour segments are not connected");
    }
  }
}

cplx Contour::start() const {
  return orientation_ > 0 ? point_at(segments_.front(), 0.0) : point_at(segments_.back(), 1.0);
}

cplx Contour::end() const {
  return orientation_ > 0 ? point_at(segments_.back(), 1.0) : point_at(segments_.front(), 0.0);
}

double Contour::length() const {
  double total = 0.0;
  for (const Segment& s : segments_) total += segment_length(s);
  return total;
}

cplx Contour::point_at_fraction(double t) const {
  if (orientation_ < 0) t = 1.0 - t;
  const double scaled = std::clamp(t, 0.0, 1.0) * double(segments_.size());
  const std::size_t idx = std::min(segments_.size() - 1, std::size_t(scaled));
  return point_at(segments_[idx], scaled - double(idx));
}

double Contour::min_distance_to(cplx p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& s : segments_) {
    if (const auto* l = std::get_if<LineSegment>(&s)) {
      const cplx d = l->to - l->from;
      const double t = std::clamp(std::real((p - l->from) * std::conj(d)) / std::norm(d), 0.0, 1.0);
      best = std::min(best, std::abs(p - (l->from + t * d)));
      continue;
    }
    constexpr int kSamples = 4096;
    for (int k = 0; k <= kSamples; ++k) best = std::min(best, std::abs(p - point_at(s, double(k) / kSamples)));
  }
  return best;
}

Contour semicircle() { return Contour({origin_arc(1.0, pi, 0.0)}); }

Contour polygon_contour() {
  return Contour({LineSegment{{-1.0, 0.0}, {-1.0, 1.0}}, LineSegment{{-1.0, 1.0}, {1.0, 1.0}},
                  LineSegment{{1.0, 1.0}, {1.0, 0.0}}});
}

Contour horizontal_line(double height, double from_re, double to_re) {
  if (!(height > 0.0)) {
    throw NumericalError(ErrorKind::InvalidArgument, "horizontal line needs positive height");
  }
  return Contour({LineSegment{{from_re, height}, {to_re, height}}});
}

Contour circle_around(const UpperHalfPoint& center, double radius) {
  if (!(radius > 0.0)) {
    throw NumericalError(ErrorKind::InvalidArgument, "circle radius must be positive");
  }
  if (radius >= center.im()) {
    throw NumericalError(ErrorKind::RadiusTooLarge, "circle would leave the upper half-plane");
  }
  return Contour({ArcSegment{center.value(), radius, -pi / 2.0, 3.0 * pi / 2.0}});
}

Contour detour_contour(cplx p, bool pass_below, double clearance) {
  const double rho = std::abs(p);
  const double alpha = std::arg(p);
  if (!(clearance > 0.0) || !(p.imag() > 0.0)) {
    throw NumericalError(ErrorKind::InvalidArgument, "detour needs a point in H and positive clearance");
  }
  if (std::abs(p - 1.0) < clearance || std::abs(p + 1.0) < clearance) {
    throw NumericalError(ErrorKind::CannotDeform, "point is too close to a semicircle endpoint");
  }
  if (pass_below ? rho >= 1.0 + clearance : rho <= 1.0 - clearance) return semicircle();

  const double radius = pass_below ? rho - clearance : rho + clearance;
  const double beta = 2.0 * clearance / rho;
  if (!(radius > 0.0) || alpha - beta <= 0.0 || alpha + beta >= pi) {
    throw NumericalError(ErrorKind::CannotDeform, "detour does not fit inside the semicircle");
  }
  const double hi = alpha + beta, lo = alpha - beta;
  return Contour({origin_arc(1.0, pi, hi), LineSegment{std::polar(1.0, hi), std::polar(radius, hi)},
                  origin_arc(radius, hi, lo), LineSegment{std::polar(radius, lo), std::polar(1.0, lo)},
                  origin_arc(1.0, lo, 0.0)});
}

Contour pole_avoiding_contour(const UpperHalfPoint& tau, PoleSide which, const DeformationOptions& opts) {
  const double modulus = std::abs(tau.value());
  if (modulus < 0.7 || modulus > 1.3 || std::fabs(tau.re()) >= 1.0) return semicircle();
  if (which == PoleSide::below_tau) return detour_contour(tau.value(), true, opts.clearance);
  return detour_contour(-1.0 / tau.value(), false, opts.clearance);
}

QuadratureResult integrate(const std::function<cplx(cplx)>& f, const Contour& path, double abs_tol,
                           const ContourQuadratureOptions& opts) {
  if (!(abs_tol > 0.0)) {
    throw NumericalError(ErrorKind::InvalidArgument, "abs_tol must be positive");
  }
  const auto& segs = path.segments();
  AdaptiveOptions ao;
  ao.abs_tol = abs_tol / double(segs.size());
  ao.min_panel = opts.min_panel;
  ao.max_panels = opts.max_panels;
  ao.initial_panels = opts.initial_panels;
  QuadratureResult total;
  for (const Segment& seg : segs) {
    total += integrate_interval([&](double s) { return f(point_at(seg, s)) * tangent_at(seg, s); }, 0.0, 1.0, ao);
  }
  total.value *= double(path.orientation());
  return total;
}

}  // namespace fourier_interp
