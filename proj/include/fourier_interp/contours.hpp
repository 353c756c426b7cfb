#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "fourier_interp/modular_forms.hpp"
#include "fourier_interp/quadrature.hpp"

namespace fourier_interp {

struct LineSegment {
  cplx from;
  cplx to;
};

/// Circular arc center + radius * e^{i t}, t running from angle_from to angle_to.
struct ArcSegment {
  cplx center;
  double radius;
  double angle_from;
  double angle_to;
};

using Segment = std::variant<LineSegment, ArcSegment>;

/// Point at parameter s in [0, 1].
cplx point_at(const Segment& seg, double s);
/// d(point)/ds.
cplx tangent_at(const Segment& seg, double s);
double segment_length(const Segment& seg);

/// Oriented piecewise-smooth path in H. Interior points of every segment lie
/// strictly above the real axis and segments join end to start.
class Contour {
 public:
  explicit Contour(std::vector<Segment> segments, int orientation = +1);

  const std::vector<Segment>& segments() const { return segments_; }
  int orientation() const { return orientation_; }

  cplx start() const;
  cplx end() const;
  double length() const;
  /// Point at fraction t of the parameter range (segments weighted equally).
  cplx point_at_fraction(double t) const;
  /// Distance from p to the path, sampled finely along every segment.
  double min_distance_to(cplx p) const;
  Contour reversed() const { return Contour(segments_, -orientation_); }

 private:
  std::vector<Segment> segments_;
  int orientation_;
};

/// Unit semicircle from -1 through i to 1.
Contour semicircle();
/// -1 -> -1 + i -> 1 + i -> 1.
Contour polygon_contour();
Contour horizontal_line(double height, double from_re, double to_re);
/// Positively oriented full circle, kept inside H.
Contour circle_around(const UpperHalfPoint& center, double radius);

enum class PoleSide { below_tau, above_neg_inv_tau };

struct DeformationOptions {
  double clearance = 0.05;
};

/// Semicircle deformed to pass below tau (or above -1/tau) with the given
/// clearance. Returns the plain semicircle when the point is far from it.
Contour pole_avoiding_contour(const UpperHalfPoint& tau, PoleSide which, const DeformationOptions& opts = {});

/// Semicircle detouring around p with the given clearance on the requested
/// side (below: p ends up above the path).
Contour detour_contour(cplx p, bool pass_below, double clearance);

struct ContourQuadratureOptions {
  double min_panel = 1e-4;
  int max_panels = 20000;
  int initial_panels = 1;
};

/// Adaptive Gauss-Legendre along each segment; segment results add left to right.
QuadratureResult integrate(const std::function<cplx(cplx)>& f, const Contour& path, double abs_tol,
                           const ContourQuadratureOptions& opts = {});

}  // namespace fourier_interp
