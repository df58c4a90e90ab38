#ifndef NR_ENVELOPE_HPP
#define NR_ENVELOPE_HPP

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "nr/convex_polygon.hpp"

namespace nr {

// A solution of F(x,y,t) = 0, F_t(x,y,t) = 0. `isolated` marks points found
// where the member curve itself degenerates to a point.
struct EnvelopePoint {
    double t;
    double x;
    double y;
    bool isolated = false;
};

// One-parameter family of curves F(x,y,t) = 0 with its analytic t-derivative
// and a seeding rule producing points on (or near) the member curve at t.
struct CurveFamily {
    std::function<double(double, double, double)> f;
    std::function<double(double, double, double)> ft;
    std::function<std::vector<std::array<double, 2>>(double, int)> seeds;
};

// Circle family behind the 2x2 elliptical range:
//   F(x,y,t) = (x - (1 - t^2))^2 + y^2 - m^2 t^2 (1 - t^2),
// the circle of center (1-t^2, 0) and radius m t sqrt(1-t^2), t in [0,1].
double family_F(double m, double x, double y, double t);
double family_Ft(double m, double x, double y, double t);
CurveFamily circle_family(double m);

/// Closed-form discriminant envelope of the circle family at parameter t:
///   x(t) = (1 - t^2) + (m^2/2)(1 - 2 t^2),
///   y(t) = +- sqrt(m^2 (t^2 - t^4) - (m^4/4)(1 - 2 t^2)^2).
/// Empty when the radicand is negative.
std::vector<EnvelopePoint> ert_envelope(double m, double t);

/// Residual of the envelope-ellipse identity
///   (x - 1/2)^2 / (1 + m^2) + y^2 / m^2 = 1/4.
double verify_on_ellipse(double x, double y, double m);

/// Numeric discriminant envelope: for every t in t_grid, damped Newton
/// iterations on (F, F_t) = (0, 0) from seeds_per_t points seeded on the
/// member curve. Converged points (residual < 1e-10) are deduplicated within
/// 1e-8 per t. Non-convergent seeds are dropped; empty output is valid.
std::vector<EnvelopePoint> discriminant_envelope(const CurveFamily& family,
                                                 std::span<const double> t_grid,
                                                 int seeds_per_t = 8);

} // namespace nr

#endif
