#pragma once

#include <cstddef>
#include <string_view>

#include "contourint/types.hpp"

namespace contourint {

// Switching radii and exclusion distances for the analytic representations
// of f.  The inner Taylor series is used for |z| <= r_inner, the outer
// Laurent-type series in the first quadrant for |z| >= r_outer, and the
// principal-branch log form on the four-cut domain in between.
inline constexpr double r_inner = 0.75;
inline constexpr double r_outer = 1.25;
inline constexpr double delta_cut = 1e-9;   // min distance to a branch cut
inline constexpr double delta_sing = 1e-7;  // exclusion radius around 1 and i

enum class RegionTag {
    InnerDisk,
    LogformInterior,
    OuterQuadrant,
    RealBoundaryOuter,
    ImagBoundaryOuter,
    Excluded,
};

std::string_view region_name(RegionTag tag);

struct SeriesConfig {
    double rel_tol = 1e-15;
    std::size_t max_terms = 10'000;

    void validate() const {
        if (!(rel_tol > 0.0) || max_terms < 1)
            throw SpecError("SeriesConfig: rel_tol > 0 and max_terms >= 1 required");
    }
};

struct FEval {
    Complex value{0.0, 0.0};
    RegionTag method = RegionTag::Excluded;
    double trunc_bound = 0.0;  // absolute truncation/rounding bound
};

// Principal branch of log, cut along (-inf, 0].  Throws BranchCutError for
// z = 0 or z within delta_cut of the cut.
Complex principal_log(Complex z);

// Which representation of f is valid at z.  Total function, never throws.
RegionTag classify_region(Complex z);

// Taylor series (2/pi) sum z^{4n+3}/(4n+3), valid for |z| <= r_inner.
FEval f_inner(Complex z, const SeriesConfig& cfg = {});

// Principal-log form (1/2pi)(log((1+z)/(1-z)) + i log((1+iz)/(1-iz))),
// valid on the four-cut plane away from the cuts.
FEval f_logform(Complex z);

// Expansion at infinity, (i-1)/2 + (2/pi) sum 1/((4n+1) z^{4n+1}), valid in
// the closed first quadrant for |z| >= r_outer.
FEval f_outer(Complex z, const SeriesConfig& cfg = {});

// Dispatch over the three representations by classify_region.
FEval f_eval(Complex z);

// Independent oracle: (2/pi) * integral of t^2/(1-t^4) over the straight
// segment from 0 to z.  Requires the segment to stay delta_sing away from
// the poles at 1, -1, i, -i.
Complex f_oracle_integral(Complex z, const Tolerance& tol = {});

// G(z) = log(1 + (1+i) f(z)) / z on the closed first quadrant, with the
// removable value G(0) = 0.
Complex G_eval(Complex z);

// arctan((arctanh x - arctan x)/(pi + arctanh x - arctan x)) / x on [0, 1),
// with the removable value 0 at x = 0.
double real_integrand(double x);

}  // namespace contourint
