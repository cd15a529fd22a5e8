#pragma once

#include <variant>
#include <vector>

#include "contourint/quadrature.hpp"
#include "contourint/types.hpp"

namespace contourint {

struct LineSeg {
    Complex z0;
    Complex z1;
};

struct ArcSeg {
    Complex center;
    double radius;
    double theta0;
    double theta1;
};

using PathSegment = std::variant<LineSeg, ArcSeg>;

Complex segment_start(const PathSegment& seg);
Complex segment_end(const PathSegment& seg);

struct ContourSpec {
    double R;
    double eps;

    void validate() const {
        if (!(eps > 0.0) || !(eps < 1.0) || !(R > 1.0))
            throw SpecError("ContourSpec: requires 0 < eps < 1 < R");
    }
};

struct Path {
    std::vector<PathSegment> segments;

    // Consecutive endpoints must chain to within 1e-12.
    void validate_chain() const;
    bool is_closed() const;
    Path reversed() const;
};

// The closed counterclockwise quarter-disk contour of radius R with
// eps-semicircle detours around z = 1 (passing above) and z = i (passing to
// the right), as seven chained segments.
Path build_paper_contour(const ContourSpec& spec);

// Sum of segment integrals in order.  Each segment gets tol/7 of the
// budget; err_estimate is the sum of the per-segment estimates.
QuadResult integrate_path(const ComplexFn& fn, const Path& path,
                          const Tolerance& tol = {});

enum class Semicircle { at_1, at_i };

// Integral of G over one detour semicircle alone, with the orientation used
// in build_paper_contour.
QuadResult semicircle_integral(Semicircle which, double eps, const Tolerance& tol = {});

}  // namespace contourint
