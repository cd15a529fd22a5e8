#include "contourint/contour.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "contourint/complexfn.hpp"

namespace contourint {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double chain_tol = 1e-12;
}  // namespace

Complex segment_start(const PathSegment& seg) {
    if (const auto* line = std::get_if<LineSeg>(&seg)) return line->z0;
    const auto& arc = std::get<ArcSeg>(seg);
    return arc.center + std::polar(arc.radius, arc.theta0);
}

Complex segment_end(const PathSegment& seg) {
    if (const auto* line = std::get_if<LineSeg>(&seg)) return line->z1;
    const auto& arc = std::get<ArcSeg>(seg);
    return arc.center + std::polar(arc.radius, arc.theta1);
}

void Path::validate_chain() const {
    for (std::size_t k = 0; k + 1 < segments.size(); ++k) {
        if (std::abs(segment_end(segments[k]) - segment_start(segments[k + 1])) >
            chain_tol)
            throw SpecError("Path: segments " + std::to_string(k) + " and " +
                            std::to_string(k + 1) + " do not chain");
    }
}

bool Path::is_closed() const {
    if (segments.empty()) return false;
    return std::abs(segment_end(segments.back()) - segment_start(segments.front())) <=
           chain_tol;
}

Path Path::reversed() const {
    Path out;
    out.segments.reserve(segments.size());
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        if (const auto* line = std::get_if<LineSeg>(&*it))
            out.segments.push_back(LineSeg{line->z1, line->z0});
        else {
            const auto& arc = std::get<ArcSeg>(*it);
            out.segments.push_back(ArcSeg{arc.center, arc.radius, arc.theta1, arc.theta0});
        }
    }
    return out;
}

Path build_paper_contour(const ContourSpec& spec) {
    spec.validate();
    if (!(spec.eps < spec.R - 1.0))
        throw SpecError("build_paper_contour: requires eps < R - 1");
    const double R = spec.R;
    const double eps = spec.eps;
    const Complex i{0.0, 1.0};

    Path path;
    path.segments = {
        LineSeg{{0.0, 0.0}, {1.0 - eps, 0.0}},
        ArcSeg{{1.0, 0.0}, eps, pi, 0.0},          // detour above z = 1
        LineSeg{{1.0 + eps, 0.0}, {R, 0.0}},
        ArcSeg{{0.0, 0.0}, R, 0.0, pi / 2},        // outer quarter circle
        LineSeg{i * R, i * (1.0 + eps)},
        ArcSeg{{0.0, 1.0}, eps, pi / 2, -pi / 2},  // detour right of z = i
        LineSeg{i * (1.0 - eps), {0.0, 0.0}},
    };
    path.validate_chain();
    return path;
}

QuadResult integrate_path(const ComplexFn& fn, const Path& path, const Tolerance& tol) {
    tol.validate();
    path.validate_chain();
    const Tolerance seg_tol{tol.abs_tol / 7.0, tol.rel_tol / 7.0};
    QuadResult total;
    for (std::size_t k = 0; k < path.segments.size(); ++k) {
        QuadResult q;
        try {
            if (const auto* line = std::get_if<LineSeg>(&path.segments[k]))
                q = integrate_line(fn, line->z0, line->z1, seg_tol);
            else {
                const auto& arc = std::get<ArcSeg>(path.segments[k]);
                q = integrate_arc(fn, arc.center, arc.radius, arc.theta0, arc.theta1,
                                  seg_tol);
            }
        } catch (const Error& e) {
            throw QuadratureError("integrate_path: segment " + std::to_string(k) +
                                  ": " + e.what());
        }
        total.value += q.value;
        total.err_estimate += q.err_estimate;
        total.n_evals += q.n_evals;
    }
    return total;
}

QuadResult semicircle_integral(Semicircle which, double eps, const Tolerance& tol) {
    if (!(eps > 0.0) || !(eps < 0.5))
        throw PreconditionError("semicircle_integral: requires 0 < eps < 0.5");
    const auto g = [](Complex z) { return G_eval(z); };
    if (which == Semicircle::at_1)
        return integrate_arc(g, {1.0, 0.0}, eps, pi, 0.0, tol);
    return integrate_arc(g, {0.0, 1.0}, eps, pi / 2, -pi / 2, tol);
}

}  // namespace contourint
