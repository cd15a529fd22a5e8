#include "contourint/complexfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "contourint/quadrature.hpp"

namespace contourint {

namespace {

constexpr double pi = std::numbers::pi;

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Compensated (Kahan) accumulator for complex series.
struct KahanSum {
    Complex sum{0.0, 0.0};
    Complex comp{0.0, 0.0};

    void add(Complex term) {
        const Complex y = term - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Distance from z to the ray {base + t*dir : t >= 0}, dir a unit vector.
double ray_distance(Complex z, Complex base, Complex dir) {
    const Complex d = z - base;
    const double along = d.real() * dir.real() + d.imag() * dir.imag();
    if (along <= 0.0) return std::abs(d);
    const double across = d.imag() * dir.real() - d.real() * dir.imag();
    return std::abs(across);
}

// Minimum distance from z to the four cuts [1,inf), (-inf,-1], [i,i*inf),
// (-i,-i*inf).
double cut_distance(Complex z) {
    double d = ray_distance(z, {1.0, 0.0}, {1.0, 0.0});
    d = std::min(d, ray_distance(z, {-1.0, 0.0}, {-1.0, 0.0}));
    d = std::min(d, ray_distance(z, {0.0, 1.0}, {0.0, 1.0}));
    d = std::min(d, ray_distance(z, {0.0, -1.0}, {0.0, -1.0}));
    return d;
}

// log on the closed upper side of the cut: identical to the principal
// branch except that arguments on (or a hair below) the negative real axis
// take the +pi determination.  This is the continuous limit of log from
// the upper half plane, which is the side all first-quadrant boundary
// traces of f approach.
Complex log_upper(Complex w) {
    if (w == Complex{0.0, 0.0}) throw BranchCutError("log_upper: argument is zero");
    double arg = std::atan2(w.imag(), w.real());
    if (w.real() < 0.0 && w.imag() <= 0.0 && -w.imag() <= 1e-12 * std::abs(w))
        arg = pi;
    return {std::log(std::abs(w)), arg};
}

// Boundary trace of f for points of the closed first quadrant lying on (or
// within delta_cut of) the cuts at x > 1 or iy, y > 1.  Exact continuation
// from the quadrant side; no series involved, so it stays accurate
// arbitrarily close to |z| = 1.
FEval f_trace(Complex z, RegionTag tag) {
    const Complex w1 = (1.0 + z) / (1.0 - z);
    const Complex w2 = (1.0 + Complex{0.0, 1.0} * z) / (1.0 - Complex{0.0, 1.0} * z);
    const Complex value =
        (log_upper(w1) + Complex{0.0, 1.0} * log_upper(w2)) / (2.0 * pi);
    return {value, tag, 1e-14 * (1.0 + std::abs(value))};
}

}  // namespace

std::string_view region_name(RegionTag tag) {
    switch (tag) {
        case RegionTag::InnerDisk: return "InnerDisk";
        case RegionTag::LogformInterior: return "LogformInterior";
        case RegionTag::OuterQuadrant: return "OuterQuadrant";
        case RegionTag::RealBoundaryOuter: return "RealBoundaryOuter";
        case RegionTag::ImagBoundaryOuter: return "ImagBoundaryOuter";
        case RegionTag::Excluded: return "Excluded";
    }
    return "?";
}

Complex principal_log(Complex z) {
    if (!finite(z)) throw EvaluationError("principal_log: non-finite argument");
    if (z == Complex{0.0, 0.0}) throw BranchCutError("principal_log: log of zero");
    const double dist = z.real() <= 0.0 ? std::abs(z.imag()) : std::abs(z);
    if (z.real() <= 0.0 && dist <= delta_cut)
        throw BranchCutError("principal_log: argument on the cut (-inf, 0]");
    return std::log(z);
}

RegionTag classify_region(Complex z) {
    if (!finite(z)) return RegionTag::Excluded;
    if (std::abs(z - Complex{1.0, 0.0}) <= delta_sing ||
        std::abs(z - Complex{0.0, 1.0}) <= delta_sing ||
        std::abs(z + Complex{1.0, 0.0}) <= delta_sing ||
        std::abs(z + Complex{0.0, 1.0}) <= delta_sing)
        return RegionTag::Excluded;

    const double r = std::abs(z);
    if (r <= r_inner) return RegionTag::InnerDisk;

    if (z.real() >= 0.0 && z.imag() >= 0.0) {
        // Boundary traces from the first quadrant along the two cuts.
        if (z.real() > 1.0 && z.imag() <= delta_cut) return RegionTag::RealBoundaryOuter;
        if (z.imag() > 1.0 && z.real() <= delta_cut) return RegionTag::ImagBoundaryOuter;
        if (z.real() > 0.0 && z.imag() > 0.0 && r >= r_outer)
            return RegionTag::OuterQuadrant;
    }

    if (cut_distance(z) >= delta_cut) return RegionTag::LogformInterior;
    return RegionTag::Excluded;
}

FEval f_inner(Complex z, const SeriesConfig& cfg) {
    cfg.validate();
    if (!finite(z)) throw EvaluationError("f_inner: non-finite argument");
    const double r = std::abs(z);
    if (r > r_inner) throw PreconditionError("f_inner: |z| > r_inner");
    if (z == Complex{0.0, 0.0}) return {Complex{0.0, 0.0}, RegionTag::InnerDisk, 0.0};

    const Complex zq = z * z * z * z;
    const double rq = r * r * r * r;
    Complex power = z * z * z;  // z^{4n+3}
    double rpow = r * r * r;
    KahanSum acc;
    for (std::size_t n = 0; n < cfg.max_terms; ++n) {
        acc.add(power / double(4 * n + 3));
        power *= zq;
        rpow *= rq;
        const double tail =
            (2.0 / pi) * rpow / (double(4 * n + 7) * (1.0 - rq));
        const double scale = std::max((2.0 / pi) * std::abs(acc.sum), 1e-300);
        if (tail <= cfg.rel_tol * scale)
            return {(2.0 / pi) * acc.sum, RegionTag::InnerDisk, tail};
    }
    throw NoConvergenceError("f_inner: max_terms exceeded");
}

FEval f_logform(Complex z) {
    if (!finite(z)) throw EvaluationError("f_logform: non-finite argument");
    if (z == Complex{1.0, 0.0} || z == Complex{-1.0, 0.0} ||
        z == Complex{0.0, 1.0} || z == Complex{0.0, -1.0})
        throw PreconditionError("f_logform: z is a singular point");
    const Complex l1 = principal_log((1.0 + z) / (1.0 - z));
    const Complex l2 =
        principal_log((1.0 + Complex{0.0, 1.0} * z) / (1.0 - Complex{0.0, 1.0} * z));
    const Complex value = (l1 + Complex{0.0, 1.0} * l2) / (2.0 * pi);
    return {value, RegionTag::LogformInterior, 1e-14 * (1.0 + std::abs(value))};
}

FEval f_outer(Complex z, const SeriesConfig& cfg) {
    cfg.validate();
    if (!finite(z)) throw EvaluationError("f_outer: non-finite argument");
    if (z.real() < 0.0 || z.imag() < 0.0)
        throw PreconditionError("f_outer: z not in the closed first quadrant");
    const double r = std::abs(z);
    if (r < r_outer) throw PreconditionError("f_outer: |z| < r_outer");

    const Complex w = 1.0 / z;
    const double rw = 1.0 / r;
    const Complex wq = w * w * w * w;
    const double rwq = rw * rw * rw * rw;
    Complex power = w;  // w^{4n+1}
    double rpow = rw;
    KahanSum acc;
    for (std::size_t n = 0; n < cfg.max_terms; ++n) {
        acc.add(power / double(4 * n + 1));
        power *= wq;
        rpow *= rwq;
        const double tail =
            (2.0 / pi) * rpow / (double(4 * n + 5) * (1.0 - rwq));
        const Complex value = Complex{-0.5, 0.5} + (2.0 / pi) * acc.sum;
        const double scale = std::max(std::abs(value), 1e-300);
        if (tail <= cfg.rel_tol * scale)
            return {value, RegionTag::OuterQuadrant, tail};
    }
    throw NoConvergenceError("f_outer: max_terms exceeded");
}

FEval f_eval(Complex z) {
    const RegionTag tag = classify_region(z);
    switch (tag) {
        case RegionTag::InnerDisk:
            return f_inner(z);
        case RegionTag::LogformInterior:
            return f_logform(z);
        case RegionTag::OuterQuadrant:
            return f_outer(z);
        case RegionTag::RealBoundaryOuter:
        case RegionTag::ImagBoundaryOuter: {
            if (std::abs(z) >= r_outer) {
                FEval fe = f_outer(z);
                fe.method = tag;
                return fe;
            }
            // Outer series converges too slowly for 1 < |z| < r_outer; the
            // branch-corrected log form is the same quadrant-side limit.
            return f_trace(z, tag);
        }
        case RegionTag::Excluded:
            break;
    }
    throw RegionError("f_eval: z excluded (on a cut or near a singular point)");
}

Complex f_oracle_integral(Complex z, const Tolerance& tol) {
    tol.validate();
    if (!finite(z)) throw EvaluationError("f_oracle_integral: non-finite argument");
    if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
    // The segment [0, z] must clear the poles of t^2/(1-t^4).
    const Complex dir = z / std::abs(z);
    for (Complex s : {Complex{1, 0}, Complex{-1, 0}, Complex{0, 1}, Complex{0, -1}}) {
        const Complex d = s;
        const double along = d.real() * dir.real() + d.imag() * dir.imag();
        const double t = std::clamp(along, 0.0, std::abs(z));
        if (std::abs(s - t * dir) < delta_sing)
            throw PreconditionError("f_oracle_integral: segment too close to a pole");
    }
    const auto integrand = [](Complex t) { return t * t / (1.0 - t * t * t * t); };
    const QuadResult q = integrate_line(integrand, Complex{0.0, 0.0}, z, tol);
    return (2.0 / pi) * q.value;
}

Complex G_eval(Complex z) {
    if (!finite(z)) throw EvaluationError("G_eval: non-finite argument");
    if (z.real() < 0.0 || z.imag() < 0.0)
        throw PreconditionError("G_eval: z not in the closed first quadrant");
    if (std::abs(z - Complex{1.0, 0.0}) <= delta_sing ||
        std::abs(z - Complex{0.0, 1.0}) <= delta_sing)
        throw RegionError("G_eval: z within delta_sing of a ramification point");

    if (std::abs(z) <= 0.1) {
        // Composed series: w = (1+i) f(z) is O(|z|^3), so log(1+w) expanded
        // termwise avoids the cancellation in log(1+w)/z as z -> 0.
        if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
        const Complex w = Complex{1.0, 1.0} * f_inner(z).value;
        KahanSum acc;
        Complex power = w;
        double sign = 1.0;
        for (int k = 1; k <= 40; ++k) {
            const Complex term = sign * power / double(k);
            acc.add(term);
            if (std::abs(term) <= 1e-20 * (1.0 + std::abs(acc.sum)))
                return acc.sum / z;
            power *= w;
            sign = -sign;
        }
        throw NoConvergenceError("G_eval: log(1+w) series did not converge");
    }

    const FEval fe = f_eval(z);
    const Complex w = 1.0 + Complex{1.0, 1.0} * fe.value;
    return principal_log(w) / z;
}

double real_integrand(double x) {
    if (!(x >= 0.0) || x >= 1.0)
        throw DomainError("real_integrand: x outside [0, 1)");
    if (x == 0.0) return 0.0;
    const double f = (std::atanh(x) - std::atan(x)) / pi;
    return std::atan(f / (1.0 + f)) / x;
}

}  // namespace contourint
