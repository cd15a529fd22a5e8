#include "contourint/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace contourint {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int max_depth = 40;
constexpr int max_levels = 12;

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1].  The Gauss-7 nodes
// are the odd-indexed Kronrod nodes.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct GkPanel {
    Complex value;
    double err;
};

GkPanel gk15(const RealFn& fn, double a, double b, long& n_evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const auto eval = [&](double x) {
        const Complex v = fn(x);
        ++n_evals;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw EvaluationError("gk_adaptive: integrand returned non-finite value");
        return v;
    };

    const Complex fc = eval(c);
    Complex kronrod = wgk[7] * fc;
    Complex gauss = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const Complex fsum = eval(c - h * xgk[j]) + eval(c + h * xgk[j]);
        kronrod += wgk[j] * fsum;
        if (j % 2 == 1) gauss += wg[j / 2] * fsum;
    }
    return {h * kronrod, std::abs(h * (kronrod - gauss))};
}

struct Panel {
    double a, b;
    Complex value;
    double err;
    int depth;
};

}  // namespace

QuadResult gk_adaptive(const RealFn& fn, double a, double b, const Tolerance& tol) {
    tol.validate();
    if (!(a < b)) throw PreconditionError("gk_adaptive: requires a < b");

    QuadResult out;
    std::vector<Panel> panels;
    {
        const GkPanel p = gk15(fn, a, b, out.n_evals);
        panels.push_back({a, b, p.value, p.err, 0});
    }

    // Bisect the worst panel until the summed discrepancies meet the
    // tolerance.  Worst-first keeps the panel count near-minimal for
    // integrands with localized difficulty.
    constexpr std::size_t max_panels = 100'000;
    while (true) {
        Complex total{0.0, 0.0};
        double err_sum = 0.0;
        std::size_t worst = 0;
        for (std::size_t j = 0; j < panels.size(); ++j) {
            total += panels[j].value;
            err_sum += panels[j].err;
            if (panels[j].err > panels[worst].err) worst = j;
        }
        if (err_sum <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total))) {
            out.value = total;
            out.err_estimate = err_sum;
            return out;
        }
        if (panels[worst].depth >= max_depth)
            throw QuadratureError("gk_adaptive: max recursion depth reached");
        if (panels.size() >= max_panels)
            throw QuadratureError("gk_adaptive: panel budget exhausted");

        const Panel split = panels[worst];
        const double m = 0.5 * (split.a + split.b);
        const GkPanel left = gk15(fn, split.a, m, out.n_evals);
        const GkPanel right = gk15(fn, m, split.b, out.n_evals);
        panels[worst] = {split.a, m, left.value, left.err, split.depth + 1};
        panels.push_back({m, split.b, right.value, right.err, split.depth + 1});
    }
}

QuadResult tanh_sinh(const RealFn& fn, const Tolerance& tol) {
    tol.validate();
    constexpr double t_max = 3.6;

    long n_evals = 0;
    const auto node = [&](double t) -> Complex {
        // x = 1/(1+e^{-pi sinh t}), 1-x computed alongside so the weight
        // x(1-x) keeps full precision in the tails.
        const double u = pi * std::sinh(t);
        const double e = std::exp(-u);
        const double x = 1.0 / (1.0 + e);
        const double omx = e / (1.0 + e);
        const double w = pi * std::cosh(t) * x * omx;
        if (x <= 0.0 || x >= 1.0 || w < 1e-320) return {0.0, 0.0};
        const Complex v = fn(x);
        ++n_evals;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw EvaluationError("tanh_sinh: integrand returned non-finite value");
        return w * v;
    };

    double h = 1.0;
    Complex sum = node(0.0);
    for (int k = 1; k * h <= t_max; ++k) sum += node(k * h) + node(-k * h);
    Complex estimate = h * sum;
    double diff = std::abs(estimate);

    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        Complex odd{0.0, 0.0};
        for (int k = 1; k * h <= t_max; k += 2) odd += node(k * h) + node(-k * h);
        const Complex next = 0.5 * estimate + h * odd;
        diff = std::abs(next - estimate);
        estimate = next;
        if (level >= 3 && diff <= std::max(tol.abs_tol, tol.rel_tol * std::abs(estimate)))
            return {estimate, diff, n_evals};
    }
    throw QuadratureError("tanh_sinh: level cap reached without convergence");
}

QuadResult integrate_line(const ComplexFn& fn, Complex z0, Complex z1,
                          const Tolerance& tol) {
    if (z0 == z1) return {Complex{0.0, 0.0}, 0.0, 0};
    const Complex delta = z1 - z0;
    return gk_adaptive([&](double t) { return fn(z0 + t * delta) * delta; }, 0.0, 1.0,
                       tol);
}

QuadResult integrate_arc(const ComplexFn& fn, Complex center, double radius,
                         double theta0, double theta1, const Tolerance& tol) {
    if (!(radius > 0.0)) throw PreconditionError("integrate_arc: radius must be > 0");
    if (theta0 == theta1) throw PreconditionError("integrate_arc: empty sweep");
    const auto g = [&](double theta) {
        const Complex e = std::polar(radius, theta);
        return fn(center + e) * Complex{0.0, 1.0} * e;
    };
    if (theta0 < theta1) return gk_adaptive(g, theta0, theta1, tol);
    QuadResult q = gk_adaptive(g, theta1, theta0, tol);
    q.value = -q.value;
    return q;
}

}  // namespace contourint
