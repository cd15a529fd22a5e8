#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "contourint/complexfn.hpp"

using namespace contourint;
using std::numbers::pi;

namespace {

const Complex I{0.0, 1.0};

// Double-precision oracle for f on (-1, 1), straight from the defining
// difference of inverse trig functions.
double f_axis_oracle(double x) { return (std::atanh(x) - std::atan(x)) / pi; }

struct Sampler {
    std::mt19937_64 engine{42};
    double uniform() { return double(engine() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace

TEST_CASE("principal_log: reference points") {
    CHECK(std::abs(principal_log({1.0, 0.0})) <= 0.0);
    const Complex li = principal_log({0.0, 1.0});
    CHECK(li.real() == 0.0);
    CHECK(li.imag() == doctest::Approx(pi / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(principal_log({-1.0, 0.0}), BranchCutError);
    CHECK_THROWS_AS(principal_log({0.0, 0.0}), BranchCutError);
    CHECK_THROWS_AS(principal_log({-2.0, 1e-10}), BranchCutError);
}

TEST_CASE("classify_region: dispatch table") {
    CHECK(classify_region({0.5, 0.0}) == RegionTag::InnerDisk);
    CHECK(classify_region({2.0, 0.0}) == RegionTag::RealBoundaryOuter);
    CHECK(classify_region({0.0, 2.0}) == RegionTag::ImagBoundaryOuter);
    CHECK(classify_region({1.0, 1e-12}) == RegionTag::Excluded);
    CHECK(classify_region({0.0, 1.0}) == RegionTag::Excluded);
    CHECK(classify_region({0.9, 0.0}) == RegionTag::LogformInterior);
    CHECK(classify_region({-0.9, 0.4}) == RegionTag::LogformInterior);
    CHECK(classify_region({2.0, 2.0}) == RegionTag::OuterQuadrant);
    CHECK(classify_region({-2.0, 0.0}) == RegionTag::Excluded);  // on a cut
    CHECK(classify_region({0.0, -3.0}) == RegionTag::Excluded);  // on a cut
}

TEST_CASE("f_inner: frozen values") {
    CHECK(std::abs(f_inner({0.0, 0.0}).value) == 0.0);
    const FEval fe = f_inner({0.5, 0.0});
    // Oracle: (arctanh 0.5 - arctan 0.5)/pi = 0.027265958632596614
    CHECK(fe.value.real() == doctest::Approx(0.027265958632596614).epsilon(1e-14));
    CHECK(fe.value.imag() == 0.0);
    CHECK(fe.trunc_bound >= 0.0);
    CHECK(fe.trunc_bound <= 1e-10);
    CHECK_THROWS_AS(f_inner({0.9, 0.0}), PreconditionError);
}

TEST_CASE("f_inner: agrees with axis oracle across the disk") {
    for (int k = 1; k <= 20; ++k) {
        const double x = 0.75 * k / 20.0;
        CHECK(std::abs(f_inner({x, 0.0}).value.real() - f_axis_oracle(x)) <= 1e-15);
    }
}

TEST_CASE("f_inner: rotation f(ix) = -i f(x)") {
    Sampler s;
    for (int k = 0; k < 100; ++k) {
        const double x = s.uniform(0.0, r_inner);
        const Complex lhs = f_inner({0.0, x}).value;
        const Complex rhs = -I * f_inner({x, 0.0}).value;
        CHECK(std::abs(lhs - rhs) <= 1e-15);
    }
}

TEST_CASE("f_inner: NoConvergence when max_terms is too small") {
    SeriesConfig starved;
    starved.max_terms = 2;
    CHECK_THROWS_AS(f_inner({0.7, 0.1}, starved), NoConvergenceError);
}

TEST_CASE("f_logform: frozen values and overlap with f_inner") {
    CHECK(std::abs(f_logform({0.0, 0.0}).value) == 0.0);
    CHECK(std::abs(f_logform({0.5, 0.0}).value - f_inner({0.5, 0.0}).value) <= 1e-13);
    CHECK_THROWS_AS(f_logform({1.0, 0.0}), PreconditionError);
    CHECK_THROWS_AS(f_logform({2.0, 0.0}), BranchCutError);  // on the cut of a log
}

TEST_CASE("f_logform vs oracle quadrature at 0.9") {
    const Complex oracle = f_oracle_integral({0.9, 0.0});
    CHECK(std::abs(f_logform({0.9, 0.0}).value - oracle) <= 1e-11);
}

TEST_CASE("f_outer: overlap and boundary traces") {
    const Complex z = std::polar(1.5, pi / 4.0);
    CHECK(std::abs(f_outer(z).value - f_logform(z).value) <= 1e-12);

    // Boundary trace at x = 2 vs the limit of the log form from above.
    const double d1 = 1e-6, d2 = 1e-8;
    const Complex f1 = f_logform({2.0, d1}).value;
    const Complex f2 = f_logform({2.0, d2}).value;
    const Complex extrap = f2 - d2 * (f1 - f2) / (d1 - d2);
    CHECK(std::abs(f_outer({2.0, 0.0}).value - extrap) <= 1e-10);

    CHECK_THROWS_AS(f_outer({1.1, 0.0}), PreconditionError);   // below r_outer
    CHECK_THROWS_AS(f_outer({-2.0, 3.0}), PreconditionError);  // wrong quadrant
}

TEST_CASE("f_outer: constant term at infinity") {
    const Complex z = std::polar(1e9, 0.7);
    CHECK(std::abs(f_outer(z).value - Complex{-0.5, 0.5}) <= 1e-8);
}

TEST_CASE("1 + (1+i) f decays on outer rays") {
    for (double phi : {0.1, pi / 4.0, 1.4}) {
        for (double r : {2.0, 5.0, 20.0}) {
            const Complex w = 1.0 + Complex{1.0, 1.0} * f_outer(std::polar(r, phi)).value;
            CHECK(std::abs(w) <= 1.0);
        }
    }
}

TEST_CASE("f_eval: dispatch and exclusion") {
    CHECK(f_eval({0.5, 0.0}).method == RegionTag::InnerDisk);
    CHECK(f_eval({5.0, 0.0}).method == RegionTag::RealBoundaryOuter);
    CHECK(f_eval({0.9, 0.0}).method == RegionTag::LogformInterior);
    CHECK_THROWS_AS(f_eval({1.0, 0.0}), RegionError);
}

TEST_CASE("f_eval: boundary trace close to |z| = 1 stays finite and consistent") {
    // The outer series is useless at x = 1 + 1e-7; the trace formula must
    // agree with the log form approached from inside the quadrant.
    const double x = 1.0 + 1e-3;
    const Complex trace = f_eval({x, 0.0}).value;
    const double d1 = 1e-8, d2 = 1e-10;
    const Complex f1 = f_logform({x, d1}).value;
    const Complex f2 = f_logform({x, d2}).value;
    const Complex extrap = f2 - d2 * (f1 - f2) / (d1 - d2);
    CHECK(std::abs(trace - extrap) <= 1e-9);

    const Complex deep = f_eval({1.0 + 1e-6, 0.0}).value;
    CHECK(std::isfinite(deep.real()));
    CHECK(deep.imag() == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("conjugation symmetry inside the unit disk") {
    Sampler s;
    for (int k = 0; k < 100; ++k) {
        const Complex z = std::polar(0.95 * std::sqrt(s.uniform()),
                                     2.0 * pi * s.uniform());
        if (classify_region(z) == RegionTag::Excluded) continue;
        const Complex a = f_eval(std::conj(z)).value;
        const Complex b = std::conj(f_eval(z).value);
        CHECK(std::abs(a - b) <= 1e-14);
    }
}

TEST_CASE("f_oracle_integral: values and rotation") {
    CHECK(std::abs(f_oracle_integral({0.0, 0.0})) == 0.0);
    CHECK(f_oracle_integral({0.5, 0.0}).real() ==
          doctest::Approx(0.027265958632596614).epsilon(1e-12));
    const Complex a = f_oracle_integral({0.0, 0.5});
    const Complex b = -I * f_oracle_integral({0.5, 0.0});
    CHECK(std::abs(a - b) <= 1e-13);
    CHECK_THROWS_AS(f_oracle_integral({2.0, 0.0}), PreconditionError);
}

TEST_CASE("G_eval: removable point and small-z bound") {
    CHECK(std::abs(G_eval({0.0, 0.0})) == 0.0);
    Sampler s;
    for (int k = 0; k < 50; ++k) {
        const Complex z = std::polar(0.1 * std::sqrt(s.uniform()),
                                     s.uniform(0.0, pi / 2.0));
        CHECK(std::abs(G_eval(z)) <= 2.0 * (2.0 / (3.0 * pi)) * std::norm(z));
    }
}

TEST_CASE("G_eval: continuous across the |z| = 0.1 series switch") {
    const Complex lo = G_eval({0.0999999, 0.000001});
    const Complex hi = G_eval({0.1000001, 0.000001});
    CHECK(std::abs(lo - hi) <= 1e-6);
}

TEST_CASE("G_eval: Im G(x) equals the real integrand on (0,1)") {
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
        CHECK(std::abs(G_eval({x, 0.0}).imag() - real_integrand(x)) <= 1e-13);
    }
    CHECK(G_eval({0.5, 0.0}).imag() ==
          doctest::Approx(0.053072056423257984).epsilon(1e-13));
}

TEST_CASE("G_eval: domain errors") {
    CHECK_THROWS_AS(G_eval({-0.5, 0.5}), PreconditionError);
    CHECK_THROWS_AS(G_eval({1.0, 0.0}), RegionError);
    CHECK_THROWS_AS(G_eval({0.0, 1.0 + 1e-9}), RegionError);
}

TEST_CASE("real_integrand: frozen values and limit behaviour") {
    CHECK(real_integrand(0.0) == 0.0);
    CHECK(real_integrand(0.5) ==
          doctest::Approx(0.053072056423257984).epsilon(1e-15));
    // Slow approach to the limit pi/4: frozen double-precision value.
    CHECK(real_integrand(1.0 - 1e-8) ==
          doctest::Approx(0.6346695369537705).epsilon(1e-12));
    CHECK(real_integrand(1.0 - 1e-8) < pi / 4.0);
    CHECK_THROWS_AS(real_integrand(-0.1), DomainError);
    CHECK_THROWS_AS(real_integrand(1.0), DomainError);
}

TEST_CASE("half-plane condition on random quadrant samples") {
    Sampler s;
    int done = 0;
    while (done < 1000) {
        const Complex z = std::polar(50.0 * s.uniform(),
                                     s.uniform(1e-9, pi / 2.0 - 1e-9));
        if (z == Complex{0.0, 0.0} || classify_region(z) == RegionTag::Excluded)
            continue;
        CHECK((1.0 + Complex{1.0, 1.0} * f_eval(z).value).real() > 0.0);
        ++done;
    }
}

TEST_CASE("monotonicity of f on the real axis") {
    double prev = -1.0;
    for (int j = 0; j <= 100; ++j) {
        const double x = 0.999 * j / 100.0;
        const double fx = x == 0.0 ? 0.0 : f_eval({x, 0.0}).value.real();
        CHECK(fx >= 0.0);
        CHECK(fx > prev);
        prev = fx;
    }
}
