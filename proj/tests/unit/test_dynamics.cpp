#include <doctest.h>

#include <cmath>
#include <numbers>

#include <singeq/dynamics.hpp>
#include <singeq/equilibrium.hpp>
#include <singeq/generators.hpp>
#include <singeq/random.hpp>

#include "test_util.hpp"

using namespace singeq;

namespace {

constexpr double kPi = std::numbers::pi;

double corotation_error(double dt)
{
    const std::vector<Complex> z{-0.5, 0.5};
    const std::vector<Complex> g{2 * kPi, 2 * kPi};
    const auto traj = integrate(z, g, 1.0, dt);
    const Complex exact = 0.5 * std::polar(1.0, 2.0 * traj.times.back());
    return std::abs(traj.positions.back()[1] - exact);
}

}  // namespace

TEST_CASE("induced velocities")
{
    const std::vector<Complex> z{-0.5, 0.5};
    const auto v = induced_velocities(z, std::vector<Complex>{2 * kPi, 2 * kPi});
    CHECK(std::abs(v[1] - Complex(0, 1)) <= 1e-15);
    CHECK(std::abs(v[0] - Complex(0, -1)) <= 1e-15);

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + 2 * (trial % 3);
        const PointSet p(testutil::random_points(rng, n, 0.05));
        const auto g = solve_strengths(p).strengths;
        double gmax = 0.0;
        std::vector<Complex> ig;
        for (const auto& x : g) {
            gmax = std::max(gmax, std::abs(x));
            ig.push_back(Complex(0, 1) * x);
        }
        for (const auto& vel : induced_velocities(p.points(), g)) {
            CHECK(std::abs(vel) <= 1e-12 * gmax);
        }
        // Rotating strengths by i rotates every velocity by −90°.
        const std::vector<Complex> probe{g[0] + 0.3, g[1]};
        const std::vector<Complex> zz{p[0], p[1]};
        const auto a = induced_velocities(zz, probe);
        const auto b = induced_velocities(zz, std::vector<Complex>{Complex(0, 1) * probe[0], Complex(0, 1) * probe[1]});
        for (std::size_t k = 0; k < 2; ++k) {
            CHECK(std::abs(b[k] - Complex(0, -1) * a[k]) <= 1e-12 * std::abs(a[k]));
        }
    }
}

TEST_CASE("solved equilibria stay put")
{
    const PointSet sym({0.0, 0.5, 1.0});
    const auto g = solve_strengths(sym).strengths;
    const auto traj = integrate(sym, g, 10.0, 1e-3, {kDefaultMinSeparation, 100});
    double drift = 0.0;
    for (const auto& snap : traj.positions) {
        drift = std::max(drift, testutil::max_abs_diff(snap, {sym.begin(), sym.end()}));
    }
    CHECK(drift <= 1e-8);
    CHECK(traj.times.size() == 101);
    CHECK(traj.times.back() == 10.0);

    for (const auto& p : {generate_collinear(7, Distribution::even_parameter),
                          generate_circle(7, Distribution::even_parameter)}) {
        const auto s = solve_strengths(p).strengths;
        CHECK(fixedness_check(p, s) <= 1e-6);
        auto bad = s;
        bad[0] += 0.1;
        CHECK(fixedness_check(p, bad) > 1e-3);
    }

    const std::vector<Complex> one{Complex(0.3, 0.1)};
    CHECK(fixedness_check(one, std::vector<Complex>{Complex(1, 2)}) == 0.0);
}

TEST_CASE("two equal vortices co-rotate")
{
    const std::vector<Complex> z{-0.5, 0.5};
    const std::vector<Complex> g{2 * kPi, 2 * kPi};
    const auto traj = integrate(z, g, 3.0, 1e-3);
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        CHECK(std::abs(std::abs(traj.positions[k][0] - traj.positions[k][1]) - 1.0) <= 1e-8);
        if (k > 0) {
            CHECK(traj.times[k] > traj.times[k - 1]);
        }
    }
    CHECK(std::abs(traj.positions.back()[1] - 0.5 * std::polar(1.0, 6.0)) <= 1e-8);
    CHECK(traj.events.empty());
}

TEST_CASE("RK4 is fourth order")
{
    const double coarse = corotation_error(0.02);
    const double fine = corotation_error(0.01);
    CHECK(coarse / fine == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("sink pair collides")
{
    const std::vector<Complex> z{-0.5, 0.5};
    const std::vector<Complex> g{Complex(0, -2 * kPi), Complex(0, -2 * kPi)};
    try {
        integrate(z, g, 1.0, 1e-3);
        FAIL("expected CollisionAbort");
    } catch (const CollisionAbort& e) {
        CHECK(e.event().fatal);
        CHECK(e.event().first == 0);
        CHECK(e.event().second == 1);
        // Separation obeys d² = 1 − 4t, so the pair meets at t = 1/4; the abort lands on the step that fails.
        CHECK(e.event().time <= 0.25 + 1e-3);
        CHECK(e.event().time > 0.2);
        CHECK_FALSE(e.partial().times.empty());
        CHECK(e.partial().events.back().fatal);
    }
}

TEST_CASE("near approach records warnings")
{
    const std::vector<Complex> z{-0.5, 0.5};
    const std::vector<Complex> g{2 * kPi, 2 * kPi};
    const auto traj = integrate(z, g, 0.01, 1e-3, {0.2, 1});
    REQUIRE(traj.events.size() == 10);
    CHECK_FALSE(traj.events[0].fatal);
    CHECK(traj.events[0].distance == doctest::Approx(1.0));
}

TEST_CASE("integrate argument checks")
{
    const std::vector<Complex> z{0.0, 1.0};
    CHECK_THROWS_AS(integrate(z, std::vector<Complex>{1.0}, 1.0, 0.1), DimensionMismatch);
    CHECK_THROWS_AS(integrate(z, std::vector<Complex>{1.0, 1.0}, 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(integrate(z, std::vector<Complex>{1.0, 1.0}, 1.0, -0.1), std::invalid_argument);
    const auto traj = integrate(z, std::vector<Complex>{1.0, 1.0}, 0.25, 0.1);
    CHECK(traj.times.size() == 4);
    CHECK(traj.times.back() == 0.25);
}

TEST_CASE("single orbit closed form")
{
    const auto vortex = single_orbit({1.0, 1.0, 0.0}, 2 * kPi);
    CHECK(vortex.r == doctest::Approx(1.0));
    CHECK(vortex.theta == doctest::Approx(1.0));

    const auto source = single_orbit({Complex(0, 2 * kPi), 1.0, 0.0}, 1.0);
    CHECK(source.r == doctest::Approx(std::sqrt(3.0)));
    CHECK(source.theta == 0.0);

    const auto still = single_orbit({0.0, 0.7, 1.2}, 5.0);
    CHECK(still.r == 0.7);
    CHECK(still.theta == 1.2);

    const OrbitParams sink{Complex(1, -kPi), 1.0, 0.0};
    CHECK(collapse_time(sink) == doctest::Approx(1.0));
    CHECK_NOTHROW(single_orbit(sink, 0.99));
    CHECK_THROWS_AS(single_orbit(sink, 1.0), CollapseReached);
    CHECK_THROWS_AS(single_orbit({1.0, 0.0, 0.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(single_orbit({1.0, 1.0, 0.0}, -1.0), std::invalid_argument);
}

TEST_CASE("single orbit satisfies its ODEs")
{
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const OrbitParams p{Complex(rng.uniform(-5, 5), rng.uniform(-1, 5)), rng.uniform(0.5, 2), rng.uniform(0, 6)};
        for (double t : {0.1, 0.4, 0.9}) {
            const double h = 1e-5;
            const auto a = single_orbit(p, t - h);
            const auto b = single_orbit(p, t + h);
            const auto s = single_orbit(p, t);
            CHECK(std::abs((b.r - a.r) / (2 * h) - p.gamma.imag() / (2 * kPi * s.r)) <= 1e-6);
            CHECK(std::abs((b.theta - a.theta) / (2 * h) - p.gamma.real() / (2 * kPi * s.r * s.r)) <= 1e-6);
            const auto q = integrate_orbit(p, t, 2000);
            CHECK(std::abs(q.r - s.r) <= 1e-9);
            CHECK(std::abs(q.theta - s.theta) <= 1e-9);
        }
    }
}
