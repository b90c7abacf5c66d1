#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "ultra/continuation.hpp"

using namespace ultra;

namespace {
double deg(double rad) { return rad * 180.0 / kPi; }
} // namespace

TEST_CASE("transform table rows are exact") {
    const TransformRow d = transform_row(Rep::direct, 5, 2, 7);
    CHECK(d.alpha == Complex(5.0));
    CHECK(d.beta == Complex(2.0));
    CHECK(d.p == Complex(1.0));
    CHECK(d.q == Complex(1.0));
    CHECK(d.X == Complex(35.0));

    const TransformRow h = transform_row(Rep::h, 5, 2, 7);
    CHECK(h.alpha == Complex(-3.0));
    CHECK(h.beta == Complex(-5.0));
    CHECK(h.p == Complex(-35.0));
    CHECK(h.q == Complex(-1.0));
    CHECK(h.X == Complex(1.0));

    const TransformRow k = transform_row(Rep::k, 5, 2, 7);
    CHECK(k.alpha == Complex(-2.0));
    CHECK(k.beta == Complex(3.0));
    CHECK(k.p == Complex(-1.0));
    CHECK(k.q == Complex(35.0));
    CHECK(k.X == Complex(-1.0));
}

TEST_CASE("branch phase") {
    const BranchPhase ph = branch_phase(Rep::direct, 0, {1.7, 0.3}, {0.4, -0.2}, {0.3, 0.1});
    CHECK(ph.f == Complex(0.0));
    CHECK(ph.v == Complex(1.0));
    CHECK(ph.V == Complex(1.0));
    CHECK(std::abs(ph.Z - Complex(0.3, 0.1)) < 1e-15);

    // h-row of Example 1 at N=2: arg(v) = 120 degrees
    const BranchPhase h2 = branch_phase(Rep::h, 2, 5, 2, 7);
    CHECK(wrap_two_pi(h2.f.imag()) == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-14));
    // Z = v^-5 / 3
    CHECK(std::abs(h2.Z - h2.V / 3.0) < 1e-15);

    // p = -a*x = 0 degenerates the h-row
    CHECK_THROWS_AS(branch_phase(Rep::h, 0, 5, 2, 0), DomainError);
}

TEST_CASE("sector bounds") {
    const SectorInterval s2 = sector_bounds(2, 5);
    CHECK(deg(s2.lo) == doctest::Approx(108.0).epsilon(1e-13));
    CHECK(deg(s2.hi) == doctest::Approx(180.0).epsilon(1e-13));
    CHECK(deg(s2.center) == doctest::Approx(144.0).epsilon(1e-13));

    const SectorInterval s0 = sector_bounds(0, 3);
    CHECK(s0.center == 0.0);
    CHECK(s0.lo == doctest::Approx(-kPi / 3.0));
    CHECK(s0.hi == doctest::Approx(kPi / 3.0));

    const SectorInterval s1 = sector_bounds(1, 4);
    CHECK(deg(s1.lo) == doctest::Approx(45.0));
    CHECK(deg(s1.hi) == doctest::Approx(135.0));
    CHECK(deg(s1.center) == doctest::Approx(90.0));

    CHECK_THROWS_AS(sector_bounds(1, 0), DomainError);
}

TEST_CASE("candidate angles of the worked selection") {
    CHECK(deg(candidate_angle(Rep::h, 0, 5, 2, 7)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(deg(candidate_angle(Rep::h, 1, 5, 2, 7)) == doctest::Approx(240.0).epsilon(1e-12));
    CHECK(deg(candidate_angle(Rep::h, 2, 5, 2, 7)) == doctest::Approx(120.0).epsilon(1e-12));
    CHECK(deg(candidate_angle(Rep::k, 0, 5, 2, 7)) == doctest::Approx(270.0).epsilon(1e-12));
    CHECK(deg(candidate_angle(Rep::k, 1, 5, 2, 7)) == doctest::Approx(90.0).epsilon(1e-12));
    CHECK_THROWS_AS(candidate_angle(Rep::direct, 0, 5, 2, 7), DomainError);
}

TEST_CASE("criterion diagnostic Im(b f) is b-proportional for real parameters") {
    for (int N : {0, 1, 2}) {
        const double lhs = criterion_im_bf(Rep::h, N, 5, 2, 7);
        const double arg_v = branch_phase(Rep::h, N, 5, 2, 7).f.imag();
        CHECK(lhs == doctest::Approx(2.0 * arg_v).epsilon(1e-14));
    }
}

TEST_CASE("conjugate selection") {
    const BranchSpec s = select_conjugate(2, 5, 2, 7);
    CHECK(s.J == Rep::h);
    CHECK(s.N == 2);

    const BranchSpec p = select_conjugate(0, 5, 2, 7);
    CHECK(p.J == Rep::h);
    CHECK(p.N == 0);

    const BranchSpec m = select_conjugate(0, 5, 2, -7);
    CHECK(m.J == Rep::k);
    CHECK(m.N == 0);

    // sector of n=3 holds no candidate when the scan window is empty
    CHECK_THROWS_AS(select_conjugate(3, 5, 2, 7, 0), EvaluationError);
}

TEST_CASE("boundary pairing on the negative axis") {
    // for (a,b) = (5,2), x < 0 puts an h- and a k-candidate exactly on the
    // shared boundary of sectors 2 and 3; h continues 2, k continues 3 (= -2)
    const BranchSpec s2 = select_conjugate(2, 5, 2, -1);
    CHECK(s2.J == Rep::h);
    CHECK(s2.N == 1);
    const BranchSpec sm2 = select_conjugate(-2, 5, 2, -1);
    CHECK(sm2.J == Rep::k);
    CHECK(sm2.N == 1);
    const BranchSpec s3 = select_conjugate(3, 5, 2, -1);
    CHECK(s3.J == Rep::k);
    CHECK(s3.N == 1);
}

TEST_CASE("partition: one candidate per branch, no collisions") {
    for (int a : {2, 3, 4, 5}) {
        for (int b : {1, 2}) {
            if (b >= a) continue;
            const double R = convergence_radius(a, b).value;
            for (double scale : {1.3, 2.7, -1.3}) {
                const double x = scale * R;
                std::set<std::pair<int, int>> seen;
                for (int n = 0; n < a; ++n) {
                    const BranchSpec s = select_conjugate(n, a, b, x);
                    const auto key = std::make_pair(static_cast<int>(s.J), s.N);
                    CHECK(seen.insert(key).second);
                }
            }
        }
    }
}

TEST_CASE("principal rule") {
    CHECK(principal_rule(5, 2, 0.1) == Rep::direct);
    CHECK(principal_rule(5, 2, 7) == Rep::h);
    CHECK(principal_rule(5, 2, -7) == Rep::k);

    // agreement with the full selection away from the boundary angle
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int a = 2; a <= 5; ++a) {
        for (int b = 1; b < a; ++b) {
            const double R = convergence_radius(a, b).value;
            const double cut = kPi * std::abs(b - a) / a;
            for (int t = 0; t < 12; ++t) {
                const double th = ang(rng);
                if (std::abs(std::abs(th) - cut) < 0.05) continue;
                const Complex x = 1.5 * R * std::exp(Complex(0, th));
                const Rep want = principal_rule(a, b, x);
                const BranchSpec got = select_conjugate(0, a, b, x);
                CHECK(got.J == want);
            }
        }
    }
}
