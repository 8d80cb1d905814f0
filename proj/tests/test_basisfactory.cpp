#include "mexp/basisfactory.hpp"
#include "mexp/fastexp.hpp"
#include "mexp/oracle.hpp"

#include <doctest.h>

using namespace mexp;

namespace {

HomoPoly mono(Prime p, std::uint64_t i, std::uint64_t j, std::int64_t c = 1) {
    return scale(HomoPoly::monomial(p, i, j), Fp::from_signed(c, p));
}

std::vector<Multiplicity> triples(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> l, std::uint64_t m) {
    std::vector<Multiplicity> out;
    for (auto [a, b] : l) out.push_back({a, b, m});
    return out;
}

}  // namespace

TEST_CASE("gamma_membership") {
    CHECK(gamma_membership({3, 3, 4}, Prime(3)));
    CHECK(gamma_membership({9, 9, 16}, Prime(3)));
    CHECK_FALSE(gamma_membership({10, 8, 16}, Prime(3)));
    CHECK_FALSE(gamma_membership({3, 3, 4}, Prime(5)));
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t m = 0; m <= 12; ++m) {
            for (std::uint64_t a = 0; a <= m + 1; ++a) CHECK(gamma_membership({a, m + 1 - a, m}, Prime(p)));
        }
    }
    // Boundary where J is empty because m equals mu2.
    CHECK(gamma_membership({1, 1, 1}, Prime(2)));
}

TEST_CASE("B and S sets") {
    const Prime p3(3);
    CHECK(b_set(16, p3) == triples({{1, 17}, {2, 16}, {4, 14}, {5, 13}, {7, 11}, {8, 10},
                                    {10, 8}, {11, 7}, {13, 5}, {14, 4}, {16, 2}, {17, 1}},
                                   16));
    auto s = s_set(16, p3);
    std::sort(s.begin(), s.end());
    CHECK(s == triples({{1, 16}, {3, 15}, {4, 13}, {6, 12}, {7, 10}, {9, 9}, {10, 7}, {12, 6}, {13, 4}, {15, 3}, {16, 1}},
                       16));
    CHECK(b_set(4, Prime(2)) == triples({{1, 5}, {5, 1}}, 4));
    CHECK(s_set(4, Prime(2)) == triples({{4, 4}}, 4));
    const auto s43 = s_set(4, p3);
    CHECK(std::find(s43.begin(), s43.end(), Multiplicity{3, 3, 4}) != s43.end());
    for (std::uint64_t m = 1; m < 20; ++m) {
        for (const auto& b : b_set(m, Prime(2))) {
            CHECK(b.mu1 + b.mu2 == m + 2);
            CHECK(oracle_delta(b, Prime(2)) == 0);
        }
    }
}

TEST_CASE("psi_basis") {
    const Prime p2(2), p3(3);
    const BasisPair a = psi_basis({3, 3, 4}, p2);
    CHECK(a.certified);
    CHECK(a.low == VectorField(mono(p2, 4, 0), mono(p2, 0, 4)));
    CHECK(a.high == VectorField(mono(p2, 3, 3, -1), mono(p2, 3, 3)));
    const BasisPair b = psi_basis({3, 3, 4}, p3);
    CHECK(b.low.to_string() == "(x^4 + x^3*y) dx + (x*y^3 + y^4) dy");
    CHECK(b.high == VectorField(mono(p3, 3, 3, -1), mono(p3, 3, 3)));
    for (std::uint64_t c = 0; c < 4; ++c) {
        for (std::uint64_t m = 0; m < 6; ++m) {
            const BasisPair z = psi_basis({0, c, m}, p3);
            const VectorField& psi = z.low.degree() == m && z.low.g().is_zero() ? z.low : z.high;
            CHECK(psi == VectorField(binomial_power(m, p3), HomoPoly::zero(p3)));
        }
    }
    CHECK_THROWS_AS(psi_basis({3, 3, 4}, Prime(5)), std::invalid_argument);
}

TEST_CASE("Gamma is a lower set") {
    for (std::uint64_t p : {2, 3}) {
        for (std::uint64_t m = 0; m <= 12; ++m) {
            for (std::uint64_t a = 0; a <= 20; ++a) {
                for (std::uint64_t b = 0; b <= 20; ++b) {
                    if (!gamma_membership({a, b, m}, Prime(p))) continue;
                    if (a > 0) CHECK(gamma_membership({a - 1, b, m}, Prime(p)));
                    if (b > 0) CHECK(gamma_membership({a, b - 1, m}, Prime(p)));
                }
            }
        }
    }
}

TEST_CASE("frobenius_lift") {
    for (std::uint64_t p : {2, 3, 5}) {
        const Prime pr(p);
        const BasisPair e = oracle_exponents({1, 1, 1}, pr).basis;
        const auto [lifted, mu] = frobenius_lift(e, {1, 1, 1}, p);
        CHECK(mu == Multiplicity{p, p, p});
        CHECK(lifted.certified);
        CHECK(lifted.low == VectorField(mono(pr, p, 0), mono(pr, 0, p)));
        const auto [twice, mu2] = frobenius_lift(lifted, mu, p);
        const auto [once, mu2b] = frobenius_lift(e, {1, 1, 1}, p * p);
        CHECK(mu2 == mu2b);
        CHECK(twice.low == once.low);
    }
    const auto [l5, m5] = frobenius_lift(oracle_exponents({3, 3, 4}, Prime(5)).basis, {3, 3, 4}, 5);
    CHECK(m5 == Multiplicity{15, 15, 20});
    CHECK(l5.low.degree() == l5.high.degree());
}

TEST_CASE("period_shift") {
    const Prime p5(5);
    const BasisPair base = oracle_exponents({3, 3, 4}, p5).basis;
    const auto [shifted, nu] = period_shift(base, {3, 3, 4}, 1);
    CHECK(nu == Multiplicity{8, 8, 4});
    CHECK(shifted.certified);
    CHECK(shifted.low.degree() == base.low.degree() + 5);
    CHECK(shifted.high.degree() == base.high.degree() + 5);
    const VectorField t(mono(p5, 5, 0) + mono(p5, 4, 1, -1) + mono(p5, 3, 2), mono(p5, 2, 3, -1) + mono(p5, 1, 4));
    CHECK(period_field(t, p5, 1) ==
          VectorField(mono(p5, 10, 0) + mono(p5, 9, 1, -1) + mono(p5, 8, 2), mono(p5, 2, 8) + mono(p5, 1, 9, -1)));
    CHECK(period_field_inverse(period_field(t, p5, 1), p5, 1) == t);

    const Prime p3(3);
    // mu3 = 31 exceeds 27: the low generator still maps into the module, the
    // high one does not, and completion supplies the missing degree-66 field.
    const BasisPair seed = psi_basis({14, 25, 31}, p3);
    CHECK_THROWS_AS(period_shift(seed, {14, 25, 31}, 3), std::invalid_argument);
    const VectorField low = period_field(seed.low, p3, 3);
    CHECK(low.degree() == 58);
    CHECK(in_module(low, {41, 52, 31}));
    const VectorField high = period_field(seed.high, p3, 3);
    CHECK(high == VectorField(mono(p3, 41, 25, -1), mono(p3, 14, 52, -1)));
    CHECK_FALSE(in_module(high, {41, 52, 31}));
    CHECK(divisible_by_sum(high.on_sum(), 27));
    CHECK_FALSE(divisible_by_sum(high.on_sum(), 28));
    const BasisPair done = complete_basis(low, {41, 52, 31});
    CHECK(done.certified);
    CHECK(done.high.degree() == 66);
}

TEST_CASE("duality") {
    const Prime p3(3);
    const VectorField psi1(mono(p3, 3, 3, -1), mono(p3, 3, 3));
    CHECK(dual_field(psi1, {3, 3, 4}, p3, 2) == VectorField(mono(p3, 9, 0), mono(p3, 0, 9)));
    CHECK(dual_multiplicity({3, 3, 4}, p3, 2) == Multiplicity{6, 6, 4});
    CHECK_THROWS(dual_multiplicity({10, 0, 0}, p3, 2));
    for (std::uint64_t p : {2, 3}) {
        const Prime pr(p);
        for (std::uint64_t d = 1; d <= 2; ++d) {
            const std::uint64_t q = *checked_pow(p, d);
            for (std::uint64_t a = 0; a <= q; ++a) {
                for (std::uint64_t b = 0; b <= q; ++b) {
                    for (std::uint64_t c = 0; c <= q; ++c) {
                        const Multiplicity mu{a, b, c};
                        const BasisPair base = oracle_exponents(mu, pr).basis;
                        const Multiplicity dm = dual_multiplicity(mu, pr, d);
                        const VectorField back = dual_field(dual_field(base.low, mu, pr, d), dm, pr, d);
                        CHECK(back == scale(base.low, Fp::from_signed(-1, pr)));
                        const auto [db, dmu] = dual_basis(base, mu, d);
                        CHECK(dmu == dm);
                        CHECK(db.certified);
                        CHECK(gamma_dual_membership(mu, pr, d) == gamma_membership(dm, pr));
                    }
                }
            }
        }
    }
}

TEST_CASE("plan_basis") {
    const auto a = plan_basis({3, 3, 4}, Prime(2));
    CHECK(a.steps.empty());
    CHECK(a.seed == SeedKind::Psi);

    const auto b = plan_basis({41, 52, 31}, Prime(3));
    REQUIRE(b.steps.size() == 1);
    CHECK(b.steps[0] == TransformStep{StepKind::PeriodShift, 3, Direction::Inverse});
    CHECK(b.seed_mu == Multiplicity{14, 25, 31});
    CHECK(b.basis.low.degree() == 58);
    CHECK(b.basis.high.degree() == 66);
    CHECK(saito_check(b.basis.low, b.basis.high, {41, 52, 31}));

    for (std::uint64_t p : {2, 3, 5}) {
        const auto c = plan_basis({p, p, p}, Prime(p));
        REQUIRE_FALSE(c.steps.empty());
        CHECK(c.steps[0].kind == StepKind::FrobeniusLift);
        CHECK(c.seed_mu == Multiplicity{1, 1, 1});
        CHECK(c.basis.certified);
    }
}

TEST_CASE("planned bases have the fast exponents") {
    for (std::uint64_t p : {2, 3}) {
        const Prime pr(p);
        for (std::uint64_t a = 0; a <= 10; ++a) {
            for (std::uint64_t b = 0; b <= 10; ++b) {
                for (std::uint64_t c = 0; c <= 10; ++c) {
                    const Multiplicity mu{a, b, c};
                    const auto plan = plan_basis(mu, pr);
                    const auto f = fast_exponents(mu, pr);
                    REQUIRE(saito_check(plan.basis.low, plan.basis.high, mu));
                    CHECK(plan.basis.low.degree() == f.d1);
                    CHECK(plan.basis.high.degree() == f.d2);
                    CHECK(leading_coeff(plan.basis.low.f().is_zero() ? plan.basis.low.g() : plan.basis.low.f()).value() == 1);
                }
            }
        }
    }
}
