#include "mexp/derivmod.hpp"

#include <doctest.h>

using namespace mexp;

namespace {

HomoPoly mono(Prime p, std::uint64_t i, std::uint64_t j, std::int64_t c = 1) {
    return scale(HomoPoly::monomial(p, i, j), Fp::from_signed(c, p));
}

VectorField dx(Prime p) { return VectorField(mono(p, 0, 0), HomoPoly::zero(p)); }
VectorField dy(Prime p) { return VectorField(HomoPoly::zero(p), mono(p, 0, 0)); }
VectorField euler(Prime p) { return VectorField(mono(p, 1, 0), mono(p, 0, 1)); }

}  // namespace

TEST_CASE("defining_poly") {
    for (std::uint64_t p : {2, 3, 5}) {
        CHECK(defining_poly({0, 0, 0}, Prime(p)) == mono(Prime(p), 0, 0));
        CHECK(defining_poly({1, 1, 0}, Prime(p)) == mono(Prime(p), 1, 1));
    }
    const Prime p5(5);
    const HomoPoly q = defining_poly({3, 3, 4}, p5);
    CHECK(q.degree() == 10);
    CHECK(q == mono(p5, 3, 3) * binomial_power(4, p5));
    // (x+y)^4 = x^4 + 4x^3y + 6x^2y^2 + 4xy^3 + y^4
    CHECK(q.coeff(7).value() == 1);
    CHECK(q.coeff(6).value() == 4);
    CHECK(q.coeff(5).value() == 1);
    CHECK(q.coeff(3).value() == 1);
}

TEST_CASE("in_module") {
    for (std::uint64_t p : {2, 3, 5}) {
        const Prime pr(p);
        CHECK(in_module(euler(pr), {1, 1, 1}));
        CHECK_FALSE(in_module(dx(pr), {1, 0, 0}));
        CHECK(in_module(VectorField::zero(pr), {7, 7, 7}));
        for (std::uint64_t a = 0; a < 5; ++a) {
            for (std::uint64_t b = 0; b < 5; ++b) {
                const VectorField psi1(mono(pr, a, b, -1), mono(pr, a, b));
                for (std::uint64_t m = 0; m < 6; ++m) CHECK(in_module(psi1, {a, b, m}));
            }
        }
    }
}

TEST_CASE("saito_det") {
    const Prime p3(3), p5(5);
    CHECK(saito_det(dx(p3), dy(p3)) == mono(p3, 0, 0));
    CHECK(saito_det(euler(p3), euler(p3)).is_zero());

    const VectorField t(mono(p5, 10, 0) + mono(p5, 9, 1, -1) + mono(p5, 8, 2), mono(p5, 2, 8) + mono(p5, 1, 9, -1));
    const VectorField tp(mono(p5, 10, 0), mono(p5, 0, 10, -1));
    CHECK(in_module(t, {8, 8, 4}));
    CHECK(in_module(tp, {8, 8, 4}));
    CHECK(projectively_equal(saito_det(t, tp), defining_poly({8, 8, 4}, p5)));
}

TEST_CASE("saito_check") {
    const Prime p2(2), p3(3);
    CHECK(saito_check(dx(p3), dy(p3), {0, 0, 0}));
    const VectorField psi(mono(p2, 4, 0), mono(p2, 0, 4));
    const VectorField psi1(mono(p2, 3, 3, -1), mono(p2, 3, 3));
    CHECK(saito_check(psi, psi1, {3, 3, 4}));
    CHECK_FALSE(saito_check(psi, psi, {3, 3, 4}));
    CHECK_FALSE(saito_check(dx(p3), dy(p3), {1, 0, 0}));

    // A basis of D(3,3,4) in characteristic 0, reduced mod 3 and mod 5.
    for (std::uint64_t p : {3, 5}) {
        const Prime pr(p);
        const VectorField t(mono(pr, 5, 0) + mono(pr, 4, 1, 4) + mono(pr, 3, 2, 6), mono(pr, 2, 3, 4) + mono(pr, 1, 4));
        const VectorField tp(mono(pr, 5, 0) + mono(pr, 4, 1, 5) + mono(pr, 3, 2, 10),
                             mono(pr, 2, 3, 10) + mono(pr, 1, 4, 5) + mono(pr, 0, 5));
        CHECK(in_module(t, {3, 3, 4}));
        CHECK(in_module(tp, {3, 3, 4}));
        CHECK(saito_check(t, tp, {3, 3, 4}) == (p == 5));
    }
}

TEST_CASE("make_basis") {
    const Prime p5(5);
    const VectorField a(mono(p5, 0, 0, 3), HomoPoly::zero(p5));
    const VectorField b(HomoPoly::zero(p5), mono(p5, 0, 0, 2));
    const BasisPair ab = make_basis(a, b, {0, 0, 0});
    CHECK(ab.certified);
    CHECK(ab.low == dx(p5));
    CHECK(ab.high == b);
    const BasisPair sorted = make_basis(VectorField(mono(p5, 1, 0), mono(p5, 0, 1)), dy(p5), {0, 0, 0});
    CHECK(sorted.low == dy(p5));
    CHECK_FALSE(sorted.certified);
    CHECK_FALSE(make_basis(euler(p5), euler(p5), {1, 1, 1}).certified);
}

TEST_CASE("vector field construction") {
    const Prime p3(3);
    CHECK_THROWS_AS(VectorField(mono(p3, 1, 0), mono(p3, 2, 0)), std::invalid_argument);
    CHECK_THROWS(VectorField::zero(p3).degree());
    CHECK(euler(p3).to_string() == "(x) dx + (y) dy");
    CHECK(VectorField::zero(p3).to_string() == "0");
}
