#include "mexp/derivmod.hpp"

#include <stdexcept>
#include <utility>

namespace mexp {

VectorField::VectorField(HomoPoly f, HomoPoly g) : f_(std::move(f)), g_(std::move(g)) {
    if (f_.prime() != g_.prime()) throw std::invalid_argument("vector field components over different primes");
    if (!f_.is_zero() && !g_.is_zero() && f_.degree() != g_.degree()) {
        throw std::invalid_argument("vector field components of unequal degree");
    }
}

std::uint64_t VectorField::degree() const {
    if (!f_.is_zero()) return f_.degree();
    if (!g_.is_zero()) return g_.degree();
    throw std::logic_error("the zero vector field has no degree");
}

std::string VectorField::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (!f_.is_zero()) out = "(" + f_.to_string() + ") dx";
    if (!g_.is_zero()) {
        if (!out.empty()) out += " + ";
        out += "(" + g_.to_string() + ") dy";
    }
    return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) { return {a.f() + b.f(), a.g() + b.g()}; }

VectorField scale(const VectorField& t, Fp c) { return {scale(t.f(), c), scale(t.g(), c)}; }

VectorField mul(const HomoPoly& h, const VectorField& t) { return {h * t.f(), h * t.g()}; }

bool projectively_equal(const VectorField& a, const VectorField& b) {
    if (a.prime() != b.prime()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    // Find the ratio from the first nonzero component, then compare both.
    const HomoPoly& pa = a.f().is_zero() ? a.g() : a.f();
    const HomoPoly& pb = a.f().is_zero() ? b.g() : b.f();
    if (pb.is_zero() || pa.degree() != pb.degree()) return false;
    const Fp ratio = leading_coeff(pa) / leading_coeff(pb);
    return scale(b, ratio) == a;
}

HomoPoly defining_poly(const Multiplicity& mu, Prime p) {
    check_supported(mu);
    return mul_monomial(binomial_power(mu.mu3, p), mu.mu1, mu.mu2);
}

bool in_module(const VectorField& theta, const Multiplicity& mu) {
    return divisible_by_axis(theta.f(), Axis::X, mu.mu1) && divisible_by_axis(theta.g(), Axis::Y, mu.mu2) &&
           divisible_by_sum(theta.on_sum(), mu.mu3);
}

HomoPoly saito_det(const VectorField& t1, const VectorField& t2) {
    return t1.f() * t2.g() - t2.f() * t1.g();
}

bool saito_check(const VectorField& t1, const VectorField& t2, const Multiplicity& mu) {
    if (t1.prime() != t2.prime()) return false;
    if (!in_module(t1, mu) || !in_module(t2, mu)) return false;
    const HomoPoly det = saito_det(t1, t2);
    if (det.is_zero() || det.degree() != mu.total()) return false;
    return projectively_equal(det, defining_poly(mu, t1.prime()));
}

namespace {

Fp field_leading_coeff(const VectorField& t) {
    return t.f().is_zero() ? leading_coeff(t.g()) : leading_coeff(t.f());
}

}  // namespace

BasisPair make_basis(VectorField a, VectorField b, const Multiplicity& mu) {
    if (a.is_zero() || b.is_zero()) return BasisPair{std::move(a), std::move(b), false};
    if (b.degree() < a.degree()) std::swap(a, b);
    a = scale(a, field_leading_coeff(a).inverse());
    const bool ok = saito_check(a, b, mu);
    return BasisPair{std::move(a), std::move(b), ok};
}

}  // namespace mexp
