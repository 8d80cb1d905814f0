#pragma once

#include "mexp/fpcore.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mexp {

enum class Axis { X, Y };

/// Homogeneous bivariate polynomial over F_p.
///
/// Stored densely: coefficient a_j belongs to the monomial x^j y^(d-j).
/// The zero polynomial is a distinguished value with no degree.
class HomoPoly {
public:
    static HomoPoly zero(Prime p) { return HomoPoly(p); }
    /// c * x^i * y^j
    static HomoPoly monomial(Prime p, std::uint64_t i, std::uint64_t j, std::uint64_t c = 1);
    /// Degree is coeffs.size() - 1; an all-zero vector (or empty) yields Zero.
    static HomoPoly from_coeffs(Prime p, std::vector<std::uint32_t> coeffs);
    static HomoPoly from_coeffs(Prime p, const std::vector<Fp>& coeffs);

    Prime prime() const { return p_; }
    bool is_zero() const { return a_.empty(); }
    /// Throws std::logic_error on Zero.
    std::uint64_t degree() const;
    /// Coefficient of x^j y^(d-j); zero outside [0, d] (and for Zero).
    Fp coeff(std::uint64_t j) const;
    std::span<const std::uint32_t> raw() const { return a_; }

    /// Terms in descending x-power, e.g. "x^4 + x^3*y"; Zero prints as "0".
    std::string to_string() const;

    friend bool operator==(const HomoPoly&, const HomoPoly&) = default;

private:
    explicit HomoPoly(Prime p) : p_(p) {}
    void trim();

    Prime p_;
    std::vector<std::uint32_t> a_;

    friend HomoPoly add(const HomoPoly&, const HomoPoly&);
    friend HomoPoly mul(const HomoPoly&, const HomoPoly&);
    friend HomoPoly scale(const HomoPoly&, Fp);
    friend HomoPoly mul_monomial(const HomoPoly&, std::uint64_t, std::uint64_t);
    friend HomoPoly div_monomial(const HomoPoly&, std::uint64_t, std::uint64_t);
    friend HomoPoly frobenius_scale(const HomoPoly&, std::uint64_t);
};

/// Throws std::invalid_argument on mismatched degrees or primes.
HomoPoly add(const HomoPoly& h1, const HomoPoly& h2);
HomoPoly sub(const HomoPoly& h1, const HomoPoly& h2);
HomoPoly neg(const HomoPoly& h);
HomoPoly mul(const HomoPoly& h1, const HomoPoly& h2);
HomoPoly scale(const HomoPoly& h, Fp c);
/// h * x^i * y^j
HomoPoly mul_monomial(const HomoPoly& h, std::uint64_t i, std::uint64_t j);
/// Exact division by x^i * y^j; throws std::domain_error when not divisible.
HomoPoly div_monomial(const HomoPoly& h, std::uint64_t i, std::uint64_t j);

inline HomoPoly operator+(const HomoPoly& a, const HomoPoly& b) { return add(a, b); }
inline HomoPoly operator-(const HomoPoly& a, const HomoPoly& b) { return sub(a, b); }
inline HomoPoly operator-(const HomoPoly& a) { return neg(a); }
inline HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) { return mul(a, b); }

/// (x + y)^m with coefficients from Lucas.
HomoPoly binomial_power(std::uint64_t m, Prime p);

/// True iff axis^k divides h. Zero is divisible by everything.
bool divisible_by_axis(const HomoPoly& h, Axis axis, std::uint64_t k);

/// Coefficients b_0..b_{c-1} of h(u, 1) in the basis (u + 1)^k, by c rounds
/// of synthetic division. h is divisible by (x + y)^c iff all are zero.
std::vector<Fp> remainder_mod_linear(const HomoPoly& h, std::uint64_t c);
bool divisible_by_sum(const HomoPoly& h, std::uint64_t c);

/// h^q for q a power of p; throws std::invalid_argument otherwise.
HomoPoly frobenius_scale(const HomoPoly& h, std::uint64_t q);

/// h1 = c * h2 for some nonzero scalar c.
bool projectively_equal(const HomoPoly& h1, const HomoPoly& h2);

/// Coefficient of the highest x-power with nonzero coefficient; throws on Zero.
Fp leading_coeff(const HomoPoly& h);

/// True iff every monomial x^i y^j of h has p | i and p | j.
bool is_frobenius_image(const HomoPoly& h);

}  // namespace mexp
