#pragma once

// Prime-field arithmetic and base-p combinatorics.

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace mexp {

/// Largest degree / multiplicity the engine accepts.
inline constexpr std::uint64_t kMaxDegree = std::uint64_t{1} << 32;

bool is_prime(std::uint64_t n);

/// A prime modulus. Construction performs a deterministic primality check.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint32_t value() const { return p_; }
    operator std::uint32_t() const { return p_; }

    friend bool operator==(Prime, Prime) = default;

private:
    std::uint32_t p_;
};

/// Element of F_p, always fully reduced.
class Fp {
public:
    Fp(std::uint64_t value, Prime p) : v_(static_cast<std::uint32_t>(value % p.value())), p_(p) {}
    static Fp from_signed(std::int64_t value, Prime p);

    std::uint32_t value() const { return v_; }
    Prime modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const;
    Fp operator-(Fp o) const;
    Fp operator-() const;
    Fp operator*(Fp o) const;
    Fp pow(std::uint64_t e) const;
    Fp inverse() const;  // Fermat; throws std::domain_error on zero
    Fp operator/(Fp o) const { return *this * o.inverse(); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

private:
    std::uint32_t v_;
    Prime p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

// Raw residue helpers shared by the polynomial and matrix kernels.
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Base-p digits c_0, c_1, ... (least significant first), trailing zeros trimmed.
using DigitVector = std::vector<std::uint32_t>;

DigitVector digits(std::uint64_t m, Prime p);
std::uint64_t from_digits(const DigitVector& d, Prime p);

/// Index of the least nonzero base-p digit; throws std::invalid_argument for m = 0.
std::uint64_t s_index(std::uint64_t m, Prime p);

/// binom(m, j) mod p via Lucas; zero when j < 0 or j > m.
Fp binom_mod_p(std::uint64_t m, std::int64_t j, Prime p);

/// G_m: all g whose base-p digits are dominated by those of m, ascending.
std::vector<std::uint64_t> g_set(std::uint64_t m, Prime p);

/// p^k, or nullopt when it exceeds 2^63.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t k);

/// Returns d with q = p^d, or nullopt when q is not a power of p.
std::optional<std::uint64_t> log_of_power(std::uint64_t q, Prime p);

}  // namespace mexp
