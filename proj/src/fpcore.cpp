#include "mexp/fpcore.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace mexp {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t p) {
    // residues must fit in 32 bits so products fit in 64
    if (p > std::numeric_limits<std::uint32_t>::max() / 2 || !is_prime(p)) {
        throw std::invalid_argument("not a supported prime: " + std::to_string(p));
    }
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p;
    std::uint64_t b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
    return pow_mod(a, p - 2, p);
}

Fp Fp::from_signed(std::int64_t value, Prime p) {
    std::int64_t r = value % static_cast<std::int64_t>(p.value());
    if (r < 0) r += p.value();
    return Fp(static_cast<std::uint64_t>(r), p);
}

Fp Fp::operator+(Fp o) const { return Fp(add_mod(v_, o.v_, p_), p_); }
Fp Fp::operator-(Fp o) const { return Fp(sub_mod(v_, o.v_, p_), p_); }
Fp Fp::operator-() const { return Fp(sub_mod(0, v_, p_), p_); }
Fp Fp::operator*(Fp o) const { return Fp(mul_mod(v_, o.v_, p_), p_); }
Fp Fp::pow(std::uint64_t e) const { return Fp(pow_mod(v_, e, p_), p_); }
Fp Fp::inverse() const { return Fp(inv_mod(v_, p_), p_); }

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

DigitVector digits(std::uint64_t m, Prime p) {
    DigitVector out;
    while (m > 0) {
        out.push_back(static_cast<std::uint32_t>(m % p.value()));
        m /= p.value();
    }
    return out;
}

std::uint64_t from_digits(const DigitVector& d, Prime p) {
    std::uint64_t v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p.value() + *it;
    return v;
}

std::uint64_t s_index(std::uint64_t m, Prime p) {
    if (m == 0) throw std::invalid_argument("s(m) is undefined for m = 0");
    std::uint64_t s = 0;
    while (m % p.value() == 0) {
        m /= p.value();
        ++s;
    }
    return s;
}

namespace {

// binom(a, b) mod p for 0 <= b <= a < p; no factor vanishes mod p.
std::uint32_t small_binom(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return mul_mod(static_cast<std::uint32_t>(num), inv_mod(static_cast<std::uint32_t>(den), p), p);
}

}  // namespace

Fp binom_mod_p(std::uint64_t m, std::int64_t j, Prime p) {
    if (j < 0 || static_cast<std::uint64_t>(j) > m) return Fp(0, p);
    std::uint64_t jj = static_cast<std::uint64_t>(j);
    std::uint32_t acc = 1 % p.value();
    while (m > 0 || jj > 0) {
        std::uint32_t a = static_cast<std::uint32_t>(m % p.value());
        std::uint32_t b = static_cast<std::uint32_t>(jj % p.value());
        if (b > a) return Fp(0, p);
        acc = mul_mod(acc, small_binom(a, b, p.value()), p.value());
        m /= p.value();
        jj /= p.value();
    }
    return Fp(acc, p);
}

std::vector<std::uint64_t> g_set(std::uint64_t m, Prime p) {
    const DigitVector c = digits(m, p);
    std::vector<std::uint64_t> out{0};
    // Digits processed from the most significant down keep the list sorted:
    // every prefix choice at a higher place dominates all lower-place sums.
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        std::vector<std::uint64_t> next;
        next.reserve(out.size() * (*it + 1));
        for (std::uint64_t g : out) {
            for (std::uint32_t digit = 0; digit <= *it; ++digit) next.push_back(g * p.value() + digit);
        }
        out = std::move(next);
    }
    return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 63) / p) return std::nullopt;
        r *= p;
    }
    return r;
}

std::optional<std::uint64_t> log_of_power(std::uint64_t q, Prime p) {
    if (q == 0) return std::nullopt;
    std::uint64_t d = 0;
    while (q % p.value() == 0) {
        q /= p.value();
        ++d;
    }
    if (q != 1) return std::nullopt;
    return d;
}

}  // namespace mexp
