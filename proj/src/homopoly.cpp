#include "mexp/homopoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mexp {

namespace {

void check_degree(std::uint64_t d) {
    if (d > kMaxDegree) throw std::out_of_range("polynomial degree exceeds 2^32");
}

void check_same_prime(const HomoPoly& a, const HomoPoly& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("polynomials over different primes");
}

}  // namespace

void HomoPoly::trim() {
    for (std::uint32_t c : a_) {
        if (c != 0) return;
    }
    a_.clear();
}

HomoPoly HomoPoly::monomial(Prime p, std::uint64_t i, std::uint64_t j, std::uint64_t c) {
    check_degree(i + j);
    HomoPoly h(p);
    if (c % p.value() == 0) return h;
    h.a_.assign(i + j + 1, 0);
    h.a_[i] = static_cast<std::uint32_t>(c % p.value());
    return h;
}

HomoPoly HomoPoly::from_coeffs(Prime p, std::vector<std::uint32_t> coeffs) {
    HomoPoly h(p);
    for (auto& c : coeffs) c %= p.value();
    h.a_ = std::move(coeffs);
    h.trim();
    return h;
}

HomoPoly HomoPoly::from_coeffs(Prime p, const std::vector<Fp>& coeffs) {
    std::vector<std::uint32_t> raw;
    raw.reserve(coeffs.size());
    for (const Fp& c : coeffs) {
        if (c.modulus() != p) throw std::invalid_argument("coefficient over a different prime");
        raw.push_back(c.value());
    }
    return from_coeffs(p, std::move(raw));
}

std::uint64_t HomoPoly::degree() const {
    if (a_.empty()) throw std::logic_error("the zero polynomial has no degree");
    return a_.size() - 1;
}

Fp HomoPoly::coeff(std::uint64_t j) const {
    if (j >= a_.size()) return Fp(0, p_);
    return Fp(a_[j], p_);
}

std::string HomoPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const std::uint64_t d = degree();
    bool first = true;
    for (std::uint64_t k = 0; k <= d; ++k) {
        const std::uint64_t i = d - k;  // x-power, descending
        const std::uint32_t c = a_[i];
        if (c == 0) continue;
        const std::uint64_t j = d - i;
        if (!first) os << " + ";
        first = false;
        bool need_star = false;
        if (c != 1 || (i == 0 && j == 0)) {
            os << c;
            need_star = true;
        }
        if (i > 0) {
            if (need_star) os << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
            need_star = true;
        }
        if (j > 0) {
            if (need_star) os << '*';
            os << 'y';
            if (j > 1) os << '^' << j;
        }
    }
    return os.str();
}

HomoPoly add(const HomoPoly& h1, const HomoPoly& h2) {
    check_same_prime(h1, h2);
    if (h1.is_zero()) return h2;
    if (h2.is_zero()) return h1;
    if (h1.a_.size() != h2.a_.size()) throw std::invalid_argument("adding polynomials of different degrees");
    HomoPoly r = h1;
    const std::uint32_t p = h1.p_.value();
    for (std::size_t j = 0; j < r.a_.size(); ++j) r.a_[j] = add_mod(r.a_[j], h2.a_[j], p);
    r.trim();
    return r;
}

HomoPoly neg(const HomoPoly& h) { return scale(h, Fp(h.prime().value() - 1, h.prime())); }

HomoPoly sub(const HomoPoly& h1, const HomoPoly& h2) { return add(h1, neg(h2)); }

HomoPoly mul(const HomoPoly& h1, const HomoPoly& h2) {
    check_same_prime(h1, h2);
    if (h1.is_zero() || h2.is_zero()) return HomoPoly::zero(h1.p_);
    check_degree(h1.degree() + h2.degree());
    const std::uint32_t p = h1.p_.value();
    std::vector<std::uint64_t> acc(h1.a_.size() + h2.a_.size() - 1, 0);
    // Accumulate without reducing each step; reduce before the sum can overflow.
    const std::uint64_t limit = ~std::uint64_t{0} - std::uint64_t{p - 1} * (p - 1);
    for (std::size_t i = 0; i < h1.a_.size(); ++i) {
        const std::uint64_t ai = h1.a_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < h2.a_.size(); ++j) {
            std::uint64_t& slot = acc[i + j];
            slot += ai * h2.a_[j];
            if (slot >= limit) slot %= p;
        }
    }
    HomoPoly r(h1.p_);
    r.a_.resize(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r.a_[k] = static_cast<std::uint32_t>(acc[k] % p);
    r.trim();
    return r;
}

HomoPoly scale(const HomoPoly& h, Fp c) {
    if (c.modulus() != h.p_) throw std::invalid_argument("scalar over a different prime");
    if (c.is_zero() || h.is_zero()) return HomoPoly::zero(h.p_);
    HomoPoly r = h;
    for (auto& a : r.a_) a = mul_mod(a, c.value(), h.p_.value());
    return r;
}

HomoPoly mul_monomial(const HomoPoly& h, std::uint64_t i, std::uint64_t j) {
    if (h.is_zero()) return h;
    check_degree(h.degree() + i + j);
    HomoPoly r(h.p_);
    r.a_.assign(h.a_.size() + i + j, 0);
    for (std::size_t k = 0; k < h.a_.size(); ++k) r.a_[k + i] = h.a_[k];
    return r;
}

HomoPoly div_monomial(const HomoPoly& h, std::uint64_t i, std::uint64_t j) {
    if (h.is_zero()) return h;
    if (!divisible_by_axis(h, Axis::X, i) || !divisible_by_axis(h, Axis::Y, j)) {
        throw std::domain_error("polynomial is not divisible by the monomial");
    }
    HomoPoly r(h.p_);
    r.a_.assign(h.a_.begin() + static_cast<std::ptrdiff_t>(i), h.a_.end() - static_cast<std::ptrdiff_t>(j));
    return r;
}

HomoPoly binomial_power(std::uint64_t m, Prime p) {
    check_degree(m);
    std::vector<std::uint32_t> c(m + 1);
    for (std::uint64_t j = 0; j <= m; ++j) c[j] = binom_mod_p(m, static_cast<std::int64_t>(j), p).value();
    return HomoPoly::from_coeffs(p, std::move(c));
}

bool divisible_by_axis(const HomoPoly& h, Axis axis, std::uint64_t k) {
    if (h.is_zero()) return true;
    const auto a = h.raw();
    const std::uint64_t d = h.degree();
    if (k > d) return false;
    for (std::uint64_t t = 0; t < k; ++t) {
        const std::uint64_t j = axis == Axis::X ? t : d - t;
        if (a[j] != 0) return false;
    }
    return true;
}

std::vector<Fp> remainder_mod_linear(const HomoPoly& h, std::uint64_t c) {
    const Prime p = h.prime();
    std::vector<Fp> out;
    out.reserve(c);
    if (h.is_zero()) {
        out.assign(c, Fp(0, p));
        return out;
    }
    const std::uint32_t pv = p.value();
    // h(u, 1) = sum a_j u^j; divide repeatedly by (u + 1), i.e. evaluate at u = -1.
    std::vector<std::uint32_t> q(h.raw().begin(), h.raw().end());
    for (std::uint64_t round = 0; round < c; ++round) {
        if (q.empty()) {
            out.emplace_back(0, p);
            continue;
        }
        std::uint32_t carry = 0;
        // Horner from the top: new q_{k-1} = c_k - q_k.
        for (std::size_t k = q.size(); k-- > 0;) {
            carry = sub_mod(q[k], carry, pv);
            q[k] = carry;
        }
        // q[0] now holds the remainder, q[1..] the quotient.
        out.emplace_back(q[0], p);
        q.erase(q.begin());
    }
    return out;
}

bool divisible_by_sum(const HomoPoly& h, std::uint64_t c) {
    if (h.is_zero()) return true;
    if (c > h.degree()) return false;
    for (const Fp& b : remainder_mod_linear(h, c)) {
        if (!b.is_zero()) return false;
    }
    return true;
}

HomoPoly frobenius_scale(const HomoPoly& h, std::uint64_t q) {
    if (!log_of_power(q, h.p_)) throw std::invalid_argument("Frobenius exponent is not a power of p");
    if (h.is_zero() || q == 1) return h;
    check_degree(h.degree() * q);
    HomoPoly r(h.p_);
    r.a_.assign(h.degree() * q + 1, 0);
    for (std::size_t k = 0; k < h.a_.size(); ++k) r.a_[k * q] = h.a_[k];
    return r;
}

bool projectively_equal(const HomoPoly& h1, const HomoPoly& h2) {
    if (h1.prime() != h2.prime()) return false;
    if (h1.is_zero() || h2.is_zero()) return h1.is_zero() && h2.is_zero();
    if (h1.degree() != h2.degree()) return false;
    const auto a = h1.raw();
    const auto b = h2.raw();
    const std::uint32_t p = h1.prime().value();
    std::size_t k = 0;
    while (a[k] == 0) ++k;
    if (b[k] == 0) return false;
    const std::uint32_t ratio = mul_mod(a[k], inv_mod(b[k], p), p);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] != mul_mod(b[j], ratio, p)) return false;
    }
    return true;
}

Fp leading_coeff(const HomoPoly& h) {
    if (h.is_zero()) throw std::logic_error("the zero polynomial has no leading coefficient");
    const auto a = h.raw();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != 0) return Fp(a[k], h.prime());
    }
    throw std::logic_error("unreachable");
}

bool is_frobenius_image(const HomoPoly& h) {
    if (h.is_zero()) return true;
    const std::uint64_t p = h.prime().value();
    if (h.degree() % p != 0) return false;
    const auto a = h.raw();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != 0 && k % p != 0) return false;
    }
    return true;
}

}  // namespace mexp
