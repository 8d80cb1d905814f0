#include "mexp/fastexp.hpp"

#include <stdexcept>

namespace mexp {

std::string_view tag_name(ExpTag tag) {
    switch (tag) {
        case ExpTag::Unbalanced: return "Unbalanced";
        case ExpTag::K0Odd: return "K0Odd";
        case ExpTag::K0Even: return "K0Even";
        case ExpTag::CaseC: return "CaseC";
        case ExpTag::CaseD: return "CaseD";
        case ExpTag::CaseE: return "CaseE";
        case ExpTag::CaseF: return "CaseF";
    }
    return "?";
}

bool is_balanced(const Multiplicity& mu) { return 2 * mu.max() <= mu.total(); }

ExponentReport unbalanced_exponents(const Multiplicity& mu) {
    if (is_balanced(mu)) throw std::invalid_argument("multiplicity " + mu.to_string() + " is balanced");
    ExponentReport r;
    r.tag = ExpTag::Unbalanced;
    r.delta = 2 * mu.max() - mu.total();
    r.d1 = mu.total() - mu.max();
    r.d2 = mu.max();
    return r;
}

namespace {

std::uint64_t power(Prime p, std::uint64_t k) {
    auto q = checked_pow(p.value(), k);
    if (!q) throw std::out_of_range("p^k overflows");
    return *q;
}

}  // namespace

Decomposition decompose(const Multiplicity& mu, Prime p, std::uint64_t k) {
    const std::uint64_t q = power(p, k);
    return {{mu.mu1 / q, mu.mu2 / q, mu.mu3 / q}, {mu.mu1 % q, mu.mu2 % q, mu.mu3 % q}};
}

std::optional<BallHit> ball_center(const Multiplicity& mu, Prime p, std::uint64_t k) {
    const std::uint64_t q = power(p, k);
    const auto [alpha, beta] = decompose(mu, p, k);
    const std::uint64_t b = beta.total();
    if (alpha.total() % 2 == 0) {
        for (unsigned i = 0; i < 3; ++i) {
            if (2 * beta[i] > b) {
                Multiplicity c = alpha;
                c[i] += 1;
                return BallHit{scaled(c, q), BallCase::C, i};
            }
        }
        if (b > 2 * q) return BallHit{scaled({alpha.mu1 + 1, alpha.mu2 + 1, alpha.mu3 + 1}, q), BallCase::D, 0};
        return std::nullopt;
    }
    const Multiplicity gamma{q - beta.mu1, q - beta.mu2, q - beta.mu3};
    const std::uint64_t g = gamma.total();
    for (unsigned i = 0; i < 3; ++i) {
        if (2 * gamma[i] > g) {
            Multiplicity c = alpha;
            c[i + 1] += 1;
            c[i + 2] += 1;
            return BallHit{scaled(c, q), BallCase::E, i};
        }
    }
    if (g > 2 * q) return BallHit{scaled(alpha, q), BallCase::F, 0};
    return std::nullopt;
}

KSearch k_search(const Multiplicity& mu, Prime p) {
    KSearch out;
    for (std::uint64_t m = 1;; ++m) {
        const auto q = checked_pow(p.value(), m);
        if (!q || 2 * *q > mu.total()) break;
        const auto hit = ball_center(mu, p, m);
        if (!hit) continue;
        const Multiplicity nu{hit->center.mu1 / *q, hit->center.mu2 / *q, hit->center.mu3 / *q};
        if (is_balanced(nu)) {
            out.k = m;
        } else {
            out.filter_rejected = true;
        }
    }
    return out;
}

std::uint64_t compute_k(const Multiplicity& mu, Prime p) {
    if (!is_balanced(mu)) throw std::invalid_argument("multiplicity " + mu.to_string() + " is unbalanced");
    return k_search(mu, p).k;
}

ExponentReport fast_exponents(const Multiplicity& mu, Prime p) {
    check_supported(mu);
    if (!is_balanced(mu)) return unbalanced_exponents(mu);
    const std::uint64_t n = mu.total();
    ExponentReport r;
    r.k = compute_k(mu, p);
    if (r.k == 0) {
        if (n % 2 == 1) {
            r.tag = ExpTag::K0Odd;
            r.delta = 1;
            r.d1 = (n - 1) / 2;
            r.d2 = (n + 1) / 2;
            r.center = mu;
            r.radius = 1;
        } else {
            r.tag = ExpTag::K0Even;
            r.d1 = r.d2 = n / 2;
        }
        return r;
    }

    const std::uint64_t q = power(p, r.k);
    const auto hit = ball_center(mu, p, r.k);
    if (!hit) throw std::logic_error("no ball center at the selected k for " + mu.to_string());
    const auto [alpha, beta] = decompose(mu, p, r.k);
    const std::uint64_t a = alpha.total();
    const std::uint64_t b = beta.total();
    const unsigned i = hit->index;
    switch (hit->which) {
        case BallCase::C:
            r.tag = ExpTag::CaseC;
            r.d1 = a / 2 * q + beta[i + 1] + beta[i + 2];
            r.d2 = a / 2 * q + beta[i];
            r.case_index = i + 1;
            break;
        case BallCase::D:
            r.tag = ExpTag::CaseD;
            r.d1 = a / 2 * q + q;
            r.d2 = a / 2 * q + b - q;
            break;
        case BallCase::E:
            r.tag = ExpTag::CaseE;
            r.d1 = (a + 1) / 2 * q + beta[i];
            r.d2 = (a - 1) / 2 * q + beta[i + 1] + beta[i + 2];
            r.case_index = i + 1;
            break;
        case BallCase::F:
            r.tag = ExpTag::CaseF;
            r.d1 = (a - 1) / 2 * q + b;
            r.d2 = (a + 1) / 2 * q;
            break;
    }
    if (r.d2 < r.d1 || r.d1 + r.d2 != n) throw std::logic_error("inconsistent case formula at " + mu.to_string());
    r.delta = r.d2 - r.d1;
    r.center = hit->center;
    r.radius = q;
    r.alpha = alpha;
    r.beta = beta;
    return r;
}

namespace {

bool in_larger_ball(const Multiplicity& zeta, Prime p, std::uint64_t k) {
    for (std::uint64_t m = k + 1;; ++m) {
        const auto q = checked_pow(p.value(), m);
        if (!q || *q > zeta.total()) return false;
        const auto hit = ball_center(zeta, p, m);
        if (!hit) continue;
        const Multiplicity nu{hit->center.mu1 / *q, hit->center.mu2 / *q, hit->center.mu3 / *q};
        if (is_balanced(nu)) return true;
    }
}

}  // namespace

CenterSet enumerate_centers(Prime p, std::uint64_t k, const Multiplicity& box) {
    CenterSet out{k, box, {}};
    const std::uint64_t q = power(p, k);
    for (std::uint64_t a = 0; a * q <= box.mu1; ++a) {
        for (std::uint64_t b = 0; b * q <= box.mu2; ++b) {
            for (std::uint64_t c = 0; c * q <= box.mu3; ++c) {
                const Multiplicity nu{a, b, c};
                if (nu.total() % 2 == 0 || !is_balanced(nu)) continue;
                const Multiplicity zeta = scaled(nu, q);
                if (!in_larger_ball(zeta, p, k)) out.centers.push_back(zeta);
            }
        }
    }
    return out;
}

bool delta_zero(const Multiplicity& mu, Prime p) {
    if (!is_balanced(mu) || mu.total() % 2 == 1) return false;
    for (std::uint64_t m = 1;; ++m) {
        const auto q = checked_pow(p.value(), m);
        if (!q || *q > mu.total()) return true;
        const std::uint64_t f1 = mu.mu1 / *q, f2 = mu.mu2 / *q, f3 = mu.mu3 / *q;
        for (std::uint64_t a = f1 == 0 ? 0 : f1 - 1; a <= f1 + 1; ++a) {
            for (std::uint64_t b = f2 == 0 ? 0 : f2 - 1; b <= f2 + 1; ++b) {
                for (std::uint64_t c = f3 == 0 ? 0 : f3 - 1; c <= f3 + 1; ++c) {
                    const Multiplicity nu{a, b, c};
                    if (nu.total() % 2 == 0 || !is_balanced(nu)) continue;
                    if (distance(mu, scaled(nu, *q)) < *q) return false;
                }
            }
        }
    }
}

}  // namespace mexp
