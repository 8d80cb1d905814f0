#include "mexp/basisfactory.hpp"

#include "mexp/fastexp.hpp"
#include "mexp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace mexp {

namespace {

std::uint64_t power(Prime p, std::uint64_t d) {
    auto q = checked_pow(p.value(), d);
    if (!q || *q > kMaxDegree) throw std::out_of_range("p^d exceeds 2^32");
    return *q;
}

void require_certified(const BasisPair& basis) {
    if (!basis.certified) throw std::invalid_argument("input basis is not certified");
}

}  // namespace

bool gamma_membership(const Multiplicity& mu, Prime p) {
    const std::uint64_t m = mu.mu3;
    const std::uint64_t lo = m >= mu.mu2 ? m - mu.mu2 + 1 : 0;
    const std::uint64_t hi = std::min(mu.mu1, m + 1);  // binom(m, j) = 0 for j > m
    for (std::uint64_t j = lo; j < hi; ++j) {
        if (!binom_mod_p(m, static_cast<std::int64_t>(j), p).is_zero()) return false;
    }
    return true;
}

Multiplicity dual_multiplicity(const Multiplicity& mu, Prime p, std::uint64_t d) {
    const std::uint64_t q = power(p, d);
    if (mu.max() > q) throw std::invalid_argument(mu.to_string() + " lies outside the cube of side p^d");
    return {q - mu.mu1, q - mu.mu2, mu.mu3};
}

bool gamma_dual_membership(const Multiplicity& mu, Prime p, std::uint64_t d) {
    if (mu.max() > power(p, d)) return false;
    return gamma_membership(dual_multiplicity(mu, p, d), p);
}

BasisPair psi_basis(const Multiplicity& mu, Prime p) {
    check_supported(mu);
    if (!gamma_membership(mu, p)) throw std::invalid_argument(mu.to_string() + " is not in Gamma(m)");
    const std::uint64_t m = mu.mu3;
    const HomoPoly binom = binomial_power(m, p);
    std::vector<std::uint32_t> f(m + 1, 0), g(m + 1, 0);
    for (std::uint64_t j = 0; j <= m; ++j) (j >= mu.mu1 ? f : g)[j] = binom.coeff(j).value();
    VectorField psi(HomoPoly::from_coeffs(p, std::move(f)), HomoPoly::from_coeffs(p, std::move(g)));
    const HomoPoly mono = HomoPoly::monomial(p, mu.mu1, mu.mu2);
    VectorField psi_prime(-mono, mono);
    BasisPair basis = make_basis(std::move(psi), std::move(psi_prime), mu);
    if (!basis.certified) throw CertificationError("psi pair failed Saito's criterion at " + mu.to_string());
    return basis;
}

std::vector<Multiplicity> b_set(std::uint64_t m, Prime p) {
    const auto g = g_set(m, p);
    const std::size_t t = g.size() - 1;
    std::vector<Multiplicity> out;
    for (std::size_t i = 0; i <= t; ++i) out.push_back({g[i] + 1, g[t - i] + 1, m});
    return out;
}

std::vector<Multiplicity> s_set(std::uint64_t m, Prime p) {
    const auto g = g_set(m, p);
    const std::size_t t = g.size() - 1;
    std::vector<Multiplicity> out;
    for (std::size_t i = 1; i <= t; ++i) out.push_back({g[i], g[t - i + 1], m});
    return out;
}

VectorField frobenius_field(const VectorField& t, std::uint64_t q) {
    return {frobenius_scale(t.f(), q), frobenius_scale(t.g(), q)};
}

VectorField period_field(const VectorField& t, Prime p, std::uint64_t d) {
    const std::uint64_t q = power(p, d);
    return {mul_monomial(t.f(), q, 0), -mul_monomial(t.g(), 0, q)};
}

VectorField period_field_inverse(const VectorField& t, Prime p, std::uint64_t d) {
    const std::uint64_t q = power(p, d);
    return {div_monomial(t.f(), q, 0), -div_monomial(t.g(), 0, q)};
}

VectorField dual_field(const VectorField& t, const Multiplicity& mu, Prime p, std::uint64_t d) {
    const std::uint64_t q = power(p, d);
    if (mu.mu1 > q || mu.mu2 > q) throw std::invalid_argument(mu.to_string() + " lies outside the cube of side p^d");
    const HomoPoly f = div_monomial(t.f(), mu.mu1, 0);
    const HomoPoly g = div_monomial(t.g(), 0, mu.mu2);
    return {mul_monomial(g, q - mu.mu1, 0), -mul_monomial(f, 0, q - mu.mu2)};
}

Lifted frobenius_lift(const BasisPair& basis, const Multiplicity& mu, std::uint64_t q) {
    require_certified(basis);
    const Prime p = basis.low.prime();
    const auto d = log_of_power(q, p);
    if (!d || *d == 0) throw std::invalid_argument("Frobenius lift needs q = p^d with d >= 1");
    const Multiplicity target = scaled(mu, q);
    check_supported(target);
    BasisPair out = make_basis(frobenius_field(basis.low, q), frobenius_field(basis.high, q), target);
    if (!out.certified) throw CertificationError("Frobenius image failed Saito's criterion at " + target.to_string());
    return {std::move(out), target};
}

namespace {

Lifted certify_shift(BasisPair out, const Multiplicity& target, std::uint64_t q) {
    if (!out.certified) {
        if (target.mu3 > q) {
            throw std::invalid_argument("period shift with mu3 > p^d does not give a basis at " + target.to_string());
        }
        throw CertificationError("period shift failed Saito's criterion at " + target.to_string());
    }
    return {std::move(out), target};
}

}  // namespace

Lifted period_shift(const BasisPair& basis, const Multiplicity& mu, std::uint64_t d) {
    require_certified(basis);
    const Prime p = basis.low.prime();
    const std::uint64_t q = power(p, d);
    const Multiplicity target{mu.mu1 + q, mu.mu2 + q, mu.mu3};
    check_supported(target);
    return certify_shift(make_basis(period_field(basis.low, p, d), period_field(basis.high, p, d), target),
                         target, q);
}

Lifted period_shift_inverse(const BasisPair& basis, const Multiplicity& mu, std::uint64_t d) {
    require_certified(basis);
    const Prime p = basis.low.prime();
    const std::uint64_t q = power(p, d);
    if (mu.mu1 < q || mu.mu2 < q) throw std::invalid_argument("inverse period shift needs mu1, mu2 >= p^d");
    const Multiplicity target{mu.mu1 - q, mu.mu2 - q, mu.mu3};
    return certify_shift(
        make_basis(period_field_inverse(basis.low, p, d), period_field_inverse(basis.high, p, d), target), target,
        q);
}

Lifted dual_basis(const BasisPair& basis, const Multiplicity& mu, std::uint64_t d) {
    require_certified(basis);
    const Prime p = basis.low.prime();
    const Multiplicity target = dual_multiplicity(mu, p, d);
    BasisPair out = make_basis(dual_field(basis.low, mu, p, d), dual_field(basis.high, mu, p, d), target);
    if (!out.certified) throw CertificationError("dual pair failed Saito's criterion at " + target.to_string());
    return {std::move(out), target};
}

std::string TransformStep::to_string() const {
    std::string name;
    switch (kind) {
        case StepKind::FrobeniusLift: name = "FrobeniusLift"; break;
        case StepKind::PeriodShift: name = "PeriodShift"; break;
        case StepKind::Dual: name = "Dual"; break;
    }
    name += "(" + std::to_string(param) + ")";
    if (direction == Direction::Inverse) name += " inverse";
    return name;
}

BasisPair complete_basis(VectorField low, const Multiplicity& mu) {
    const std::uint64_t d2 = mu.total() - low.degree();
    for (const VectorField& cand : slice(mu, low.prime(), d2).basis) {
        if (saito_det(low, cand).is_zero()) continue;
        BasisPair basis = make_basis(low, cand, mu);
        if (basis.certified) return basis;
    }
    throw CertificationError("no complementary generator for the given field at " + mu.to_string());
}

namespace {

BasisPlan prepend(TransformStep step, BasisPlan sub, Lifted lifted) {
    sub.steps.insert(sub.steps.begin(), step);
    sub.basis = std::move(lifted.first);
    return sub;
}

// Largest d >= 1 with p^d <= n, or 0.
std::uint64_t largest_power_below(std::uint64_t n, Prime p) {
    std::uint64_t d = 0;
    for (std::uint64_t q = p.value(); q <= n; q *= p.value()) ++d;
    return d;
}

// Smallest d >= 1 with p^d >= n.
std::uint64_t smallest_power_above(std::uint64_t n, Prime p) {
    std::uint64_t d = 1;
    for (std::uint64_t q = p.value(); q < n; q *= p.value()) ++d;
    return d;
}

}  // namespace

BasisPlan plan_basis(const Multiplicity& mu, Prime p) {
    check_supported(mu);
    const std::uint32_t pv = p.value();

    if (mu.total() > 0 && mu.mu1 % pv == 0 && mu.mu2 % pv == 0 && mu.mu3 % pv == 0) {
        const Multiplicity nu{mu.mu1 / pv, mu.mu2 / pv, mu.mu3 / pv};
        BasisPlan sub = plan_basis(nu, p);
        Lifted lifted = frobenius_lift(sub.basis, nu, pv);
        return prepend({StepKind::FrobeniusLift, pv, Direction::Inverse}, std::move(sub), std::move(lifted));
    }

    if (gamma_membership(mu, p)) return BasisPlan{psi_basis(mu, p), {}, mu, SeedKind::Psi};

    if (const std::uint64_t d = largest_power_below(std::min(mu.mu1, mu.mu2), p); d > 0) {
        const std::uint64_t q = power(p, d);
        const Multiplicity nu{mu.mu1 - q, mu.mu2 - q, mu.mu3};
        const TransformStep step{StepKind::PeriodShift, d, Direction::Inverse};
        if (mu.mu3 <= q) {
            BasisPlan sub = plan_basis(nu, p);
            Lifted lifted = period_shift(sub.basis, nu, d);
            return prepend(step, std::move(sub), std::move(lifted));
        }
        // Outside the periodicity range the shift can still work; try it only
        // when the exponents are compatible and keep it only if it certifies.
        const ExponentReport here = fast_exponents(mu, p);
        const ExponentReport there = fast_exponents(nu, p);
        if (here.delta == there.delta && here.d1 == there.d1 + q) {
            BasisPlan sub = plan_basis(nu, p);
            try {
                Lifted lifted = period_shift(sub.basis, nu, d);
                return prepend(step, std::move(sub), std::move(lifted));
            } catch (const std::invalid_argument&) {
            }
            // The low image alone may survive the shift.
            VectorField low = period_field(sub.basis.low, p, d);
            if (in_module(low, mu) && low.degree() == here.d1) {
                BasisPair basis = complete_basis(std::move(low), mu);
                sub.steps.insert(sub.steps.begin(), step);
                sub.basis = std::move(basis);
                sub.high_completed = true;
                return sub;
            }
        }
    }

    const std::uint64_t d_min = smallest_power_above(mu.max(), p);
    for (std::uint64_t d = d_min; d <= d_min + 1; ++d) {
        if (!gamma_dual_membership(mu, p, d)) continue;
        const Multiplicity nu = dual_multiplicity(mu, p, d);
        BasisPlan sub{psi_basis(nu, p), {}, nu, SeedKind::Psi};
        Lifted lifted = dual_basis(sub.basis, nu, d);
        if (!(lifted.second == mu)) throw std::logic_error("dual is not an involution");
        return prepend({StepKind::Dual, d, Direction::Forward}, std::move(sub), std::move(lifted));
    }

    OracleResult o = oracle_exponents(mu, p);
    return BasisPlan{std::move(o.basis), {}, mu, SeedKind::Oracle};
}

}  // namespace mexp
