#include "mexp/cli/verify.hpp"

#include "mexp/basisfactory.hpp"
#include "mexp/fastexp.hpp"
#include "mexp/oracle.hpp"
#include "mexp/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mexp::cli {

namespace {

using Failure = std::optional<std::string>;

std::string str(const Multiplicity& mu) { return mu.to_string(); }

std::vector<Multiplicity> box_points(const Multiplicity& box) {
    std::vector<Multiplicity> pts;
    pts.reserve((box.mu1 + 1) * (box.mu2 + 1) * (box.mu3 + 1));
    for (std::uint64_t a = 0; a <= box.mu1; ++a) {
        for (std::uint64_t b = 0; b <= box.mu2; ++b) {
            for (std::uint64_t c = 0; c <= box.mu3; ++c) pts.push_back({a, b, c});
        }
    }
    return pts;
}

void absorb(SuiteResult& r, const std::vector<Failure>& results) {
    for (const Failure& f : results) {
        ++r.checked;
        if (!f) continue;
        if (r.failed++ == 0) r.first_failure = *f;
    }
}

// Runs fn on every point; any exception counts as a failure at that point.
template <class Fn>
std::vector<Failure> sweep(const std::vector<Multiplicity>& pts, unsigned workers, Fn fn) {
    return parallel_map(pts.size(), workers, [&](std::size_t i) -> Failure {
        try {
            return fn(pts[i]);
        } catch (const std::exception& e) {
            return str(pts[i]) + ": exception: " + e.what();
        }
    });
}

std::uint64_t pow_u(Prime p, std::uint64_t d) { return *checked_pow(p.value(), d); }

std::uint64_t key(const Multiplicity& mu) { return (mu.mu1 << 42) | (mu.mu2 << 21) | mu.mu3; }

// Oracle Delta for a set of points, evaluated once each.
class DeltaMemo {
public:
    DeltaMemo(std::vector<Multiplicity> pts, Prime p, unsigned workers) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        const auto vals = parallel_map(pts.size(), workers, [&](std::size_t i) { return oracle_delta(pts[i], p); });
        table_.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) table_.emplace(key(pts[i]), vals[i]);
    }
    std::uint64_t at(const Multiplicity& mu) const { return table_.at(key(mu)); }

private:
    std::unordered_map<std::uint64_t, std::uint64_t> table_;
};

// --- suites ---------------------------------------------------------------

SuiteResult differential(const VerifyOptions& o) {
    SuiteResult r;
    const auto pts = box_points(o.box);
    absorb(r, sweep(pts, o.workers, [&](const Multiplicity& mu) -> Failure {
        const ExponentReport f = fast_exponents(mu, o.p);
        const OracleResult q = oracle_exponents(mu, o.p);
        std::ostringstream os;
        if (f.d1 != q.d1 || f.d2 != q.d2) {
            os << str(mu) << ": fast (" << f.d1 << ',' << f.d2 << ") oracle (" << q.d1 << ',' << q.d2 << ')';
            return os.str();
        }
        if (!q.basis.certified) return str(mu) + ": oracle basis not certified";
        if (oracle_delta(mu, o.p) != f.delta) return str(mu) + ": rank route disagrees";
        if (delta_zero(mu, o.p) != (f.delta == 0)) return str(mu) + ": delta_zero disagrees";
        if (f.delta % 2 != mu.total() % 2) return str(mu) + ": parity";
        return std::nullopt;
    }));
    std::uint64_t rejected = 0;
    for (const auto& mu : pts) {
        if (is_balanced(mu) && k_search(mu, o.p).filter_rejected) ++rejected;
    }
    r.notes.push_back("balanced filter in compute_k rejected a ball hit at " + std::to_string(rejected) + " points");
    return r;
}

SuiteResult adjacency(const VerifyOptions& o) {
    SuiteResult r;
    const auto pts = box_points(o.box);
    const DeltaMemo memo(pts, o.p, o.workers);
    std::vector<Failure> results;
    for (const auto& mu : pts) {
        for (std::size_t i = 0; i < 3; ++i) {
            Multiplicity nu = mu;
            nu[i] += 1;
            if (!leq(nu, o.box)) continue;
            const std::uint64_t a = memo.at(mu), b = memo.at(nu);
            if (a + 1 == b || b + 1 == a) {
                results.push_back(std::nullopt);
            } else {
                results.push_back(str(mu) + " ~ " + str(nu) + ": Delta " + std::to_string(a) + " vs " +
                                  std::to_string(b));
            }
        }
    }
    absorb(r, results);
    return r;
}

SuiteResult frobenius(const VerifyOptions& o) {
    SuiteResult r;
    const std::uint64_t p = o.p.value();
    absorb(r, sweep(box_points(o.box), o.workers, [&](const Multiplicity& mu) -> Failure {
        const Multiplicity pm = scaled(mu, p);
        if (fast_exponents(pm, o.p).delta != p * fast_exponents(mu, o.p).delta) return str(mu) + ": fast scaling";
        const OracleResult q = oracle_exponents(mu, o.p);
        if (oracle_delta(pm, o.p) != p * (q.d2 - q.d1)) return str(mu) + ": oracle scaling";
        const auto [lifted, target] = frobenius_lift(q.basis, mu, p);
        if (!lifted.certified || !saito_check(lifted.low, lifted.high, target)) return str(mu) + ": lift not certified";
        if (lifted.low.degree() != p * q.d1) return str(mu) + ": lifted degree";
        return std::nullopt;
    }));
    return r;
}

SuiteResult periodicity(const VerifyOptions& o) {
    SuiteResult r;
    const std::vector<std::uint64_t> ds = o.ds.empty() ? std::vector<std::uint64_t>{1, 2, 3} : o.ds;
    for (std::uint64_t d : ds) {
        const std::uint64_t q = pow_u(o.p, d);
        std::vector<Multiplicity> pts;
        for (const auto& mu : box_points(o.box)) {
            if (mu.mu3 <= q) pts.push_back(mu);
        }
        absorb(r, sweep(pts, o.workers, [&](const Multiplicity& mu) -> Failure {
            const Multiplicity nu{mu.mu1 + q, mu.mu2 + q, mu.mu3};
            const OracleResult base = oracle_exponents(mu, o.p);
            const std::string tag = str(mu) + " d=" + std::to_string(d);
            if (oracle_delta(nu, o.p) != base.d2 - base.d1) return tag + ": Delta changed";
            const auto [shifted, target] = period_shift(base.basis, mu, d);
            if (!(target == nu) || !saito_check(shifted.low, shifted.high, nu)) return tag + ": shift not certified";
            const auto [back, back_mu] = period_shift_inverse(shifted, nu, d);
            if (!(back_mu == mu) || !projectively_equal(back.low, base.basis.low)) return tag + ": inverse shift";
            return std::nullopt;
        }));
    }
    return r;
}

SuiteResult duality(const VerifyOptions& o) {
    SuiteResult r;
    const std::vector<std::uint64_t> ds = o.ds.empty() ? std::vector<std::uint64_t>{1, 2} : o.ds;
    for (std::uint64_t d : ds) {
        const std::uint64_t q = pow_u(o.p, d);
        absorb(r, sweep(box_points({q, q, q}), o.workers, [&](const Multiplicity& mu) -> Failure {
            const std::string tag = str(mu) + " d=" + std::to_string(d);
            const Multiplicity dual = dual_multiplicity(mu, o.p, d);
            const OracleResult base = oracle_exponents(mu, o.p);
            if (oracle_delta(dual, o.p) != base.d2 - base.d1) return tag + ": Delta not preserved";
            const auto [db, dmu] = dual_basis(base.basis, mu, d);
            if (!(dmu == dual) || !saito_check(db.low, db.high, dual)) return tag + ": dual basis not certified";
            const VectorField twice = dual_field(dual_field(base.basis.low, mu, o.p, d), dual, o.p, d);
            if (!(twice == scale(base.basis.low, Fp(o.p.value() - 1, o.p)))) return tag + ": double dual is not -theta";
            return std::nullopt;
        }));
    }
    return r;
}

SuiteResult gamma(const VerifyOptions& o) {
    SuiteResult r;
    const Prime p = o.p;
    for (std::uint64_t m = 1; m <= o.box.mu3; ++m) {
        std::vector<Multiplicity> pts;
        for (std::uint64_t a = 0; a <= o.box.mu1; ++a) {
            for (std::uint64_t b = 0; b <= o.box.mu2; ++b) pts.push_back({a, b, m});
        }
        const DeltaMemo memo(pts, p, o.workers);
        const auto bs = b_set(m, p);
        const auto ss = s_set(m, p);
        std::vector<Failure> results;
        auto expect = [&](bool ok, const std::string& what) { results.push_back(ok ? Failure{} : Failure{what}); };
        const std::string at = " (m=" + std::to_string(m) + ")";

        for (const auto& mu : pts) {
            const bool in = gamma_membership(mu, p);
            const std::uint64_t s = mu.mu1 + mu.mu2;
            const std::uint64_t predicted = s > m ? s - m : m - s;
            expect(in == (memo.at(mu) == predicted), str(mu) + ": Gamma test vs oracle exponents" + at);
            if (in) {
                const BasisPair b = psi_basis(mu, p);
                expect(b.certified && saito_check(b.low, b.high, mu), str(mu) + ": psi basis not certified");
                for (std::size_t i = 0; i < 2; ++i) {
                    if (mu[i] == 0) continue;
                    Multiplicity lower = mu;
                    lower[i] -= 1;
                    expect(gamma_membership(lower, p), str(mu) + ": Gamma not a lower set");
                }
            }
            const bool above_b = std::any_of(bs.begin(), bs.end(), [&](const Multiplicity& b) { return leq(b, mu); });
            expect(above_b == !in, str(mu) + ": complement differs from the upper set of B(m)");
            if (s == m + 2 && memo.at(mu) == 0) {
                expect(std::find(bs.begin(), bs.end(), mu) != bs.end(), str(mu) + ": Delta=0 point missing from B(m)");
            }
            // Boundary step: theta_nu = x psi_mu or y psi_mu.
            for (std::size_t i = 0; i < 2 && in; ++i) {
                Multiplicity nu = mu;
                nu[i] += 1;
                if (gamma_membership(nu, p)) continue;
                const OracleResult q = oracle_exponents(nu, p);
                expect(q.d1 == m + 1 && q.d2 == s, str(nu) + ": exponents across the Gamma boundary");
                if (q.d1 < q.d2) {
                    const HomoPoly a = i == 0 ? HomoPoly::monomial(p, 1, 0) : HomoPoly::monomial(p, 0, 1);
                    const BasisPair psi = psi_basis(mu, p);
                    const VectorField& psi_mu = psi.low.degree() == m ? psi.low : psi.high;
                    expect(projectively_equal(q.basis.low, mul(a, psi_mu)), str(nu) + ": low generator is not a*psi");
                }
            }
        }
        for (const auto& b : bs) {
            expect(b.mu1 + b.mu2 == m + 2 && !gamma_membership(b, p), str(b) + ": B(m) element" + at);
            if (leq(b, {o.box.mu1, o.box.mu2, m})) expect(memo.at(b) == 0, str(b) + ": B(m) element with Delta > 0");
        }
        for (const auto& k : ss) {
            expect(gamma_membership(k, p), str(k) + ": S(m) element outside Gamma");
            for (std::size_t i = 0; i < 2; ++i) {
                Multiplicity up = k;
                up[i] += 1;
                expect(!gamma_membership(up, p), str(k) + ": S(m) element not maximal");
            }
            const std::uint64_t sg = s_index(k.mu1, p);
            expect(sg == s_index(k.mu2, p), str(k) + ": s(g) != s(g')");
            std::uint64_t tail = 0;
            const auto cm = digits(m, p);
            for (std::uint64_t e = sg; e < cm.size(); ++e) tail += cm[e] * pow_u(p, e);
            expect(k.mu1 + k.mu2 == pow_u(p, sg) + tail, str(k) + ": digit identity for g + g'");
            // The levels n at which (g, g', n) is maximal.
            const std::uint64_t q = pow_u(p, sg);
            for (std::uint64_t n = 1; n <= k.mu1 + k.mu2 + 1; ++n) {
                const auto sn = s_set(n, p);
                const bool member = std::find(sn.begin(), sn.end(), Multiplicity{k.mu1, k.mu2, n}) != sn.end();
                const bool predicted = n + q >= k.mu1 + k.mu2 && n < k.mu1 + k.mu2;
                expect(member == predicted, str(k) + ": level set at n=" + std::to_string(n));
            }
        }
        for (std::uint64_t j = 0; j <= m; ++j) {
            const Multiplicity nu{j + 1, m + 1 - j, m};
            const bool nonzero = !binom_mod_p(m, static_cast<std::int64_t>(j), p).is_zero();
            expect(nonzero == (oracle_delta(nu, p) == 0), str(nu) + ": binomial vs Delta=0");
        }
        absorb(r, results);
    }
    return r;
}

SuiteResult centers(const VerifyOptions& o) {
    SuiteResult r;
    const Prime p = o.p;
    struct Job {
        Multiplicity zeta;
        std::uint64_t radius;
    };
    std::vector<Job> jobs;
    for (std::uint64_t k = 0;; ++k) {
        const auto q = checked_pow(p.value(), k);
        if (!q || *q > o.box.max()) break;
        for (const auto& z : enumerate_centers(p, k, o.box).centers) jobs.push_back({z, *q});
    }
    // Every point within radius + 1 of a center.
    std::vector<Multiplicity> pts;
    std::vector<std::vector<Multiplicity>> balls(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& [z, q] = jobs[i];
        const std::uint64_t reach = q + 1;
        for (std::uint64_t a = z.mu1 > reach ? z.mu1 - reach : 0; a <= z.mu1 + reach; ++a) {
            for (std::uint64_t b = z.mu2 > reach ? z.mu2 - reach : 0; b <= z.mu2 + reach; ++b) {
                const std::uint64_t used = distance({a, b, 0}, {z.mu1, z.mu2, 0});
                if (used > reach) continue;
                const std::uint64_t left = reach - used;
                for (std::uint64_t c = z.mu3 > left ? z.mu3 - left : 0; c <= z.mu3 + left; ++c) {
                    balls[i].push_back({a, b, c});
                }
            }
        }
        pts.insert(pts.end(), balls[i].begin(), balls[i].end());
    }
    const DeltaMemo memo(std::move(pts), p, o.workers);

    const auto per_center = parallel_map(jobs.size(), o.workers, [&](std::size_t i) -> Failure {
        const auto& [z, q] = jobs[i];
        try {
            const ExponentReport f = fast_exponents(z, p);
            if (!f.center || !(*f.center == z) || f.radius != q) return str(z) + ": fast report disagrees on center";
            for (const auto& mu : balls[i]) {
                const std::uint64_t dist = distance(mu, z);
                const std::uint64_t want = dist > q ? dist - q : q - dist;
                if (memo.at(mu) != want) {
                    return str(mu) + ": Delta " + std::to_string(memo.at(mu)) + " near center " + str(z) +
                           ", expected " + std::to_string(want);
                }
            }
            if (q > 1) {
                const OracleResult res = oracle_exponents(z, p);
                if (!is_frobenius_image(res.basis.low.f()) || !is_frobenius_image(res.basis.low.g())) {
                    return str(z) + ": low generator not in F[x^p, y^p]";
                }
            }
        } catch (const std::exception& e) {
            return str(z) + ": exception: " + e.what();
        }
        return std::nullopt;
    });
    absorb(r, per_center);

    std::vector<Failure> kappa;
    for (std::uint64_t m = 1; m <= o.box.mu3; ++m) {
        for (const auto& k : s_set(m, p)) {
            const std::uint64_t sg = s_index(k.mu1, p);
            if (k.mu1 + k.mu2 != m + pow_u(p, sg) || !leq(k, o.box)) continue;
            const auto cs = enumerate_centers(p, sg, o.box).centers;
            const bool found = std::binary_search(cs.begin(), cs.end(), k);
            kappa.push_back(found ? Failure{} : Failure{str(k) + ": missing from Z(p^s(g))"});
        }
    }
    absorb(r, kappa);
    r.notes.push_back(std::to_string(jobs.size()) + " centers checked");
    return r;
}

SuiteResult saito(const VerifyOptions& o) {
    SuiteResult r;
    absorb(r, sweep(box_points(o.box), o.workers, [&](const Multiplicity& mu) -> Failure {
        const ExponentReport f = fast_exponents(mu, o.p);
        const BasisPlan plan = plan_basis(mu, o.p);
        if (!plan.basis.certified || !saito_check(plan.basis.low, plan.basis.high, mu)) {
            return str(mu) + ": planned basis not certified";
        }
        if (plan.basis.low.degree() != f.d1 || plan.basis.high.degree() != f.d2) return str(mu) + ": planned degrees";
        if (gamma_membership(mu, o.p) && !psi_basis(mu, o.p).certified) return str(mu) + ": psi basis";
        return std::nullopt;
    }));
    return r;
}

SuiteResult module_suite(const VerifyOptions& o) {
    SuiteResult r;
    std::mt19937_64 rng(o.seed);
    std::vector<Multiplicity> pts;
    for (std::uint64_t i = 0; i < o.samples; ++i) {
        pts.push_back({std::uniform_int_distribution<std::uint64_t>(0, o.box.mu1)(rng),
                       std::uniform_int_distribution<std::uint64_t>(0, o.box.mu2)(rng),
                       std::uniform_int_distribution<std::uint64_t>(0, o.box.mu3)(rng)});
    }
    absorb(r, sweep(pts, o.workers, [&](const Multiplicity& mu) -> Failure {
        const OracleResult q = oracle_exponents(mu, o.p);
        for (std::uint64_t d = 0; d <= mu.total() + 1; ++d) {
            const DegreeSlice s = slice(mu, o.p, d);
            const std::uint64_t want = (d >= q.d1 ? d - q.d1 + 1 : 0) + (d >= q.d2 ? d - q.d2 + 1 : 0);
            if (s.basis.size() != want) return str(mu) + ": dim at degree " + std::to_string(d);
            for (const auto& t : s.basis) {
                if (!in_module(t, mu)) return str(mu) + ": slice element outside the module";
            }
        }
        return std::nullopt;
    }));
    return r;
}

// --- golden ---------------------------------------------------------------

struct Term {
    std::uint64_t i, j;
    std::int64_t c;
};

HomoPoly poly(Prime p, std::initializer_list<Term> terms) {
    HomoPoly h = HomoPoly::zero(p);
    for (const Term& t : terms) {
        h = h + scale(HomoPoly::monomial(p, t.i, t.j), Fp::from_signed(t.c, p));
    }
    return h;
}

SuiteResult golden(const VerifyOptions& o) {
    SuiteResult r;
    std::vector<Failure> results;
    auto check = [&](const std::string& name, const std::function<bool()>& fn) {
        try {
            results.push_back(fn() ? Failure{} : Failure{name});
        } catch (const std::exception& e) {
            results.push_back(name + ": exception: " + e.what());
        }
    };
    const Prime p2(2), p3(3), p5(5);

    check("digits(16,3)", [&] { return digits(16, p3) == DigitVector{1, 2, 1}; });
    check("s_index(16,3)", [&] { return s_index(16, p3) == 0; });
    check("binomial row m=16 p=3", [&] {
        const std::vector<std::uint32_t> row{1, 1, 0, 2, 2, 0, 1, 1, 0, 1, 1, 0, 2, 2, 0, 1, 1};
        const HomoPoly h = binomial_power(16, p3);
        for (std::uint64_t j = 0; j <= 16; ++j) {
            if (h.coeff(j).value() != row[j] || binom_mod_p(16, static_cast<std::int64_t>(j), p3).value() != row[j]) {
                return false;
            }
        }
        return true;
    });
    check("G_16 at p=3", [&] {
        return g_set(16, p3) == std::vector<std::uint64_t>{0, 1, 3, 4, 6, 7, 9, 10, 12, 13, 15, 16};
    });
    check("G_4 at p=2", [&] { return g_set(4, p2) == std::vector<std::uint64_t>{0, 4}; });
    check("G_4 at p=3", [&] { return g_set(4, p3) == std::vector<std::uint64_t>{0, 1, 3, 4}; });
    check("B(16) at p=3", [&] {
        std::vector<Multiplicity> want{{1, 17, 16},  {2, 16, 16},  {4, 14, 16}, {5, 13, 16}, {7, 11, 16}, {8, 10, 16},
                                       {17, 1, 16}, {16, 2, 16}, {14, 4, 16}, {13, 5, 16}, {11, 7, 16}, {10, 8, 16}};
        auto got = b_set(16, p3);
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        return got == want;
    });
    check("S(16) at p=3", [&] {
        std::vector<Multiplicity> want{{1, 16, 16},  {3, 15, 16},  {4, 13, 16}, {6, 12, 16}, {7, 10, 16}, {9, 9, 16},
                                       {16, 1, 16}, {15, 3, 16}, {13, 4, 16}, {12, 6, 16}, {10, 7, 16}};
        auto got = s_set(16, p3);
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        return got == want;
    });
    check("S(4) at p=2", [&] { return s_set(4, p2) == std::vector<Multiplicity>{{4, 4, 4}}; });
    check("(3,3,4) in S(4) at p=3", [&] {
        const auto s = s_set(4, p3);
        return std::find(s.begin(), s.end(), Multiplicity{3, 3, 4}) != s.end();
    });
    check("Gamma membership of (9,9,16) and (10,8,16) at p=3",
          [&] { return gamma_membership({9, 9, 16}, p3) && !gamma_membership({10, 8, 16}, p3); });

    const Multiplicity big{41, 52, 31};
    check("(41,52,31) is balanced", [&] { return is_balanced(big); });
    check("decompose (41,52,31) at k=3", [&] {
        const auto d = decompose(big, p3, 3);
        return d.alpha == Multiplicity{1, 1, 1} && d.beta == Multiplicity{14, 25, 4};
    });
    check("fast exponents of (41,52,31) at p=3", [&] {
        const auto f = fast_exponents(big, p3);
        return f.delta == 8 && f.d1 == 58 && f.d2 == 66 && f.k == 3 && f.tag == ExpTag::CaseE &&
               f.center == Multiplicity{54, 54, 27} && f.case_index == 3u;
    });
    check("oracle exponents of (41,52,31) at p=3", [&] {
        const auto q = oracle_exponents(big, p3);
        return q.d1 == 58 && q.d2 == 66 && q.basis.certified;
    });
    check("(54,54,27) is a center of radius 27", [&] {
        const auto cs = enumerate_centers(p3, 3, {60, 60, 60}).centers;
        return std::find(cs.begin(), cs.end(), Multiplicity{54, 54, 27}) != cs.end();
    });

    check("psi basis of (3,3,4) at p=2", [&] {
        const BasisPair b = psi_basis({3, 3, 4}, p2);
        const VectorField psi(poly(p2, {{4, 0, 1}}), poly(p2, {{0, 4, 1}}));
        const VectorField psi1(poly(p2, {{3, 3, -1}}), poly(p2, {{3, 3, 1}}));
        return b.certified && b.low == psi && b.high == psi1 && b.low.degree() == 4 && b.high.degree() == 6;
    });
    check("psi basis of (3,3,4) at p=3", [&] {
        const BasisPair b = psi_basis({3, 3, 4}, p3);
        const VectorField psi(poly(p3, {{4, 0, 1}, {3, 1, 1}}), poly(p3, {{1, 3, 1}, {0, 4, 1}}));
        const VectorField psi1(poly(p3, {{3, 3, -1}}), poly(p3, {{3, 3, 1}}));
        return b.certified && b.low == psi && b.high == psi1;
    });
    check("oracle exponents of (3,3,4) at p=2 and p=3", [&] {
        const auto a = oracle_exponents({3, 3, 4}, p2);
        const auto b = oracle_exponents({3, 3, 4}, p3);
        return a.d1 == 4 && a.d2 == 6 && b.d1 == 4 && b.d2 == 6;
    });

    check("(3,3,4) at p=5: Delta=0, exp=(5,5)", [&] {
        const auto f = fast_exponents({3, 3, 4}, p5);
        return f.delta == 0 && f.d1 == 5 && f.d2 == 5 && delta_zero({3, 3, 4}, p5) && !delta_zero({3, 3, 4}, p3);
    });
    check("shifted basis for (8,8,4) at p=5", [&] {
        const VectorField t(poly(p5, {{5, 0, 1}, {4, 1, -1}, {3, 2, 1}}), poly(p5, {{2, 3, -1}, {1, 4, 1}}));
        const VectorField t1(poly(p5, {{5, 0, 1}}), poly(p5, {{0, 5, 1}}));
        const BasisPair base = make_basis(t, t1, {3, 3, 4});
        if (!base.certified) return false;
        const auto [shifted, nu] = period_shift(base, {3, 3, 4}, 1);
        const VectorField tn(poly(p5, {{10, 0, 1}, {9, 1, -1}, {8, 2, 1}}), poly(p5, {{2, 8, 1}, {1, 9, -1}}));
        const VectorField tn1(poly(p5, {{10, 0, 1}}), poly(p5, {{0, 10, -1}}));
        const HomoPoly det = saito_det(shifted.low, shifted.high);
        const HomoPoly printed = poly(p5, {{12, 8, 1}, {11, 9, -1}, {10, 10, 1}, {9, 11, -1}, {8, 12, 1}});
        return nu == Multiplicity{8, 8, 4} && shifted.certified && shifted.low == tn && shifted.high == tn1 &&
               projectively_equal(det, printed) && projectively_equal(det, defining_poly({8, 8, 4}, p5));
    });
    check("planned basis for (41,52,31) at p=3", [&] {
        const BasisPlan plan = plan_basis(big, p3);
        const VectorField low(poly(p3, {{58, 0, 1}, {57, 1, 1}, {55, 3, 1}, {54, 4, 1}}),
                              poly(p3, {{4, 54, -1}, {3, 55, -1}, {1, 57, -1}, {0, 58, -1}}));
        return plan.steps == std::vector<TransformStep>{{StepKind::PeriodShift, 3, Direction::Inverse}} &&
               plan.seed_mu == Multiplicity{14, 25, 31} && plan.seed == SeedKind::Psi && plan.basis.certified &&
               plan.basis.low == low && plan.basis.high.degree() == 66;
    });
    check("psi basis of (14,25,31) at p=3", [&] {
        const BasisPair b = psi_basis({14, 25, 31}, p3);
        const VectorField psi(poly(p3, {{31, 0, 1}, {30, 1, 1}, {28, 3, 1}, {27, 4, 1}}),
                              poly(p3, {{4, 27, 1}, {3, 28, 1}, {1, 30, 1}, {0, 31, 1}}));
        return b.certified && b.low == psi && b.high.degree() == 39;
    });
    check("dual of psi' is x^(p^d) dx + y^(p^d) dy", [&] {
        const Multiplicity mu{3, 3, 4};
        const BasisPair b = psi_basis(mu, p3);
        return dual_field(b.high, mu, p3, 2) == VectorField(poly(p3, {{9, 0, 1}}), poly(p3, {{0, 9, 1}}));
    });
    check("slice dimensions of (3,3,4) at p=5",
          [&] { return slice_dim({3, 3, 4}, p5, 4) == 0 && slice({3, 3, 4}, p5, 5).basis.size() == 2; });
    absorb(r, results);
    (void)o;
    return r;
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"differential", differential}, {"adjacency", adjacency}, {"frobenius", frobenius},
        {"periodicity", periodicity},   {"duality", duality},     {"gamma", gamma},
        {"centers", centers},           {"saito", saito},         {"golden", golden},
        {"module", module_suite}};
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& opts) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r = fn(opts);
        r.name = n;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string format_result(const SuiteResult& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checks, " << r.failed << " failed";
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << r.seconds << " s)";
    if (r.first_failure) os << "\n  first failure: " << *r.first_failure;
    for (const auto& n : r.notes) os << "\n  note: " << n;
    return os.str();
}

}  // namespace mexp::cli
