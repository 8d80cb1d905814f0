// One line per acceptance criterion; exit status is nonzero if any fails.

#include "mexp/basisfactory.hpp"
#include "mexp/cli/atlas.hpp"
#include "mexp/cli/verify.hpp"
#include "mexp/fastexp.hpp"
#include "mexp/oracle.hpp"
#include "mexp/parallel.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

using namespace mexp;
using namespace mexp::cli;

namespace {

// Pinned limits.
constexpr double kFastBudgetMs = 1.0;
constexpr double kOracleBudgetS = 5.0;
constexpr double kDifferentialBudgetS = 600.0;

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
}

template <class Fn>
double seconds(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary(const SuiteResult& r) {
    std::ostringstream os;
    os << r.checked << " checks, " << r.failed << " failed, " << r.seconds << " s";
    if (r.first_failure) os << "; first: " << *r.first_failure;
    return os.str();
}

SuiteResult suite(const std::string& name, Prime p, Multiplicity box, unsigned workers,
                  std::vector<std::uint64_t> ds = {}) {
    VerifyOptions o;
    o.p = p;
    o.box = box;
    o.ds = std::move(ds);
    o.workers = workers;
    return run_suite(name, o);
}

void golden(unsigned workers) {
    const Prime p3(3);
    const Multiplicity mu{41, 52, 31};
    const ExponentReport r = fast_exponents(mu, p3);
    report(r.delta == 8 && r.d1 == 58 && r.d2 == 66 && r.k == 3 && r.center == Multiplicity{54, 54, 27},
           "golden: (41,52,31) p=3 gives Delta 8, exp (58,66), k 3, center (54,54,27)", "");

    constexpr int reps = 1000;
    const double fast_ms = seconds([&] {
                               for (int i = 0; i < reps; ++i) (void)fast_exponents(mu, p3);
                           }) * 1000.0 / reps;
    report(fast_ms < kFastBudgetMs, "golden: fast path under 1 ms", std::to_string(fast_ms) + " ms per call");

    std::optional<OracleResult> q;
    const double oracle_s = seconds([&] { q.emplace(oracle_exponents(mu, p3)); });
    report(oracle_s < kOracleBudgetS && q->d1 == 58 && q->d2 == 66 && q->basis.certified,
           "golden: oracle at (41,52,31) under 5 s", std::to_string(oracle_s) + " s");

    // The remaining exact examples live in the golden suite.
    for (unsigned p : {2u, 3u, 5u}) {
        const SuiteResult g = suite("golden", Prime(p), {8, 8, 8}, workers);
        report(g.passed(), "golden: exact bases, determinants and digit lists (suite run with p=" + std::to_string(p) + ")",
               summary(g));
    }
}

void differential(unsigned workers) {
    double total = 0;
    for (const auto& [p, n] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 12}, {3, 12}, {5, 10}}) {
        const SuiteResult r = suite("differential", Prime(p), {n, n, n}, workers);
        total += r.seconds;
        const std::uint64_t points = (n + 1) * (n + 1) * (n + 1);
        report(r.passed() && r.checked == points,
               "differential: fast == oracle, p=" + std::to_string(p) + ", mu_i <= " + std::to_string(n), summary(r));
        for (const auto& note : r.notes) std::cout << "       note: " << note << '\n';
    }
    report(total <= kDifferentialBudgetS, "differential: total runtime within 10 minutes", std::to_string(total) + " s");
}

void properties(unsigned workers) {
    for (unsigned p : {2u, 3u}) {
        const SuiteResult r = suite("adjacency", Prime(p), {8, 8, 8}, workers);
        report(r.passed(), "adjacency: |Delta(mu) - Delta(nu)| = 1, p=" + std::to_string(p) + ", mu_i <= 8", summary(r));
    }
    for (unsigned p : {2u, 3u, 5u}) {
        const SuiteResult r = suite("frobenius", Prime(p), {6, 6, 6}, workers);
        report(r.passed(), "frobenius: Delta(p mu) = p Delta(mu) and lifts certify, p=" + std::to_string(p), summary(r));
    }
    {
        const SuiteResult r = suite("periodicity", Prime(2), {8, 8, 8}, workers, {1, 2, 3});
        report(r.passed(), "periodicity: shift by (2^d,2^d,0) preserves Delta and certifies, d in {1,2,3}", summary(r));
    }
    for (unsigned p : {2u, 3u}) {
        const SuiteResult r = suite("duality", Prime(p), {0, 0, 0}, workers, {1, 2});
        report(r.passed(), "duality: Delta(dual mu) = Delta(mu) on the cube, p=" + std::to_string(p) + ", d in {1,2}",
               summary(r));
    }
    for (unsigned p : {2u, 3u, 5u}) {
        const SuiteResult r = suite("gamma", Prime(p), {22, 22, 20}, workers);
        report(r.passed(),
               "gamma: membership tests, B(m), S(m) and the binomial criterion agree with the oracle, m <= 20, p=" +
                   std::to_string(p),
               summary(r));
    }
    for (unsigned p : {2u, 3u, 5u}) {
        const std::uint64_t side = 4 * p * p;
        const SuiteResult r = suite("centers", Prime(p), {side, side, side}, workers);
        report(r.passed(),
               "centers: Delta on each ball is radius - distance, low generator divisible, box " + std::to_string(side) +
                   "^3, p=" + std::to_string(p),
               summary(r));
    }
}

void certification(unsigned workers) {
    for (const auto& [p, n] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 12}, {3, 12}, {5, 10}}) {
        const SuiteResult r = suite("saito", Prime(p), {n, n, n}, workers);
        report(r.passed(), "saito: planned and binomial bases certify, p=" + std::to_string(p) + ", mu_i <= " +
                               std::to_string(n),
               summary(r));
    }
    const SuiteResult m = suite("module", Prime(3), {20, 20, 20}, workers);
    report(m.passed(), "saito: sampled oracle slices have the predicted dimension and lie in the module", summary(m));
}

// Delta = 0 on |mu| = 62 at p = 2, predicted from binomial parity alone.
void atlas(unsigned workers) {
    AtlasSpec spec;
    spec.p = Prime(2);
    spec.mode = AtlasMode::SliceSum;
    spec.level = 62;
    spec.max1 = 62;
    spec.max2 = 62;
    spec.cell = AtlasCell::Zero;
    spec.workers = workers;
    const AtlasGrid grid = compute_atlas(spec);
    std::uint64_t cells = 0, bad = 0, ones = 0;
    std::string first;
    for (std::uint64_t a = 0; a <= 62; ++a) {
        for (std::uint64_t b = 0; b <= 62; ++b) {
            const auto& cell = grid.cells[a][b];
            if (a + b > 62) {
                if (cell) ++bad;
                continue;
            }
            const std::uint64_t c = 62 - a - b;
            bool want = false;
            if (a <= 31 && b <= 31 && c <= 31 && 31 - a <= c) {
                const std::uint64_t j = 31 - a;
                want = (j & c) == j;  // C(c, j) odd
            }
            ++cells;
            if (want) ++ones;
            if (!cell || (*cell == 1) != want) {
                if (bad++ == 0) first = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
            }
        }
    }
    report(bad == 0, "atlas: |mu| = 62, p=2 zero cells match binomial parity",
           std::to_string(cells) + " cells, " + std::to_string(ones) + " zero-gap cells, " + std::to_string(bad) +
               " mismatches" + (first.empty() ? "" : "; first " + first));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance"};
    unsigned workers = default_workers();
    app.add_option("--workers", workers);
    CLI11_PARSE(app, argc, argv);

    golden(workers);
    differential(workers);
    properties(workers);
    certification(workers);
    atlas(workers);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
