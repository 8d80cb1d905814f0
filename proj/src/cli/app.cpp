#include "mexp/cli/app.hpp"

#include "mexp/basisfactory.hpp"
#include "mexp/cli/atlas.hpp"
#include "mexp/cli/format.hpp"
#include "mexp/cli/verify.hpp"
#include "mexp/fastexp.hpp"
#include "mexp/oracle.hpp"
#include "mexp/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace mexp::cli {

namespace {

struct Globals {
    std::uint64_t p = 2;
    std::string format = "text";
    std::string out_path;
    unsigned workers = default_workers();
    std::uint64_t seed = 20240607;
};

// Exit-code carrying error for precondition failures of a strategy.
struct StrategyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool json_out(const Globals& g) { return g.format == "json"; }

std::string join_steps(const std::vector<TransformStep>& steps) {
    std::string s = "[";
    for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? ", " : "") + steps[i].to_string();
    return s + "]";
}

int cmd_exp(const Globals& g, const std::string& mu_text, std::ostream& out) {
    const Prime p(g.p);
    const Multiplicity mu = parse_multiplicity(mu_text);
    const ExponentReport r = fast_exponents(mu, p);
    if (json_out(g)) {
        out << report_json(r, mu, p).dump() << '\n';
    } else {
        out << report_text(r, mu, p);
    }
    return kOk;
}

void print_basis_text(const BasisPair& b, std::ostream& out) {
    out << "low  (degree " << b.low.degree() << "): " << b.low.to_string() << '\n';
    out << "high (degree " << b.high.degree() << "): " << b.high.to_string() << '\n';
}

int cmd_basis(const Globals& g, const std::string& mu_text, const std::string& strategy, std::ostream& out) {
    const Prime p(g.p);
    const Multiplicity mu = parse_multiplicity(mu_text);
    const BasisPlan plan = [&] {
        if (strategy == "psi") {
            if (!gamma_membership(mu, p)) {
                throw StrategyError(mu.to_string() + " is not in Gamma(" + std::to_string(mu.mu3) + ")");
            }
            return BasisPlan{psi_basis(mu, p), {}, mu, SeedKind::Psi};
        }
        if (strategy == "oracle") return BasisPlan{oracle_exponents(mu, p).basis, {}, mu, SeedKind::Oracle};
        return plan_basis(mu, p);
    }();
    const bool certified = plan.basis.certified && saito_check(plan.basis.low, plan.basis.high, mu);
    if (json_out(g)) {
        json j = basis_json(plan.basis);
        j["p"] = p.value();
        j["mu"] = triple_json(mu);
        j["strategy"] = strategy;
        j["exp"] = json::array({plan.basis.low.degree(), plan.basis.high.degree()});
        j["certified"] = certified;
        json trace = json::array();
        for (const auto& s : plan.steps) trace.push_back(s.to_string());
        j["trace"] = trace;
        j["seed"] = {{"kind", plan.seed == SeedKind::Psi ? "psi" : "oracle"}, {"mu", triple_json(plan.seed_mu)}};
        j["high_completed"] = plan.high_completed;
        out << j.dump() << '\n';
    } else {
        out << "p=" << p.value() << " mu=" << mu << " strategy=" << strategy << '\n';
        print_basis_text(plan.basis, out);
        out << "trace: " << join_steps(plan.steps) << '\n';
        out << "seed: " << (plan.seed == SeedKind::Psi ? "psi" : "oracle") << " at " << plan.seed_mu << '\n';
        if (plan.high_completed) out << "high generator completed from the complementary degree\n";
        out << "certified: " << (certified ? "true" : "false") << '\n';
    }
    return certified ? kOk : kPropertyFailure;
}

int cmd_oracle(const Globals& g, const std::string& mu_text, bool dims, std::ostream& out) {
    const Prime p(g.p);
    const Multiplicity mu = parse_multiplicity(mu_text);
    const OracleResult r = oracle_exponents(mu, p);
    std::vector<std::uint64_t> dim_list;
    if (dims) {
        for (std::uint64_t d = 0; d <= mu.total(); ++d) dim_list.push_back(slice_dim(mu, p, d));
    }
    if (json_out(g)) {
        json j = basis_json(r.basis);
        j["p"] = p.value();
        j["mu"] = triple_json(mu);
        j["delta"] = r.d2 - r.d1;
        j["exp"] = json::array({r.d1, r.d2});
        if (dims) j["dims"] = dim_list;
        out << j.dump() << '\n';
    } else {
        out << "p=" << p.value() << " mu=" << mu << '\n';
        out << "delta=" << r.d2 - r.d1 << "\nexp=(" << r.d1 << ',' << r.d2 << ")\n";
        print_basis_text(r.basis, out);
        out << "certified: " << (r.basis.certified ? "true" : "false") << '\n';
        if (dims) {
            out << "dims:";
            for (auto d : dim_list) out << ' ' << d;
            out << '\n';
        }
    }
    return kOk;
}

int cmd_table(const Globals& g, AtlasSpec spec, std::ostream& out) {
    spec.p = Prime(g.p);
    spec.workers = g.workers;
    static const std::map<std::string, AtlasFormat> formats{
        {"text", AtlasFormat::Ascii}, {"csv", AtlasFormat::Csv}, {"json", AtlasFormat::Json}, {"svg", AtlasFormat::Svg}};
    spec.format = formats.at(g.format);
    out << render_atlas(spec, compute_atlas(spec));
    return kOk;
}

int cmd_centers(const Globals& g, std::uint64_t k, const std::string& box_text, std::ostream& out) {
    const Prime p(g.p);
    const Multiplicity box = parse_multiplicity(box_text);
    const auto q = checked_pow(p.value(), k);
    if (!q || *q > kMaxDegree) throw GuardError("p^k exceeds the supported range");
    std::uint64_t cells = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        cells *= box[i] / *q + 1;
        if (cells > kMaxCells) throw GuardError("center search box exceeds " + std::to_string(kMaxCells) + " points");
    }
    const CenterSet cs = enumerate_centers(p, k, box);
    if (json_out(g)) {
        json list = json::array();
        for (const auto& c : cs.centers) list.push_back(triple_json(c));
        out << json{{"p", p.value()}, {"k", k}, {"radius", *q}, {"box", triple_json(box)}, {"centers", list}}.dump()
            << '\n';
    } else {
        out << "p=" << p.value() << " k=" << k << " radius=" << *q << " box=" << box << " count=" << cs.centers.size()
            << '\n';
        for (const auto& c : cs.centers) out << c << '\n';
    }
    return kOk;
}

int cmd_gamma(const Globals& g, std::uint64_t m, const std::string& mu_text, std::ostream& out) {
    const Prime p(g.p);
    if (m == 0) throw std::invalid_argument("m must be positive");
    const auto gs = g_set(m, p);
    const auto bs = b_set(m, p);
    const auto ss = s_set(m, p);
    std::optional<Multiplicity> mu;
    if (!mu_text.empty()) mu = parse_multiplicity(mu_text);
    if (json_out(g)) {
        json jb = json::array(), js = json::array();
        for (const auto& b : bs) jb.push_back(triple_json(b));
        for (const auto& s : ss) js.push_back(triple_json(s));
        json j{{"p", p.value()}, {"m", m}, {"G", gs}, {"B", jb}, {"S", js}};
        if (mu) j["member"] = gamma_membership(*mu, p);
        out << j.dump() << '\n';
    } else {
        out << "p=" << p.value() << " m=" << m << "\nG_m:";
        for (auto v : gs) out << ' ' << v;
        out << "\nS(m):";
        for (const auto& s : ss) out << ' ' << s;
        out << "\nB(m):";
        for (const auto& b : bs) out << ' ' << b;
        out << '\n';
        if (mu) out << *mu << (gamma_membership(*mu, p) ? " is" : " is not") << " in Gamma(" << mu->mu3 << ")\n";
    }
    return kOk;
}

int cmd_verify(const Globals& g, const std::string& box_text, std::vector<std::string> suites, std::uint64_t samples,
               std::ostream& out) {
    VerifyOptions opts;
    opts.p = Prime(g.p);
    opts.box = parse_multiplicity(box_text);
    opts.workers = g.workers;
    opts.seed = g.seed;
    opts.samples = samples;
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < 3; ++i) points *= opts.box[i] + 1;
    if (points > kMaxCells) throw GuardError("verification box exceeds " + std::to_string(kMaxCells) + " points");
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
    bool ok = true;
    json results = json::array();
    for (const auto& name : suites) {
        const SuiteResult r = run_suite(name, opts);
        ok = ok && r.passed();
        if (json_out(g)) {
            results.push_back({{"suite", r.name},
                               {"checked", r.checked},
                               {"failed", r.failed},
                               {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
                               {"notes", r.notes},
                               {"seconds", r.seconds}});
        } else {
            out << format_result(r) << '\n';
        }
    }
    if (json_out(g)) out << results.dump() << '\n';
    return ok ? kOk : kPropertyFailure;
}

// Builds argv for CLI11 from the argument list.
int parse(CLI::App& app, const std::vector<std::string>& args) {
    std::vector<const char*> argv{"mexp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exponents and bases of three-line multiarrangements over F_p"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("-p,--prime", g.p, "prime characteristic")->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "svg"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write output to FILE");
    app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();

    std::string mu_text, strategy = "plan", box_text = "8,8,8", mode = "m3", cell = "delta", engine = "fast";
    std::uint64_t k = 0, m = 0, level = 0, max1 = 20, max2 = 20, samples = 200;
    bool dims = false, no_centers = false;
    std::vector<std::string> suites;

    auto* exp = app.add_subcommand("exp", "closed-form exponents");
    exp->add_option("--mu", mu_text, "multiplicity a,b,c")->required();
    auto* basis = app.add_subcommand("basis", "certified basis");
    basis->add_option("--mu", mu_text, "multiplicity a,b,c")->required();
    basis->add_option("--strategy", strategy)->check(CLI::IsMember({"plan", "oracle", "psi"}))->capture_default_str();
    auto* oracle = app.add_subcommand("oracle", "brute-force exponents and basis");
    oracle->add_option("--mu", mu_text, "multiplicity a,b,c")->required();
    oracle->add_flag("--dims", dims, "also print the dimension of every degree piece");
    auto* table = app.add_subcommand("table", "lattice atlas");
    table->add_option("--mode", mode)->check(CLI::IsMember({"m3", "sum"}))->capture_default_str();
    table->add_option("--level", level, "mu3 for mode m3, |mu| for mode sum")->required();
    table->add_option("--max1", max1)->capture_default_str();
    table->add_option("--max2", max2)->capture_default_str();
    table->add_option("--cell", cell)->check(CLI::IsMember({"delta", "low", "zero"}))->capture_default_str();
    table->add_option("--engine", engine)->check(CLI::IsMember({"fast", "oracle"}))->capture_default_str();
    table->add_flag("--no-centers", no_centers);
    auto* centers = app.add_subcommand("centers", "component centers of radius p^k");
    centers->add_option("--k", k)->required();
    centers->add_option("--box", box_text, "bounding box a,b,c")->required();
    auto* gamma = app.add_subcommand("gamma", "G_m, S(m), B(m) and membership");
    gamma->add_option("--m", m)->required();
    gamma->add_option("--mu", mu_text, "test one multiplicity");
    auto* verify = app.add_subcommand("verify", "property suites");
    verify->add_option("--box", box_text, "sweep box a,b,c")->capture_default_str();
    verify->add_option("--suite", suites, "suite name (repeatable), or all");
    verify->add_option("--samples", samples, "points for the module suite")->capture_default_str();

    try {
        parse(app, args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (g.format == "csv" || g.format == "svg") {
            if (!table->parsed()) throw std::invalid_argument("--format " + g.format + " applies to table only");
        }
        if (*exp) {
            code = cmd_exp(g, mu_text, buffer);
        } else if (*basis) {
            code = cmd_basis(g, mu_text, strategy, buffer);
        } else if (*oracle) {
            code = cmd_oracle(g, mu_text, dims, buffer);
        } else if (*table) {
            AtlasSpec spec;
            spec.mode = mode == "m3" ? AtlasMode::SliceM3 : AtlasMode::SliceSum;
            spec.level = level;
            spec.max1 = max1;
            spec.max2 = max2;
            spec.cell = cell == "delta" ? AtlasCell::Delta : cell == "low" ? AtlasCell::LowDegree : AtlasCell::Zero;
            spec.engine = engine == "fast" ? Engine::Fast : Engine::Oracle;
            spec.mark_centers = !no_centers;
            code = cmd_table(g, spec, buffer);
        } else if (*centers) {
            code = cmd_centers(g, k, box_text, buffer);
        } else if (*gamma) {
            code = cmd_gamma(g, m, mu_text, buffer);
        } else if (*verify) {
            code = cmd_verify(g, box_text, suites, samples, buffer);
        }
    } catch (const StrategyError& e) {
        err << "error: " << e.what() << '\n';
        return kStrategy;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kPropertyFailure;
    }

    if (g.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(g.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << g.out_path << '\n';
            return kUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace mexp::cli
