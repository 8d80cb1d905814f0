#include "mexp/cli/format.hpp"

#include <sstream>
#include <stdexcept>

namespace mexp::cli {

json triple_json(const Multiplicity& mu) { return json::array({mu.mu1, mu.mu2, mu.mu3}); }

namespace {

template <class T, class F>
json opt_json(const std::optional<T>& v, F f) {
    return v ? f(*v) : json(nullptr);
}

json poly_terms(const HomoPoly& h) {
    json terms = json::array();
    if (h.is_zero()) return terms;
    const std::uint64_t d = h.degree();
    for (std::uint64_t j = d + 1; j-- > 0;) {
        const std::uint32_t c = h.coeff(j).value();
        if (c != 0) terms.push_back(json::array({j, d - j, c}));
    }
    return terms;
}

HomoPoly poly_from_terms(const json& terms, std::optional<std::uint64_t> degree, Prime p) {
    if (!terms.is_array()) throw std::invalid_argument("term list must be an array");
    if (terms.empty()) return HomoPoly::zero(p);
    if (!degree) throw std::invalid_argument("nonzero field without degree");
    HomoPoly h = HomoPoly::zero(p);
    for (const json& t : terms) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("term must be [i, j, c]");
        const auto i = t[0].get<std::uint64_t>();
        const auto jj = t[1].get<std::uint64_t>();
        const auto c = t[2].get<std::uint64_t>();
        if (i + jj != *degree) throw std::invalid_argument("term degree differs from field degree");
        h = h + HomoPoly::monomial(p, i, jj, c);
    }
    return h;
}

}  // namespace

json report_json(const ExponentReport& r, const Multiplicity& mu, Prime p) {
    json j;
    j["p"] = p.value();
    j["mu"] = triple_json(mu);
    j["delta"] = r.delta;
    j["exp"] = json::array({r.d1, r.d2});
    j["tag"] = std::string(tag_name(r.tag));
    j["k"] = r.k;
    j["center"] = opt_json(r.center, triple_json);
    j["radius"] = opt_json(r.radius, [](std::uint64_t v) { return json(v); });
    j["alpha"] = opt_json(r.alpha, triple_json);
    j["beta"] = opt_json(r.beta, triple_json);
    return j;
}

std::string report_text(const ExponentReport& r, const Multiplicity& mu, Prime p) {
    std::ostringstream os;
    os << "p=" << p.value() << " mu=" << mu << '\n';
    os << "delta=" << r.delta << '\n';
    os << "exp=(" << r.d1 << ',' << r.d2 << ")\n";
    os << "tag=" << tag_name(r.tag) << '\n';
    os << "k=" << r.k << '\n';
    if (r.center) os << "center=" << *r.center << " radius=" << *r.radius << '\n';
    if (r.alpha) os << "alpha=" << *r.alpha << " beta=" << *r.beta << '\n';
    return os.str();
}

json field_json(const VectorField& t) {
    json j;
    j["degree"] = t.is_zero() ? json(nullptr) : json(t.degree());
    j["dx"] = poly_terms(t.f());
    j["dy"] = poly_terms(t.g());
    return j;
}

VectorField field_from_json(const json& j, Prime p) {
    try {
        std::optional<std::uint64_t> degree;
        if (!j.at("degree").is_null()) degree = j.at("degree").get<std::uint64_t>();
        return VectorField(poly_from_terms(j.at("dx"), degree, p), poly_from_terms(j.at("dy"), degree, p));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed field JSON: ") + e.what());
    }
}

json basis_json(const BasisPair& b) {
    return json{{"low", field_json(b.low)}, {"high", field_json(b.high)}, {"certified", b.certified}};
}

}  // namespace mexp::cli
