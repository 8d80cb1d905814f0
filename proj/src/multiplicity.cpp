#include "mexp/multiplicity.hpp"

#include "mexp/fpcore.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mexp {

std::uint64_t Multiplicity::operator[](std::size_t i) const {
    switch (i % 3) {
        case 0: return mu1;
        case 1: return mu2;
        default: return mu3;
    }
}

std::uint64_t& Multiplicity::operator[](std::size_t i) {
    switch (i % 3) {
        case 0: return mu1;
        case 1: return mu2;
        default: return mu3;
    }
}

std::uint64_t Multiplicity::max() const { return std::max({mu1, mu2, mu3}); }

std::string Multiplicity::to_string() const {
    std::ostringstream os;
    os << '(' << mu1 << ',' << mu2 << ',' << mu3 << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Multiplicity& m) { return os << m.to_string(); }

void check_supported(const Multiplicity& mu) {
    if (mu.mu1 > kMaxDegree || mu.mu2 > kMaxDegree || mu.mu3 > kMaxDegree || mu.total() > kMaxDegree) {
        throw std::out_of_range("multiplicity " + mu.to_string() + " exceeds the supported range 2^32");
    }
}

bool leq(const Multiplicity& a, const Multiplicity& b) {
    return a.mu1 <= b.mu1 && a.mu2 <= b.mu2 && a.mu3 <= b.mu3;
}

std::uint64_t distance(const Multiplicity& a, const Multiplicity& b) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    return s;
}

Multiplicity scaled(const Multiplicity& mu, std::uint64_t q) { return {mu.mu1 * q, mu.mu2 * q, mu.mu3 * q}; }

Multiplicity parse_multiplicity(std::string_view text) {
    Multiplicity mu;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t end = i < 2 ? text.find(',', pos) : text.size();
        if (end == std::string_view::npos) throw std::invalid_argument("expected three comma-separated integers");
        const std::string_view part = text.substr(pos, end - pos);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
            throw std::invalid_argument("malformed multiplicity component '" + std::string(part) + "'");
        }
        mu[i] = v;
        pos = end + 1;
    }
    check_supported(mu);
    return mu;
}

}  // namespace mexp
