#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace mexp {

/// A point of the multiplicity lattice: (mu1, mu2, mu3) on the lines
/// ker x, ker y, ker(x + y).
struct Multiplicity {
    std::uint64_t mu1 = 0;
    std::uint64_t mu2 = 0;
    std::uint64_t mu3 = 0;

    /// 0-based component access.
    std::uint64_t operator[](std::size_t i) const;
    std::uint64_t& operator[](std::size_t i);

    std::uint64_t total() const { return mu1 + mu2 + mu3; }
    std::uint64_t max() const;

    std::array<std::uint64_t, 3> as_array() const { return {mu1, mu2, mu3}; }
    std::string to_string() const;

    auto operator<=>(const Multiplicity&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Multiplicity& m);

/// Throws std::out_of_range when a component or |mu| exceeds 2^32.
void check_supported(const Multiplicity& mu);

/// Componentwise order.
bool leq(const Multiplicity& a, const Multiplicity& b);

/// 1-norm distance |a - b|.
std::uint64_t distance(const Multiplicity& a, const Multiplicity& b);

Multiplicity scaled(const Multiplicity& mu, std::uint64_t q);

/// Parses "a,b,c"; throws std::invalid_argument on malformed input.
Multiplicity parse_multiplicity(std::string_view text);

}  // namespace mexp
