#pragma once

// Closed-form exponents from the position of mu relative to the balls
// B(p^m * nu, p^m), nu balanced with odd sum.

#include "mexp/fpcore.hpp"
#include "mexp/multiplicity.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace mexp {

enum class ExpTag { Unbalanced, K0Odd, K0Even, CaseC, CaseD, CaseE, CaseF };

std::string_view tag_name(ExpTag tag);

struct ExponentReport {
    std::uint64_t delta = 0;
    std::uint64_t d1 = 0;
    std::uint64_t d2 = 0;
    ExpTag tag = ExpTag::K0Even;
    std::uint64_t k = 0;
    /// Present exactly when mu is balanced and delta > 0.
    std::optional<Multiplicity> center;
    std::optional<std::uint64_t> radius;
    std::optional<Multiplicity> alpha;
    std::optional<Multiplicity> beta;
    /// 1-based line index for cases C and E.
    std::optional<unsigned> case_index;
};

bool is_balanced(const Multiplicity& mu);

/// Throws std::invalid_argument on balanced input.
ExponentReport unbalanced_exponents(const Multiplicity& mu);

struct Decomposition {
    Multiplicity alpha;
    Multiplicity beta;
};

/// mu = p^k alpha + beta with 0 <= beta_i < p^k.
Decomposition decompose(const Multiplicity& mu, Prime p, std::uint64_t k);

enum class BallCase { C, D, E, F };

struct BallHit {
    Multiplicity center;
    BallCase which;
    /// 0-based; meaningful for C and E only.
    unsigned index = 0;
};

/// The center zeta in p^k * Lambda_odd with |mu - zeta| < p^k, if any.
std::optional<BallHit> ball_center(const Multiplicity& mu, Prime p, std::uint64_t k);

struct KSearch {
    std::uint64_t k = 0;
    /// Some m had a ball hit whose center was unbalanced.
    bool filter_rejected = false;
};

KSearch k_search(const Multiplicity& mu, Prime p);
/// Throws std::invalid_argument on unbalanced input.
std::uint64_t compute_k(const Multiplicity& mu, Prime p);

ExponentReport fast_exponents(const Multiplicity& mu, Prime p);

struct CenterSet {
    std::uint64_t k = 0;
    Multiplicity box;
    std::vector<Multiplicity> centers;  // lexicographic
};

/// Centers of radius exactly p^k with every coordinate within box.
CenterSet enumerate_centers(Prime p, std::uint64_t k, const Multiplicity& box);

/// Delta(mu) = 0, decided by direct search for a nearby ball center rather
/// than through fast_exponents.
bool delta_zero(const Multiplicity& mu, Prime p);

}  // namespace mexp
