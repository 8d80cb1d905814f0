#pragma once

// Explicit bases: the binomial pair on Gamma(m), and the transforms that move
// a certified basis around the lattice.

#include "mexp/derivmod.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mexp {

/// binom(mu3, j) = 0 mod p for every j with mu3 - mu2 < j < mu1.
bool gamma_membership(const Multiplicity& mu, Prime p);

/// (p^d - mu1, p^d - mu2, mu3); throws std::invalid_argument unless all mu_i <= p^d.
Multiplicity dual_multiplicity(const Multiplicity& mu, Prime p, std::uint64_t d);

/// mu in Lambda_{<= p^d} and its dual lies in Gamma(mu3).
bool gamma_dual_membership(const Multiplicity& mu, Prime p, std::uint64_t d);

/// {psi_mu, psi'_mu} sorted by degree and certified.
/// Throws std::invalid_argument when mu is not in Gamma(mu3).
BasisPair psi_basis(const Multiplicity& mu, Prime p);

/// Minimal elements of the complement of Gamma(m), in the order of G_m.
std::vector<Multiplicity> b_set(std::uint64_t m, Prime p);
/// Maximal elements of Gamma(m), in the order of G_m.
std::vector<Multiplicity> s_set(std::uint64_t m, Prime p);

// Transforms of single fields. None of them check membership.
VectorField frobenius_field(const VectorField& t, std::uint64_t q);
/// f x^(p^d) dx - g y^(p^d) dy
VectorField period_field(const VectorField& t, Prime p, std::uint64_t d);
/// Throws std::domain_error when the components are not divisible.
VectorField period_field_inverse(const VectorField& t, Prime p, std::uint64_t d);
/// For t = f x^mu1 dx + g y^mu2 dy: g x^(p^d - mu1) dx - f y^(p^d - mu2) dy.
VectorField dual_field(const VectorField& t, const Multiplicity& mu, Prime p, std::uint64_t d);

using Lifted = std::pair<BasisPair, Multiplicity>;

/// Basis for q * mu. q must be p^d with d >= 1.
Lifted frobenius_lift(const BasisPair& basis, const Multiplicity& mu, std::uint64_t q);

/// Basis for mu + (p^d, p^d, 0). Guaranteed when mu3 <= p^d; otherwise the
/// images are checked and std::invalid_argument is thrown if they fail.
Lifted period_shift(const BasisPair& basis, const Multiplicity& mu, std::uint64_t d);
/// Basis for mu - (p^d, p^d, 0), same conditions on the target.
Lifted period_shift_inverse(const BasisPair& basis, const Multiplicity& mu, std::uint64_t d);

/// Basis for the dual of mu inside Lambda_{<= p^d}.
Lifted dual_basis(const BasisPair& basis, const Multiplicity& mu, std::uint64_t d);

/// First element of the complementary-degree piece (oracle order) that
/// completes low to a certified basis. Throws CertificationError if none does.
BasisPair complete_basis(VectorField low, const Multiplicity& mu);

enum class StepKind { FrobeniusLift, PeriodShift, Dual };
enum class Direction { Forward, Inverse };

/// A reduction applied to the multiplicity while planning. param is q for
/// FrobeniusLift and d otherwise.
struct TransformStep {
    StepKind kind;
    std::uint64_t param;
    Direction direction;

    std::string to_string() const;
    friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

enum class SeedKind { Psi, Oracle };

struct BasisPlan {
    BasisPair basis;
    /// Reductions in the order they were applied to mu.
    std::vector<TransformStep> steps;
    Multiplicity seed_mu;
    SeedKind seed = SeedKind::Psi;
    /// Some step carried only the low generator; the high one was recomputed
    /// by complete_basis.
    bool high_completed = false;
};

/// Reduces mu by Frobenius descent, period shifts and duality until a psi
/// seed applies (oracle otherwise), then replays the steps forward.
BasisPlan plan_basis(const Multiplicity& mu, Prime p);

}  // namespace mexp
