#pragma once

// Brute-force exponents by degreewise nullspace computation. Uses none of the
// lattice theory, so it can referee the closed-form engine.

#include "mexp/derivmod.hpp"

#include <cstdint>
#include <vector>

namespace mexp {

/// F_p-basis of the degree-d piece of D(A, mu).
struct DegreeSlice {
    std::uint64_t degree = 0;
    std::vector<VectorField> basis;
};

/// f = x^mu1 * f~, g = y^mu2 * g~ with f~, g~ free; the mu3 conditions on
/// f + g are solved by elimination. Basis order follows the free columns,
/// f~ coefficients first.
DegreeSlice slice(const Multiplicity& mu, Prime p, std::uint64_t d);

/// Only the dimension of the degree-d piece.
std::uint64_t slice_dim(const Multiplicity& mu, Prime p, std::uint64_t d);

struct OracleResult {
    std::uint64_t d1 = 0;
    std::uint64_t d2 = 0;
    BasisPair basis;
};

/// Scans d = 0 .. floor(|mu|/2) for the first nonzero piece. Throws
/// CertificationError if the resulting pair fails Saito's criterion.
OracleResult oracle_exponents(const Multiplicity& mu, Prime p);

/// Delta from a single dimension count at degree ceil(|mu|/2) - 1. Relies on
/// freeness of rank-2 modules; no basis is produced. Intended for large sweeps.
std::uint64_t oracle_delta(const Multiplicity& mu, Prime p);

}  // namespace mexp
