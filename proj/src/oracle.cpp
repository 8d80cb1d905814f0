#include "mexp/oracle.hpp"

#include "mexp/linalg.hpp"

#include <algorithm>

namespace mexp {

namespace {

// Columns: x^j y^(d-j) in f for j in [mu1, d], then in g for j in [0, d - mu2].
// Row k is the coefficient of (u + 1)^k in (f + g)(u, 1), which for the
// monomial u^j is binom(j, k) (-1)^(j - k).
struct SliceSystem {
    std::uint64_t f_cols = 0;
    std::uint64_t g_cols = 0;
    FpMatrix matrix;
};

SliceSystem build_system(const Multiplicity& mu, Prime p, std::uint64_t d) {
    check_supported(mu);
    if (d > kMaxDegree) throw std::out_of_range("degree exceeds 2^32");
    const std::uint32_t q = p.value();
    const std::uint64_t f_cols = d >= mu.mu1 ? d - mu.mu1 + 1 : 0;
    const std::uint64_t g_cols = d >= mu.mu2 ? d - mu.mu2 + 1 : 0;
    // Conditions with k > d vanish identically.
    const std::uint64_t rows = std::min<std::uint64_t>(mu.mu3, d + 1);
    SliceSystem sys{f_cols, g_cols, FpMatrix(rows, f_cols + g_cols, p)};
    if (rows == 0 || f_cols + g_cols == 0) return sys;

    // Pascal rows mod p, one row per j, truncated to k < rows.
    std::vector<std::uint32_t> prev(rows, 0), cur(rows, 0);
    auto entry = [&](std::uint64_t j, std::uint64_t k, std::uint32_t binom) {
        const std::uint32_t v = ((j - k) % 2 == 0) ? binom : sub_mod(0, binom, q);
        if (j >= mu.mu1) sys.matrix.at(k, j - mu.mu1) = v;
        if (j + mu.mu2 <= d) sys.matrix.at(k, f_cols + j) = v;
    };
    for (std::uint64_t j = 0; j <= d; ++j) {
        cur[0] = 1;
        for (std::uint64_t k = 1; k < rows; ++k) cur[k] = k <= j ? add_mod(prev[k - 1], prev[k], q) : 0;
        for (std::uint64_t k = 0; k < rows && k <= j; ++k) entry(j, k, cur[k]);
        std::swap(prev, cur);
    }
    return sys;
}

VectorField field_from_vector(const std::vector<std::uint32_t>& v, const SliceSystem& sys,
                              const Multiplicity& mu, Prime p, std::uint64_t d) {
    std::vector<std::uint32_t> f(d + 1, 0), g(d + 1, 0);
    for (std::uint64_t c = 0; c < sys.f_cols; ++c) f[c + mu.mu1] = v[c];
    for (std::uint64_t c = 0; c < sys.g_cols; ++c) g[c] = v[sys.f_cols + c];
    return VectorField(HomoPoly::from_coeffs(p, std::move(f)), HomoPoly::from_coeffs(p, std::move(g)));
}

}  // namespace

DegreeSlice slice(const Multiplicity& mu, Prime p, std::uint64_t d) {
    SliceSystem sys = build_system(mu, p, d);
    DegreeSlice out{d, {}};
    for (const auto& v : nullspace(sys.matrix)) out.basis.push_back(field_from_vector(v, sys, mu, p, d));
    return out;
}

std::uint64_t slice_dim(const Multiplicity& mu, Prime p, std::uint64_t d) {
    SliceSystem sys = build_system(mu, p, d);
    return sys.matrix.cols() - rank(std::move(sys.matrix));
}

OracleResult oracle_exponents(const Multiplicity& mu, Prime p) {
    check_supported(mu);
    const std::uint64_t total = mu.total();
    for (std::uint64_t d1 = 0; d1 <= total / 2; ++d1) {
        DegreeSlice low_slice = slice(mu, p, d1);
        if (low_slice.basis.empty()) continue;
        const std::uint64_t d2 = total - d1;
        const VectorField low = low_slice.basis.front();
        DegreeSlice high_slice = d2 == d1 ? std::move(low_slice) : slice(mu, p, d2);
        for (const VectorField& cand : high_slice.basis) {
            if (saito_det(low, cand).is_zero()) continue;
            BasisPair basis = make_basis(low, cand, mu);
            if (!basis.certified) {
                throw CertificationError("oracle pair failed Saito's criterion at " + mu.to_string());
            }
            return OracleResult{d1, d2, std::move(basis)};
        }
        throw CertificationError("oracle found no complementary generator at " + mu.to_string());
    }
    throw CertificationError("oracle found no nonzero piece up to |mu|/2 at " + mu.to_string());
}

std::uint64_t oracle_delta(const Multiplicity& mu, Prime p) {
    check_supported(mu);
    const std::uint64_t total = mu.total();
    if (total == 0) return 0;
    // Below d2 the piece has dimension d - d1 + 1 whenever d >= d1.
    const std::uint64_t d = (total + 1) / 2 - 1;
    const std::uint64_t dim = slice_dim(mu, p, d);
    if (dim > d + 1) throw CertificationError("piece below the upper exponent is too large at " + mu.to_string());
    const std::uint64_t d1 = d + 1 - dim;
    return total - 2 * d1;
}

}  // namespace mexp
