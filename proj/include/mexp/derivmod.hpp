#pragma once

// Logarithmic vector fields on the arrangement {x, y, x + y}.

#include "mexp/homopoly.hpp"
#include "mexp/multiplicity.hpp"

#include <optional>
#include <string>

namespace mexp {

/// theta = f dx + g dy with f, g homogeneous of one common degree.
class VectorField {
public:
    /// Throws std::invalid_argument when the nonzero components disagree in
    /// degree or the primes differ.
    VectorField(HomoPoly f, HomoPoly g);
    static VectorField zero(Prime p) { return VectorField(HomoPoly::zero(p), HomoPoly::zero(p)); }

    const HomoPoly& f() const { return f_; }
    const HomoPoly& g() const { return g_; }
    Prime prime() const { return f_.prime(); }
    bool is_zero() const { return f_.is_zero() && g_.is_zero(); }
    /// Throws std::logic_error for the zero field.
    std::uint64_t degree() const;

    /// theta(x + y) = f + g
    HomoPoly on_sum() const { return f_ + g_; }

    /// "(f) dx + (g) dy"; zero components are omitted, the zero field is "0".
    std::string to_string() const;

    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    HomoPoly f_;
    HomoPoly g_;
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField scale(const VectorField& t, Fp c);
VectorField mul(const HomoPoly& h, const VectorField& t);

/// Same up to one nonzero scalar.
bool projectively_equal(const VectorField& a, const VectorField& b);

/// Ordered pair with deg(low) <= deg(high).
struct BasisPair {
    VectorField low;
    VectorField high;
    bool certified = false;
};

/// Q = x^mu1 y^mu2 (x + y)^mu3
HomoPoly defining_poly(const Multiplicity& mu, Prime p);

bool in_module(const VectorField& theta, const Multiplicity& mu);

/// f1 g2 - f2 g1
HomoPoly saito_det(const VectorField& t1, const VectorField& t2);

/// Saito's criterion: both fields lie in D(A, mu) and det M = c * Q(A, mu).
bool saito_check(const VectorField& t1, const VectorField& t2, const Multiplicity& mu);

/// Orders the two fields by degree (stable on ties), rescales the low one so
/// its leading coefficient is 1 and records the Saito certificate for mu.
BasisPair make_basis(VectorField a, VectorField b, const Multiplicity& mu);

/// Thrown when a construction that must yield a basis fails certification.
struct CertificationError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace mexp
