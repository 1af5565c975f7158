#ifndef HOMSTAR_COCHAIN_HPP
#define HOMSTAR_COCHAIN_HPP

#include <map>
#include <optional>
#include <vector>

#include "homstar/poly.hpp"

namespace homstar {

/// One derivative slot per argument; the key of a polydifferential term.
using DerivKey = std::vector<MultiIndex>;

/// Polydifferential n-cochain: (n+1)-linear operator
///   (f_0,...,f_n) |-> sum_terms coeff * prod_j d^{alpha_j} f_j.
/// Degree -1 cochains are plain polynomials (empty derivative key).
/// Canonical form: terms keyed by their derivative tuple, zero
/// coefficients dropped.
class Cochain {
public:
    Cochain() = default;
    Cochain(VarSpec vars, int trunc, int degree)
        : vars_(vars), trunc_(trunc), degree_(degree) {
        if (degree < -1) throw StructuralError("Cochain: degree must be >= -1");
    }

    static Cochain zero(VarSpec vars, int trunc, int degree) { return Cochain(vars, trunc, degree); }

    /// The pointwise product mu0 (degree 1, empty multi-indices); the one
    /// distinguished cochain that does not vanish on constants.
    static Cochain mu0(VarSpec vars, int trunc);

    /// The Euler operator L_E = sum_j xi_j d_{xi_j} as a degree-0 cochain.
    static Cochain lie_euler(VarSpec vars, int trunc);

    /// Degree -1 embedding of a polynomial.
    static Cochain from_poly(const Poly& p);

    /// Single-term operator.
    static Cochain term(VarSpec vars, int trunc, DerivKey key, Poly coeff);

    const VarSpec& vars() const { return vars_; }
    int trunc() const { return trunc_; }
    int degree() const { return degree_; }
    int arity() const { return degree_ + 1; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<DerivKey, Poly>& terms() const { return terms_; }

    /// Membership in HC_diff: every argument of every term is differentiated.
    bool vanishes_on_constants() const;

    void add_term(const DerivKey& key, const Poly& coeff);

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    Cochain operator-() const;
    Cochain scaled(const Scalar& s) const;
    /// Coefficient-wise multiplication by a polynomial (left module action).
    Cochain poly_scaled(const Poly& p) const;

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.degree_ == b.degree_ &&
               a.terms_ == b.terms_;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

    /// Evaluate on arguments (|args| must equal the arity).
    Poly apply(const std::vector<Poly>& args) const;

    /// Substitute the 1-argument cochain E into argument slot `slot`,
    /// expanding the outer derivatives over E's coefficient and arguments
    /// by the multivariate Leibniz rule. E may have any arity; the result
    /// has arity arity(D) + arity(E) - 1. No signs are applied here.
    Cochain insert(int slot, const Cochain& e) const;

    /// Transpose of a bidifferential operator: (tau D)(f,g) = D(g,f).
    Cochain tau() const;

    /// Apply a permutation of the arguments: result(f_1..f_a) =
    /// D(f_{perm[0]+1}, ..., f_{perm[a-1]+1}) (perm in one-line notation).
    Cochain permuted(const std::vector<int>& perm) const;

    /// Maximum |alpha| over all slots and terms.
    int max_derivative_order() const;
    /// Maximum |alpha| in a fixed slot.
    int max_derivative_order_in_slot(int slot) const;

    /// Homogeneity degree: k iff every term satisfies
    /// xi-deg(coeff) - (number of xi derivatives) = k; nullopt when mixed.
    /// Throws on the zero cochain.
    std::optional<int> homogeneity_degree() const;

    bool is_homogeneous_of(int k) const;

    /// Split into homogeneous components, keyed by degree.
    std::map<int, Cochain> homogeneous_components() const;

    bool is_hbar_free() const;
    Cochain hbar_slice(int k) const;

    std::string str() const;

private:
    void check_compatible(const Cochain& o) const;

    VarSpec vars_;
    int trunc_ = 0;
    int degree_ = 0;
    std::map<DerivKey, Poly> terms_;
};

/// Concatenation D o E with the Gerstenhaber sign (-1)^{i|E|} on the
/// insertion slot i; degree adds.
Cochain circle(const Cochain& D, const Cochain& E);

/// Gerstenhaber bracket [D,E] = (-1)^{|D||E|} (D o E) - (E o D).
Cochain gerstenhaber(const Cochain& D, const Cochain& E);

/// Hochschild differential by the explicit three-part formula.
Cochain hochschild_d(const Cochain& D);

/// The same differential computed as [mu0, D]; kept as a test oracle.
Cochain hochschild_d_via_bracket(const Cochain& D);

/// Total antisymmetrisation with the 1/(arity)! normalisation.
Cochain alt(const Cochain& D);

/// D+ = D + tau D and D- = D - tau D for bidifferential operators.
std::pair<Cochain, Cochain> sym_parts(const Cochain& D);

} // namespace homstar

#endif
