#ifndef HOMSTAR_ALGEBROID_HPP
#define HOMSTAR_ALGEBROID_HPP

#include <map>
#include <string>
#include <vector>

#include "homstar/cochain.hpp"
#include "homstar/linalg.hpp"
#include "homstar/multivector.hpp"

namespace homstar {

/// Polynomial Lie algebroid presentation on a trivial bundle: base
/// dimension d, rank m, anchor rho[i][a] and structure functions c[i][j][k],
/// all polynomial in the base variables only.
struct AlgebroidPresentation {
    int dim = 0;  // base dimension
    int rank = 0; // fibre rank
    // anchor[i][a]: coefficient of d/dx^a in rho(e_i); x-polynomials
    std::vector<std::vector<Poly>> anchor;
    // structure[i][j][k]: coefficient of e_k in [e_i, e_j]; antisymmetric in (i,j)
    std::vector<std::vector<std::vector<Poly>>> structure;
    std::vector<std::string> basis_names;

    VarSpec vars() const { return VarSpec{dim, rank}; }

    static AlgebroidPresentation zero(int dim, int rank, int trunc);

    Poly anchor_at(int i, int a) const { return anchor[i][a]; }
    Poly structure_at(int i, int j, int k) const { return structure[i][j][k]; }

    /// rho(e_i) applied to an x-polynomial (works on any ambient polynomial).
    Poly anchor_apply(int i, const Poly& f) const;

    int trunc() const;
    int max_structure_degree() const;

    bool operator==(const AlgebroidPresentation& o) const;

    std::string canonical_text() const;
    std::uint64_t hash() const;
};

struct ValidationIssue {
    std::string identity; // which polynomial identity failed
    std::string witness;  // offending indices / residual polynomial
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

/// Checks antisymmetry, anchor-bracket compatibility and the Jacobi
/// identity as exact polynomial identities on basis sections.
ValidationReport validate(const AlgebroidPresentation& A);

/// The KKS Poisson tensor as an antisymmetric component matrix:
/// {F,G} = sum_{uv} Pi^{uv} d_u F d_v G.
Multivector kks_bivector(const AlgebroidPresentation& A, int trunc);

/// The KKS bracket as a biderivation on ambient polynomials.
Poly kks_bracket(const AlgebroidPresentation& A, const Poly& F, const Poly& G);

/// C1 = (i/2){.,.}_KKS as a bidifferential cochain.
Cochain kks_c1(const AlgebroidPresentation& A, int trunc);

/// Lie algebroid p-form with x-polynomial coefficients on strictly
/// increasing fibre index tuples.
class AForm {
public:
    AForm() = default;
    AForm(const AlgebroidPresentation& A, int trunc, int degree);

    int degree() const { return degree_; }
    int trunc() const { return trunc_; }
    const VarSpec& vars() const { return vars_; }
    bool is_zero() const { return comp_.empty(); }
    const std::map<std::vector<int>, Poly>& components() const { return comp_; }

    /// Indices are 0-based fibre indices; sorts with sign, drops repeats.
    void add_component(std::vector<int> idx, const Poly& value);
    Poly component(std::vector<int> idx) const;

    AForm& operator+=(const AForm& o);
    AForm& operator-=(const AForm& o);
    friend AForm operator+(AForm a, const AForm& b) { return a += b; }
    friend AForm operator-(AForm a, const AForm& b) { return a -= b; }
    AForm operator-() const;
    AForm scaled(const Scalar& s) const;

    friend bool operator==(const AForm& a, const AForm& b) {
        return a.degree_ == b.degree_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const AForm& a, const AForm& b) { return !(a == b); }

    int max_x_degree() const;
    std::string str(const AlgebroidPresentation& A) const;

private:
    VarSpec vars_;
    int trunc_ = 0;
    int degree_ = 0;
    std::map<std::vector<int>, Poly> comp_;

    friend AForm d_A(const AlgebroidPresentation&, const AForm&);
};

/// Lie algebroid differential on forms (exact, coefficients stay
/// x-polynomial).
AForm d_A(const AlgebroidPresentation& A, const AForm& alpha);

/// Vertical lift of a p-form to a vertical p-vector field on the dual:
/// e^{i1} ^ ... ^ e^{ip} with coefficient B goes to the multivector with
/// component B on (xi_{i1},...,xi_{ip}).
Multivector vertical_lift(const AlgebroidPresentation& A, const AForm& B, int trunc);

/// A-connection presented by Christoffel symbols (x-polynomials).
struct ConnectionData {
    // gamma[i][j][k]: coefficient of e_k in nabla_{e_i} e_j
    std::vector<std::vector<std::vector<Poly>>> gamma;

    static ConnectionData flat(const AlgebroidPresentation& A, int trunc);
    bool is_torsion_free(const AlgebroidPresentation& A) const;
};

/// Fibrewise trace of the curvature of an A-connection, a 2-form.
AForm curvature_trace(const AlgebroidPresentation& A, const ConnectionData& nabla, int trunc);

/// Vertical lift of a section of the dual (an AForm of degree 1) as a
/// degree-0 cochain L_{alpha^ver} = sum_i alpha_i d_{xi_i}.
Cochain vertical_lift_operator(const AlgebroidPresentation& A, const AForm& alpha, int trunc);

/// Horizontal lift of a constant section s = sum s^i e_i as a degree-0
/// cochain; with the flat connection it is sum_a (sum_i s^i rho_i^a) d_{x^a},
/// plus the Christoffel part for a general connection.
Cochain horizontal_lift_operator(const AlgebroidPresentation& A, const ConnectionData& nabla,
                                 const std::vector<Poly>& section, int trunc);

/// Finite-dimensional slice of the Lie algebroid complex: all p-forms
/// with coefficient x-degree <= cap, with a fixed monomial basis.
struct FormSpace {
    const AlgebroidPresentation* A = nullptr;
    int trunc = 0;
    int degree = 0;
    int xcap = 0;
    std::vector<std::pair<std::vector<int>, Exps>> basis; // (index tuple, x-monomial)
    std::map<std::pair<std::vector<int>, Exps>, int> index;

    static FormSpace build(const AlgebroidPresentation& A, int trunc, int degree, int xcap);
    std::vector<Scalar> coordinates(const AForm& alpha) const; // throws if out of range
    AForm from_coordinates(const std::vector<Scalar>& v) const;
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Coordinates of a closed form in a computed cohomology basis.
struct CohomologyClass {
    AForm representative;
    std::vector<Scalar> coordinates;
    int p = 0;
    int xdeg_cap = -1; // -1: exact (d = 0), otherwise truncated at this cap
    bool truncated = false;

    bool is_zero() const {
        for (const Scalar& c : coordinates) {
            if (!c.is_zero()) return false;
        }
        return true;
    }
    std::string str() const;
};

/// Basis of H^p together with a projector onto coordinates. For d = 0 the
/// computation is exact Chevalley-Eilenberg cohomology; for d > 0 it is
/// truncated at the x-degree cap and labeled as such.
class CohomologySpace {
public:
    static CohomologySpace compute(const AlgebroidPresentation& A, int trunc, int p, int xcap = -1);

    int dim() const { return static_cast<int>(reps_.size()); }
    const std::vector<AForm>& representatives() const { return reps_; }
    int p() const { return p_; }
    bool truncated() const { return truncated_; }
    int xcap() const { return xcap_; }

    /// Project a closed form to coordinates (checks closedness).
    CohomologyClass project(const AForm& alpha) const;

    /// Solve d_A beta = alpha for a (p-1)-form when alpha is exact; nullopt
    /// otherwise.
    std::optional<AForm> antiderivative(const AForm& alpha) const;

private:
    AlgebroidPresentation A_;
    int trunc_ = 0;
    int p_ = 0;
    int xcap_ = -1;
    bool truncated_ = false;
    FormSpace space_;         // p-forms
    FormSpace lower_;         // (p-1)-forms whose differentials span the image
    std::vector<AForm> reps_; // representatives of a basis of H^p
    Matrix image_and_reps_;   // columns: d(lower basis) then representatives
    int image_cols_ = 0;
};

// Named desk presentations.
AlgebroidPresentation heisenberg3(int trunc);
AlgebroidPresentation so3(int trunc);
AlgebroidPresentation aff1(int trunc);
AlgebroidPresentation abelian(int rank, int trunc);
AlgebroidPresentation tangent_line(int trunc);            // T R^1
AlgebroidPresentation tangent_space(int dim, int trunc);  // T R^d
AlgebroidPresentation action_line(int trunc);             // R acting on R by x d/dx

} // namespace homstar

#endif
