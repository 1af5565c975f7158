#ifndef HOMSTAR_MULTIVECTOR_HPP
#define HOMSTAR_MULTIVECTOR_HPP

#include <map>
#include <optional>
#include <vector>

#include "homstar/poly.hpp"

namespace homstar {

/// Antisymmetric p-vector field with polynomial components, stored on
/// strictly increasing index tuples over the ambient variables.
class Multivector {
public:
    Multivector() = default;
    Multivector(VarSpec vars, int trunc, int degree)
        : vars_(vars), trunc_(trunc), degree_(degree) {
        if (degree < 0) throw StructuralError("Multivector: degree must be >= 0");
    }

    const VarSpec& vars() const { return vars_; }
    int trunc() const { return trunc_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comp_.empty(); }
    const std::map<std::vector<int>, Poly>& components() const { return comp_; }

    /// Add to the component at an arbitrary tuple; sorts and applies the
    /// antisymmetry sign, drops tuples with repeated indices.
    void add_component(std::vector<int> idx, const Poly& value);

    /// Component at an arbitrary tuple (with sign), zero if repeated.
    Poly component(std::vector<int> idx) const;

    Multivector& operator+=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    Multivector operator-() const;
    Multivector scaled(const Scalar& s) const;

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    /// Homogeneity degree: xi-deg(component) - (number of xi-type indices
    /// in the tuple), when that is the same for every stored monomial.
    std::optional<int> homogeneity_degree() const;

    std::string str() const;

private:
    VarSpec vars_;
    int trunc_ = 0;
    int degree_ = 0;
    std::map<std::vector<int>, Poly> comp_; // strictly increasing tuples
};

} // namespace homstar

#endif
