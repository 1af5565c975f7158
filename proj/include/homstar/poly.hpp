#ifndef HOMSTAR_POLY_HPP
#define HOMSTAR_POLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homstar/scalar.hpp"

namespace homstar {

/// Ambient variables of the total space of a trivial bundle: d base
/// variables x1..xd followed by m fibre variables xi1..xim.
struct VarSpec {
    int dim = 0;  // base dimension d
    int rank = 0; // fibre rank m

    int nvars() const { return dim + rank; }
    bool is_base(int v) const { return v < dim; }
    bool is_fibre(int v) const { return v >= dim; }

    std::string var_name(int v) const {
        if (v < dim) return "x" + std::to_string(v + 1);
        return "xi" + std::to_string(v - dim + 1);
    }

    friend bool operator==(const VarSpec& a, const VarSpec& b) {
        return a.dim == b.dim && a.rank == b.rank;
    }
    friend bool operator!=(const VarSpec& a, const VarSpec& b) { return !(a == b); }
};

/// Exponent vector over the ambient variable list. Doubles as the
/// derivative multi-index encoding.
using Exps = std::vector<int>;
using MultiIndex = Exps;

inline int total_degree(const Exps& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

inline bool all_zero(const Exps& e) {
    for (int v : e) {
        if (v != 0) return false;
    }
    return true;
}

inline Exps add_exps(const Exps& a, const Exps& b) {
    Exps r = a;
    for (size_t j = 0; j < r.size(); ++j) r[j] += b[j];
    return r;
}

inline Exps sub_exps(const Exps& a, const Exps& b) {
    Exps r = a;
    for (size_t j = 0; j < r.size(); ++j) r[j] -= b[j];
    return r;
}

inline Exps unit_exps(int n, int v) {
    Exps e(n, 0);
    e[v] = 1;
    return e;
}

/// Fixed degree-lexicographic order (x block before xi block, ascending
/// index): lower total degree first, ties broken lexicographically.
struct DegLex {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Truncated polynomial in the formal parameter h; exponents above the
/// truncation order are discarded by every operation.
class HbarPoly {
public:
    HbarPoly() = default;
    explicit HbarPoly(int trunc) : trunc_(trunc) {}
    HbarPoly(int trunc, Scalar constant) : trunc_(trunc) { set(0, std::move(constant)); }

    int trunc() const { return trunc_; }
    bool is_zero() const { return coef_.empty(); }

    /// True when the only h-power present is h^0.
    bool is_constant() const {
        return coef_.empty() || (coef_.size() == 1 && coef_.begin()->first == 0);
    }

    const std::map<int, Scalar>& coef() const { return coef_; }

    Scalar at(int k) const {
        auto it = coef_.find(k);
        return it == coef_.end() ? Scalar() : it->second;
    }

    void set(int k, Scalar v) {
        if (k < 0) throw StructuralError("HbarPoly: negative h exponent");
        if (k > trunc_ || v.is_zero())
            coef_.erase(k);
        else
            coef_[k] = std::move(v);
    }

    HbarPoly& operator+=(const HbarPoly& o) {
        check(o);
        for (const auto& [k, v] : o.coef_) set(k, at(k) + v);
        return *this;
    }
    HbarPoly& operator-=(const HbarPoly& o) {
        check(o);
        for (const auto& [k, v] : o.coef_) set(k, at(k) - v);
        return *this;
    }
    friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
    friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }

    friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
        a.check(b);
        HbarPoly r(a.trunc_);
        for (const auto& [ka, va] : a.coef_)
            for (const auto& [kb, vb] : b.coef_) {
                if (ka + kb > a.trunc_) continue;
                r.set(ka + kb, r.at(ka + kb) + va * vb);
            }
        return r;
    }

    HbarPoly operator-() const {
        HbarPoly r(trunc_);
        for (const auto& [k, v] : coef_) r.coef_[k] = -v;
        return r;
    }

    HbarPoly scaled(const Scalar& s) const {
        HbarPoly r(trunc_);
        if (s.is_zero()) return r;
        for (const auto& [k, v] : coef_) r.set(k, v * s);
        return r;
    }

    /// Multiply by h^k (truncating).
    HbarPoly shifted(int k) const {
        HbarPoly r(trunc_);
        for (const auto& [e, v] : coef_) {
            if (e + k <= trunc_) r.set(e + k, v);
        }
        return r;
    }

    /// Substitute a concrete scalar value for h.
    Scalar eval(const Scalar& h) const {
        Scalar r, p(1);
        int last = 0;
        for (const auto& [k, v] : coef_) {
            for (int j = last; j < k; ++j) p *= h;
            last = k;
            r += v * p;
        }
        return r;
    }

    HbarPoly retrunc(int k) const {
        HbarPoly r(k);
        for (const auto& [e, v] : coef_) {
            if (e <= k) r.set(e, v);
        }
        return r;
    }

    friend bool operator==(const HbarPoly& a, const HbarPoly& b) {
        return a.trunc_ == b.trunc_ && a.coef_ == b.coef_;
    }
    friend bool operator!=(const HbarPoly& a, const HbarPoly& b) { return !(a == b); }
    friend bool operator<(const HbarPoly& a, const HbarPoly& b) { return a.coef_ < b.coef_; }

private:
    void check(const HbarPoly& o) const {
        if (trunc_ != o.trunc_)
            throw StructuralError("HbarPoly: truncation order mismatch (" + std::to_string(trunc_) +
                                  " vs " + std::to_string(o.trunc_) + ")");
    }

    int trunc_ = 0;
    std::map<int, Scalar> coef_; // h exponent -> coefficient, no zeros stored
};

/// Sparse multivariate polynomial over Q(i)[h]/(h^{K+1}) on the ambient
/// variables of a VarSpec. Canonical form: no zero coefficients, terms
/// ordered by DegLex.
class Poly {
public:
    Poly() = default;
    Poly(VarSpec vars, int trunc) : vars_(vars), trunc_(trunc) {}

    static Poly zero(VarSpec vars, int trunc) { return Poly(vars, trunc); }

    static Poly constant(VarSpec vars, int trunc, Scalar c) {
        Poly p(vars, trunc);
        p.set(Exps(vars.nvars(), 0), HbarPoly(trunc, std::move(c)));
        return p;
    }

    static Poly variable(VarSpec vars, int trunc, int v) {
        Poly p(vars, trunc);
        p.set(unit_exps(vars.nvars(), v), HbarPoly(trunc, Scalar(1)));
        return p;
    }

    static Poly monomial(VarSpec vars, int trunc, Exps e, Scalar c = Scalar(1)) {
        Poly p(vars, trunc);
        p.set(std::move(e), HbarPoly(trunc, std::move(c)));
        return p;
    }

    static Poly hbar(VarSpec vars, int trunc) {
        Poly p(vars, trunc);
        HbarPoly h(trunc);
        h.set(1, Scalar(1));
        p.set(Exps(vars.nvars(), 0), std::move(h));
        return p;
    }

    const VarSpec& vars() const { return vars_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, HbarPoly, DegLex>& terms() const { return terms_; }

    void set(Exps e, HbarPoly c) {
        if (static_cast<int>(e.size()) != vars_.nvars())
            throw StructuralError("Poly: exponent vector length mismatch");
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[std::move(e)] = std::move(c);
    }

    void add_term(const Exps& e, const HbarPoly& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HbarPoly coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? HbarPoly(trunc_) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r(vars_, trunc_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.vars_, a.trunc_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                HbarPoly c = ca * cb;
                if (!c.is_zero()) r.add_term(add_exps(ea, eb), c);
            }
        return r;
    }

    Poly scaled(const Scalar& s) const {
        Poly r(vars_, trunc_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c.scaled(s);
        return r;
    }

    /// Multiply by h^k.
    Poly hbar_shifted(int k) const {
        Poly r(vars_, trunc_);
        for (const auto& [e, c] : terms_) {
            HbarPoly s = c.shifted(k);
            if (!s.is_zero()) r.terms_[e] = std::move(s);
        }
        return r;
    }

    /// Iterated exact partial derivative by a multi-index.
    Poly partial(const MultiIndex& alpha) const {
        if (static_cast<int>(alpha.size()) != vars_.nvars())
            throw StructuralError("Poly::partial: multi-index length mismatch");
        Poly r(vars_, trunc_);
        for (const auto& [e, c] : terms_) {
            Rational f(1);
            Exps out = e;
            bool dead = false;
            for (int v = 0; v < vars_.nvars() && !dead; ++v) {
                for (int j = 0; j < alpha[v]; ++j) {
                    if (out[v] == 0) {
                        dead = true;
                        break;
                    }
                    f *= out[v];
                    out[v] -= 1;
                }
            }
            if (!dead) r.add_term(out, c.scaled(Scalar(f)));
        }
        return r;
    }

    /// xi-degree of a single exponent vector.
    int fibre_degree_of(const Exps& e) const {
        int s = 0;
        for (int v = vars_.dim; v < vars_.nvars(); ++v) s += e[v];
        return s;
    }

    int base_degree_of(const Exps& e) const {
        int s = 0;
        for (int v = 0; v < vars_.dim; ++v) s += e[v];
        return s;
    }

    /// Euler (fibre) degree: k iff every term has xi-degree k. The zero
    /// polynomial has no defined degree.
    std::optional<int> euler_degree() const {
        if (terms_.empty()) throw PreconditionError("euler_degree: zero polynomial");
        std::optional<int> deg;
        for (const auto& [e, c] : terms_) {
            int k = fibre_degree_of(e);
            if (!deg)
                deg = k;
            else if (*deg != k)
                return std::nullopt; // inhomogeneous
        }
        return deg;
    }

    bool is_fibre_homogeneous(int k) const {
        for (const auto& [e, c] : terms_) {
            if (fibre_degree_of(e) != k) return false;
        }
        return true;
    }

    int max_base_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, base_degree_of(e));
        return d;
    }

    int max_fibre_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, fibre_degree_of(e));
        return d;
    }

    bool is_hbar_free() const {
        for (const auto& [e, c] : terms_) {
            if (!c.is_constant()) return false;
        }
        return true;
    }

    /// The h^k slice, returned as an h-free polynomial.
    Poly hbar_slice(int k) const {
        Poly r(vars_, trunc_);
        for (const auto& [e, c] : terms_) {
            Scalar v = c.at(k);
            if (!v.is_zero()) r.terms_[e] = HbarPoly(trunc_, v);
        }
        return r;
    }

    int max_hbar_power() const {
        int m = 0;
        for (const auto& [e, c] : terms_)
            for (const auto& [k, v] : c.coef()) m = std::max(m, k);
        return m;
    }

    /// Substitute 0 for every variable in `kill` (a list of variable indices).
    Poly substitute_zero(const std::vector<int>& kill) const {
        std::vector<char> mask(vars_.nvars(), 0);
        for (int v : kill) mask.at(v) = 1;
        Poly r(vars_, trunc_);
        for (const auto& [e, c] : terms_) {
            bool dead = false;
            for (int v = 0; v < vars_.nvars(); ++v) {
                if (mask[v] && e[v] != 0) {
                    dead = true;
                    break;
                }
            }
            if (!dead) r.add_term(e, c);
        }
        return r;
    }

    /// Substitute a scalar value for h.
    Poly eval_hbar(const Scalar& h) const {
        Poly r(vars_, trunc_);
        for (const auto& [e, c] : terms_) {
            Scalar v = c.eval(h);
            if (!v.is_zero()) r.terms_[e] = HbarPoly(trunc_, v);
        }
        return r;
    }

    Poly retrunc(int k) const {
        Poly r(vars_, k);
        for (const auto& [e, c] : terms_) {
            HbarPoly t = c.retrunc(k);
            if (!t.is_zero()) r.terms_[e] = std::move(t);
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) {
        auto la = a.terms_.begin(), lb = b.terms_.begin();
        for (; la != a.terms_.end() && lb != b.terms_.end(); ++la, ++lb) {
            DegLex dl;
            if (dl(la->first, lb->first)) return true;
            if (dl(lb->first, la->first)) return false;
            if (la->second < lb->second) return true;
            if (lb->second < la->second) return false;
        }
        return lb != b.terms_.end();
    }

    /// Canonical text rendering; see parse_poly for the grammar.
    std::string str() const;

    void check(const Poly& o) const {
        if (vars_ != o.vars_)
            throw StructuralError("Poly: ambient VarSpec mismatch");
        if (trunc_ != o.trunc_)
            throw StructuralError("Poly: truncation order mismatch");
    }

private:
    VarSpec vars_;
    int trunc_ = 0;
    std::map<Exps, HbarPoly, DegLex> terms_;
};

/// Parse the canonical polynomial syntax: sums of terms like
/// "3/2*x1^2*xi3*h^2", "-i*xi1", "1/4+1/2*i" (a parenthesised coefficient).
Poly parse_poly(const std::string& text, VarSpec vars, int trunc);

/// Exact multinomial coefficient |alpha|! / prod(parts!) generalised to
/// multi-indices: product over variables of the per-variable multinomial
/// alpha[v]! / (parts[0][v]! * ... ). Used by Leibniz expansions.
Rational multi_multinomial(const Exps& alpha, const std::vector<const Exps*>& parts);

/// Enumerate all ways of writing `alpha` as an ordered sum of `nparts`
/// componentwise nonnegative multi-indices; calls fn(parts, coefficient)
/// with the exact multinomial coefficient of each splitting.
void for_each_splitting(const Exps& alpha, int nparts,
                        const std::function<void(const std::vector<Exps>&, const Rational&)>& fn);

} // namespace homstar

#endif
