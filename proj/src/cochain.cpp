#include "homstar/cochain.hpp"

#include <algorithm>
#include <sstream>

namespace homstar {

Cochain Cochain::mu0(VarSpec vars, int trunc) {
    Cochain c(vars, trunc, 1);
    DerivKey key(2, Exps(vars.nvars(), 0));
    c.add_term(key, Poly::constant(vars, trunc, Scalar(1)));
    return c;
}

Cochain Cochain::lie_euler(VarSpec vars, int trunc) {
    Cochain c(vars, trunc, 0);
    for (int j = vars.dim; j < vars.nvars(); ++j) {
        DerivKey key{unit_exps(vars.nvars(), j)};
        c.add_term(key, Poly::variable(vars, trunc, j));
    }
    return c;
}

Cochain Cochain::from_poly(const Poly& p) {
    Cochain c(p.vars(), p.trunc(), -1);
    if (!p.is_zero()) c.add_term(DerivKey{}, p);
    return c;
}

Cochain Cochain::term(VarSpec vars, int trunc, DerivKey key, Poly coeff) {
    Cochain c(vars, trunc, static_cast<int>(key.size()) - 1);
    c.add_term(key, coeff);
    return c;
}

bool Cochain::vanishes_on_constants() const {
    // Degree -1 cochains are plain functions; HC_diff^{-1} is all of them.
    for (const auto& [key, coeff] : terms_) {
        for (const MultiIndex& alpha : key) {
            if (all_zero(alpha)) return false;
        }
    }
    return true;
}

void Cochain::add_term(const DerivKey& key, const Poly& coeff) {
    if (static_cast<int>(key.size()) != arity())
        throw StructuralError("Cochain::add_term: key arity mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Cochain::check_compatible(const Cochain& o) const {
    if (vars_ != o.vars_ || trunc_ != o.trunc_)
        throw StructuralError("Cochain: ambient mismatch");
    if (degree_ != o.degree_)
        throw StructuralError("Cochain: degree mismatch in linear combination");
}

Cochain& Cochain::operator+=(const Cochain& o) {
    check_compatible(o);
    for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    check_compatible(o);
    for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
    return *this;
}

Cochain Cochain::operator-() const {
    Cochain r(vars_, trunc_, degree_);
    for (const auto& [key, coeff] : terms_) r.terms_[key] = -coeff;
    return r;
}

Cochain Cochain::scaled(const Scalar& s) const {
    Cochain r(vars_, trunc_, degree_);
    if (s.is_zero()) return r;
    for (const auto& [key, coeff] : terms_) r.terms_[key] = coeff.scaled(s);
    return r;
}

Cochain Cochain::poly_scaled(const Poly& p) const {
    Cochain r(vars_, trunc_, degree_);
    for (const auto& [key, coeff] : terms_) r.add_term(key, p * coeff);
    return r;
}

Poly Cochain::apply(const std::vector<Poly>& args) const {
    if (static_cast<int>(args.size()) != arity())
        throw StructuralError("Cochain::apply: expected " + std::to_string(arity()) +
                              " arguments, got " + std::to_string(args.size()));
    for (const Poly& a : args) a.check(Poly(vars_, trunc_));
    Poly out(vars_, trunc_);
    for (const auto& [key, coeff] : terms_) {
        Poly prod = coeff;
        bool dead = false;
        for (size_t j = 0; j < key.size() && !dead; ++j) {
            Poly d = args[j].partial(key[j]);
            if (d.is_zero()) dead = true;
            prod = prod * d;
        }
        if (!dead) out += prod;
    }
    return out;
}

Cochain Cochain::insert(int slot, const Cochain& e) const {
    if (vars_ != e.vars_ || trunc_ != e.trunc_) throw StructuralError("Cochain::insert: ambient mismatch");
    if (slot < 0 || slot >= arity()) throw StructuralError("Cochain::insert: slot out of range");
    int res_arity = arity() + e.arity() - 1;
    Cochain r(vars_, trunc_, res_arity - 1);
    int en = e.arity();
    for (const auto& [dkey, dcoeff] : terms_) {
        const MultiIndex& alpha = dkey[slot];
        for (const auto& [ekey, ecoeff] : e.terms_) {
            // Leibniz: distribute alpha over e's coefficient and arguments.
            for_each_splitting(alpha, en + 1, [&](const std::vector<Exps>& parts, const Rational& mult) {
                Poly dcoef = ecoeff.partial(parts[0]);
                if (dcoef.is_zero()) return;
                DerivKey key;
                key.reserve(res_arity);
                for (int j = 0; j < slot; ++j) key.push_back(dkey[j]);
                for (int j = 0; j < en; ++j) key.push_back(add_exps(ekey[j], parts[j + 1]));
                for (int j = slot + 1; j < arity(); ++j) key.push_back(dkey[j]);
                r.add_term(key, (dcoeff * dcoef).scaled(Scalar(mult)));
            });
        }
    }
    return r;
}

Cochain Cochain::tau() const {
    if (arity() != 2) throw StructuralError("Cochain::tau: arity 2 required");
    return permuted({1, 0});
}

Cochain Cochain::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != arity())
        throw StructuralError("Cochain::permuted: permutation size mismatch");
    Cochain r(vars_, trunc_, degree_);
    for (const auto& [key, coeff] : terms_) {
        // D's slot i receives argument perm[i], so its multi-index moves there.
        DerivKey nkey(key.size());
        for (size_t i = 0; i < key.size(); ++i) nkey[perm[i]] = key[i];
        r.add_term(nkey, coeff);
    }
    return r;
}

int Cochain::max_derivative_order() const {
    int m = 0;
    for (const auto& [key, coeff] : terms_)
        for (const MultiIndex& a : key) m = std::max(m, total_degree(a));
    return m;
}

int Cochain::max_derivative_order_in_slot(int slot) const {
    int m = 0;
    for (const auto& [key, coeff] : terms_) m = std::max(m, total_degree(key[slot]));
    return m;
}

std::optional<int> Cochain::homogeneity_degree() const {
    if (terms_.empty()) throw PreconditionError("homogeneity_degree: zero cochain");
    std::optional<int> deg;
    for (const auto& [key, coeff] : terms_) {
        int nder = 0;
        for (const MultiIndex& a : key) {
            for (int v = vars_.dim; v < vars_.nvars(); ++v) nder += a[v];
        }
        for (const auto& [e, c] : coeff.terms()) {
            int k = coeff.fibre_degree_of(e) - nder;
            if (!deg)
                deg = k;
            else if (*deg != k)
                return std::nullopt;
        }
    }
    return deg;
}

bool Cochain::is_homogeneous_of(int k) const {
    if (terms_.empty()) return true;
    auto d = homogeneity_degree();
    return d && *d == k;
}

std::map<int, Cochain> Cochain::homogeneous_components() const {
    std::map<int, Cochain> comps;
    for (const auto& [key, coeff] : terms_) {
        int nder = 0;
        for (const MultiIndex& a : key) {
            for (int v = vars_.dim; v < vars_.nvars(); ++v) nder += a[v];
        }
        for (const auto& [e, c] : coeff.terms()) {
            int k = coeff.fibre_degree_of(e) - nder;
            auto it = comps.find(k);
            if (it == comps.end()) it = comps.emplace(k, Cochain(vars_, trunc_, degree_)).first;
            Poly mono(vars_, trunc_);
            mono.set(e, c);
            it->second.add_term(key, mono);
        }
    }
    return comps;
}

bool Cochain::is_hbar_free() const {
    for (const auto& [key, coeff] : terms_) {
        if (!coeff.is_hbar_free()) return false;
    }
    return true;
}

Cochain Cochain::hbar_slice(int k) const {
    Cochain r(vars_, trunc_, degree_);
    for (const auto& [key, coeff] : terms_) r.add_term(key, coeff.hbar_slice(k));
    return r;
}

std::string Cochain::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff.str() << ")";
        os << " (";
        for (size_t j = 0; j < key.size(); ++j) {
            if (j) os << "|";
            for (size_t v = 0; v < key[j].size(); ++v) {
                if (v) os << ",";
                os << key[j][v];
            }
        }
        os << ")";
    }
    return os.str();
}

Cochain circle(const Cochain& D, const Cochain& E) {
    // arity-0 left factor: the insertion sum is empty
    Cochain acc(D.vars(), D.trunc(), D.degree() + E.degree());
    int eDeg = E.degree();
    for (int i = 0; i < D.arity(); ++i) {
        Cochain ins = D.insert(i, E);
        bool flip = (i * eDeg) % 2 != 0;
        acc += flip ? -ins : ins;
    }
    return acc;
}

Cochain gerstenhaber(const Cochain& D, const Cochain& E) {
    bool flip = (D.degree() * E.degree()) % 2 != 0;
    Cochain de = circle(D, E);
    Cochain ed = circle(E, D);
    return (flip ? -de : de) - ed;
}

Cochain hochschild_d(const Cochain& D) {
    int n = D.degree();
    VarSpec vars = D.vars();
    int nv = vars.nvars();
    Cochain r(vars, D.trunc(), n + 1);
    bool n_odd = ((n % 2) + 2) % 2 == 1;
    for (const auto& [key, coeff] : D.terms()) {
        // f0 * D(f1,...,f_{n+1})
        {
            DerivKey k;
            k.reserve(n + 2);
            k.push_back(Exps(nv, 0));
            for (const auto& a : key) k.push_back(a);
            r.add_term(k, coeff);
        }
        // (-1)^n D(f0,...,fn) * f_{n+1}
        {
            DerivKey k = key;
            k.push_back(Exps(nv, 0));
            r.add_term(k, n_odd ? -coeff : coeff);
        }
        // sum_i (-1)^{i+1} D(f0,..., f_i f_{i+1}, ..., f_{n+1})
        for (int i = 0; i <= n; ++i) {
            const MultiIndex& alpha = key[i];
            bool neg = (i % 2 == 0); // (-1)^{i+1}
            for_each_splitting(alpha, 2, [&](const std::vector<Exps>& parts, const Rational& mult) {
                DerivKey k;
                k.reserve(n + 2);
                for (int j = 0; j < i; ++j) k.push_back(key[j]);
                k.push_back(parts[0]);
                k.push_back(parts[1]);
                for (int j = i + 1; j <= n; ++j) k.push_back(key[j]);
                Scalar c = Scalar(mult);
                if (neg) c = -c;
                r.add_term(k, coeff.scaled(c));
            });
        }
    }
    return r;
}

Cochain hochschild_d_via_bracket(const Cochain& D) {
    return gerstenhaber(Cochain::mu0(D.vars(), D.trunc()), D);
}

namespace {

void permutations_with_sign(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;
    // iterate in lexicographic order, tracking parity by inversion count
    while (true) {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        fn(perm, inv % 2 == 0 ? 1 : -1);
        if (!std::next_permutation(perm.begin(), perm.end())) break;
    }
}

} // namespace

Cochain alt(const Cochain& D) {
    int a = D.arity();
    if (a == 0) return D;
    Cochain acc(D.vars(), D.trunc(), D.degree());
    permutations_with_sign(a, [&](const std::vector<int>& perm, int sign) {
        Cochain p = D.permuted(perm);
        acc += sign > 0 ? p : -p;
    });
    return acc.scaled(Scalar(Rational(1) / factorial(a)));
}

std::pair<Cochain, Cochain> sym_parts(const Cochain& D) {
    Cochain t = D.tau();
    return {D + t, D - t};
}

} // namespace homstar
