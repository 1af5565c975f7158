#include "homstar/hkr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "homstar/linalg.hpp"

namespace homstar {

namespace {

void permutations_with_sign(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;
    while (true) {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        fn(perm, inv % 2 == 0 ? 1 : -1);
        if (!std::next_permutation(perm.begin(), perm.end())) break;
    }
}

void increasing_tuples(int nvars, int p, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(p);
    std::function<void(int, int)> go = [&](int pos, int start) {
        if (pos == p) {
            fn(idx);
            return;
        }
        for (int v = start; v < nvars; ++v) {
            idx[pos] = v;
            go(pos + 1, v + 1);
        }
    };
    go(0, 0);
}

} // namespace

Cochain hkr(const Multivector& X) {
    int p = X.degree();
    Cochain r(X.vars(), X.trunc(), p - 1);
    Scalar norm(Rational(1) / factorial(p));
    int nv = X.vars().nvars();
    for (const auto& [idx, comp] : X.components()) {
        permutations_with_sign(p, [&](const std::vector<int>& perm, int sign) {
            DerivKey key(p);
            for (int j = 0; j < p; ++j) key[j] = unit_exps(nv, idx[perm[j]]);
            Scalar c = norm;
            if (sign < 0) c = -c;
            r.add_term(key, comp.scaled(c));
        });
    }
    return r;
}

Multivector hkr_inv_closed(const Cochain& D) {
    if (!hochschild_d(D).is_zero())
        throw PreconditionError("hkr_inv_closed: input cochain is not closed");
    Cochain A = alt(D);
    int p = D.arity();
    VarSpec vars = D.vars();
    Multivector X(vars, D.trunc(), p);
    increasing_tuples(vars.nvars(), p, [&](const std::vector<int>& idx) {
        std::vector<Poly> coords;
        coords.reserve(p);
        for (int a : idx) coords.push_back(Poly::variable(vars, D.trunc(), a));
        Poly val = A.apply(coords).scaled(Scalar(factorial(p)));
        X.add_component(idx, val);
    });
    if (hkr(X) != A)
        throw TheoremViolation("hkr_inv_closed: retract identity hkr(hkrInv D) = Alt(D) failed");
    return X;
}

namespace {

struct BlockKey {
    Exps mono;
    int hbar;
    Exps tau;

    bool operator<(const BlockKey& o) const {
        if (mono != o.mono) return mono < o.mono;
        if (hbar != o.hbar) return hbar < o.hbar;
        return tau < o.tau;
    }
};

// Enumerates all derivative keys of the given arity with componentwise sum
// tau and every slot nonzero, in deterministic order.
std::vector<DerivKey> candidate_keys(const Exps& tau, int arity) {
    std::vector<DerivKey> out;
    for_each_splitting(tau, arity, [&](const std::vector<Exps>& parts, const Rational&) {
        for (const Exps& part : parts) {
            if (all_zero(part)) return;
        }
        out.push_back(parts);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct BlockTemplate {
    std::vector<DerivKey> candidates;
    std::vector<std::map<DerivKey, Scalar>> columns; // hochschild_d of each candidate
};

const BlockTemplate& block_template(VarSpec vars, const Exps& tau, int arity,
                                    std::map<std::pair<Exps, int>, BlockTemplate>& cache) {
    auto it = cache.find({tau, arity});
    if (it != cache.end()) return it->second;
    BlockTemplate tpl;
    tpl.candidates = candidate_keys(tau, arity);
    Poly one = Poly::constant(vars, 0, Scalar(1));
    for (const DerivKey& key : tpl.candidates) {
        Cochain unit = Cochain::term(vars, 0, key, one);
        Cochain d = hochschild_d(unit);
        std::map<DerivKey, Scalar> col;
        for (const auto& [dkey, coeff] : d.terms()) {
            // coefficient is a rational constant by construction
            col[dkey] = coeff.coeff(Exps(vars.nvars(), 0)).at(0);
        }
        tpl.columns.push_back(std::move(col));
    }
    return cache.emplace(std::make_pair(tau, arity), std::move(tpl)).first->second;
}

int slot_order_max(const DerivKey& key) {
    int m = 0;
    for (const Exps& a : key) m = std::max(m, total_degree(a));
    return m;
}

} // namespace

Cochain solve_potential(const Cochain& R, int order_bound, const CandidateFilter& filter) {
    int nR = R.degree();
    if (nR < 1) throw PreconditionError("solve_potential: input degree must be >= 1");
    VarSpec vars = R.vars();
    Cochain out(vars, R.trunc(), nR - 1);
    if (R.is_zero()) return out;

    if (!hochschild_d(R).is_zero())
        throw PreconditionError("solve_potential: input is not closed");
    if (!alt(R).is_zero())
        throw PreconditionError("solve_potential: input has nonzero antisymmetrisation");

    if (order_bound < 0) order_bound = R.arity() * R.max_derivative_order() + 1;

    // Flatten R into blocks keyed by (coefficient monomial, h power, total
    // derivative multi-index); the Hochschild differential preserves all
    // three, so the solve decomposes blockwise.
    std::map<BlockKey, std::map<DerivKey, Scalar>> blocks;
    for (const auto& [key, coeff] : R.terms()) {
        Exps tau(vars.nvars(), 0);
        for (const Exps& a : key) tau = add_exps(tau, a);
        for (const auto& [mono, hb] : coeff.terms()) {
            for (const auto& [hexp, val] : hb.coef()) {
                blocks[BlockKey{mono, hexp, tau}][key] += val;
            }
        }
    }

    std::map<std::pair<Exps, int>, BlockTemplate> cache;
    int arity = nR; // arity of the potential

    for (const auto& [bk, rhs_map] : blocks) {
        const BlockTemplate& tpl = block_template(vars, bk.tau, arity, cache);
        std::optional<std::vector<Scalar>> sol;
        std::vector<int> retained;
        for (int escalation = 0; escalation <= 2; ++escalation) {
            int bound = order_bound + escalation;
            retained.clear();
            for (size_t c = 0; c < tpl.candidates.size(); ++c) {
                if (slot_order_max(tpl.candidates[c]) > bound) continue;
                if (filter && !filter(bk.mono, tpl.candidates[c])) continue;
                retained.push_back(static_cast<int>(c));
            }
            // deterministic row index: union of RHS keys and column keys
            std::map<DerivKey, int> row_of;
            for (const auto& [k, v] : rhs_map) row_of.emplace(k, 0);
            for (int c : retained)
                for (const auto& [k, v] : tpl.columns[c]) row_of.emplace(k, 0);
            int nrows = 0;
            for (auto& [k, idx] : row_of) idx = nrows++;

            Matrix A(nrows, static_cast<int>(retained.size()));
            for (size_t j = 0; j < retained.size(); ++j)
                for (const auto& [k, v] : tpl.columns[retained[j]]) A.at(row_of[k], static_cast<int>(j)) = v;
            std::vector<Scalar> b(nrows);
            for (const auto& [k, v] : rhs_map) b[row_of[k]] = v;

            sol = solve_canonical(A, b);
            if (sol) break;
            bool bound_binding = retained.size() < tpl.candidates.size();
            if (!bound_binding) break; // escalation cannot help
        }
        if (!sol) {
            std::ostringstream os;
            os << "block mono=(";
            for (size_t j = 0; j < bk.mono.size(); ++j) os << (j ? "," : "") << bk.mono[j];
            os << ") h^" << bk.hbar << " tau=(";
            for (size_t j = 0; j < bk.tau.size(); ++j) os << (j ? "," : "") << bk.tau[j];
            os << ")";
            throw DiagnosticError("solve_potential: infeasible graded block", os.str());
        }
        for (size_t j = 0; j < retained.size(); ++j) {
            if ((*sol)[j].is_zero()) continue;
            Poly coeff(vars, R.trunc());
            HbarPoly hb(R.trunc());
            hb.set(bk.hbar, (*sol)[j]);
            coeff.set(bk.mono, hb);
            out.add_term(tpl.candidates[retained[j]], coeff);
        }
    }

    if (hochschild_d(out) != R)
        throw TheoremViolation("solve_potential: assembled potential fails dC = R");
    return out;
}

} // namespace homstar
