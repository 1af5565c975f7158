#ifndef HOMSTAR_TEST_UTIL_HPP
#define HOMSTAR_TEST_UTIL_HPP

#include "homstar/cochain.hpp"

namespace homstar::testutil {

/// Deterministic 64-bit LCG; all "random" test data flows through this.
class Rng {
public:
    explicit Rng(unsigned long long seed) : state_(seed) {}

    unsigned long long next_raw() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 16;
    }
    /// uniform in [0, n)
    int next(int n) { return static_cast<int>(next_raw() % static_cast<unsigned long long>(n)); }
    /// uniform in [lo, hi]
    int range(int lo, int hi) { return lo + next(hi - lo + 1); }

private:
    unsigned long long state_;
};

/// Random multi-index of total order <= max_order (possibly zero).
inline Exps random_index(Rng& rng, int nvars, int max_order) {
    Exps e(nvars, 0);
    int total = rng.next(max_order + 1);
    for (int j = 0; j < total; ++j) e[rng.next(nvars)] += 1;
    return e;
}

inline Exps random_nonzero_index(Rng& rng, int nvars, int max_order) {
    Exps e = random_index(rng, nvars, max_order);
    if (all_zero(e)) e[rng.next(nvars)] = 1;
    return e;
}

inline Poly random_poly(Rng& rng, VarSpec vars, int trunc, int max_deg, int nterms) {
    Poly p(vars, trunc);
    for (int t = 0; t < nterms; ++t) {
        Exps e = random_index(rng, vars.nvars(), max_deg);
        long num = rng.range(-4, 4);
        if (num == 0) continue;
        p += Poly::monomial(vars, trunc, e, Scalar(num, rng.range(1, 3)));
    }
    return p;
}

/// Random cochain in HC_diff of the given degree: every slot differentiated.
inline Cochain random_cochain(Rng& rng, VarSpec vars, int trunc, int degree, int max_order,
                              int max_coeff_deg, int nterms) {
    Cochain c(vars, trunc, degree);
    for (int t = 0; t < nterms; ++t) {
        DerivKey key(degree + 1);
        for (auto& a : key) a = random_nonzero_index(rng, vars.nvars(), max_order);
        long num = rng.range(-3, 3);
        if (num == 0) num = 1;
        Exps mono = random_index(rng, vars.nvars(), max_coeff_deg);
        c.add_term(key, Poly::monomial(vars, trunc, mono, Scalar(num)));
    }
    return c;
}

} // namespace homstar::testutil

#endif
