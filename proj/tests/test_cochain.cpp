#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homstar/cochain.hpp"
#include "test_util.hpp"

using namespace homstar;
using testutil::Rng;

namespace {

const VarSpec V{1, 2}; // x1; xi1 xi2
const int K = 1;

Poly P(const std::string& s) { return parse_poly(s, V, K); }

Exps idx(int x, int a, int b) { return Exps{x, a, b}; }

// C1 of the Heisenberg algebra h3 presented on a rank-3, dim-0 ambient:
// {xi1,xi2} = -xi3, extended as a biderivation; C1 = (i/2){.,.}.
Cochain heisenberg_c1(VarSpec v3, int trunc) {
    Cochain c(v3, trunc, 1);
    Poly xi3 = Poly::variable(v3, trunc, 2);
    Scalar half_i = Scalar::i() * Scalar(1, 2);
    c.add_term({unit_exps(3, 0), unit_exps(3, 1)}, xi3.scaled(-half_i));
    c.add_term({unit_exps(3, 1), unit_exps(3, 0)}, xi3.scaled(half_i));
    return c;
}

} // namespace

TEST_CASE("apply: mu0 and simple operators") {
    Cochain mu = Cochain::mu0(V, K);
    CHECK(mu.apply({P("x1"), P("xi1")}) == P("x1*xi1"));

    Cochain d = Cochain::term(V, K, {idx(0, 1, 0), idx(1, 0, 0)}, P("1"));
    CHECK(d.apply({P("xi1^2"), P("x1")}) == P("2*xi1"));

    CHECK_THROWS_AS(mu.apply({P("x1")}), StructuralError);
}

TEST_CASE("apply: antisymmetrised first-order bivector term, brute force over S2") {
    // (1/2)(d_xi1 x d_xi2 - d_xi2 x d_xi1)
    Cochain d(V, K, 1);
    d.add_term({idx(0, 1, 0), idx(0, 0, 1)}, P("1/2"));
    d.add_term({idx(0, 0, 1), idx(0, 1, 0)}, P("-1/2"));
    // oracle: (1/2)(d_xi1(xi1) d_xi2(xi2) - d_xi2(xi1) d_xi1(xi2)) = 1/2
    Poly oracle = (P("xi1").partial(idx(0, 1, 0)) * P("xi2").partial(idx(0, 0, 1)) -
                   P("xi1").partial(idx(0, 0, 1)) * P("xi2").partial(idx(0, 1, 0)))
                      .scaled(Scalar(1, 2));
    CHECK(oracle == P("1/2"));
    CHECK(d.apply({P("xi1"), P("xi2")}) == oracle);
}

TEST_CASE("circle: mu0 o mu0 vanishes (associativity of the product)") {
    Cochain mu = Cochain::mu0(V, K);
    CHECK(circle(mu, mu).is_zero());
}

TEST_CASE("circle: composition of vector fields is a second-order operator") {
    Cochain lx = Cochain::term(V, K, {idx(1, 0, 0)}, P("1"));
    Cochain ly = Cochain::term(V, K, {idx(0, 1, 0)}, P("1"));
    Cochain comp = circle(lx, ly);
    CHECK(comp.degree() == 0);
    CHECK(comp == Cochain::term(V, K, {idx(1, 1, 0)}, P("1")));
}

TEST_CASE("circle: arity bookkeeping") {
    Rng rng(7);
    Cochain d = testutil::random_cochain(rng, V, K, 1, 2, 1, 3);
    Cochain e = testutil::random_cochain(rng, V, K, 1, 2, 1, 3);
    CHECK(circle(d, e).degree() == 2);
    CHECK(circle(d, e).arity() == 3);
}

TEST_CASE("gerstenhaber: [D,D] = -2 D o D in odd degree; abelian C1 gives 0") {
    Cochain c(V, K, 1);
    c.add_term({idx(0, 1, 0), idx(0, 0, 1)}, P("1/2*i"));
    c.add_term({idx(0, 0, 1), idx(0, 1, 0)}, P("-1/2*i"));
    CHECK(gerstenhaber(c, c) == circle(c, c).scaled(Scalar(-2)));
    // the abelian presentation has vanishing KKS bracket, so C1 = 0
    Cochain abelian_c1(V, K, 1);
    CHECK(gerstenhaber(abelian_c1, abelian_c1).is_zero());
}

TEST_CASE("gerstenhaber: Heisenberg C1 self-bracket is closed but nonzero") {
    VarSpec v3{0, 3};
    Cochain c1 = heisenberg_c1(v3, K);
    CHECK(hochschild_d(c1).is_zero()); // biderivation
    Cochain br = gerstenhaber(c1, c1);
    CHECK(!br.is_zero());
    CHECK(hochschild_d(br).is_zero());
    CHECK(alt(br).is_zero()); // Jacobi identity of the KKS bracket
}

TEST_CASE("gerstenhaber: [L_E, C] = -2 C for C = d_xi1 x d_xi1") {
    Cochain le = Cochain::lie_euler(V, K);
    Cochain c = Cochain::term(V, K, {idx(0, 1, 0), idx(0, 1, 0)}, P("1"));
    Cochain br = gerstenhaber(le, c);
    CHECK(br == c.scaled(Scalar(-2)));
    // brute-force cross-check on monomials up to degree 3
    for (const char* f : {"xi1", "xi1^2", "x1*xi1", "xi1*xi2"}) {
        for (const char* g : {"xi1", "xi1^3"}) {
            Poly lhs = br.apply({P(f), P(g)});
            Poly rhs = c.apply({P(f), P(g)}).scaled(Scalar(-2));
            CHECK(lhs == rhs);
        }
    }
    CHECK(*c.homogeneity_degree() == -2);
}

TEST_CASE("gerstenhaber: graded antisymmetry on random cochains") {
    Rng rng(11);
    for (int iter = 0; iter < 8; ++iter) {
        int dd = rng.next(3), de = rng.next(3);
        Cochain d = testutil::random_cochain(rng, V, K, dd, 2, 1, 2);
        Cochain e = testutil::random_cochain(rng, V, K, de, 2, 1, 2);
        Cochain lhs = gerstenhaber(d, e);
        Cochain rhs = gerstenhaber(e, d).scaled((dd * de) % 2 ? Scalar(1) : Scalar(-1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hochschild differential: derivations are closed") {
    Cochain x = Cochain::term(V, K, {idx(1, 0, 0)}, P("x1*xi1"));
    CHECK(hochschild_d(x).is_zero());
}

TEST_CASE("hochschild differential: Leibniz defect spot value") {
    Cochain s1 = Cochain::term(V, K, {idx(0, 1, 1)}, P("1"));
    Cochain ds1 = hochschild_d(s1);
    CHECK(ds1.apply({P("xi1"), P("xi2")}) == P("-1"));
}

TEST_CASE("hochschild differential: d composed with d vanishes") {
    Rng rng(13);
    for (int deg = 0; deg <= 2; ++deg) {
        for (int iter = 0; iter < 5; ++iter) {
            Cochain d = testutil::random_cochain(rng, V, K, deg, 3, 2, 3);
            CHECK(hochschild_d(hochschild_d(d)).is_zero());
        }
    }
}

TEST_CASE("hochschild differential agrees with [mu0, .]") {
    Rng rng(17);
    for (int deg = 0; deg <= 2; ++deg) {
        for (int iter = 0; iter < 5; ++iter) {
            Cochain d = testutil::random_cochain(rng, V, K, deg, 2, 2, 3);
            CHECK(hochschild_d(d) == hochschild_d_via_bracket(d));
        }
    }
    // degree -1: the differential vanishes on functions
    Cochain f = Cochain::from_poly(P("x1*xi1^2"));
    CHECK(hochschild_d(f).is_zero());
    CHECK(hochschild_d_via_bracket(f).is_zero());
}

TEST_CASE("graded Jacobi identity") {
    Rng rng(19);
    for (int iter = 0; iter < 6; ++iter) {
        int a = rng.next(2), b = rng.next(2), c = rng.next(2);
        if (a + b + c > 3) continue;
        Cochain D = testutil::random_cochain(rng, V, K, a, 2, 1, 2);
        Cochain E = testutil::random_cochain(rng, V, K, b, 2, 1, 2);
        Cochain F = testutil::random_cochain(rng, V, K, c, 2, 1, 2);
        // Leibniz form: [D,[E,F]] = [[D,E],F] + (-1)^{|D||E|}[E,[D,F]]
        Cochain lhs = gerstenhaber(D, gerstenhaber(E, F));
        Cochain rhs = gerstenhaber(gerstenhaber(D, E), F);
        Cochain second = gerstenhaber(E, gerstenhaber(D, F));
        rhs += (a * b) % 2 ? -second : second;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("alt kills symmetric operators, computes antisymmetric parts") {
    Cochain sym(V, K, 1);
    sym.add_term({idx(0, 1, 0), idx(0, 0, 1)}, P("1"));
    sym.add_term({idx(0, 0, 1), idx(0, 1, 0)}, P("1"));
    CHECK(alt(sym).is_zero());

    VarSpec v3{0, 3};
    Cochain c1 = heisenberg_c1(v3, K);
    auto [plus, minus] = sym_parts(c1);
    CHECK(plus.is_zero()); // C1 is antisymmetric, so C1+ = 0
    CHECK(minus == c1.scaled(Scalar(2)));
    // C1^- = i {.,.}: evaluate on (xi1, xi2): i * (-xi3)
    Poly xi3 = Poly::variable(v3, K, 2);
    CHECK(minus.apply({Poly::variable(v3, K, 0), Poly::variable(v3, K, 1)}) ==
          xi3.scaled(-Scalar::i()));
}

TEST_CASE("Alt after d vanishes on random degree-1 cochains") {
    Rng rng(23);
    for (int iter = 0; iter < 8; ++iter) {
        Cochain d = testutil::random_cochain(rng, V, K, 1, 2, 2, 3);
        CHECK(alt(hochschild_d(d)).is_zero());
    }
}

TEST_CASE("homogeneity degrees") {
    CHECK(*Cochain::mu0(V, K).homogeneity_degree() == 0);
    Cochain d = Cochain::term(V, K, {idx(0, 1, 0), idx(0, 0, 1)}, P("1"));
    CHECK(*d.homogeneity_degree() == -2);
    Cochain e = Cochain::term(V, K, {idx(0, 0, 1), idx(0, 0, 1)}, P("xi1"));
    CHECK(*e.homogeneity_degree() == -1);
    Cochain mixed = d + e;
    CHECK(!mixed.homogeneity_degree().has_value());
    CHECK_THROWS_AS(Cochain(V, K, 1).homogeneity_degree(), PreconditionError);
    // cross-check against the bracket with L_E
    Cochain le = Cochain::lie_euler(V, K);
    CHECK(gerstenhaber(le, d) == d.scaled(Scalar(-2)));
    CHECK(gerstenhaber(le, e) == e.scaled(Scalar(-1)));
}

TEST_CASE("degree additivity of homogeneity under the bracket") {
    Rng rng(29);
    for (int iter = 0; iter < 6; ++iter) {
        Cochain d(V, K, 1), e(V, K, 0);
        d.add_term({idx(0, 1, 0), idx(0, 0, 1)}, Poly::monomial(V, K, idx(0, rng.next(2), 0)));
        e.add_term({idx(0, 0, 1)}, Poly::monomial(V, K, idx(0, 0, rng.next(2))));
        if (d.is_zero() || e.is_zero()) continue;
        auto dd = d.homogeneity_degree(), de = e.homogeneity_degree();
        REQUIRE(dd.has_value());
        REQUIRE(de.has_value());
        Cochain br = gerstenhaber(d, e);
        if (!br.is_zero()) CHECK(*br.homogeneity_degree() == *dd + *de);
    }
}

TEST_CASE("insert expands by the Leibniz rule") {
    // D = d_xi1 x d_xi1 inserted with E = xi1 d_xi2 in slot 0:
    // D(E(f), g) = d_xi1(xi1 d_xi2 f) * d_xi1 g
    //            = (d_xi2 f + xi1 d_xi1 d_xi2 f) * d_xi1 g
    Cochain D = Cochain::term(V, K, {idx(0, 1, 0), idx(0, 1, 0)}, P("1"));
    Cochain E = Cochain::term(V, K, {idx(0, 0, 1)}, P("xi1"));
    Cochain ins = D.insert(0, E);
    Cochain expect(V, K, 1);
    expect.add_term({idx(0, 0, 1), idx(0, 1, 0)}, P("1"));
    expect.add_term({idx(0, 1, 1), idx(0, 1, 0)}, P("xi1"));
    CHECK(ins == expect);
}
