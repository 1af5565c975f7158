#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homstar/linalg.hpp"

using namespace homstar;

TEST_CASE("rref and solve over Q(i)") {
    Matrix A(2, 2);
    A.at(0, 0) = Scalar(1);
    A.at(0, 1) = Scalar::i();
    A.at(1, 0) = Scalar(2);
    A.at(1, 1) = Scalar(0);
    std::vector<Scalar> b{Scalar(1) + Scalar::i(), Scalar(2)};
    auto x = solve_canonical(A, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(1));
    CHECK((*x)[1] == Scalar(1));
}

TEST_CASE("inconsistent system detected") {
    Matrix A(2, 1);
    A.at(0, 0) = Scalar(1);
    A.at(1, 0) = Scalar(1);
    std::vector<Scalar> b{Scalar(1), Scalar(2)};
    CHECK(!solve_canonical(A, b).has_value());
}

TEST_CASE("free variables pinned to zero") {
    Matrix A(1, 3);
    A.at(0, 1) = Scalar(1);
    std::vector<Scalar> b{Scalar(5)};
    auto x = solve_canonical(A, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(0));
    CHECK((*x)[1] == Scalar(5));
    CHECK((*x)[2] == Scalar(0));
}

TEST_CASE("nullspace dimension") {
    Matrix A(1, 3);
    A.at(0, 0) = Scalar(1);
    A.at(0, 1) = Scalar(1);
    A.at(0, 2) = Scalar(1);
    auto ns = nullspace(A);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        Scalar dot;
        for (int c = 0; c < 3; ++c) dot += A.at(0, c) * v[c];
        CHECK(dot.is_zero());
    }
}

TEST_CASE("span tracks rank and membership") {
    Span sp(3);
    CHECK(sp.insert({Scalar(1), Scalar(0), Scalar(1)}));
    CHECK(sp.insert({Scalar(0), Scalar(1), Scalar(0)}));
    CHECK(!sp.insert({Scalar(1), Scalar(1), Scalar(1)}));
    CHECK(sp.rank() == 2);
    CHECK(sp.contains({Scalar(2), Scalar(-1), Scalar(2)}));
    CHECK(!sp.contains({Scalar(0), Scalar(0), Scalar(1)}));
}
