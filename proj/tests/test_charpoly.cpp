#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chorded/charpoly.hpp"
#include "chorded/families.hpp"
#include "chorded/graph.hpp"
#include "chorded/spectral.hpp"

using namespace chorded;

TEST_CASE("small characteristic polynomials") {
    // K2: x^2 - 1.
    auto p = char_poly(complete(2));
    REQUIRE(p.degree() == 2);
    CHECK(p.coeffs[2] == 1);
    CHECK(p.coeffs[1] == 0);
    CHECK(p.coeffs[0] == -1);

    // K3: x^3 - 3x - 2.
    p = char_poly(complete(3));
    CHECK(p.coeffs[3] == 1);
    CHECK(p.coeffs[2] == 0);
    CHECK(p.coeffs[1] == -3);
    CHECK(p.coeffs[0] == -2);

    // K_{1,9}: x^10 - 9x^8.
    p = char_poly(star(9));
    REQUIRE(p.degree() == 10);
    CHECK(p.coeffs[10] == 1);
    CHECK(p.coeffs[8] == -9);
    for (int i : {0, 1, 2, 3, 4, 5, 6, 7, 9}) CHECK(p.coeffs[i] == 0);
}

TEST_CASE("coefficient of x^(n-2) is minus the edge count") {
    for (const Graph& g : {fixture("H1"), fixture("F2"), sk4(), complete(5),
                           complete_bipartite(3, 4), book_star(2, 2)}) {
        auto p = char_poly(g);
        CHECK(p.coeffs[g.order() - 1] == 0);  // trace is zero
        CHECK(p.coeffs[g.order() - 2] == -BigInt(g.size()));
    }
}

TEST_CASE("char poly vanishes at the computed radius") {
    for (const Graph& g : {fixture("H3"), book_star(2, 0), cycle(6), star(5)}) {
        auto p = char_poly(g);
        double rho = spectral_radius(g).rho;
        double scale = std::pow(std::max(rho, 1.0), p.degree());
        CHECK(std::abs(poly_eval(p, rho)) / scale <= 1e-6);
    }
}

TEST_CASE("root counting above a rational bound") {
    // K3 has eigenvalues {2, -1, -1}.
    auto p = char_poly(complete(3));
    CHECK(roots_above(p, BigRational(0)) == 1);
    CHECK(roots_above(p, BigRational(-2)) == 2);  // distinct roots only
    CHECK(roots_above(p, BigRational(2)) == 0);
    // C4 eigenvalues {2, 0, 0, -2}: distinct roots above -3 are {-2, 0, 2}.
    CHECK(roots_above(char_poly(cycle(4)), BigRational(-3)) == 3);
}

TEST_CASE("exact equality of the radius with a rational") {
    CHECK(rho_equals_exact(star(9), BigRational(3)));
    CHECK_FALSE(rho_equals_exact(star(8), BigRational(3)));
    CHECK(rho_equals_exact(complete(4), BigRational(3)));
    CHECK(rho_equals_exact(cycle(10), BigRational(2)));
    CHECK_FALSE(rho_equals_exact(path(10), BigRational(2)));
}

TEST_CASE("exact radius comparison") {
    // The four 9-edge graphs tied exactly at rho = 3.
    Graph a = book_star(3, 0);
    Graph b = book_star(2, 3);
    Graph c = book_star(1, 6);
    Graph d = star(9);
    double ra = spectral_radius(a).rho;
    for (const Graph* g : {&b, &c, &d}) {
        double rg = spectral_radius(*g).rho;
        CHECK(compare_rho_exact(a, *g, ra, rg) == 0);
    }
    // Strict comparisons, including a pair closer than float noise would
    // comfortably separate: rho(K_{1,9}) = 3 vs rho(H1) ~ 2.8156.
    Graph h1 = fixture("H1");
    double rh = spectral_radius(h1).rho;
    CHECK(compare_rho_exact(d, h1, 3.0, rh) == 1);
    CHECK(compare_rho_exact(h1, d, rh, 3.0) == -1);
    // Equal radius from shared dominant component.
    Graph e = disjoint_union(complete(4), path(2));
    Graph f = disjoint_union(complete(4), path(3));
    CHECK(compare_rho_exact(e, f, 3.0, 3.0) == 0);
    // Irrational tie: K_{1,10} vs K_{2,5}, both sqrt(10).
    double s10 = std::sqrt(10.0);
    CHECK(compare_rho_exact(star(10), complete_bipartite(2, 5), s10, s10) == 0);
    CHECK(compare_rho_exact(star(10), star(9), s10, 3.0) == 1);
}
