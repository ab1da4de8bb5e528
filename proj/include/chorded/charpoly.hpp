#ifndef CHORDED_CHARPOLY_HPP
#define CHORDED_CHARPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact integer characteristic polynomial of A(G), degree n = order.
// coeffs[i] is the coefficient of x^i; coeffs[n] = 1, coeffs[n-1] = 0,
// coeffs[n-2] = -m.
struct CharPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Faddeev-LeVerrier over exact integers. Limited to n <= 20.
CharPoly char_poly(const Graph& g);

double poly_eval(const CharPoly& p, double x);

// Number of distinct real roots of p in the half-line (a, +inf),
// by Sturm chain sign variations.
int roots_above(const CharPoly& p, const BigRational& a);

// Exact three-way comparison of the largest real roots (spectral radii)
// of two graphs' characteristic polynomials: -1, 0 or +1. `hint_a` and
// `hint_b` are floating approximations used to seed interval refinement.
int compare_rho_exact(const Graph& a, const Graph& b, double hint_a, double hint_b);

// True iff x is the largest real root of char_poly(g), certified exactly:
// g's polynomial has exactly one root in (x - eps, +inf) and it equals x,
// where x is given as an exact rational. Used for threshold certificates
// at rational thresholds (e.g. rho = 3).
bool rho_equals_exact(const Graph& g, const BigRational& x);

}  // namespace chorded

#endif
