#include "chorded/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace chorded {

namespace {

using Poly = std::vector<BigRational>;  // ascending coefficients

Poly to_rational(const CharPoly& p) {
    Poly q(p.coeffs.size());
    for (size_t i = 0; i < p.coeffs.size(); ++i) q[i] = BigRational(p.coeffs[i]);
    return q;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    return d;
}

// Remainder of polynomial division a / b (b nonzero).
Poly remainder(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

// Positive rescale to a primitive integer polynomial (sign-preserving);
// keeps Sturm chain coefficients from blowing up.
void normalize(Poly& p) {
    if (p.empty()) return;
    BigInt lcm = 1, gcd_num = 0;
    for (const auto& c : p) {
        lcm = boost::multiprecision::lcm(lcm, denominator(c));
    }
    for (const auto& c : p) {
        BigInt num = numerator(c) * (lcm / denominator(c));
        gcd_num = boost::multiprecision::gcd(gcd_num, num);
    }
    if (gcd_num == 0) return;
    for (auto& c : p) c = c * BigRational(lcm, gcd_num);
}

Poly gcd_poly(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        normalize(r);
        a = std::move(b);
        b = std::move(r);
    }
    normalize(a);
    return a;
}

Poly divide_exact(Poly a, const Poly& b) {
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        BigRational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return q;
}

Poly square_free(Poly p) {
    trim(p);
    if (p.size() <= 2) return p;
    Poly g = gcd_poly(p, derivative(p));
    if (g.size() <= 1) return p;
    return divide_exact(p, g);
}

int sign_at(const Poly& p, const BigRational& x) {
    BigRational v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

struct SturmChain {
    std::vector<Poly> seq;

    explicit SturmChain(const Poly& p) {
        Poly a = p;
        trim(a);
        if (a.empty()) throw std::invalid_argument("sturm: zero polynomial");
        seq.push_back(a);
        Poly b = derivative(a);
        normalize(b);
        while (!b.empty()) {
            Poly r = remainder(seq.back(), b);
            for (auto& c : r) c = -c;
            normalize(r);
            seq.push_back(std::move(b));
            b = std::move(r);
        }
    }

    int variations_at(const BigRational& x) const {
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sign_at(p, x);
            if (s != 0) {
                if (prev != 0 && s != prev) ++var;
                prev = s;
            }
        }
        return var;
    }

    int variations_at_infinity() const {
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            int s = p.back() > 0 ? 1 : -1;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    int roots_above(const BigRational& a) const {
        return variations_at(a) - variations_at_infinity();
    }

    int roots_in(const BigRational& a, const BigRational& b) const {  // (a, b]
        return variations_at(a) - variations_at(b);
    }
};

}  // namespace

CharPoly char_poly(const Graph& g) {
    int n = g.order();
    if (n > 20) throw std::invalid_argument("char_poly: order limit is 20");
    using Mat = std::vector<std::vector<BigInt>>;
    Mat a(n, std::vector<BigInt>(n, 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;

    CharPoly p;
    p.coeffs.assign(n + 1, BigInt(0));
    p.coeffs[n] = 1;
    Mat m(n, std::vector<BigInt>(n, 0));  // M_0 = 0
    BigInt c = 1;
    for (int k = 1; k <= n; ++k) {
        // M_k = A (M_{k-1} + c I); c_{n-k} = -tr(M_k) / k
        for (int i = 0; i < n; ++i) m[i][i] += c;
        Mat next(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += m[l][j];
            }
        m = std::move(next);
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += m[i][i];
        c = -tr / k;
        p.coeffs[n - k] = c;
    }
    return p;
}

double poly_eval(const CharPoly& p, double x) {
    double v = 0.0;
    for (size_t i = p.coeffs.size(); i-- > 0;)
        v = v * x + p.coeffs[i].convert_to<double>();
    return v;
}

int roots_above(const CharPoly& p, const BigRational& a) {
    SturmChain chain(square_free(to_rational(p)));
    return chain.roots_above(a);
}

bool rho_equals_exact(const Graph& g, const BigRational& x) {
    if (g.order() == 0) return x == 0;
    Poly p = square_free(to_rational(char_poly(g)));
    return sign_at(p, x) == 0 && SturmChain(p).roots_above(x) == 0;
}

int compare_rho_exact(const Graph& ga, const Graph& gb, double hint_a, double hint_b) {
    if (hint_a - hint_b > 1e-5) return 1;
    if (hint_b - hint_a > 1e-5) return -1;
    Poly pa = square_free(to_rational(char_poly(ga)));
    Poly pb = square_free(to_rational(char_poly(gb)));
    SturmChain ca(pa), cb(pb);
    Poly g = gcd_poly(pa, pb);

    double mid = (hint_a + hint_b) / 2.0;
    BigRational lo(static_cast<long long>((mid - 0.01) * 1000000), 1000000);
    BigRational hi(static_cast<long long>((mid + 0.01) * 1000000) + 1, 1000000);
    // Widen until both largest roots are bracketed.
    long long span = 1;
    while (ca.roots_above(hi) > 0 || cb.roots_above(hi) > 0) hi += span++;
    while (ca.roots_in(lo, hi) == 0 || cb.roots_in(lo, hi) == 0) lo -= span++;

    BigRational la = lo, ha = hi, lb = lo, hb = hi;
    auto refine = [](const SturmChain& c, BigRational& l, BigRational& h) {
        BigRational m = (l + h) / 2;
        if (c.roots_above(m) > 0) l = m;  // largest root above m
        else h = m;
    };
    for (int it = 0; it < 4000; ++it) {
        if (ha <= lb) return -1;
        if (hb <= la) return 1;
        if (g.size() > 1) {
            BigRational il = std::max(la, lb), ih = std::min(ha, hb);
            if (il < ih && ca.roots_in(la, ha) == 1 && cb.roots_in(lb, hb) == 1 &&
                SturmChain(g).roots_in(il, ih) >= 1)
                return 0;
        }
        refine(ca, la, ha);
        refine(cb, lb, hb);
    }
    throw std::runtime_error("compare_rho_exact: failed to separate spectral radii");
}

}  // namespace chorded
