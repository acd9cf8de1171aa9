#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "stringart/errors.hpp"
#include "stringart/polynomial.hpp"
#include "stringart/rational.hpp"

namespace stringart {

// Exact multivariate division. Throws if d does not divide p; every internal
// use (Bareiss steps, content removal, square-free reduction) divides exactly
// by construction.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw ZeroPolynomial("exact_divide: division by the zero polynomial");
    Polynomial q, r = p;
    const auto& dlead = *d.terms().begin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().begin();
        if (!dlead.first.divides(rlead.first))
            throw Error("exact_divide: not an exact multiple");
        const Polynomial t = Polynomial::term(rlead.second / dlead.second, rlead.first.divided_by(dlead.first));
        q += t;
        r -= t * d;
    }
    return q;
}

inline bool divides_exactly(const Polynomial& d, const Polynomial& p) {
    if (d.is_zero()) return p.is_zero();
    Polynomial r = p;
    const auto& dlead = *d.terms().begin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().begin();
        if (!dlead.first.divides(rlead.first)) return false;
        r -= Polynomial::term(rlead.second / dlead.second, rlead.first.divided_by(dlead.first)) * d;
    }
    return true;
}

// Determinant of the Sylvester matrix of p and q with respect to v. The
// sign convention is the one this layout induces: the first deg_v(q) rows
// hold the coefficients of p (leading first), the next deg_v(p) rows those
// of q. Entries are polynomials in the remaining variables; elimination is
// fraction-free (Bareiss), so every intermediate division is exact.
inline Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, const std::string& v) {
    const int m = p.degree_in(v);
    const int n = q.degree_in(v);
    if (m <= 0 && n <= 0) {
        if (p.is_zero() || q.is_zero()) return Polynomial{};
        throw BothConstantInV();
    }
    if (p.is_zero() || q.is_zero()) return Polynomial{};
    // Degree-zero side: Res(a, q) = a^deg(q).
    if (m == 0) return pow(p, n);
    if (n == 0) return pow(q, m);

    const std::vector<Polynomial> pc = coefficients_in(p, v);
    const std::vector<Polynomial> qc = coefficients_in(q, v);
    const int size = m + n;
    std::vector<std::vector<Polynomial>> M(static_cast<std::size_t>(size),
                                           std::vector<Polynomial>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = pc[static_cast<std::size_t>(m - j)];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = qc[static_cast<std::size_t>(n - j)];

    int sign = 1;
    Polynomial prev(1);
    for (int k = 0; k + 1 < size; ++k) {
        if (M[k][k].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < size; ++r)
                if (!M[r][k].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Polynomial{};
            std::swap(M[k], M[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j)
                M[i][j] = exact_divide(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = Polynomial{};
        }
        prev = M[k][k];
    }
    Polynomial det = M[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
    return sign < 0 ? -det : det;
}

// Rational content: gcd of coefficient numerators over lcm of denominators,
// signed so that dividing by it makes the canonically-first coefficient
// positive.
inline Rational rational_content(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("content of the zero polynomial");
    BigInt g = 0, l = 1;
    for (const auto& [m, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(num(c)));
        l = l / boost::multiprecision::gcd(l, den(c)) * den(c);
    }
    Rational content(g, l);
    if (p.terms().begin()->second < 0) content = -content;
    return content;
}

// Primitive part over Q: rational content divided out, leading (first in
// canonical order) coefficient positive. Common monomial factors are kept;
// removing those is strip_monomial_factors below.
inline Polynomial primitive_part(const Polynomial& p) {
    const Rational c = rational_content(p);
    Polynomial r;
    for (const auto& [m, coef] : p.terms()) r.add_term(m, coef / c);
    return r;
}

// Largest monomial dividing every term.
inline Monomial common_monomial(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("common monomial of the zero polynomial");
    Monomial g;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            g = m;
            first = false;
            continue;
        }
        Monomial next;
        for (const auto& [v, e] : g.exponents()) {
            const int o = m.exponent(v);
            if (o > 0) next = next * Monomial::of(v, std::min(e, o));
        }
        g = next;
        if (g.is_constant()) break;
    }
    return g;
}

inline Polynomial strip_monomial_factors(const Polynomial& p) {
    const Monomial g = common_monomial(p);
    if (g.is_constant()) return p;
    Polynomial r;
    for (const auto& [m, c] : p.terms()) r.add_term(m.divided_by(g), c);
    return r;
}

// Pseudo-remainder: lc_v(q)^(deg p - deg q + 1) * p reduced modulo q, a
// polynomial identity over the coefficient ring (no fractions introduced).
inline Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& q, const std::string& v) {
    const int dq = q.degree_in(v);
    const Polynomial lq = coefficient_in(q, v, dq);
    Polynomial r = p;
    int e = p.degree_in(v) - dq + 1;
    while (!r.is_zero() && r.degree_in(v) >= dq) {
        const int dr = r.degree_in(v);
        const Polynomial lr = coefficient_in(r, v, dr);
        r = lq * r - lr * Polynomial::term(1, Monomial::of(v, dr - dq)) * q;
        --e;
    }
    for (; e > 0; --e) r = lq * r;
    return r;
}

inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Content of p viewed as univariate in v: gcd of its v-coefficients, a
// polynomial in the remaining variables.
inline Polynomial content_in(const Polynomial& p, const std::string& v) {
    Polynomial g;
    for (const Polynomial& c : coefficients_in(p, v)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (auto k = g.constant_value(); k && *k == 1) break;
    }
    return g;
}

namespace detail {

// Subresultant pseudo-remainder sequence gcd of two polynomials that are
// primitive in v. Returns a gcd that is primitive over Q.
inline Polynomial prs_gcd(Polynomial u, Polynomial w, const std::string& v) {
    if (u.degree_in(v) < w.degree_in(v)) std::swap(u, w);
    Polynomial g(1), h(1);
    for (;;) {
        const int delta = u.degree_in(v) - w.degree_in(v);
        const Polynomial r = pseudo_remainder(u, w, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return Polynomial(1);
        u = w;
        w = exact_divide(r, g * pow(h, delta));
        g = coefficient_in(u, v, u.degree_in(v));
        if (delta > 0) h = exact_divide(pow(g, delta), pow(h, delta - 1));
    }
    return primitive_part(exact_divide(w, content_in(w, v)));
}

}  // namespace detail

// Multivariate gcd over Q, normalized primitive (content 1, leading sign
// positive). Any nonzero rational is a unit, so gcd with a nonzero constant
// is 1; gcd(p, 0) = primitive_part(p).
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Polynomial{};
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.constant_value() || b.constant_value()) return Polynomial(1);
    const std::string v = *variables(a * b).begin();
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
        // One side is constant in the chosen main variable; the gcd divides
        // that side's coefficients, so reduce to contents.
        return poly_gcd(content_in(a, v), content_in(b, v));
    }
    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    const Polynomial prim = detail::prs_gcd(exact_divide(a, ca), exact_divide(b, cb), v);
    return primitive_part(poly_gcd(ca, cb) * prim);
}

// Univariate-route gcd named for its contract: p and q are treated as
// univariate in v with polynomial coefficients.
inline Polynomial gcd_univariate(const Polynomial& p, const Polynomial& q, const std::string& v) {
    (void)v;
    return poly_gcd(p, q);
}

// Square-free part with respect to v: p / gcd(p, dp/dv).
inline Polynomial square_free(const Polynomial& p, const std::string& v) {
    if (p.is_zero()) throw ZeroPolynomial("square_free of the zero polynomial");
    const Polynomial dp = derivative(p, v);
    if (dp.is_zero()) return p;
    return exact_divide(p, poly_gcd(p, dp));
}

// All rational roots of a univariate polynomial with rational coefficients,
// by the rational-root theorem over the cleared-denominator form. Intended
// for the small-coefficient polynomials arising as excluded parameter sets.
inline std::vector<Rational> rational_roots(const Polynomial& p, const std::string& v) {
    std::vector<Rational> roots;
    if (p.is_zero()) return roots;
    for (const auto& [m, c] : p.terms())
        for (const auto& [var, e] : m.exponents())
            if (var != v) throw Error("rational_roots: polynomial is not univariate in " + v);
    if (p.constant_value()) return roots;

    const Polynomial q = primitive_part(p);  // integer coprime coefficients
    std::vector<BigInt> coef(static_cast<std::size_t>(q.degree_in(v)) + 1);
    for (const auto& [m, c] : q.terms()) coef[static_cast<std::size_t>(m.exponent(v))] = num(c);

    std::size_t low = 0;
    while (coef[low] == 0) ++low;
    if (low > 0) roots.push_back(0);

    const BigInt a0 = boost::multiprecision::abs(coef[low]);
    const BigInt an = boost::multiprecision::abs(coef.back());
    auto divisors = [](const BigInt& n) {
        std::vector<BigInt> ds;
        for (BigInt i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                ds.push_back(i);
                if (i * i != n) ds.push_back(n / i);
            }
        return ds;
    };
    auto value_at = [&](const Rational& r) {
        Rational acc = 0;
        for (std::size_t i = coef.size(); i-- > low;) acc = acc * r + Rational(coef[i]);
        return acc;
    };
    for (const BigInt& pnum : divisors(a0))
        for (const BigInt& pden : divisors(an)) {
            if (boost::multiprecision::gcd(pnum, pden) != 1) continue;
            const Rational cand(pnum, pden);
            if (value_at(cand) == 0) roots.push_back(cand);
            if (value_at(-cand) == 0) roots.push_back(-cand);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace stringart
