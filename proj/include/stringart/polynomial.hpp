#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stringart/errors.hpp"
#include "stringart/rational.hpp"

namespace stringart {

// Global variable order: x < y < every other name, remaining names
// alphabetically. All canonical term ordering derives from this.
inline int variable_rank(std::string_view v) {
    if (v == "x") return 0;
    if (v == "y") return 1;
    return 2;
}

struct VarLess {
    bool operator()(const std::string& a, const std::string& b) const {
        const int ra = variable_rank(a), rb = variable_rank(b);
        if (ra != rb) return ra < rb;
        return a < b;
    }
};

// Power product of variables. The empty map is the constant monomial 1;
// zero exponents are never stored.
class Monomial {
public:
    using ExponentMap = std::map<std::string, int, VarLess>;

    Monomial() = default;

    static Monomial of(const std::string& var, int exp = 1) {
        Monomial m;
        if (exp != 0) m.exps_[var] = exp;
        return m;
    }

    const ExponentMap& exponents() const { return exps_; }
    bool is_constant() const { return exps_.empty(); }

    int exponent(const std::string& var) const {
        auto it = exps_.find(var);
        return it == exps_.end() ? 0 : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [v, e] : o.exps_) {
            int& slot = r.exps_[v];
            slot += e;
            if (slot == 0) r.exps_.erase(v);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (const auto& [v, e] : exps_)
            if (o.exponent(v) < e) return false;
        return true;
    }

    // Requires divides(o) for the divisor (*this divides o is NOT meant:
    // this computes *this / d, caller checks d.divides(*this)).
    Monomial divided_by(const Monomial& d) const {
        Monomial r = *this;
        for (const auto& [v, e] : d.exps_) {
            int& slot = r.exps_[v];
            slot -= e;
            if (slot == 0) r.exps_.erase(v);
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Graded-lexicographic comparison: -1 if *this < o, 0 if equal, 1 if greater.
    int grlex_compare(const Monomial& o) const {
        const int da = total_degree(), db = o.total_degree();
        if (da != db) return da < db ? -1 : 1;
        auto a = exps_.begin(), b = o.exps_.begin();
        const VarLess less;
        while (a != exps_.end() || b != o.exps_.end()) {
            // Next variable in global order present in either monomial.
            bool take_a;
            if (a == exps_.end()) take_a = false;
            else if (b == o.exps_.end()) take_a = true;
            else if (less(a->first, b->first)) take_a = true;
            else if (less(b->first, a->first)) take_a = false;
            else {
                if (a->second != b->second) return a->second > b->second ? 1 : -1;
                ++a;
                ++b;
                continue;
            }
            // A variable missing on one side counts as exponent 0; the side
            // holding the earlier variable with a positive exponent is larger.
            if (take_a) {
                if (a->second != 0) return 1;
                ++a;
            } else {
                if (b->second != 0) return -1;
                ++b;
            }
        }
        return 0;
    }

private:
    ExponentMap exps_;
};

// Term maps iterate leading term first (graded-lex, descending).
struct MonomialDescGrlex {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.grlex_compare(b) > 0; }
};

// Sparse multivariate polynomial over Rational. Canonical form is enforced
// on every operation: no zero coefficients are stored, so equality is map
// equality and the leading term is terms().begin().
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescGrlex>;

    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }

    static Polynomial variable(const std::string& name) { return term(1, Monomial::of(name)); }

    static Polynomial term(const Rational& c, const Monomial& m) {
        Polynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Constant value if the polynomial is constant (zero included), else nullopt.
    std::optional<Rational> constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first.is_constant()) return terms_.begin()->second;
        return std::nullopt;
    }

    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total_degree(); }

    int degree_in(const std::string& var) const {
        if (terms_.empty()) return -1;
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
        return d;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return Polynomial(c) * p; }
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return Polynomial(c) * p; }
    // Exact matches so that an int factor is not ambiguous between the
    // Rational and Polynomial conversions.
    friend Polynomial operator*(int c, const Polynomial& p) { return Polynomial(c) * p; }
    friend Polynomial operator*(const Polynomial& p, int c) { return Polynomial(c) * p; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& p, int e) {
    Polynomial r(1);
    Polynomial base = p;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return r;
}

inline Polynomial derivative(const Polynomial& p, const std::string& var) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(var);
        if (e == 0) continue;
        r.add_term(m.divided_by(Monomial::of(var)), c * e);
    }
    return r;
}

// Substitution homomorphism; unassigned variables pass through.
inline Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment) {
    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term{c};
        Monomial passthrough;
        for (const auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                passthrough = passthrough * Monomial::of(v, e);
            else
                term *= pow(it->second, e);
        }
        result += term * Polynomial::term(1, passthrough);
    }
    return result;
}

// Full evaluation; every variable of p must be assigned.
inline Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point) {
    std::map<std::string, Polynomial> assignment;
    for (const auto& [v, r] : point) assignment.emplace(v, Polynomial(r));
    const Polynomial r = substitute(p, assignment);
    if (auto c = r.constant_value()) return *c;
    throw Error("evaluate: unassigned variables remain");
}

inline std::set<std::string, VarLess> variables(const Polynomial& p) {
    std::set<std::string, VarLess> vs;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.exponents()) vs.insert(v);
    return vs;
}

// Coefficient of var^k, a polynomial in the remaining variables.
inline Polynomial coefficient_in(const Polynomial& p, const std::string& var, int k) {
    Polynomial r;
    for (const auto& [m, c] : p.terms())
        if (m.exponent(var) == k) r.add_term(m.divided_by(Monomial::of(var, k)), c);
    return r;
}

// Ascending coefficient list of p viewed as univariate in var; empty for p = 0.
inline std::vector<Polynomial> coefficients_in(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return {};
    std::vector<Polynomial> cs(static_cast<std::size_t>(p.degree_in(var)) + 1);
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(var);
        cs[static_cast<std::size_t>(e)].add_term(m.divided_by(Monomial::of(var, e)), c);
    }
    return cs;
}

inline Polynomial leading_coefficient_in(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return Polynomial{};
    return coefficient_in(p, var, p.degree_in(var));
}

inline Polynomial from_coefficients(const std::vector<Polynomial>& cs, const std::string& var) {
    Polynomial p;
    for (std::size_t i = 0; i < cs.size(); ++i)
        p += cs[i] * Polynomial::term(1, Monomial::of(var, static_cast<int>(i)));
    return p;
}

// Equality up to a nonzero rational scalar, decided by cross-multiplying
// with the leading coefficients.
inline bool equal_up_to_scalar(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    const Rational cp = p.terms().begin()->second;
    const Rational cq = q.terms().begin()->second;
    return cq * p == cp * q;
}

}  // namespace stringart
