#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "stringart/conic.hpp"
#include "stringart/elimination.hpp"
#include "stringart/envelope.hpp"
#include "stringart/errors.hpp"
#include "stringart/family.hpp"
#include "stringart/parse.hpp"
#include "stringart/polynomial.hpp"

namespace stringart {

// The generic string written as y = a*x + b with a, b polynomials in the
// family parameter.
struct TangentLine {
    std::string parameter;
    Polynomial a, b;
};

// Quotient of polynomials; equality is decided by cross-multiplication, so
// no normal form is ever needed.
struct RationalFunction {
    Polynomial num, den;

    RationalFunction(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw ZeroPolynomial("rational function with zero denominator");
    }
    RationalFunction(const Polynomial& n) : num(n), den(Polynomial(1)) {}

    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num * o.den - o.num * den, den * o.den);
    }
    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num * o.den + o.num * den, den * o.den);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num * o.num, den * o.den);
    }
    bool operator==(const RationalFunction& o) const { return (num * o.den - o.num * den).is_zero(); }
};

enum class ProofMethod { Discriminant, CalculusIdentity, GenericTangency, Reflection };

inline const char* proof_method_name(ProofMethod m) {
    switch (m) {
        case ProofMethod::Discriminant: return "discriminant";
        case ProofMethod::CalculusIdentity: return "calculus";
        case ProofMethod::GenericTangency: return "tangency";
        case ProofMethod::Reflection: return "reflection";
    }
    return "unknown";
}

// Outcome of one symbolic argument. success holds exactly when the witness
// polynomial is identically zero; otherwise a parameter value where the
// witness does not vanish is reported as counterexample.
struct ProofReport {
    ProofMethod method;
    bool success = false;
    Polynomial witness;
    std::optional<Rational> counterexample;
    std::vector<Rational> excluded;  // isolated degenerate parameter values
    std::vector<std::string> steps;
};

namespace detail {

// A parameter value where the witness is nonzero and no denominator or
// degenerate position interferes.
inline std::optional<Rational> find_counterexample(const Polynomial& witness, const std::string& param,
                                                   const std::vector<Polynomial>& nonvanishing) {
    for (int i = 0; i <= 200; ++i) {
        for (const int cand : {i, -i}) {
            const Rational t0(cand);
            const std::map<std::string, Rational> at{{param, t0}};
            bool ok = evaluate(witness, at) != 0;
            for (const Polynomial& g : nonvanishing)
                if (ok && evaluate(g, at) == 0) ok = false;
            if (ok) return t0;
            if (cand == 0) break;
        }
    }
    return std::nullopt;
}

inline void finish_report(ProofReport& rep, const std::string& param,
                          const std::vector<Polynomial>& nonvanishing) {
    rep.success = rep.witness.is_zero();
    if (rep.success) {
        rep.steps.push_back("witness is the zero polynomial; the statement holds identically");
        return;
    }
    rep.counterexample = find_counterexample(rep.witness, param, nonvanishing);
    if (!rep.counterexample)
        throw PoleCoincidence("nonzero witness " + format_poly(rep.witness) +
                              " but every probed parameter hits a pole");
    rep.steps.push_back("witness " + format_poly(rep.witness) + " is nonzero, e.g. at " + param + " = " +
                        to_string(*rep.counterexample));
}

}  // namespace detail

// The generic string y = a*x + b through C = (e, -e) and C'' = (e-d, e-d):
// solving the incidence system gives a = 1 - 2e/d, b = 2e^2/d - 2e.
inline TangentLine string_slope_intercept(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    const Polynomial e = Polynomial::variable("e");
    const Rational two_over_d = Rational(2) / d;
    return TangentLine{"e", Polynomial(1) - two_over_d * e, two_over_d * e * e - Polynomial(2) * e};
}

// Tangent of y = -x^2/(2d) - d/2 at x = t: a = -t/d, b = t^2/(2d) - d/2.
inline TangentLine tangent_line_at(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    const Polynomial t = Polynomial::variable("t");
    return TangentLine{"t", Rational(-1) / d * t, Rational(1) / (2 * d) * t * t - Polynomial(Rational(d) / 2)};
}

// Intersecting the generic string with the parabola y = -x^2/(2d) - d/2
// yields x^2/(2d) + a*x + (b + d/2) = 0; its discriminant a^2 - 2b/d - 1
// must vanish identically for tangency.
inline ProofReport prove_discriminant(const TangentLine& line, const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    ProofReport rep;
    rep.method = ProofMethod::Discriminant;
    rep.steps.push_back("generic string: y = (" + format_poly(line.a) + ")*x + (" + format_poly(line.b) + ")");
    rep.steps.push_back("intersection with y = -x^2/(2*" + to_string(d) + ") - " + to_string(d) +
                        "/2 gives x^2/(2d) + a*x + (b + d/2) = 0");
    const Rational inv_d = Rational(1) / d;
    rep.witness = line.a * line.a - 2 * inv_d * line.b - Polynomial(1);
    rep.steps.push_back("discriminant a^2 - 2*b/d - 1 = " + format_poly(rep.witness));
    detail::finish_report(rep, line.parameter, {});
    return rep;
}

inline ProofReport prove_discriminant(const Rational& d) {
    return prove_discriminant(string_slope_intercept(d), d);
}

inline ProofReport prove_calculus_identity_with(const RationalFunction& x_c, const RationalFunction& x_cpp,
                                                const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    ProofReport rep;
    rep.method = ProofMethod::CalculusIdentity;
    rep.steps.push_back("x_C = (" + format_poly(x_c.num) + ")/(" + format_poly(x_c.den) + ")");
    rep.steps.push_back("x_C'' = (" + format_poly(x_cpp.num) + ")/(" + format_poly(x_cpp.den) + ")");
    const RationalFunction diff = x_c - RationalFunction(Polynomial(d)) - x_cpp;
    rep.witness = diff.num;
    rep.steps.push_back("cross-multiplied numerator of x_C - " + to_string(d) + " - x_C'' = " +
                        format_poly(rep.witness));
    detail::finish_report(rep, "t", {x_c.den, x_cpp.den});
    return rep;
}

// The tangent at parameter t meets y = -x and y = x at x-coordinates
// x_C = b/(t/d - 1) and x_C'' = b/(t/d + 1); tangency of the string family
// is the identity x_C - d = x_C''.
inline ProofReport prove_calculus_identity(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    const TangentLine tan = tangent_line_at(d);
    const Polynomial t = Polynomial::variable("t");
    const Polynomial den_c = Rational(1) / d * t - Polynomial(1);    // x_C pole: t/d - 1
    const Polynomial den_cpp = Rational(1) / d * t + Polynomial(1);  // x_C'' pole: t/d + 1
    return prove_calculus_identity_with(RationalFunction(tan.b, den_c), RationalFunction(tan.b, den_cpp), d);
}

// Substitute the generic family line into the conic, eliminating whichever
// coordinate has a generically nonzero coefficient; the result is a
// quadratic whose discriminant must vanish identically for every member to
// meet the curve in a double point. Parameter values where the family's
// y-coefficient (the eliminated coordinate's) or the quadratic's leading
// coefficient vanish are reported as excluded degenerate positions.
inline ProofReport prove_generic_tangency(const ImplicitCurve& curve, const LineFamily& fam) {
    const ConicInvariants inv = conic_invariants(curve);  // validates degree 2
    (void)inv;
    const std::string& t = fam.parameter;
    const Polynomial a = coefficient_in(fam.F, "x", 1);
    const Polynomial b = coefficient_in(fam.F, "y", 1);
    const Polynomial c = coefficient_in(coefficient_in(fam.F, "x", 0), "y", 0);

    ProofReport rep;
    rep.method = ProofMethod::GenericTangency;

    // Clear the solved coordinate: with y = -(a*x + c)/b, multiply the conic
    // by b^2 so the substitution stays polynomial.
    const bool eliminate_y = !b.is_zero();
    const Polynomial& lead_coeff = eliminate_y ? b : a;
    const std::string kept = eliminate_y ? "x" : "y";
    const std::string dropped = eliminate_y ? "y" : "x";
    const Polynomial kept_var = Polynomial::variable(kept);
    const Polynomial solved = -(eliminate_y ? a : b) * kept_var - c;  // b*y = solved (resp. a*x)
    rep.steps.push_back("solve the member for " + dropped + ": " + dropped + " = (" + format_poly(solved) +
                        ")/(" + format_poly(lead_coeff) + ")");

    // Homogenize the substitution: replace dropped -> solved, kept -> lead*kept,
    // then each degree-2 monomial carries lead^2; multiply lower-degree terms up.
    Polynomial substituted;
    for (const auto& [m, coefficient] : curve.P.terms()) {
        Polynomial term(coefficient);
        const int deg = m.total_degree();
        for (const auto& [v, e] : m.exponents()) {
            const Polynomial& repl = v == dropped ? solved : (v == kept ? kept_var * lead_coeff : kept_var);
            term *= pow(repl, e);
        }
        term *= pow(lead_coeff, 2 - deg);
        substituted += term;
    }
    const std::vector<Polynomial> cs = coefficients_in(substituted, kept);
    if (cs.size() != 3 || cs[2].is_zero()) throw NotQuadraticAfterSubstitution();
    const Polynomial alpha = cs[2], beta = cs[1], gamma = cs[0];
    rep.steps.push_back("substituted quadratic: (" + format_poly(alpha) + ")*" + kept + "^2 + (" +
                        format_poly(beta) + ")*" + kept + " + (" + format_poly(gamma) + ")");
    rep.witness = beta * beta - 4 * alpha * gamma;
    rep.steps.push_back("discriminant in " + kept + ": " + format_poly(rep.witness));

    for (const Polynomial& degenerate : {lead_coeff, alpha}) {
        if (degenerate.constant_value()) continue;
        for (const Rational& r : rational_roots(degenerate, t)) {
            if (std::find(rep.excluded.begin(), rep.excluded.end(), r) == rep.excluded.end())
                rep.excluded.push_back(r);
        }
    }
    std::sort(rep.excluded.begin(), rep.excluded.end());
    if (!rep.excluded.empty()) {
        std::string list;
        for (const Rational& r : rep.excluded) {
            if (!list.empty()) list += ", ";
            list += to_string(r);
        }
        rep.steps.push_back("excluded degenerate positions: " + t + " in {" + list + "}");
    }
    detail::finish_report(rep, t, {lead_coeff, alpha});
    return rep;
}

// Exact mirror image of a point across the line a*x + b*y + c = 0.
inline Point reflect_point(const Point& pt, const LineCoeffs& line) {
    if (line.a == 0 && line.b == 0) throw DegenerateLine();
    const Rational s = line.a * pt.first + line.b * pt.second + line.c;
    const Rational n2 = line.a * line.a + line.b * line.b;
    return {pt.first - 2 * line.a * s / n2, pt.second - 2 * line.b * s / n2};
}

// Reflect the focus across the generic family member; the statement holds
// when the image lies on the directrix for every parameter value, i.e. the
// substituted directrix equation is the zero rational function.
inline ProofReport prove_reflection_property(const LineFamily& fam, const Point& focus,
                                             const LineCoeffs& directrix) {
    if (directrix.a == 0 && directrix.b == 0) throw DegenerateLine();
    const std::string& t = fam.parameter;
    const Polynomial a = coefficient_in(fam.F, "x", 1);
    const Polynomial b = coefficient_in(fam.F, "y", 1);
    const Polynomial c = coefficient_in(coefficient_in(fam.F, "x", 0), "y", 0);

    ProofReport rep;
    rep.method = ProofMethod::Reflection;

    const Polynomial n2 = a * a + b * b;
    if (n2.is_zero()) throw DegenerateLine("family line identically degenerate");
    const Polynomial s = a * Polynomial(focus.first) + b * Polynomial(focus.second) + c;
    // Mirror image times n2, so both coordinates stay polynomial.
    const Polynomial ix = Polynomial(focus.first) * n2 - 2 * a * s;
    const Polynomial iy = Polynomial(focus.second) * n2 - 2 * b * s;
    rep.steps.push_back("mirror image of (" + to_string(focus.first) + ", " + to_string(focus.second) +
                        ") across the generic string: ((" + format_poly(ix) + ")/(" + format_poly(n2) +
                        "), (" + format_poly(iy) + ")/(" + format_poly(n2) + "))");
    rep.witness = Polynomial(directrix.a) * ix + Polynomial(directrix.b) * iy + Polynomial(directrix.c) * n2;
    rep.steps.push_back("directrix equation at the image (times the denominator): " + format_poly(rep.witness));

    if (!n2.constant_value())
        for (const Rational& r : rational_roots(n2, t)) rep.excluded.push_back(r);
    detail::finish_report(rep, t, {n2});
    return rep;
}

}  // namespace stringart
