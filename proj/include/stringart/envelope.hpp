#pragma once

#include <string>
#include <vector>

#include "stringart/elimination.hpp"
#include "stringart/errors.hpp"
#include "stringart/family.hpp"
#include "stringart/polynomial.hpp"

namespace stringart {

// A normalized plane curve P(x, y) = 0: primitive part, common monomial
// factors removed, canonically-first coefficient positive.
struct ImplicitCurve {
    Polynomial P;

    explicit ImplicitCurve(const Polynomial& poly) : P(normalize(poly)) {}

    static Polynomial normalize(const Polynomial& poly) {
        if (poly.is_zero()) throw ZeroPolynomial("implicit curve from the zero polynomial");
        for (const auto& v : variables(poly))
            if (v != "x" && v != "y") throw Error("implicit curve involves variable " + v);
        return primitive_part(strip_monomial_factors(poly));
    }
};

struct EnvelopeResult {
    ImplicitCurve curve;
    Polynomial raw;                          // eliminant before pruning
    std::vector<std::string> pruning_notes;  // human-readable record of removed factors
};

// Exact contact point of the envelope with the member at t0, from the 2x2
// linear system F = 0, dF/dt = 0.
inline Point contact_point(const LineFamily& fam, const Rational& t0) {
    const LineCoeffs l = line_at(fam, t0);
    const Polynomial dF = derivative(fam.F, fam.parameter);
    const Polynomial at = substitute(dF, {{fam.parameter, Polynomial(t0)}});
    const auto da = coefficient_in(at, "x", 1).constant_value();
    const auto db = coefficient_in(at, "y", 1).constant_value();
    const auto dc = coefficient_in(coefficient_in(at, "x", 0), "y", 0).constant_value();
    if (!da || !db || !dc) throw Error("derivative member is not a line with rational coefficients");
    const Rational det = l.a * *db - *da * l.b;
    if (det == 0) throw NoUniqueContact("contact system singular at " + to_string(t0));
    // Solve a*x + b*y = -c, da*x + db*y = -dc by Cramer's rule.
    const Rational xr = (-l.c * *db + *dc * l.b) / det;
    const Rational yr = (-l.a * *dc + *da * l.c) / det;
    return {xr, yr};
}

inline std::vector<Point> sample_envelope_points(const LineFamily& fam, const std::vector<Rational>& params) {
    std::vector<Point> pts;
    pts.reserve(params.size());
    for (const Rational& t : params) pts.push_back(contact_point(fam, t));
    return pts;
}

namespace detail {

struct Pruned {
    Polynomial curve;
    std::vector<std::string> notes;
};

// Normalization pipeline shared by both envelope engines: rational content,
// common monomial factors, then the square-free part in the main variable.
inline Pruned prune_eliminant(const Polynomial& raw) {
    Pruned out;
    Polynomial p = primitive_part(raw);
    if (p != raw) out.notes.push_back("removed rational content " + to_string(rational_content(raw)));
    const Monomial mono = common_monomial(p);
    if (!mono.is_constant()) {
        std::string desc;
        for (const auto& [v, e] : mono.exponents()) {
            if (!desc.empty()) desc += "*";
            desc += v;
            if (e >= 2) desc += "^" + std::to_string(e);
        }
        p = strip_monomial_factors(p);
        out.notes.push_back("removed monomial factor " + desc);
    }
    const std::string main_var = p.degree_in("x") > 0 ? "x" : "y";
    const Polynomial sf = square_free(p, main_var);
    if (sf != p) {
        out.notes.push_back("removed repeated factors (square-free part in " + main_var + ")");
        p = sf;
    }
    out.curve = primitive_part(p);
    return out;
}

}  // namespace detail

// Envelope of a line family as the discriminant set: eliminate the parameter
// from F = 0 and dF/dt = 0 by a resultant, then prune extraneous factors.
// Contact points sampled from the tangency system double-check the pruning;
// if any fails to lie on the pruned curve, the normalized raw eliminant is
// returned instead with a PruningIncomplete note.
inline EnvelopeResult envelope_unconstrained(const LineFamily& fam) {
    const std::string& t = fam.parameter;
    if (fam.F.degree_in(t) < 2) throw LinearInParameter();
    const Polynomial raw = sylvester_resultant(fam.F, derivative(fam.F, t), t);
    if (raw.is_zero()) throw Error("eliminant vanished identically; family is degenerate");
    detail::Pruned pruned = detail::prune_eliminant(raw);

    std::vector<std::string> notes = pruned.notes;
    Polynomial curve = pruned.curve;
    bool consistent = true;
    for (int i = -3; i <= 3 && consistent; ++i) {
        Rational t0(i);
        if (fam.range) {
            if (t0 < fam.range->first || t0 > fam.range->second) continue;
        }
        try {
            const Point pt = contact_point(fam, t0);
            if (evaluate(curve, {{"x", pt.first}, {"y", pt.second}}) != 0) consistent = false;
        } catch (const Error&) {
            // Isolated singular parameters carry no information here.
        }
    }
    if (!consistent) {
        notes.push_back("PruningIncomplete: sampled contact points missed the pruned curve; "
                        "reporting the normalized raw eliminant");
        curve = primitive_part(raw);
    }
    return EnvelopeResult{ImplicitCurve(curve), raw, notes};
}

// Envelope of a constrained family: tangency is the vanishing of the
// Jacobian J = F_p G_q - F_q G_p; q is eliminated from (F, G) and (F, J),
// then p from the two eliminants.
inline EnvelopeResult envelope_constrained(const ConstrainedFamily& fam) {
    const std::string& p = fam.p;
    const std::string& q = fam.q;
    if (fam.G.degree_in(p) < 1 || fam.G.degree_in(q) < 1) throw ConstraintDegenerate();
    const Polynomial J = derivative(fam.F, p) * derivative(fam.G, q) - derivative(fam.F, q) * derivative(fam.G, p);
    if (J.is_zero()) throw ConstraintDegenerate("Jacobian condition vanishes identically");
    const Polynomial R1 = sylvester_resultant(fam.F, fam.G, q);
    const Polynomial R2 = sylvester_resultant(fam.F, J, q);
    const Polynomial raw = sylvester_resultant(R1, R2, p);
    if (raw.is_zero()) throw Error("eliminant vanished identically; constraint is degenerate");
    detail::Pruned pruned = detail::prune_eliminant(raw);
    return EnvelopeResult{ImplicitCurve(pruned.curve), raw, pruned.notes};
}

// Exact contact point for a constrained family at a parameter pair on the
// constraint, from F = 0, J = 0 (linear in x, y).
inline Point contact_point(const ConstrainedFamily& fam, const Rational& p0, const Rational& q0) {
    const Polynomial J = derivative(fam.F, fam.p) * derivative(fam.G, fam.q) -
                         derivative(fam.F, fam.q) * derivative(fam.G, fam.p);
    const std::map<std::string, Polynomial> sub{{fam.p, Polynomial(p0)}, {fam.q, Polynomial(q0)}};
    const Polynomial Fat = substitute(fam.F, sub);
    const Polynomial Jat = substitute(J, sub);
    auto coeffs = [](const Polynomial& L) {
        const auto a = coefficient_in(L, "x", 1).constant_value();
        const auto b = coefficient_in(L, "y", 1).constant_value();
        const auto c = coefficient_in(coefficient_in(L, "x", 0), "y", 0).constant_value();
        if (!a || !b || !c) throw Error("constrained member is not a line with rational coefficients");
        return LineCoeffs{*a, *b, *c};
    };
    const LineCoeffs f = coeffs(Fat), j = coeffs(Jat);
    const Rational det = f.a * j.b - j.a * f.b;
    if (det == 0)
        throw NoUniqueContact("contact system singular at (" + to_string(p0) + ", " + to_string(q0) + ")");
    const Rational xr = (-f.c * j.b + j.c * f.b) / det;
    const Rational yr = (-f.a * j.c + j.a * f.c) / det;
    return {xr, yr};
}

}  // namespace stringart
