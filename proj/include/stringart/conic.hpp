#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "stringart/envelope.hpp"
#include "stringart/errors.hpp"
#include "stringart/family.hpp"
#include "stringart/polynomial.hpp"
#include "stringart/rational.hpp"

namespace stringart {

// Coefficients of A*x^2 + B*x*y + C*y^2 + D*x + E*y + F together with the
// two classifying invariants: delta = B^2 - 4AC and the determinant of the
// symmetric coefficient matrix
//   [ A    B/2  D/2 ]
//   [ B/2  C    E/2 ]
//   [ D/2  E/2  F   ].
struct ConicInvariants {
    Rational A, B, C, D, E, F;
    Rational delta;
    Rational det3;
};

inline ConicInvariants conic_invariants(const ImplicitCurve& curve) {
    const Polynomial& P = curve.P;
    if (P.total_degree() != 2) throw NotDegreeTwo();
    auto coef = [&](int dx, int dy) {
        Monomial m = Monomial::of("x", dx) * Monomial::of("y", dy);
        return P.coefficient(m);
    };
    ConicInvariants inv;
    inv.A = coef(2, 0);
    inv.B = coef(1, 1);
    inv.C = coef(0, 2);
    inv.D = coef(1, 0);
    inv.E = coef(0, 1);
    inv.F = coef(0, 0);
    inv.delta = inv.B * inv.B - 4 * inv.A * inv.C;
    const Rational b2 = inv.B / 2, d2 = inv.D / 2, e2 = inv.E / 2;
    inv.det3 = inv.A * (inv.C * inv.F - e2 * e2) - b2 * (b2 * inv.F - e2 * d2) + d2 * (b2 * e2 - inv.C * d2);
    return inv;
}

enum class ConicClass {
    Circle,
    Ellipse,
    Parabola,
    Hyperbola,
    TwoIntersectingLines,
    TwoParallelLines,
    CoincidentLines,
    SinglePoint,
    EmptySet,
};

inline const char* conic_class_name(ConicClass c) {
    switch (c) {
        case ConicClass::Circle: return "circle";
        case ConicClass::Ellipse: return "ellipse";
        case ConicClass::Parabola: return "parabola";
        case ConicClass::Hyperbola: return "hyperbola";
        case ConicClass::TwoIntersectingLines: return "two-intersecting-lines";
        case ConicClass::TwoParallelLines: return "two-parallel-lines";
        case ConicClass::CoincidentLines: return "coincident-lines";
        case ConicClass::SinglePoint: return "single-point";
        case ConicClass::EmptySet: return "empty-set";
    }
    return "unknown";
}

// Complete real-affine classification by exact sign analysis of the
// invariants. Non-degenerate (det3 != 0): delta < 0 gives an ellipse (a
// circle when B = 0 and A = C; empty when (A+C)*det3 > 0), delta = 0 a
// parabola, delta > 0 a hyperbola. Degenerate: delta > 0 two intersecting
// lines, delta < 0 a single point, delta = 0 the parallel-line cases split
// by a univariate discriminant.
inline ConicClass classify(const ImplicitCurve& curve) {
    const ConicInvariants inv = conic_invariants(curve);
    if (inv.det3 != 0) {
        if (inv.delta < 0) {
            if ((inv.A + inv.C) * inv.det3 > 0) return ConicClass::EmptySet;
            if (inv.B == 0 && inv.A == inv.C) return ConicClass::Circle;
            return ConicClass::Ellipse;
        }
        if (inv.delta == 0) return ConicClass::Parabola;
        return ConicClass::Hyperbola;
    }
    if (inv.delta > 0) return ConicClass::TwoIntersectingLines;
    if (inv.delta < 0) return ConicClass::SinglePoint;
    // delta = 0 and det3 = 0: the quadratic part is a perfect square, so the
    // curve is s*u^2 + t*u + const in a single linear form u.
    Rational disc;
    if (inv.A != 0) {
        // Multiply by 4A: (2Ax + By)^2 + 2D*(2Ax + By) + 4AF, using
        // 2AE = BD which det3 = 0 forces here.
        disc = 4 * (inv.D * inv.D - 4 * inv.A * inv.F);
    } else if (inv.C != 0) {
        // A = 0 forces B = 0; det3 = 0 then forces D = 0, leaving
        // C*y^2 + E*y + F.
        disc = inv.E * inv.E - 4 * inv.C * inv.F;
    } else {
        // Degree 2 with A = B = C = 0 cannot happen.
        throw NotDegreeTwo("quadratic part vanished during classification");
    }
    if (disc > 0) return ConicClass::TwoParallelLines;
    if (disc == 0) return ConicClass::CoincidentLines;
    return ConicClass::EmptySet;
}

// Numeric description of a parabola. The directrix is n_x*x + n_y*y = offset
// with (n_x, n_y) a unit normal; tolerance is absolute on these normalized
// quantities.
struct ParabolaGeometry {
    double focus_x = 0, focus_y = 0;
    double directrix_nx = 0, directrix_ny = 0, directrix_offset = 0;
    double vertex_x = 0, vertex_y = 0;
    double axis_x = 0, axis_y = 0;
    double tolerance = 1e-9;
};

// Rotate the axes to kill the cross term, complete the square, then rotate
// back. The rotation angle is generally irrational, so this is the one
// numeric operation of the classification layer.
inline ParabolaGeometry parabola_geometry(const ImplicitCurve& curve) {
    if (classify(curve) != ConicClass::Parabola) throw NotParabola();
    const ConicInvariants inv = conic_invariants(curve);
    const double A = to_double(inv.A), B = to_double(inv.B), C = to_double(inv.C);
    const double D = to_double(inv.D), E = to_double(inv.E), F = to_double(inv.F);

    const double theta = 0.5 * std::atan2(B, A - C);
    const double c = std::cos(theta), s = std::sin(theta);
    // x = c*u - s*v, y = s*u + c*v.
    const double Au = A * c * c + B * c * s + C * s * s;
    const double Cv = A * s * s - B * c * s + C * c * c;
    const double Du = D * c + E * s;
    const double Ev = -D * s + E * c;

    double u0, v0, p;
    bool along_v;  // axis points along v in the rotated frame
    if (std::abs(Au) >= std::abs(Cv)) {
        // Au*u^2 + Du*u + Ev*v + F = 0, opening along v.
        u0 = -Du / (2 * Au);
        v0 = -(F - Du * Du / (4 * Au)) / Ev;
        p = -Ev / (4 * Au);  // (u - u0)^2 = 4p (v - v0)
        along_v = true;
    } else {
        // Cv*v^2 + Du*u + Ev*v + F = 0, opening along u.
        v0 = -Ev / (2 * Cv);
        u0 = -(F - Ev * Ev / (4 * Cv)) / Du;
        p = -Du / (4 * Cv);
        along_v = false;
    }

    auto back = [&](double u, double v) { return std::pair<double, double>{c * u - s * v, s * u + c * v}; };

    ParabolaGeometry g;
    const auto vert = back(u0, v0);
    g.vertex_x = vert.first + 0.0;
    g.vertex_y = vert.second + 0.0;
    const auto foc = along_v ? back(u0, v0 + p) : back(u0 + p, v0);
    g.focus_x = foc.first + 0.0;
    g.focus_y = foc.second + 0.0;
    // Directrix: the rotated-frame line v = v0 - p (or u = u0 - p).
    double nx, ny, off;
    if (along_v) {
        nx = -s;
        ny = c;
        off = v0 - p;
    } else {
        nx = c;
        ny = s;
        off = u0 - p;
    }
    if (ny < 0 || (ny == 0 && nx < 0)) {
        nx = -nx;
        ny = -ny;
        off = -off;
    }
    // Adding 0.0 turns IEEE negative zeros (from -s with s == 0) into plain
    // zeros so reports never print "-0".
    g.directrix_nx = nx + 0.0;
    g.directrix_ny = ny + 0.0;
    g.directrix_offset = off + 0.0;
    const double sign = p >= 0 ? 1.0 : -1.0;
    const auto ax = along_v ? back(0, sign) : back(sign, 0);
    g.axis_x = ax.first + 0.0;
    g.axis_y = ax.second + 0.0;
    return g;
}

// Exact squared distance from a point to the line a*x + b*y + c = 0.
inline Rational point_line_distance_sq(const Point& pt, const LineCoeffs& line) {
    if (line.a == 0 && line.b == 0) throw DegenerateLine();
    const Rational t = line.a * pt.first + line.b * pt.second + line.c;
    return t * t / (line.a * line.a + line.b * line.b);
}

struct DistanceProfile {
    std::vector<std::pair<Rational, Rational>> entries;  // (parameter, squared distance)
    Rational min_sq, max_sq;
    Rational ratio_sq;  // max_sq / min_sq
    Rational min_param, max_param;
};

// Exact squared distances from a center to each sampled string.
inline DistanceProfile distance_profile(const LineFamily& fam, const Point& center,
                                        const std::vector<Rational>& params) {
    if (params.empty()) throw Error("distance profile needs at least one parameter");
    DistanceProfile prof;
    bool first = true;
    for (const Rational& t : params) {
        LineCoeffs line;
        try {
            line = line_at(fam, t);
        } catch (const DegenerateMember&) {
            throw DegenerateLine("degenerate family member at parameter " + to_string(t));
        }
        const Rational d2 = point_line_distance_sq(center, line);
        prof.entries.emplace_back(t, d2);
        if (first || d2 < prof.min_sq) {
            prof.min_sq = d2;
            prof.min_param = t;
        }
        if (first || d2 > prof.max_sq) {
            prof.max_sq = d2;
            prof.max_param = t;
        }
        first = false;
    }
    if (prof.min_sq == 0)
        throw Error("a sampled string passes through the center; distance ratio undefined");
    prof.ratio_sq = prof.max_sq / prof.min_sq;
    return prof;
}

struct RefutationReport {
    DistanceProfile profile;
    bool is_circle_compatible = false;
    bool insufficient_evidence = false;
    Rational witness_min_param, witness_max_param;
};

// The strings are tangent to a common circle about the center only if all
// distances agree; a min/max pair with ratio^2 != 1 is an exact witness
// against the circle hypothesis.
inline RefutationReport refute_circle(const LineFamily& fam, const Point& center,
                                      const std::vector<Rational>& params) {
    if (params.size() < 2) throw Error("refutation needs at least two parameters");
    RefutationReport rep;
    rep.profile = distance_profile(fam, center, params);
    rep.is_circle_compatible = (rep.profile.ratio_sq == 1);
    rep.witness_min_param = rep.profile.min_param;
    rep.witness_max_param = rep.profile.max_param;
    bool all_same = true;
    for (const Rational& t : params)
        if (t != params.front()) all_same = false;
    rep.insufficient_evidence = all_same;
    return rep;
}

}  // namespace stringart
