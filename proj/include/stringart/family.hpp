#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stringart/elimination.hpp"
#include "stringart/errors.hpp"
#include "stringart/polynomial.hpp"
#include "stringart/rational.hpp"

namespace stringart {

using Point = std::pair<Rational, Rational>;

// Line coefficients a*x + b*y + c = 0.
struct LineCoeffs {
    Rational a, b, c;
};

// A one-parameter family of lines F(x, y, t) = 0, with F linear in x and y.
// The optional endpoints callback gives the physical string segment for a
// parameter value; rendering uses it, the algebra never does.
struct LineFamily {
    std::string parameter;
    Polynomial F;
    std::optional<std::pair<Rational, Rational>> range;
    std::string label;
    std::function<std::array<Point, 2>(const Rational&)> endpoints;
};

// Lines F(x, y, p, q) = 0 whose two parameters are tied by a constraint
// G(p, q) = 0.
struct ConstrainedFamily {
    std::string p, q;
    Polynomial F;
    Polynomial G;
    std::string label;
};

namespace detail {

inline void validate_line_family(const Polynomial& F, const std::string& parameter) {
    for (const auto& [m, c] : F.terms()) {
        const int dx = m.exponent("x"), dy = m.exponent("y");
        if (dx + dy > 1) throw InvalidFamily("family polynomial is not linear in x and y");
        for (const auto& [v, e] : m.exponents())
            if (v != "x" && v != "y" && v != parameter)
                throw InvalidFamily("family polynomial involves unexpected variable " + v);
    }
    if (coefficient_in(F, "x", 1).is_zero() && coefficient_in(F, "y", 1).is_zero())
        throw InvalidFamily("x and y coefficients are both identically zero");
}

}  // namespace detail

inline LineFamily make_line_family(Polynomial F, std::string parameter, std::string label = "custom") {
    detail::validate_line_family(F, parameter);
    return LineFamily{std::move(parameter), std::move(F), std::nullopt, std::move(label), nullptr};
}

// Strings of the upright cross: the string for parameter n joins A = (n, 0)
// on the horizontal axis to B = (0, n - d) on the vertical one.
// F = (n - d)*x + n*y - n^2 + d*n.
inline LineFamily cross_family(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
    const Polynomial n = Polynomial::variable("n");
    Polynomial F = (n - Polynomial(d)) * x + n * y - n * n + Polynomial(d) * n;
    LineFamily fam{"n", std::move(F), std::nullopt, "cross", nullptr};
    fam.endpoints = [d](const Rational& t) {
        return std::array<Point, 2>{Point{t, 0}, Point{0, t - d}};
    };
    return fam;
}

// Strings joining C = (e, -e) on the falling diagonal to C'' = (e - d, e - d)
// on the rising one. F = (2e - d)*x + d*y - 2e^2 + 2de.
inline LineFamily diagonal_family(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
    const Polynomial e = Polynomial::variable("e");
    Polynomial F = (Polynomial(2) * e - Polynomial(d)) * x + Polynomial(d) * y - Polynomial(2) * e * e +
                   Polynomial(2) * Polynomial(d) * e;
    LineFamily fam{"e", std::move(F), std::nullopt, "diagonal", nullptr};
    fam.endpoints = [d](const Rational& t) {
        return std::array<Point, 2>{Point{t, -t}, Point{t - d, t - d}};
    };
    return fam;
}

// Classic corner strings between two perpendicular edges meeting at
// B = (-d, d): the string for k joins (-d, k) on the left edge to
// (k - d, d) on the top edge. F = (k - d)*x + k*y - k^2 + dk - d^2, k in [0, d].
inline LineFamily corner_family(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
    const Polynomial k = Polynomial::variable("k");
    Polynomial F = (k - Polynomial(d)) * x + k * y - k * k + Polynomial(d) * k - Polynomial(d) * Polynomial(d);
    LineFamily fam{"k", std::move(F), std::make_pair(Rational(0), d), "corner", nullptr};
    fam.endpoints = [d](const Rational& t) {
        return std::array<Point, 2>{Point{-d, t}, Point{t - d, d}};
    };
    return fam;
}

// The sliding ladder: a segment of length L with one end (p, 0) on the floor
// and the other (0, q) on the wall. F = q*x + p*y - p*q, G = p^2 + q^2 - L^2.
inline ConstrainedFamily ladder_family(const Rational& L) {
    if (L <= 0) throw NonPositiveL();
    const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
    const Polynomial p = Polynomial::variable("p"), q = Polynomial::variable("q");
    return ConstrainedFamily{"p", "q", q * x + p * y - p * q, p * p + q * q - Polynomial(L) * Polynomial(L),
                             "ladder"};
}

// Rigid map: rotation by quarter_turns * 90 degrees about (cx, cy), then
// translation by (tx, ty). Quarter turns keep everything rational.
struct Transform {
    int quarter_turns = 0;
    Rational cx = 0, cy = 0;
    Rational tx = 0, ty = 0;

    Point apply(const Point& pt) const {
        const Rational dx = pt.first - cx, dy = pt.second - cy;
        Rational rx, ry;
        switch (((quarter_turns % 4) + 4) % 4) {
            case 0: rx = dx, ry = dy; break;
            case 1: rx = -dy, ry = dx; break;
            case 2: rx = -dx, ry = -dy; break;
            default: rx = dy, ry = -dx; break;
        }
        return {rx + cx + tx, ry + cy + ty};
    }

    Point apply_inverse(const Point& pt) const {
        const Rational dx = pt.first - cx - tx, dy = pt.second - cy - ty;
        Rational rx, ry;
        switch (((quarter_turns % 4) + 4) % 4) {
            case 0: rx = dx, ry = dy; break;
            case 1: rx = dy, ry = -dx; break;
            case 2: rx = -dx, ry = -dy; break;
            default: rx = -dy, ry = dx; break;
        }
        return {rx + cx, ry + cy};
    }

    // Image family: substitute the inverse map into F so that the new zero
    // set is the image of the old one.
    LineFamily apply(const LineFamily& fam) const {
        const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
        const Transform self = *this;
        // Inverse map written with polynomial coordinates.
        Polynomial dx = x - Polynomial(cx) - Polynomial(tx);
        Polynomial dy = y - Polynomial(cy) - Polynomial(ty);
        Polynomial rx, ry;
        switch (((quarter_turns % 4) + 4) % 4) {
            case 0: rx = dx, ry = dy; break;
            case 1: rx = dy, ry = -dx; break;
            case 2: rx = -dx, ry = -dy; break;
            default: rx = -dy, ry = dx; break;
        }
        std::map<std::string, Polynomial> sub{{"x", rx + Polynomial(cx)}, {"y", ry + Polynomial(cy)}};
        LineFamily out = fam;
        out.F = substitute(fam.F, sub);
        if (fam.endpoints) {
            auto inner = fam.endpoints;
            out.endpoints = [self, inner](const Rational& t) {
                auto pts = inner(t);
                return std::array<Point, 2>{self.apply(pts[0]), self.apply(pts[1])};
            };
        }
        detail::validate_line_family(out.F, out.parameter);
        return out;
    }

};

// A drawing-ready collection: families with their placements, the scale d,
// and the parameter values at which strings are sampled.
struct Scene {
    std::vector<LineFamily> families;   // already transformed
    std::vector<Transform> transforms;  // placement of each family, same length
    Rational d = 1;
    std::vector<std::vector<Rational>> sample_parameters;  // per family
    std::string label;
};

namespace detail {

inline std::vector<Rational> linspace(const Rational& lo, const Rational& hi, int count) {
    std::vector<Rational> out;
    if (count <= 1) {
        out.push_back(lo);
        return out;
    }
    const Rational step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) out.push_back(lo + step * i);
    return out;
}

}  // namespace detail

// Four corner constructions rotated around the center of a square of side
// 2d, one per corner; the string for k in each joins numbers k and d - k on
// the two half-edges, so the joined numbers always sum to d. 17 samples per
// family by default.
inline Scene square4_scene(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    Scene scene;
    scene.d = d;
    scene.label = "square4";
    const LineFamily base = corner_family(d);
    for (int turn = 0; turn < 4; ++turn) {
        Transform t;
        t.quarter_turns = turn;
        scene.transforms.push_back(t);
        scene.families.push_back(t.apply(base));
        scene.sample_parameters.push_back(detail::linspace(0, d, 17));
    }
    return scene;
}

inline Scene cross_scene(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    Scene scene;
    scene.d = d;
    scene.label = "cross";
    scene.families.push_back(cross_family(d));
    scene.transforms.push_back(Transform{});
    // Integer slider positions from -2d to 3d, matching the classic demo
    // range n in [-20, 30] at d = 10.
    std::vector<Rational> params;
    const Rational step = d / 10;
    for (int i = -20; i <= 30; ++i) params.push_back(step * i);
    scene.sample_parameters.push_back(std::move(params));
    return scene;
}

inline Scene diagonal_scene(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    Scene scene;
    scene.d = d;
    scene.label = "diagonal";
    scene.families.push_back(diagonal_family(d));
    scene.transforms.push_back(Transform{});
    scene.sample_parameters.push_back(detail::linspace(0, d, 21));
    return scene;
}

inline Scene corner_scene(const Rational& d) {
    if (d <= 0) throw NonPositiveD();
    Scene scene;
    scene.d = d;
    scene.label = "corner";
    scene.families.push_back(corner_family(d));
    scene.transforms.push_back(Transform{});
    scene.sample_parameters.push_back(detail::linspace(0, d, 11));
    return scene;
}

// Coefficients (a, b, c) of the family member at t0.
inline LineCoeffs line_at(const LineFamily& fam, const Rational& t0) {
    if (fam.range && (t0 < fam.range->first || t0 > fam.range->second))
        throw Error("parameter " + to_string(t0) + " outside family range");
    const Polynomial at = substitute(fam.F, {{fam.parameter, Polynomial(t0)}});
    const auto a = coefficient_in(at, "x", 1).constant_value();
    const auto b = coefficient_in(at, "y", 1).constant_value();
    const auto c = coefficient_in(coefficient_in(at, "x", 0), "y", 0).constant_value();
    if (!a || !b || !c) throw Error("family member is not a line with rational coefficients");
    if (*a == 0 && *b == 0) throw DegenerateMember("family member degenerates at " + to_string(t0));
    return LineCoeffs{*a, *b, *c};
}

inline Rational slope(const LineFamily& fam, const Rational& t0) {
    const LineCoeffs l = line_at(fam, t0);
    if (l.b == 0) throw VerticalLine("slope undefined at " + to_string(t0));
    return -l.a / l.b;
}

}  // namespace stringart
