#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "stringart/conic.hpp"
#include "stringart/parse.hpp"

using namespace stringart;

namespace {

ConicClass classify_text(const std::string& text) { return classify(ImplicitCurve(parse_poly(text))); }

}  // namespace

TEST_CASE("invariants of the two envelope parabolas") {
    const ConicInvariants cross = conic_invariants(ImplicitCurve(parse_poly("x^2+2*x*y+y^2-20*x+20*y+100")));
    CHECK(cross.delta == 0);
    CHECK(cross.det3 == -400);
    const ConicInvariants diag = conic_invariants(ImplicitCurve(parse_poly("x^2+20*y+100")));
    CHECK(diag.delta == 0);
    CHECK(diag.det3 == -100);
}

TEST_CASE("full classification table") {
    CHECK(classify_text("x^2+2*x*y+y^2-20*x+20*y+100") == ConicClass::Parabola);
    CHECK(classify_text("x^2+20*y+100") == ConicClass::Parabola);
    CHECK(classify_text("x^2+2*x*y+y^2-20*x+20*y-300") == ConicClass::Parabola);
    CHECK(classify_text("x^2+y^2-1") == ConicClass::Circle);
    CHECK(classify_text("2*x^2+2*y^2-8") == ConicClass::Circle);
    CHECK(classify_text("x^2+2*y^2-1") == ConicClass::Ellipse);
    CHECK(classify_text("x^2+x*y+y^2-1") == ConicClass::Ellipse);
    CHECK(classify_text("x^2-y^2-1") == ConicClass::Hyperbola);
    CHECK(classify_text("x*y-1") == ConicClass::Hyperbola);
    CHECK(classify_text("x^2-y^2") == ConicClass::TwoIntersectingLines);
    CHECK(classify_text("x^2-1") == ConicClass::TwoParallelLines);
    // Plain x^2 normalizes to a constant (monomial factors are stripped from
    // implicit curves), so the doubled line needs an offset or a cross term.
    CHECK(classify_text("(x+1)^2") == ConicClass::CoincidentLines);
    CHECK(classify_text("x^2+2*x*y+y^2") == ConicClass::CoincidentLines);
    CHECK(classify_text("x^2+1") == ConicClass::EmptySet);
    CHECK(classify_text("x^2+y^2") == ConicClass::SinglePoint);
    CHECK(classify_text("x^2+y^2+1") == ConicClass::EmptySet);
    CHECK(classify_text("y^2-3") == ConicClass::TwoParallelLines);
    CHECK_THROWS_AS(classify_text("x+y"), NotDegreeTwo);
    CHECK_THROWS_AS(classify_text("x^3-y"), NotDegreeTwo);
}

TEST_CASE("classification survives rigid motion and rescaling") {
    const char* samples[] = {"x^2+2*x*y+y^2-20*x+20*y+100", "x^2+y^2-1", "x^2-y^2-1",
                             "x^2+2*y^2-1", "x^2-y^2", "x^2+y^2"};
    const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
    for (const char* text : samples) {
        const Polynomial p = parse_poly(text);
        const ConicClass base = classify(ImplicitCurve(p));
        // Quarter turn (x, y) -> (-y, x).
        CHECK(classify(ImplicitCurve(substitute(p, {{"x", -y}, {"y", x}}))) == base);
        // Translation by (1, -2).
        CHECK(classify(ImplicitCurve(substitute(p, {{"x", x + Polynomial(1)}, {"y", y - Polynomial(2)}}))) ==
              base);
        CHECK(classify(ImplicitCurve(Polynomial(Rational(-5, 3)) * p)) == base);
    }
}

TEST_CASE("conic class names") {
    CHECK(std::string(conic_class_name(ConicClass::Parabola)) == "parabola");
    CHECK(std::string(conic_class_name(ConicClass::TwoIntersectingLines)) == "two-intersecting-lines");
    CHECK(std::string(conic_class_name(ConicClass::EmptySet)) == "empty-set");
}

TEST_CASE("parabola geometry of the upright example") {
    const ParabolaGeometry g = parabola_geometry(ImplicitCurve(parse_poly("x^2+20*y+100")));
    CHECK(std::abs(g.focus_x - 0.0) < 1e-9);
    CHECK(std::abs(g.focus_y - -10.0) < 1e-9);
    CHECK(std::abs(g.vertex_x - 0.0) < 1e-9);
    CHECK(std::abs(g.vertex_y - -5.0) < 1e-9);
    CHECK(std::abs(g.directrix_nx - 0.0) < 1e-9);
    CHECK(std::abs(g.directrix_ny - 1.0) < 1e-9);
    CHECK(std::abs(g.directrix_offset - 0.0) < 1e-9);
    CHECK(std::abs(g.axis_x - 0.0) < 1e-9);
    CHECK(std::abs(g.axis_y - -1.0) < 1e-9);
}

TEST_CASE("parabola geometry of the rotated cross envelope") {
    const ParabolaGeometry g = parabola_geometry(ImplicitCurve(parse_poly("x^2+2*x*y+y^2-20*x+20*y+100")));
    const double r = std::sqrt(0.5);
    CHECK(std::abs(g.focus_x - 5.0) < 1e-9);
    CHECK(std::abs(g.focus_y - -5.0) < 1e-9);
    CHECK(std::abs(g.vertex_x - 2.5) < 1e-9);
    CHECK(std::abs(g.vertex_y - -2.5) < 1e-9);
    // Directrix y = x, written -r*x + r*y = 0 with the normal canonicalized
    // to point with positive y.
    CHECK(std::abs(g.directrix_nx - -r) < 1e-9);
    CHECK(std::abs(g.directrix_ny - r) < 1e-9);
    CHECK(std::abs(g.directrix_offset - 0.0) < 1e-9);
    CHECK(std::abs(g.axis_x - r) < 1e-9);
    CHECK(std::abs(g.axis_y - -r) < 1e-9);
}

TEST_CASE("parabola geometry of the unit parabola") {
    const ParabolaGeometry g = parabola_geometry(ImplicitCurve(parse_poly("y-x^2")));
    CHECK(std::abs(g.focus_x) < 1e-9);
    CHECK(std::abs(g.focus_y - 0.25) < 1e-9);
    CHECK(std::abs(g.directrix_ny - 1.0) < 1e-9);
    CHECK(std::abs(g.directrix_offset - -0.25) < 1e-9);
    CHECK(std::abs(g.axis_y - 1.0) < 1e-9);
    CHECK_THROWS_AS(parabola_geometry(ImplicitCurve(parse_poly("x^2+y^2-1"))), NotParabola);
}

TEST_CASE("focus-directrix equidistance at sampled curve points") {
    // Points on the cross envelope come from exact contact points.
    const LineFamily fam = cross_family(10);
    const ParabolaGeometry g = parabola_geometry(envelope_unconstrained(fam).curve);
    int sampled = 0;
    for (int i = -12; i <= 12; ++i) {
        Point pt;
        try {
            pt = contact_point(fam, Rational(10 * i, 7));
        } catch (const Error&) {
            continue;
        }
        ++sampled;
        const double px = to_double(pt.first), py = to_double(pt.second);
        const double df2 = (px - g.focus_x) * (px - g.focus_x) + (py - g.focus_y) * (py - g.focus_y);
        const double dl = g.directrix_nx * px + g.directrix_ny * py - g.directrix_offset;
        CHECK(std::abs(df2 - dl * dl) < 1e-6 * (1 + std::abs(df2)));
    }
    CHECK(sampled == 25);
}

TEST_CASE("exact point-line distances") {
    CHECK(point_line_distance_sq({0, 0}, {1, -1, 15}) == Rational(225, 2));
    CHECK(point_line_distance_sq({0, 0}, {-10, 0, -100}) == 100);
    CHECK(point_line_distance_sq({2, 3}, {0, 1, -3}) == 0);
    // Scaling the line equation does not move the line.
    CHECK(point_line_distance_sq({1, 2}, {3, 4, 5}) == point_line_distance_sq({1, 2}, {-6, -8, -10}));
    CHECK_THROWS_AS(point_line_distance_sq({0, 0}, {0, 0, 7}), DegenerateLine);
}

TEST_CASE("corner distance profile refutes the circle") {
    const LineFamily fam = corner_family(10);
    const auto params = std::vector<Rational>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const DistanceProfile prof = distance_profile(fam, {0, 0}, params);
    CHECK(prof.min_sq == 100);
    CHECK(prof.max_sq == Rational(225, 2));
    CHECK(prof.ratio_sq == Rational(9, 8));
    CHECK(prof.min_param == 0);
    CHECK(prof.max_param == 5);
    REQUIRE(prof.entries.size() == 11);
    CHECK(prof.entries.front().second == 100);
    CHECK(prof.entries.back().second == 100);

    const RefutationReport rep = refute_circle(fam, {0, 0}, {0, 5});
    CHECK_FALSE(rep.is_circle_compatible);
    CHECK_FALSE(rep.insufficient_evidence);
    CHECK(rep.witness_min_param == 0);
    CHECK(rep.witness_max_param == 5);
}

TEST_CASE("distance to the strings peaks exactly at the middle") {
    // Squared distance from the origin to the k-string is a rational function
    // N/D of k; its derivative numerator N'D - ND' must vanish at k = d/2.
    const Polynomial k = Polynomial::variable("k"), d(10);
    const Polynomial a = k - d, b = k, c = -k * k + d * k - d * d;
    const Polynomial N = c * c, D = a * a + b * b;
    const Polynomial dnum = derivative(N, "k") * D - N * derivative(D, "k");
    CHECK(evaluate(dnum, {{"k", Rational(5)}}) == 0);
    CHECK(evaluate(dnum, {{"k", Rational(3)}}) != 0);
}

TEST_CASE("a family of genuine circle tangents is compatible") {
    // Tangents of the unit circle, rationally parameterized.
    const LineFamily fam = make_line_family(parse_poly("(1-t^2)*x+2*t*y-1-t^2"), "t");
    const RefutationReport rep = refute_circle(fam, {0, 0}, {0, 1, 2, 3});
    CHECK(rep.is_circle_compatible);
    CHECK(rep.profile.ratio_sq == 1);
    CHECK_FALSE(rep.insufficient_evidence);
}

TEST_CASE("degenerate refutation inputs") {
    const LineFamily fam = corner_family(10);
    CHECK_THROWS_AS(refute_circle(fam, {0, 0}, {5}), Error);
    const RefutationReport same = refute_circle(fam, {0, 0}, {5, 5});
    CHECK(same.is_circle_compatible);
    CHECK(same.insufficient_evidence);
    // A center sitting on one of the strings has no distance ratio.
    const std::vector<Rational> through_origin{0, 5};
    CHECK_THROWS_AS(distance_profile(cross_family(10), {0, 0}, through_origin), Error);
}
