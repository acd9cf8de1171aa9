// Acceptance suite: one line per criterion, exit code = number of failures.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stringart/stringart.hpp"

using namespace stringart;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational random_positive_d(std::mt19937& rng) {
    std::uniform_int_distribution<int> den(1, 10);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(1, 100 * q);
    return Rational(num(rng), q);
}

void criterion_1() {
    bool ok = true;
    std::string detail;
    try {
        auto t0 = std::chrono::steady_clock::now();
        const Polynomial cross = envelope_unconstrained(cross_family(10)).curve.P;
        const double cross_s = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const Polynomial diag = envelope_unconstrained(diagonal_family(10)).curve.P;
        const double diag_s = seconds_since(t0);
        if (cross != parse_poly("x^2+2*x*y+y^2-20*x+20*y+100")) ok = false, detail = "cross curve mismatch";
        if (diag != parse_poly("x^2+20*y+100")) ok = false, detail = "diagonal curve mismatch";
        if (cross_s >= 1.0 || diag_s >= 1.0) ok = false, detail = "too slow";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(1, "exact envelopes of the cross and diagonal families", ok, detail);
}

void criterion_2() {
    bool ok = true;
    std::string detail;
    try {
        std::vector<Rational> params;
        for (int k = 0; k <= 10; ++k) params.push_back(k);
        const DistanceProfile prof = distance_profile(corner_family(10), {0, 0}, params);
        if (prof.min_sq != 100) ok = false, detail = "min^2 != 100";
        if (prof.max_sq != Rational(225, 2)) ok = false, detail = "max^2 != 225/2";
        if (prof.ratio_sq != Rational(9, 8)) ok = false, detail = "ratio^2 != 9/8";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(2, "exact distance profile refutes the circle (ratio^2 = 9/8)", ok, detail);
}

void criterion_3() {
    bool ok = true;
    std::string detail;
    try {
        auto cls = [](const char* text) { return classify(ImplicitCurve(parse_poly(text))); };
        if (cls("x^2+2*x*y+y^2-20*x+20*y+100") != ConicClass::Parabola) ok = false, detail = "cross curve";
        if (cls("x^2+20*y+100") != ConicClass::Parabola) ok = false, detail = "diagonal curve";
        if (cls("x^2+y^2-1") != ConicClass::Circle) ok = false, detail = "unit circle";
        if (cls("x^2-y^2") != ConicClass::TwoIntersectingLines) ok = false, detail = "degenerate pair";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(3, "conic classification (parabola, circle, crossed lines)", ok, detail);
}

void criterion_4() {
    bool ok = true;
    std::string detail;
    try {
        if (!prove_discriminant(10).success) ok = false, detail = "d = 10";
        std::mt19937 rng(101);
        for (int i = 0; ok && i < 20; ++i)
            if (!prove_discriminant(random_positive_d(rng)).success) ok = false, detail = "random d";
        TangentLine mutated = string_slope_intercept(10);
        mutated.b += Polynomial(1);
        if (prove_discriminant(mutated, 10).success) ok = false, detail = "mutation not caught";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(4, "discriminant proof holds identically and rejects a mutation", ok, detail);
}

void criterion_5() {
    bool ok = true;
    std::string detail;
    try {
        if (!prove_calculus_identity(10).success) ok = false, detail = "d = 10";
        std::mt19937 rng(103);
        for (int i = 0; ok && i < 20; ++i)
            if (!prove_calculus_identity(random_positive_d(rng)).success) ok = false, detail = "random d";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(5, "calculus identity x_C - d = x_C'' holds identically", ok, detail);
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    try {
        const ProofReport cross = prove_generic_tangency(
            ImplicitCurve(parse_poly("x^2+2*x*y+y^2-20*x+20*y+100")), cross_family(10));
        const ProofReport diag =
            prove_generic_tangency(ImplicitCurve(parse_poly("x^2+20*y+100")), diagonal_family(10));
        const ProofReport circle =
            prove_generic_tangency(ImplicitCurve(parse_poly("x^2+y^2-25")), diagonal_family(10));
        if (!cross.success) ok = false, detail = "cross pair";
        if (!diag.success) ok = false, detail = "diagonal pair";
        if (circle.success || circle.witness.is_zero()) ok = false, detail = "circle not refuted";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(6, "generic tangency holds for both families and fails for the circle", ok, detail);
}

void criterion_7() {
    bool ok = true;
    std::string detail;
    try {
        if (!prove_reflection_property(diagonal_family(10), {0, -10}, {0, 1, 0}).success)
            ok = false, detail = "diagonal focus";
        if (!prove_reflection_property(cross_family(10), {5, -5}, {1, -1, 0}).success)
            ok = false, detail = "cross focus";
        if (prove_reflection_property(diagonal_family(10), {0, -9}, {0, 1, 0}).success)
            ok = false, detail = "perturbed focus not caught";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(7, "reflected focus lands on the directrix for every string", ok, detail);
}

void criterion_8() {
    bool ok = true;
    std::string detail;
    try {
        const ParabolaGeometry g = parabola_geometry(ImplicitCurve(parse_poly("x^2+20*y+100")));
        auto near = [](double a, double b) { return std::abs(a - b) < 1e-9; };
        if (!near(g.focus_x, 0) || !near(g.focus_y, -10)) ok = false, detail = "focus";
        if (!near(g.directrix_nx, 0) || !near(g.directrix_ny, 1) || !near(g.directrix_offset, 0))
            ok = false, detail = "directrix";
        if (!near(g.vertex_x, 0) || !near(g.vertex_y, -5)) ok = false, detail = "vertex";
        const LineFamily fam = diagonal_family(10);
        int sampled = 0;
        for (int i = -12; i <= 12; ++i) {
            const Point pt = contact_point(fam, Rational(i));
            ++sampled;
            const double px = to_double(pt.first), py = to_double(pt.second);
            const double df2 = (px - g.focus_x) * (px - g.focus_x) + (py - g.focus_y) * (py - g.focus_y);
            const double dl = g.directrix_nx * px + g.directrix_ny * py - g.directrix_offset;
            if (std::abs(df2 - dl * dl) > 1e-6 * (1 + std::abs(df2))) {
                ok = false;
                detail = "equidistance at i = " + std::to_string(i);
            }
        }
        if (sampled != 25) ok = false, detail = "sample count";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(8, "parabola geometry within 1e-9 and focus-directrix equidistance", ok, detail);
}

void criterion_9() {
    bool ok = true;
    std::string detail;
    try {
        const auto t0 = std::chrono::steady_clock::now();
        const ConstrainedFamily ladder = ladder_family(1);
        const EnvelopeResult env = envelope_constrained(ladder);
        if (env.curve.P.total_degree() != 6) ok = false, detail = "degree";
        if (!equal_up_to_scalar(env.curve.P, parse_poly("(x^2+y^2-1)^3+27*x^2*y^2")))
            ok = false, detail = "astroid mismatch";
        const int triples[10][3] = {{3, 4, 5},   {5, 12, 13},  {8, 15, 17},  {7, 24, 25},  {20, 21, 29},
                                    {9, 40, 41}, {12, 35, 37}, {28, 45, 53}, {11, 60, 61}, {33, 56, 65}};
        int points = 0;
        for (const auto& t : triples) {
            for (int swap = 0; swap < 2; ++swap) {
                const Rational p(swap ? t[1] : t[0], t[2]);
                const Rational q(swap ? t[0] : t[1], t[2]);
                const Point pt = contact_point(ladder, p, q);
                if (pt.first != p * p * p || pt.second != q * q * q) {
                    ok = false;
                    detail = "contact point ( " + to_string(p) + ", " + to_string(q) + ")";
                }
                if (evaluate(env.curve.P, {{"x", pt.first}, {"y", pt.second}}) != 0) {
                    ok = false;
                    detail = "contact point off the curve";
                }
                ++points;
            }
        }
        if (points != 20) ok = false, detail = "point count";
        if (seconds_since(t0) >= 10.0) ok = false, detail = "too slow";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(9, "sliding-ladder envelope is the degree-6 astroid", ok, detail);
}

void criterion_10() {
    bool ok = true;
    std::string detail;
    try {
        const LineFamily fam = cross_family(10);
        for (int n = -20; n <= 30; ++n) {
            if (n == 0) {
                bool vertical = false;
                try {
                    slope(fam, 0);
                } catch (const VerticalLine&) {
                    vertical = true;
                }
                if (!vertical) ok = false, detail = "n = 0 should be vertical";
                continue;
            }
            if (slope(fam, n) + 1 != Rational(10) / n) {
                ok = false;
                detail = "n = " + std::to_string(n);
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(10, "slope identity slope(n) + 1 = 10/n across the slider range", ok, detail);
}

void criterion_11() {
    bool ok = true;
    std::string detail;
    try {
        std::mt19937 rng(107);
        std::uniform_int_distribution<int> num(-300, 300), den(1, 7), pos(0, 300);
        const LineFamily families[] = {cross_family(10), diagonal_family(10), corner_family(10)};
        for (const LineFamily& fam : families) {
            const Polynomial curve = envelope_unconstrained(fam).curve.P;
            const Polynomial gx = derivative(curve, "x"), gy = derivative(curve, "y");
            int checked = 0;
            for (int i = 0; i < 1000 && checked < 100; ++i) {
                Rational t0;
                if (fam.range) {
                    const int q = den(rng);
                    t0 = Rational(pos(rng) % (10 * q + 1), q);  // stay inside [0, 10]
                } else {
                    t0 = Rational(num(rng), den(rng));
                }
                Point pt;
                LineCoeffs line;
                try {
                    pt = contact_point(fam, t0);
                    line = line_at(fam, t0);
                } catch (const Error&) {
                    continue;
                }
                ++checked;
                if (evaluate(curve, {{"x", pt.first}, {"y", pt.second}}) != 0) {
                    ok = false;
                    detail = fam.label + " contact off curve at " + to_string(t0);
                    break;
                }
                const double gxv = to_double(evaluate(gx, {{"x", pt.first}, {"y", pt.second}}));
                const double gyv = to_double(evaluate(gy, {{"x", pt.first}, {"y", pt.second}}));
                const double dxv = to_double(line.b), dyv = to_double(-line.a);
                const double scale = std::hypot(gxv, gyv) * std::hypot(dxv, dyv);
                if (scale <= 0 || std::abs(gxv * dxv + gyv * dyv) / scale > 1e-9) {
                    ok = false;
                    detail = fam.label + " gradient not orthogonal at " + to_string(t0);
                    break;
                }
            }
            if (ok && checked != 100) ok = false, detail = fam.label + " too few samples";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(11, "contact points satisfy each envelope exactly with tangent gradients", ok, detail);
}

std::string render_cross_figure() {
    const Scene scene = cross_scene(10);
    std::vector<ImplicitCurve> curves{envelope_unconstrained(scene.families[0]).curve};
    RenderOptions opts;
    opts.min_x = -30;
    opts.min_y = -30;
    opts.width = 60;
    opts.height = 60;
    return render_scene(scene, curves, opts);
}

std::string render_square4_figure() {
    const Scene scene = square4_scene(8);
    std::vector<ImplicitCurve> curves;
    for (const LineFamily& fam : scene.families) curves.push_back(envelope_unconstrained(fam).curve);
    RenderOptions opts;
    opts.min_x = -10;
    opts.min_y = -10;
    opts.width = 20;
    opts.height = 20;
    return render_scene(scene, curves, opts);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("missing golden file " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void criterion_12() {
    bool ok = true;
    std::string detail;
    try {
        const std::string cross_a = render_cross_figure();
        const std::string cross_b = render_cross_figure();
        const std::string sq_a = render_square4_figure();
        const std::string sq_b = render_square4_figure();
        if (cross_a != cross_b || sq_a != sq_b) ok = false, detail = "repeat runs differ";
        const std::string golden_dir = GOLDEN_DIR;
        if (cross_a != read_file(golden_dir + "/cross_fig3.svg")) ok = false, detail = "cross golden differs";
        if (sq_a != read_file(golden_dir + "/square4.svg")) ok = false, detail = "square4 golden differs";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(12, "byte-identical SVG output across runs and against goldens", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::cout << (12 - failures) << " of 12 criteria passed\n";
    return failures;
}
