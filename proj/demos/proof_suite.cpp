// Runs the four symbolic arguments that certify the string-art contour as a
// parabola rather than a circle, then shows the exact distance profile that
// refutes the circle hypothesis.

#include <iostream>

#include "stringart/stringart.hpp"

using namespace stringart;

static void show(const ProofReport& rep) {
    std::cout << proof_method_name(rep.method) << ": " << (rep.success ? "holds" : "FAILS")
              << " (witness " << format_poly(rep.witness) << ")\n";
    for (const std::string& s : rep.steps) std::cout << "    " << s << "\n";
}

int main() {
    const Rational d = 10;

    show(prove_discriminant(d));
    show(prove_calculus_identity(d));

    const ImplicitCurve diag_curve(parse_poly("x^2+20*y+100"));
    show(prove_generic_tangency(diag_curve, diagonal_family(d)));
    show(prove_reflection_property(diagonal_family(d), {0, -10}, {0, 1, 0}));

    // The same tangency check against a circle through the vertex fails,
    // which is the whole point.
    const ImplicitCurve circle(parse_poly("x^2+y^2-25"));
    show(prove_generic_tangency(circle, diagonal_family(d)));

    std::vector<Rational> ks;
    for (int k = 0; k <= 10; ++k) ks.push_back(k);
    const RefutationReport ref = refute_circle(corner_family(d), {0, 0}, ks);
    std::cout << "corner strings about the origin: min^2 = " << to_string(ref.profile.min_sq)
              << ", max^2 = " << to_string(ref.profile.max_sq)
              << ", ratio^2 = " << to_string(ref.profile.ratio_sq)
              << (ref.is_circle_compatible ? " (circle possible)" : " (not a circle)") << "\n";
    return 0;
}
