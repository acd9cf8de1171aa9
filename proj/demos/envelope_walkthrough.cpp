// Walks the core pipeline end to end: build the two classic string
// families, eliminate their parameters to get the envelope curves, classify
// the results and print the parabola data.

#include <iostream>

#include "stringart/stringart.hpp"

using namespace stringart;

int main() {
    const Rational d = 10;

    for (const LineFamily& fam : {cross_family(d), diagonal_family(d), corner_family(d)}) {
        const EnvelopeResult env = envelope_unconstrained(fam);
        std::cout << fam.label << " family, F = " << format_poly(fam.F) << "\n";
        std::cout << "  envelope: " << format_poly(env.curve.P) << " = 0\n";
        const ConicClass cls = classify(env.curve);
        std::cout << "  class:    " << conic_class_name(cls) << "\n";
        if (cls == ConicClass::Parabola) {
            const ParabolaGeometry g = parabola_geometry(env.curve);
            std::cout << "  focus:    (" << g.focus_x << ", " << g.focus_y << ")\n";
            std::cout << "  vertex:   (" << g.vertex_x << ", " << g.vertex_y << ")\n";
        }
        for (const std::string& note : env.pruning_notes) std::cout << "  note:     " << note << "\n";
        std::cout << "\n";
    }

    const EnvelopeResult ladder = envelope_constrained(ladder_family(1));
    std::cout << "ladder family (L = 1)\n";
    std::cout << "  envelope: " << format_poly(ladder.curve.P) << " = 0\n";
    std::cout << "  degree:   " << ladder.curve.P.total_degree() << "\n";
    return 0;
}
