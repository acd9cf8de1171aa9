// Renders the four-corner string-art square with its envelope arcs to an
// SVG file, plus the single-cross figure with extended lines.

#include <fstream>
#include <iostream>

#include "stringart/stringart.hpp"

using namespace stringart;

static void write_svg(const std::string& path, const Scene& scene, const RenderOptions& opts) {
    std::vector<ImplicitCurve> curves;
    for (const LineFamily& fam : scene.families) curves.push_back(envelope_unconstrained(fam).curve);
    std::ofstream f(path, std::ios::binary);
    f << render_scene(scene, curves, opts);
    std::cout << "wrote " << path << "\n";
}

int main() {
    {
        RenderOptions opts;
        opts.min_x = -10;
        opts.min_y = -10;
        opts.width = 20;
        opts.height = 20;
        opts.string_stroke = 0.03;
        opts.curve_stroke = 0.1;
        write_svg("square4.svg", square4_scene(8), opts);
    }
    {
        RenderOptions opts;
        opts.min_x = -30;
        opts.min_y = -30;
        opts.width = 60;
        opts.height = 60;
        opts.show_extended_lines = true;
        write_svg("cross.svg", cross_scene(10), opts);
    }
    return 0;
}
