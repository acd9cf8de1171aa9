#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stringart/conic.hpp"
#include "stringart/envelope.hpp"
#include "stringart/errors.hpp"
#include "stringart/family.hpp"

namespace stringart {

struct RenderOptions {
    Rational min_x = -25, min_y = -25, width = 50, height = 50;  // viewbox
    int grid = 256;                                              // contour resolution, >= 8
    double string_stroke = 0.05;
    double curve_stroke = 0.15;
    bool show_envelope = true;
    bool show_extended_lines = false;
};

using PolylineSet = std::vector<std::vector<std::pair<double, double>>>;

namespace detail {

// Fixed-point decimal with exactly 4 places, no exponent notation, negative
// zero normalized; the byte-determinism of the SVG output rests on this.
inline std::string fmt(double v) {
    if (v == 0) v = 0;  // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

// Compiled numeric view of a bivariate polynomial.
struct NumericPoly {
    struct Term {
        double c;
        int ex, ey;
    };
    std::vector<Term> terms;

    explicit NumericPoly(const Polynomial& p) {
        for (const auto& [m, c] : p.terms())
            terms.push_back({to_double(c), m.exponent("x"), m.exponent("y")});
    }

    double operator()(double x, double y) const {
        double acc = 0;
        for (const Term& t : terms) acc += t.c * std::pow(x, t.ex) * std::pow(y, t.ey);
        return acc;
    }
};

}  // namespace detail

// Marching-squares contour of the curve over the viewbox grid. Vertices sit
// on sign-changing grid edges (linear interpolation); ambiguous saddle cells
// are resolved by the sign at the cell center; segments are chained into
// polylines by shared grid-edge identity. Everything is scanned row-major,
// so the output ordering is deterministic.
inline PolylineSet curve_polyline(const ImplicitCurve& curve, const RenderOptions& opts) {
    if (opts.grid < 8) throw Error("grid resolution must be at least 8");
    const int n = opts.grid;
    const double x0 = to_double(opts.min_x), y0 = to_double(opts.min_y);
    const double w = to_double(opts.width), h = to_double(opts.height);
    if (w <= 0 || h <= 0) throw Error("viewbox must have positive size");
    const double dx = w / n, dy = h / n;
    const detail::NumericPoly f(curve.P);

    std::vector<double> values(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            values[static_cast<std::size_t>(j) * (n + 1) + i] = f(x0 + dx * i, y0 + dy * j);
    auto value = [&](int i, int j) { return values[static_cast<std::size_t>(j) * (n + 1) + i]; };
    auto negative = [&](double v) { return v < 0; };

    // Edge ids: 2*(j*(n+1)+i) for the horizontal edge from (i,j) to (i+1,j),
    // +1 for the vertical edge from (i,j) to (i,j+1).
    auto h_edge = [&](int i, int j) { return 2 * (j * (n + 1) + i); };
    auto v_edge = [&](int i, int j) { return 2 * (j * (n + 1) + i) + 1; };
    auto edge_point = [&](long id) {
        const long base = id / 2;
        const int i = static_cast<int>(base % (n + 1));
        const int j = static_cast<int>(base / (n + 1));
        double va, vb, ax, ay, bx, by;
        if (id % 2 == 0) {
            va = value(i, j), vb = value(i + 1, j);
            ax = x0 + dx * i, ay = y0 + dy * j, bx = x0 + dx * (i + 1), by = ay;
        } else {
            va = value(i, j), vb = value(i, j + 1);
            ax = x0 + dx * i, ay = y0 + dy * j, bx = ax, by = y0 + dy * (j + 1);
        }
        double t = (va == vb) ? 0.5 : va / (va - vb);
        if (t < 0) t = 0;
        if (t > 1) t = 1;
        return std::pair<double, double>{ax + (bx - ax) * t, ay + (by - ay) * t};
    };

    std::vector<std::pair<long, long>> segments;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const bool bl = negative(value(i, j));
            const bool br = negative(value(i + 1, j));
            const bool tr = negative(value(i + 1, j + 1));
            const bool tl = negative(value(i, j + 1));
            const int code = (bl ? 1 : 0) | (br ? 2 : 0) | (tr ? 4 : 0) | (tl ? 8 : 0);
            if (code == 0 || code == 15) continue;
            const long bottom = h_edge(i, j), top = h_edge(i, j + 1);
            const long left = v_edge(i, j), right = v_edge(i + 1, j);
            switch (code) {
                case 1: case 14: segments.emplace_back(left, bottom); break;
                case 2: case 13: segments.emplace_back(bottom, right); break;
                case 4: case 11: segments.emplace_back(right, top); break;
                case 8: case 7: segments.emplace_back(top, left); break;
                case 3: case 12: segments.emplace_back(left, right); break;
                case 6: case 9: segments.emplace_back(bottom, top); break;
                case 5: case 10: {
                    // Saddle: the cell-center sample decides which diagonal
                    // the band connects; the contour isolates the other two
                    // corners.
                    const double center = f(x0 + dx * (i + 0.5), y0 + dy * (j + 0.5));
                    const bool center_neg = negative(center);
                    const bool isolate_bl_tr = (code == 5) ? !center_neg : center_neg;
                    if (isolate_bl_tr) {
                        segments.emplace_back(left, bottom);
                        segments.emplace_back(right, top);
                    } else {
                        segments.emplace_back(bottom, right);
                        segments.emplace_back(top, left);
                    }
                    break;
                }
            }
        }
    }

    // Chain segments through shared edges. Each edge touches at most two
    // segments for a regular contour; walk both ways from every unused
    // segment in creation order.
    std::multimap<long, std::size_t> by_edge;
    for (std::size_t k = 0; k < segments.size(); ++k) {
        by_edge.emplace(segments[k].first, k);
        by_edge.emplace(segments[k].second, k);
    }
    std::vector<bool> used(segments.size(), false);
    PolylineSet out;
    for (std::size_t k = 0; k < segments.size(); ++k) {
        if (used[k]) continue;
        used[k] = true;
        std::vector<long> chain{segments[k].first, segments[k].second};
        // Extend forward from the back, then backward from the front.
        for (int dir = 0; dir < 2; ++dir) {
            for (;;) {
                const long tip = dir == 0 ? chain.back() : chain.front();
                std::size_t next = segments.size();
                auto [lo, hi] = by_edge.equal_range(tip);
                for (auto it = lo; it != hi; ++it)
                    if (!used[it->second]) {
                        next = it->second;
                        break;
                    }
                if (next == segments.size()) break;
                used[next] = true;
                const long other = segments[next].first == tip ? segments[next].second : segments[next].first;
                if (dir == 0)
                    chain.push_back(other);
                else
                    chain.insert(chain.begin(), other);
                if (other == (dir == 0 ? chain.front() : chain.back())) break;  // closed loop
            }
        }
        std::vector<std::pair<double, double>> pts;
        pts.reserve(chain.size());
        for (long id : chain) pts.push_back(edge_point(id));
        out.push_back(std::move(pts));
    }
    return out;
}

namespace detail {

// Clip the infinite line a*x + b*y + c = 0 to the viewbox rectangle;
// returns false when the line misses it.
inline bool clip_line_to_box(double a, double b, double c, double x0, double y0, double x1, double y1,
                             std::pair<double, double>& p0, std::pair<double, double>& p1) {
    const double eps = 1e-9 * (std::abs(x1 - x0) + std::abs(y1 - y0));
    std::vector<std::pair<double, double>> hits;
    auto push = [&](double x, double y) {
        if (x < x0 - eps || x > x1 + eps || y < y0 - eps || y > y1 + eps) return;
        for (const auto& q : hits)
            if (std::abs(q.first - x) <= eps && std::abs(q.second - y) <= eps) return;
        hits.emplace_back(x, y);
    };
    if (b != 0) {
        push(x0, (-c - a * x0) / b);
        push(x1, (-c - a * x1) / b);
    }
    if (a != 0) {
        push((-c - b * y0) / a, y0);
        push((-c - b * y1) / a, y1);
    }
    if (hits.size() < 2) return false;
    // The two extreme points along the line direction.
    std::size_t lo = 0, hi = 0;
    const double dxl = b, dyl = -a;  // direction vector
    double tmin = 1e300, tmax = -1e300;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const double t = hits[i].first * dxl + hits[i].second * dyl;
        if (t < tmin) tmin = t, lo = i;
        if (t > tmax) tmax = t, hi = i;
    }
    if (lo == hi) return false;
    p0 = hits[lo];
    p1 = hits[hi];
    return true;
}

}  // namespace detail

// Deterministic SVG 1.1 document: strings as segments (or full clipped
// lines), envelope polylines on top. Mathematical coordinates are used
// throughout; a single top-level scale(1,-1) flips the y axis.
inline std::string render_scene(const Scene& scene, const std::vector<ImplicitCurve>& curves,
                                const RenderOptions& opts) {
    using detail::fmt;
    const double x0 = to_double(opts.min_x), y0 = to_double(opts.min_y);
    const double w = to_double(opts.width), h = to_double(opts.height);
    if (w <= 0 || h <= 0) throw Error("viewbox must have positive size");
    const double x1 = x0 + w, y1 = y0 + h;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(x0) + " " + fmt(-(y0 + h)) + " " +
           fmt(w) + " " + fmt(h) + "\" width=\"640\" height=\"" + fmt(640 * h / w) + "\">\n";
    svg += "<g transform=\"scale(1,-1)\">\n";
    svg += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
           "\" fill=\"#ffffff\"/>\n";

    for (std::size_t fi = 0; fi < scene.families.size(); ++fi) {
        const LineFamily& fam = scene.families[fi];
        svg += "<g stroke=\"#808080\" stroke-width=\"" + fmt(opts.string_stroke) + "\" fill=\"none\">\n";
        const auto& params =
            fi < scene.sample_parameters.size() ? scene.sample_parameters[fi] : std::vector<Rational>{};
        for (const Rational& t : params) {
            LineCoeffs line;
            try {
                line = line_at(fam, t);
            } catch (const Error&) {
                continue;  // isolated degenerate member: nothing to draw
            }
            std::pair<double, double> p0, p1;
            if (!opts.show_extended_lines && fam.endpoints) {
                const auto ends = fam.endpoints(t);
                p0 = {to_double(ends[0].first), to_double(ends[0].second)};
                p1 = {to_double(ends[1].first), to_double(ends[1].second)};
            } else if (!detail::clip_line_to_box(to_double(line.a), to_double(line.b), to_double(line.c), x0,
                                                 y0, x1, y1, p0, p1)) {
                continue;
            }
            svg += "<line x1=\"" + fmt(p0.first) + "\" y1=\"" + fmt(p0.second) + "\" x2=\"" + fmt(p1.first) +
                   "\" y2=\"" + fmt(p1.second) + "\"/>\n";
        }
        svg += "</g>\n";
    }

    if (opts.show_envelope) {
        for (const ImplicitCurve& curve : curves) {
            svg += "<g stroke=\"#c62828\" stroke-width=\"" + fmt(opts.curve_stroke) +
                   "\" fill=\"none\" stroke-linejoin=\"round\">\n";
            for (const auto& poly : curve_polyline(curve, opts)) {
                if (poly.size() < 2) continue;
                svg += "<polyline points=\"";
                for (std::size_t i = 0; i < poly.size(); ++i) {
                    if (i) svg += " ";
                    svg += fmt(poly[i].first) + "," + fmt(poly[i].second);
                }
                svg += "\"/>\n";
            }
            svg += "</g>\n";
        }
    }

    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace stringart
