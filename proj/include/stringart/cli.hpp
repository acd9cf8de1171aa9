#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stringart/conic.hpp"
#include "stringart/envelope.hpp"
#include "stringart/errors.hpp"
#include "stringart/family.hpp"
#include "stringart/parse.hpp"
#include "stringart/proofs.hpp"
#include "stringart/render.hpp"

namespace stringart::cli {

// Exit codes: 0 success / statement holds, 1 mathematically refuted or
// proof failed, 2 usage error, 3 expression parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;

namespace detail {

using nlohmann::json;

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline Point parse_point(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw Error("expected a point as x,y but got \"" + s + "\"");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

inline LineCoeffs parse_line(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 3) throw Error("expected a line as a,b,c but got \"" + s + "\"");
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

// Parameter lists come either as comma-separated rationals or as an
// inclusive integer range lo..hi.
inline std::vector<Rational> parse_params(const std::string& s) {
    std::vector<Rational> out;
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
        const Rational lo = parse_rational(s.substr(0, dots));
        const Rational hi = parse_rational(s.substr(dots + 2));
        if (den(lo) != 1 || den(hi) != 1) throw Error("range bounds must be integers: \"" + s + "\"");
        if (hi < lo) throw Error("empty parameter range \"" + s + "\"");
        if (hi - lo > 100000) throw Error("parameter range too large");
        for (Rational v = lo; v <= hi; v += 1) out.push_back(v);
        return out;
    }
    for (const std::string& part : split(s, ',')) out.push_back(parse_rational(part));
    if (out.empty()) throw Error("empty parameter list");
    return out;
}

// Curves may arrive as "lhs = rhs"; the right side moves over before
// parsing. Offsets of errors in the right side are shifted back into the
// original text.
inline Polynomial parse_curve(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) return parse_poly(text);
    if (text.find('=', eq + 1) != std::string::npos)
        throw Error("more than one '=' in curve \"" + text + "\"");
    const Polynomial lhs = parse_poly(text.substr(0, eq));
    try {
        return lhs - parse_poly(text.substr(eq + 1));
    } catch (const ParseError& e) {
        throw ParseError(e.kind, e.position + eq + 1);
    }
}

inline LineFamily family_by_name(const std::string& name, const Rational& d) {
    if (name == "cross") return cross_family(d);
    if (name == "diagonal") return diagonal_family(d);
    if (name == "corner") return corner_family(d);
    throw Error("unknown family \"" + name + "\" (expected cross, diagonal or corner)");
}

inline Scene scene_by_name(const std::string& name, const Rational& d) {
    if (name == "cross") return cross_scene(d);
    if (name == "diagonal") return diagonal_scene(d);
    if (name == "corner") return corner_scene(d);
    if (name == "square4") return square4_scene(d);
    throw Error("unknown scene \"" + name + "\" (expected cross, diagonal, corner or square4)");
}

// Scene-dependent default viewbox, sized from d.
inline void default_viewbox(const std::string& scene, const Rational& d, RenderOptions& opts) {
    if (scene == "cross") {
        opts.min_x = -3 * d;
        opts.min_y = -3 * d;
        opts.width = 6 * d;
        opts.height = 6 * d;
    } else if (scene == "diagonal") {
        opts.min_x = -d * 3 / 2;
        opts.min_y = -d * 3 / 2;
        opts.width = 3 * d;
        opts.height = 3 * d;
    } else if (scene == "corner") {
        opts.min_x = -d * 5 / 4;
        opts.min_y = -d / 4;
        opts.width = d * 3 / 2;
        opts.height = d * 3 / 2;
    } else {
        opts.min_x = -d * 5 / 4;
        opts.min_y = -d * 5 / 4;
        opts.width = d * 5 / 2;
        opts.height = d * 5 / 2;
    }
}

inline json rational_json(const Rational& r) { return json(to_string(r)); }

inline json proof_report_json(const ProofReport& rep) {
    json j;
    j["method"] = proof_method_name(rep.method);
    j["success"] = rep.success;
    j["witness"] = format_poly(rep.witness);
    if (rep.counterexample) j["counterexample"] = rational_json(*rep.counterexample);
    json excluded = json::array();
    for (const Rational& r : rep.excluded) excluded.push_back(rational_json(r));
    j["excluded"] = excluded;
    j["steps"] = rep.steps;
    return j;
}

inline void print_proof_report(const ProofReport& rep, std::ostream& out) {
    out << "method: " << proof_method_name(rep.method) << "\n";
    out << "success: " << (rep.success ? "yes" : "no") << "\n";
    out << "witness: " << format_poly(rep.witness) << "\n";
    if (rep.counterexample) out << "counterexample: " << to_string(*rep.counterexample) << "\n";
    if (!rep.excluded.empty()) {
        out << "excluded parameters:";
        for (const Rational& r : rep.excluded) out << " " << to_string(r);
        out << "\n";
    }
    for (const std::string& s : rep.steps) out << "  - " << s << "\n";
}

struct Context {
    bool json_output = false;
    std::map<std::string, std::string> inputs;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;

    int emit(const std::string& command, const std::string& status, const json& result,
             const std::string& text, int code) const {
        if (json_output) {
            json rep;
            rep["command"] = command;
            rep["inputs"] = inputs;
            rep["result"] = result;
            rep["status"] = status;
            *out << rep.dump(2) << "\n";
        } else if (!text.empty()) {
            *out << text;
        }
        return code;
    }
};

inline int cmd_envelope(Context& ctx, const std::string& family, const std::string& d_text,
                        const std::string& param, const std::string& family_poly) {
    const Rational d = parse_rational(d_text);
    EnvelopeResult result = [&] {
        if (family == "ladder") return envelope_constrained(ladder_family(d));
        if (family == "custom") {
            if (param.empty() || family_poly.empty())
                throw Error("custom family needs --param and --family-poly");
            return envelope_unconstrained(make_line_family(parse_poly(family_poly), param));
        }
        return envelope_unconstrained(family_by_name(family, d));
    }();
    const std::string text = format_poly(result.curve.P) + " = 0\n";
    json payload;
    payload["curve"] = format_poly(result.curve.P);
    payload["equation"] = format_poly(result.curve.P) + " = 0";
    payload["degree"] = result.curve.P.total_degree();
    payload["raw_degree"] = result.raw.total_degree();
    payload["pruning_notes"] = result.pruning_notes;
    return ctx.emit("envelope", "ok", payload, text, kExitOk);
}

inline int cmd_classify(Context& ctx, const std::string& curve_text) {
    const ImplicitCurve curve(parse_curve(curve_text));
    const ConicClass cls = classify(curve);
    std::ostringstream text;
    text << conic_class_name(cls) << "\n";
    json payload;
    payload["classification"] = conic_class_name(cls);
    const ConicInvariants inv = conic_invariants(curve);
    payload["invariants"] = {{"delta", rational_json(inv.delta)}, {"det3", rational_json(inv.det3)}};
    if (cls == ConicClass::Parabola) {
        const ParabolaGeometry g = parabola_geometry(curve);
        payload["parabola_geometry"] = {{"numeric", true},
                                        {"focus", {g.focus_x, g.focus_y}},
                                        {"directrix", {{"normal", {g.directrix_nx, g.directrix_ny}},
                                                       {"offset", g.directrix_offset}}},
                                        {"vertex", {g.vertex_x, g.vertex_y}},
                                        {"axis", {g.axis_x, g.axis_y}}};
        text << "focus: (" << g.focus_x << ", " << g.focus_y << ")\n";
        text << "directrix: " << g.directrix_nx << "*x + " << g.directrix_ny << "*y = " << g.directrix_offset
             << "\n";
        text << "vertex: (" << g.vertex_x << ", " << g.vertex_y << ")\n";
    }
    return ctx.emit("classify", "ok", payload, text.str(), kExitOk);
}

inline int cmd_prove(Context& ctx, const std::string& method, const std::string& d_text,
                     const std::string& curve_text, const std::string& family,
                     const std::string& focus_text, const std::string& directrix_text) {
    const Rational d = parse_rational(d_text);
    ProofReport rep;
    if (method == "discriminant") {
        rep = prove_discriminant(d);
    } else if (method == "calculus") {
        rep = prove_calculus_identity(d);
    } else if (method == "tangency") {
        if (curve_text.empty() || family.empty())
            throw Error("tangency proof needs --curve and --family");
        rep = prove_generic_tangency(ImplicitCurve(parse_curve(curve_text)), family_by_name(family, d));
    } else if (method == "reflection") {
        if (family.empty() || focus_text.empty() || directrix_text.empty())
            throw Error("reflection proof needs --family, --focus and --directrix");
        rep = prove_reflection_property(family_by_name(family, d), parse_point(focus_text),
                                        parse_line(directrix_text));
    } else {
        throw Error("unknown method \"" + method + "\" (expected discriminant, calculus, tangency or reflection)");
    }
    std::ostringstream text;
    print_proof_report(rep, text);
    return ctx.emit("prove", rep.success ? "ok" : "proof-failed", proof_report_json(rep), text.str(),
                    rep.success ? kExitOk : kExitRefuted);
}

inline int cmd_refute_circle(Context& ctx, const std::string& family, const std::string& d_text,
                             const std::string& center_text, const std::string& params_text) {
    const Rational d = parse_rational(d_text);
    const LineFamily fam = family_by_name(family, d);
    const Point center = parse_point(center_text);
    const std::vector<Rational> params = parse_params(params_text);
    const RefutationReport rep = refute_circle(fam, center, params);

    std::ostringstream text;
    text << "family: " << family << " (d = " << to_string(d) << "), center (" << to_string(center.first)
         << ", " << to_string(center.second) << ")\n";
    text << "samples: " << rep.profile.entries.size() << "\n";
    text << "min distance^2: " << to_string(rep.profile.min_sq) << " at " << fam.parameter << " = "
         << to_string(rep.witness_min_param) << "\n";
    text << "max distance^2: " << to_string(rep.profile.max_sq) << " at " << fam.parameter << " = "
         << to_string(rep.witness_max_param) << "\n";
    text << "ratio^2: " << to_string(rep.profile.ratio_sq) << "\n";
    if (rep.insufficient_evidence)
        text << "verdict: not refuted (single distinct parameter; insufficient evidence)\n";
    else if (rep.is_circle_compatible)
        text << "verdict: not refuted (all sampled strings are equidistant from the center)\n";
    else
        text << "verdict: refuted (the strings are not tangent to any circle about the center)\n";

    json payload;
    payload["is_circle_compatible"] = rep.is_circle_compatible;
    payload["insufficient_evidence"] = rep.insufficient_evidence;
    payload["min_sq"] = rational_json(rep.profile.min_sq);
    payload["max_sq"] = rational_json(rep.profile.max_sq);
    payload["ratio_sq"] = rational_json(rep.profile.ratio_sq);
    payload["witness_min_param"] = rational_json(rep.witness_min_param);
    payload["witness_max_param"] = rational_json(rep.witness_max_param);
    json entries = json::array();
    for (const auto& [t, d2] : rep.profile.entries)
        entries.push_back({{"parameter", to_string(t)}, {"distance_sq", to_string(d2)}});
    payload["entries"] = entries;

    const bool refuted = !rep.is_circle_compatible;
    return ctx.emit("refute-circle", refuted ? "refuted" : "ok", payload, text.str(),
                    refuted ? kExitRefuted : kExitOk);
}

inline int cmd_render(Context& ctx, const std::string& scene_name, const std::string& d_text,
                      const std::string& svg_out, int grid, const std::string& viewbox_text,
                      bool extended, bool no_envelope, double string_stroke, double curve_stroke) {
    const Rational d = parse_rational(d_text);
    const Scene scene = scene_by_name(scene_name, d);
    RenderOptions opts;
    default_viewbox(scene_name, d, opts);
    if (!viewbox_text.empty()) {
        const auto parts = split(viewbox_text, ',');
        if (parts.size() != 4) throw Error("expected --viewbox as minx,miny,width,height");
        opts.min_x = parse_rational(parts[0]);
        opts.min_y = parse_rational(parts[1]);
        opts.width = parse_rational(parts[2]);
        opts.height = parse_rational(parts[3]);
    }
    opts.grid = grid;
    opts.show_extended_lines = extended;
    opts.show_envelope = !no_envelope;
    opts.string_stroke = string_stroke;
    opts.curve_stroke = curve_stroke;

    std::vector<ImplicitCurve> curves;
    if (opts.show_envelope)
        for (const LineFamily& fam : scene.families) curves.push_back(envelope_unconstrained(fam).curve);

    const std::string svg = render_scene(scene, curves, opts);
    json payload;
    payload["bytes"] = svg.size();
    std::string text;
    if (!svg_out.empty()) {
        std::ofstream f(svg_out, std::ios::binary);
        if (!f) throw Error("cannot open " + svg_out + " for writing");
        f << svg;
        payload["path"] = svg_out;
        text = "wrote " + svg_out + " (" + std::to_string(svg.size()) + " bytes)\n";
    } else if (ctx.json_output) {
        payload["svg"] = svg;
    } else {
        text = svg;
    }
    return ctx.emit("render", "ok", payload, text, kExitOk);
}

inline int cmd_parse(Context& ctx, const std::string& expr) {
    const Polynomial p = parse_poly(expr);
    json payload;
    payload["canonical"] = format_poly(p);
    payload["degree"] = p.total_degree();
    return ctx.emit("parse", "ok", payload, format_poly(p) + "\n", kExitOk);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::json;
    CLI::App app{"String-art geometry toolkit: exact envelopes, conic classification and symbolic proofs"};
    app.require_subcommand(1);

    detail::Context ctx;
    ctx.out = &out;
    ctx.err = &err;

    std::string family = "cross", d_text = "10", param, family_poly;
    std::string curve_text, method, focus_text, directrix_text;
    std::string center_text = "0,0", params_text;
    std::string scene_name = "cross", svg_out, viewbox_text, expr;
    int grid = 256;
    bool extended = false, no_envelope = false;
    double string_stroke = 0.05, curve_stroke = 0.15;

    CLI::App* envelope = app.add_subcommand("envelope", "Compute the envelope curve of a string family");
    envelope->add_option("--family", family, "cross, diagonal, corner, ladder or custom");
    envelope->add_option("--d", d_text, "family scale (rational, p/q or integer)");
    envelope->add_option("--param", param, "parameter variable for a custom family");
    envelope->add_option("--family-poly", family_poly, "polynomial F(x,y,param) for a custom family");

    CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a degree-2 implicit curve");
    classify_cmd->add_option("--curve", curve_text, "curve polynomial (optionally lhs=rhs)")->required();

    CLI::App* prove = app.add_subcommand("prove", "Run one of the symbolic tangency arguments");
    prove->add_option("--method", method, "discriminant, calculus, tangency or reflection")->required();
    prove->add_option("--d", d_text, "family scale");
    prove->add_option("--curve", curve_text, "curve for the tangency method");
    prove->add_option("--family", family, "family name for tangency/reflection");
    prove->add_option("--focus", focus_text, "focus point x,y for the reflection method");
    prove->add_option("--directrix", directrix_text, "directrix line a,b,c for the reflection method");

    CLI::App* refute = app.add_subcommand("refute-circle", "Exact distance-profile circle refutation");
    refute->add_option("--family", family, "cross, diagonal or corner");
    refute->add_option("--d", d_text, "family scale");
    refute->add_option("--center", center_text, "candidate circle center x,y");
    refute->add_option("--params", params_text, "parameter list p1,p2,... or integer range lo..hi")->required();

    CLI::App* render = app.add_subcommand("render", "Render a scene to deterministic SVG");
    render->add_option("--scene", scene_name, "cross, diagonal, corner or square4");
    render->add_option("--d", d_text, "scene scale");
    render->add_option("--svg-out", svg_out, "output path (stdout when omitted)");
    render->add_option("--grid", grid, "marching-squares resolution (>= 8)");
    render->add_option("--viewbox", viewbox_text, "minx,miny,width,height (rationals)");
    render->add_flag("--show-extended-lines", extended, "draw full lines instead of string segments");
    render->add_flag("--no-envelope", no_envelope, "omit the envelope overlay");
    render->add_option("--string-stroke", string_stroke, "stroke width for strings");
    render->add_option("--curve-stroke", curve_stroke, "stroke width for envelope curves");

    CLI::App* parse_cmd = app.add_subcommand("parse", "Parse an expression and print its canonical form");
    parse_cmd->add_option("--expr", expr, "polynomial expression")->required();

    for (CLI::App* sub : {envelope, classify_cmd, prove, refute, render, parse_cmd})
        sub->add_flag("--json", ctx.json_output, "emit a JSON report");

    // CLI11 wants mutable argv-style input.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    auto echo = [&](const CLI::App* sub) {
        for (const CLI::Option* opt : sub->get_options()) {
            if (opt->get_name().rfind("--", 0) != 0) continue;
            if (opt->count() == 0) continue;
            if (opt->get_name() == "--json") continue;
            std::string joined;
            for (const std::string& r : opt->results()) {
                if (!joined.empty()) joined += " ";
                joined += r;
            }
            ctx.inputs[opt->get_name().substr(2)] = joined;
        }
    };

    try {
        if (envelope->parsed()) {
            echo(envelope);
            return detail::cmd_envelope(ctx, family, d_text, param, family_poly);
        }
        if (classify_cmd->parsed()) {
            echo(classify_cmd);
            return detail::cmd_classify(ctx, curve_text);
        }
        if (prove->parsed()) {
            echo(prove);
            return detail::cmd_prove(ctx, method, d_text, curve_text, family, focus_text, directrix_text);
        }
        if (refute->parsed()) {
            echo(refute);
            return detail::cmd_refute_circle(ctx, family, d_text, center_text, params_text);
        }
        if (render->parsed()) {
            echo(render);
            return detail::cmd_render(ctx, scene_name, d_text, svg_out, grid, viewbox_text, extended,
                                      no_envelope, string_stroke, curve_stroke);
        }
        if (parse_cmd->parsed()) {
            echo(parse_cmd);
            return detail::cmd_parse(ctx, expr);
        }
        err << "no subcommand given\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        const std::string cmd = app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();
        json result;
        result["error"] = {{"kind", parse_error_kind_name(e.kind)},
                           {"offset", e.position},
                           {"message", e.what()}};
        err << e.what() << "\n";
        ctx.emit(cmd, "error", result, "", kExitParse);
        return kExitParse;
    } catch (const Error& e) {
        const std::string cmd = app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();
        json result;
        result["error"] = {{"kind", "domain"}, {"message", e.what()}};
        err << e.what() << "\n";
        ctx.emit(cmd, "error", result, "", kExitUsage);
        return kExitUsage;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace stringart::cli
