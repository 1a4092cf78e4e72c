#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lfd/bracket.hpp"
#include "lfd/diagram.hpp"
#include "lfd/invariants.hpp"
#include "lfd/moves.hpp"
#include "lfd/pretzel.hpp"
#include "lfd/realize.hpp"
#include "lfd/render.hpp"
#include "lfd/ribbon.hpp"

using json = nlohmann::ordered_json;
using namespace lfd;

namespace {

// exit codes: 0 success, 1 check failure, 2 usage or non-realizable input,
// 3 internal assertion
constexpr int exit_ok = 0, exit_check = 1, exit_usage = 2, exit_internal = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

FrontDiagram load(const std::string& path) { return parse_lfd(slurp(path)); }

void emit(const json& j, const std::string& report) {
    if (report == "json")
        std::cout << j.dump(2) << "\n";
    else {
        // flat human-facing key: value lines
        for (auto& [k, v] : j.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                      << "\n";
    }
}

json triple(const std::array<int, 3>& a) { return json::array({a[0], a[1], a[2]}); }

json invariant_report(const FrontDiagram& d) {
    json j;
    j["mode"] = d.mode == Mode::theta ? "theta" : d.mode == Mode::knot ? "knot" : "trivalent";
    if (d.mode == Mode::knot) {
        CycleInvariants k = knot_invariants(d);
        j["tb"] = k.tb;
        j["rot"] = k.rot;
        j["writhe"] = k.writhe;
        return j;
    }
    ThetaInvariants inv = theta_invariants(d);
    std::array<int, 3> tb{}, rot{};
    for (int i = 0; i < 3; i++) tb[i] = inv.cycle[i].tb, rot[i] = inv.cycle[i].rot;
    j["tb"] = triple(tb);
    j["rot"] = triple(rot);
    j["R"] = inv.rotation_defect();
    try {
        CornerClass c = classify_corner_pattern(d);
        j["corner_row"] = c.row;
    } catch (const ValidationError&) {
        j["corner_row"] = nullptr;  // not in standard form
    }
    return j;
}

int cmd_validate(const std::string& file, const std::string& report) {
    json j;
    j["file"] = file;
    try {
        FrontDiagram d = load(file);
        Sweep s = sweep_diagram(d);
        j["valid"] = true;
        j["events"] = (int)d.events.size();
        j["crossings"] = (int)s.crossings.size();
        j["edges"] = (int)d.edges.size();
        j["vertices"] = (int)d.vertices.size();
        emit(j, report);
        return exit_ok;
    } catch (const ValidationError& e) {
        j["valid"] = false;
        j["error"] = e.what();
        emit(j, report);
        return exit_check;
    }
}

int cmd_invariants(const std::string& file, const std::string& report) {
    emit(invariant_report(load(file)), report);
    return exit_ok;
}

int cmd_realize(std::array<int, 3> tb, std::array<int, 3> rot, const std::string& out,
                const std::string& report) {
    Realizability r = theta_realizable(tb, rot);
    if (!r.ok) {
        std::cerr << "not realizable: " << r.reason << "\n";
        return exit_usage;
    }
    RealizationPlan plan;
    FrontDiagram d = realize_theta(tb, rot, &plan);
    std::string text = serialize_lfd(d);
    if (!out.empty()) {
        std::ofstream of(out, std::ios::binary);
        of << text;
    }
    json j;
    j["tb"] = triple(tb);
    j["rot"] = triple(rot);
    j["condition"] = plan.condition;
    j["events"] = (int)d.events.size();
    j["recomputed"] = invariant_report(d);
    if (!out.empty()) j["out"] = out;
    emit(j, report);
    if (out.empty() && report != "json") std::cout << text;
    return exit_ok;
}

int cmd_pushoff(const std::string& file, const std::string& report) {
    PushOff po = push_off(load(file));
    json j;
    j["vertex_type"] = vertex_type_name(po.vtype);
    j["components"] = json::array();
    for (auto& c : po.components) j["components"].push_back({{"label", c.label}, {"sl", c.sl}});
    j["linking"] = po.linking;
    j["crossings"] = po.link.crossing_count();
    emit(j, report);
    return exit_ok;
}

int cmd_pretzel_check(const std::string& file, int cap, const std::string& report) {
    PretzelReport pr = verify_pretzel(load(file), cap);
    json j;
    j["tb"] = triple(pr.tb);
    j["coefficients"] = triple(pr.coeffs.a);
    j["push_components"] = pr.push_components;
    j["pretzel_components"] = pr.pretzel_components;
    j["push_crossings"] = pr.push_crossings;
    j["pretzel_crossings"] = pr.pretzel_crossings;
    j["mirror_match"] = pr.mirror_match;
    j["checks"] = json::array();
    for (auto& c : pr.checks)
        j["checks"].push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    j["passed"] = pr.passed();
    emit(j, report);
    return pr.passed() ? exit_ok : exit_check;
}

std::string canonical_rotation(std::vector<std::string> v) {
    std::string best;
    for (size_t i = 0; i < v.size(); i++) {
        std::string s;
        for (size_t k = 0; k < v.size(); k++) s += v[(i + k) % v.size()] + ",";
        if (best.empty() || s < best) best = s;
    }
    return best;
}

struct FuzzProbe {
    std::string invariants;
    std::string orders;
    int push_components = 0;
};

FuzzProbe probe(const FrontDiagram& d) {
    FuzzProbe p;
    if (d.mode == Mode::theta) {
        ThetaInvariants inv = theta_invariants(d);
        for (auto& c : inv.cycle)
            p.invariants += std::to_string(c.tb) + "/" + std::to_string(c.rot) + ";";
        Sweep s = sweep_diagram(d);
        for (auto& v : d.vertices)
            p.orders += canonical_rotation(vertex_cyclic_order(s, v.name)) + "|";
    } else {
        CycleInvariants k = knot_invariants(d);
        p.invariants = std::to_string(k.tb) + "/" + std::to_string(k.rot);
    }
    p.push_components = (int)push_off(d).components.size();
    return p;
}

int cmd_fuzz(const std::string& file, int walks, int steps, std::uint64_t seed,
             const std::string& report) {
    FrontDiagram d0 = load(file);
    FuzzProbe base = probe(d0);
    json j;
    j["walks"] = walks;
    j["steps"] = steps;
    j["seed"] = seed;
    j["checks"] = {{"invariant_vector", "pass"},
                   {"cyclic_orders", "pass"},
                   {"pushoff_components", "pass"}};
    int failures = 0;
    for (int w = 0; w < walks; w++) {
        WalkResult r = random_walk(d0, steps, seed + (std::uint64_t)w);
        // replay the trace one move at a time to pin the first offending step
        FrontDiagram d = d0;
        for (size_t k = 0; k < r.trace.size(); k++) {
            d = apply_move(d, r.trace[k]);
            FuzzProbe p = probe(d);
            std::string bad;
            if (p.invariants != base.invariants) bad = "invariant_vector";
            else if (p.orders != base.orders) bad = "cyclic_orders";
            else if (p.push_components != base.push_components) bad = "pushoff_components";
            if (bad.empty()) continue;
            failures++;
            j["checks"][bad] = "fail";
            json t = json::array();
            for (size_t q = 0; q <= k; q++)
                t.push_back(move_type_name(r.trace[q].type) + "@" +
                            std::to_string(r.trace[q].pos));
            j["failure"] = {{"walk", w}, {"step", (int)k + 1}, {"check", bad}, {"trace", t}};
            break;
        }
        if (failures) break;
    }
    j["failures"] = failures;
    emit(j, report);
    return failures ? exit_check : exit_ok;
}

int cmd_render(const std::string& file, const std::string& format, bool pushoff,
               const std::string& out) {
    FrontDiagram d = load(file);
    RenderFormat f = format == "ascii" ? RenderFormat::ascii : RenderFormat::svg;
    std::string text = pushoff ? render(push_off(d).link, f) : render(d, f);
    if (out.empty())
        std::cout << text;
    else {
        std::ofstream of(out, std::ios::binary);
        of << text;
    }
    return exit_ok;
}

std::array<int, 3> parse_triple(const std::string& s) {
    std::array<int, 3> a{};
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> a[0] >> c1 >> a[1] >> c2 >> a[2]) || c1 != ',' || c2 != ',')
        throw CLI::ValidationError("expected three comma-separated integers, got '" + s + "'");
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"front-diagram toolkit: invariants, realization, push-offs, "
                 "pretzel certification, move fuzzing, rendering"};
    app.require_subcommand(1);

    std::string file, report = "text", out, format = "svg", tb_s, rot_s;
    int cap = -1, walks = 100, steps = 50;
    std::uint64_t seed = 1;
    bool pushoff_flag = false;

    auto add_report = [&](CLI::App* c) {
        c->add_option("--report", report, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* validate = app.add_subcommand("validate", "parse and check a diagram file");
    validate->add_option("file", file)->required();
    add_report(validate);

    auto* invariants = app.add_subcommand("invariants", "classical invariants of a diagram");
    invariants->add_option("file", file)->required();
    add_report(invariants);

    auto* realize = app.add_subcommand("realize", "construct a diagram with prescribed invariants");
    realize->add_option("--tb", tb_s, "tb triple a,b,c")->required();
    realize->add_option("--rot", rot_s, "rot triple p,q,r")->required();
    realize->add_option("--out", out, "write the diagram here");
    add_report(realize);

    auto* pushoff = app.add_subcommand("pushoff", "transverse push-off of a diagram");
    pushoff->add_option("file", file)->required();
    add_report(pushoff);

    auto* pretzel = app.add_subcommand("pretzel-check", "certify the pretzel classification");
    pretzel->add_option("file", file)->required();
    pretzel->add_option("--cap", cap, "crossing cap for the polynomial oracle");
    add_report(pretzel);

    auto* fuzz = app.add_subcommand("fuzz", "random-walk move fuzzing with invariant checks");
    fuzz->add_option("file", file)->required();
    fuzz->add_option("--walks", walks);
    fuzz->add_option("--steps", steps);
    fuzz->add_option("--seed", seed);
    add_report(fuzz);

    auto* rendercmd = app.add_subcommand("render", "draw the diagram");
    rendercmd->add_option("file", file)->required();
    rendercmd->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii"}));
    rendercmd->add_flag("--pushoff", pushoff_flag, "render the push-off link instead");
    rendercmd->add_option("-o,--out", out, "write here instead of stdout");

    try {
        app.parse(argc, argv);
        if (*validate) return cmd_validate(file, report);
        if (*invariants) return cmd_invariants(file, report);
        if (*realize) return cmd_realize(parse_triple(tb_s), parse_triple(rot_s), out, report);
        if (*pushoff) return cmd_pushoff(file, report);
        if (*pretzel) return cmd_pretzel_check(file, cap, report);
        if (*fuzz) return cmd_fuzz(file, walks, steps, seed, report);
        if (*rendercmd) return cmd_render(file, format, pushoff_flag, out);
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? exit_usage : exit_ok;
    } catch (const NotRealizable& e) {
        std::cerr << "not realizable: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ValidationError& e) {
        std::cerr << "invalid diagram: " << e.what() << "\n";
        return exit_usage;
    } catch (const CrossingCapExceeded& e) {
        std::cerr << "crossing cap exceeded: " << e.count << " > " << e.cap << "\n";
        return exit_usage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
