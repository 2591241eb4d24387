#include "oracles.hpp"

#include "stratakit/errors.hpp"
#include "stratakit/harness.hpp"
#include "stratakit/momentum.hpp"
#include "stratakit/reduced.hpp"
#include "stratakit/report.hpp"
#include "stratakit/spec_io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace stratakit;

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;
using Clock = std::chrono::steady_clock;

std::string cli_path;

ActionSpec bundled(const std::string& name) {
    return load_spec_file(std::string(STRATAKIT_DATA_DIR) + "/" + name + ".json");
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Edges sorted(Edges e) {
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<std::string> labels(const StratLattice& s) {
    std::vector<std::string> out;
    for (const auto& n : s.nodes) out.push_back(n.label);
    std::sort(out.begin(), out.end());
    return out;
}

std::string capture(const std::string& args) {
    const std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    if (pclose(pipe) != 0) out += "\n<nonzero exit>";
    return out;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome criterion1() {
    const auto start = Clock::now();
    const auto lattice = build_isotropy_lattice(bundled("example"), 42);
    const double elapsed = seconds_since(start);
    Edges edges;
    for (auto [a, b] : lattice.hasse_edges()) edges.emplace_back(lattice.cls(a).id, lattice.cls(b).id);
    const bool shape = test::class_ids(lattice) == std::set<std::string>{"1", "S1", "Z2", "Z2xS1"} &&
                       sorted(edges) == Edges{{"1", "S1"}, {"1", "Z2"}, {"S1", "Z2xS1"}, {"Z2", "Z2xS1"}} &&
                       lattice.cls(lattice.principal()).id == "1";
    std::ostringstream d;
    d << lattice.size() << " classes, " << edges.size() << " Hasse edges, " << elapsed << " s";
    return {shape && elapsed < 1.0, d.str()};
}

Outcome criterion2() {
    const auto lattice = build_isotropy_lattice(bundled("example"), 42);
    const auto coiso = coisotropic_lattice(lattice);
    const Edges expected = sorted({{"C_Z2xS1", "S_Z2xS1->Z2"},
                                   {"C_Z2xS1", "S_Z2xS1->S1"},
                                   {"S_Z2xS1->Z2", "C_Z2"},
                                   {"S_Z2xS1->Z2", "S_Z2xS1->1"},
                                   {"S_Z2xS1->S1", "C_S1"},
                                   {"S_Z2xS1->S1", "S_Z2xS1->1"},
                                   {"C_Z2", "S_Z2->1"},
                                   {"C_S1", "S_S1->1"},
                                   {"S_Z2xS1->1", "S_Z2->1"},
                                   {"S_Z2xS1->1", "S_S1->1"},
                                   {"S_Z2->1", "C_1"},
                                   {"S_S1->1", "C_1"}});
    const std::string spec = std::string(STRATAKIT_DATA_DIR) + "/example.json";
    const auto dot1 = capture("export-dot '" + spec + "' --which coisotropic");
    const auto dot2 = capture("export-dot '" + spec + "' --which coisotropic");
    const bool stable = dot1 == dot2 && dot1 == to_dot(coiso);
    std::ostringstream d;
    d << coiso.nodes.size() << " nodes, " << coiso.edges.size() << " edges, DOT " << (stable ? "stable" : "unstable");
    return {coiso.nodes.size() == 9 && sorted(coiso.labelled_edges()) == expected && stable, d.str()};
}

Outcome criterion3() {
    const auto lattice = build_isotropy_lattice(bundled("example"), 42);
    struct Expected {
        const char* cls;
        std::vector<std::string> nodes;
        Edges edges;
    };
    const std::vector<Expected> table = {
        {"Z2xS1", {"C_Z2xS1"}, {}},
        {"Z2", {"C_Z2", "S_Z2xS1->Z2"}, {{"S_Z2xS1->Z2", "C_Z2"}}},
        {"S1", {"C_S1", "S_Z2xS1->S1"}, {{"S_Z2xS1->S1", "C_S1"}}},
        {"1",
         {"C_1", "S_S1->1", "S_Z2->1", "S_Z2xS1->1"},
         {{"S_S1->1", "C_1"}, {"S_Z2->1", "C_1"}, {"S_Z2xS1->1", "S_S1->1"}, {"S_Z2xS1->1", "S_Z2->1"}}},
    };
    std::size_t matched = 0;
    for (const auto& e : table) {
        const auto sec = secondary_lattice(e.cls, lattice);
        if (labels(sec) == e.nodes && sorted(sec.labelled_edges()) == e.edges) ++matched;
    }
    return {matched == table.size(), std::to_string(matched) + "/4 secondary lattices match"};
}

Outcome criterion4() {
    const auto lattice = build_isotropy_lattice(bundled("example"), 42);
    const auto coiso = coisotropic_lattice(lattice);
    const std::map<std::string, long long> table = {{"C_1", 4},     {"C_Z2", 2},        {"C_S1", 2},
                                                    {"C_Z2xS1", 0}, {"S_Z2->1", 3},     {"S_S1->1", 3},
                                                    {"S_Z2xS1->1", 2}, {"S_Z2xS1->Z2", 1}, {"S_Z2xS1->S1", 1}};
    auto cone_dim = [](char label) { return label == 'V' ? 0 : label == 'E' ? 1 : 2; };
    std::size_t ok = 0;
    for (const auto& p : coiso.nodes) {
        const auto it = table.find(p.label);
        const auto& region = double_cone_regions().at(p.label);
        const auto x = region.find('x');
        const long long from_cones = cone_dim(region[0]) + cone_dim(region[x + 1]);
        if (it != table.end() && it->second == p.dim_W && from_cones == p.dim_W) ++ok;
    }
    return {ok == 9 && coiso.nodes.size() == 9, std::to_string(ok) + "/9 dimensions match formula and cone regions"};
}

Outcome criterion5() {
    std::size_t pieces = 0;
    std::ostringstream d;
    for (const char* name : {"example", "z2_line", "s1_plane", "z2z2_plane", "trivial"}) {
        const auto lattice = build_isotropy_lattice(bundled(name), 42);
        for (const auto& pair : connectable_pairs(lattice)) {
            try {
                const auto p = piece_dimensions(pair, lattice);
                if (p.rank != 2 * p.dim_W - p.dim_V) return {false, std::string("identity fails in ") + name};
                ++pieces;
            } catch (const Error& e) {
                return {false, e.what()};
            }
        }
    }
    d << "identity holds on " << pieces << " pieces across 5 specs";
    return {true, d.str()};
}

Outcome criterion6() {
    const auto coiso = coisotropic_lattice(build_isotropy_lattice(bundled("example"), 42));
    std::vector<std::string> by_class, by_half;
    for (const auto& p : coiso.nodes) {
        if (p.classification == PieceClass::Lagrangian) by_class.push_back(p.label);
        if (!p.pair.diagonal() && 2 * p.dim_W == p.dim_V) by_half.push_back(p.label);
    }
    std::sort(by_class.begin(), by_class.end());
    std::sort(by_half.begin(), by_half.end());
    const std::vector<std::string> expected = {"S_Z2xS1->1", "S_Z2xS1->S1", "S_Z2xS1->Z2"};
    std::string d = "Lagrangian:";
    for (const auto& l : by_class) d += " " + l;
    return {by_class == expected && by_half == expected, d};
}

Outcome criterion7() {
    std::ostringstream d;
    bool all = true;
    for (const char* name : {"example", "trivial", "z2_line", "s1_plane", "z2z2_plane"}) {
        const auto start = Clock::now();
        const auto lattice = build_isotropy_lattice(bundled(name), 42);
        bool equal = true, subset = true;
        for (const auto& c : verify_fiber_classes(lattice, 10000, 42)) {
            equal = equal && c.equal;
            subset = subset && c.subset;
        }
        for (const auto& c : verify_fiber_classes(lattice, 1, 42)) subset = subset && c.subset;
        const double elapsed = seconds_since(start);
        all = all && equal && subset && elapsed < 10.0;
        d << name << " " << (equal && subset ? "ok" : "MISMATCH") << " " << elapsed << " s; ";
    }
    return {all, d.str()};
}

Outcome criterion8() {
    const auto spec = bundled("example");
    const auto inv = InvariantSet::from_spec(spec);
    const auto samples = sample_zero_level(spec, 100000, 42);
    bool ok = samples.size() == 100000;
    std::ostringstream d;
    d << samples.size() << " samples;";
    for (const auto& r : check_relations(inv, samples, 1e-9)) {
        ok = ok && r.passed && r.violations == 0 && r.max_residual <= 1e-9;
        d << " " << r.name << " max " << r.max_residual;
    }
    return {ok, d.str()};
}

Outcome criterion9() {
    const auto lattice = build_isotropy_lattice(bundled("example"), 42);
    const auto inv = InvariantSet::from_spec(lattice.spec());
    const auto checks = verify_piece_regions(lattice, inv, 1000, 42);
    bool ok = checks.size() == 9;
    std::size_t hits = 0, total = 0;
    for (const auto& c : checks) {
        ok = ok && c.passed && c.hits == c.samples && c.samples == 1000;
        for (auto dim : c.local_dims) ok = ok && static_cast<long long>(dim) == c.dim_W;
        hits += c.hits;
        total += c.samples;
    }
    return {ok, std::to_string(hits) + "/" + std::to_string(total) + " samples in the listed regions, local dims match"};
}

Outcome criterion10() {
    std::vector<ActionSpec> specs = {bundled("trivial"), bundled("z2_line"), bundled("z2z2_plane")};
    specs.push_back(load_spec(R"({"n": 2, "finite_generators": [[[0,-1],[1,0]], [[1,0],[0,-1]]]})"));
    specs.push_back(load_spec(R"({"n": 3, "finite_generators": [[[0,1,0],[0,0,1],[1,0,0]], [[0,1,0],[1,0,0],[0,0,1]]]})"));
    specs.push_back(load_spec(R"({"n": 3, "finite_generators": [[[-1,0,0],[0,1,0],[0,0,1]], [[0,1,0],[1,0,0],[0,0,1]], [[1,0,0],[0,1,0],[0,0,-1]]]})"));
    std::size_t ok = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto lattice = build_isotropy_lattice(specs[i], 42);
        if (test::brute_force_classes(lattice, test::integer_grid(specs[i].n(), 10000, 42 + i)) == test::class_ids(lattice)) ++ok;
    }
    return {ok == specs.size(), std::to_string(ok) + "/" + std::to_string(specs.size()) + " finite-group specs agree on 10^4 grid points"};
}

Outcome criterion11() {
    const std::string spec = std::string(STRATAKIT_DATA_DIR) + "/example.json";
    const auto a = capture("reduce '" + spec + "'");
    const auto b = capture("reduce '" + spec + "'");
    const bool ok = !a.empty() && a == b && a.find("<nonzero exit>") == std::string::npos;
    return {ok, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-stratakit-cli>\n";
        return 2;
    }
    cli_path = argv[1];
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7, criterion8,
                                                            criterion9, criterion10, criterion11};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << o.detail << std::endl;
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
