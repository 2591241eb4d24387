#include "stratakit/report.hpp"

#include "stratakit/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace stratakit {

namespace {

Json vector_json(std::span<const Rational> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json subgroup_json(const ClosedSubgroup& h) {
    Json constraints = Json::array();
    for (const auto& row : h.torus.constraints()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        constraints.push_back(std::move(r));
    }
    return Json{{"finite_elements", h.finite}, {"torus_constraints", std::move(constraints)}};
}

Json classes_json(const IsotropyLattice& lattice) {
    Json out = Json::array();
    for (const auto& s : lattice.strata()) {
        Json c;
        c["id"] = s.cls.id;
        c["dim"] = s.cls.dim;
        c["finite_order"] = s.cls.finite_order;
        c["representative"] = subgroup_json(s.cls.representative);
        out.push_back(std::move(c));
    }
    return out;
}

Json strata_json(const IsotropyLattice& lattice) {
    Json out = Json::array();
    for (const auto& s : lattice.strata()) {
        Json j;
        j["class"] = s.cls.id;
        j["witness"] = vector_json(s.witness);
        j["dim_stratum"] = s.dim_stratum;
        j["dim_quotient"] = s.dim_quotient;
        j["slice"] = Json{{"orbit_tangent", s.slice.orbit_tangent.dim()},
                          {"slice", s.slice.slice.dim()},
                          {"slice_fixed", s.slice.slice_fixed.dim()},
                          {"normal", s.slice.normal.dim()}};
        out.push_back(std::move(j));
    }
    return out;
}

Json isotropy_json(const IsotropyLattice& lattice) {
    Json edges = Json::array();
    for (auto [a, b] : lattice.hasse_edges()) edges.push_back(Json::array({lattice.cls(a).id, lattice.cls(b).id}));
    return Json{{"direction", "subgroup"}, {"hasse_edges", std::move(edges)}, {"principal", lattice.cls(lattice.principal()).id}};
}

Json base_report(const char* command, const IsotropyLattice& lattice, const RunOptions& opts) {
    Json r;
    r["schema"] = 1;
    r["command"] = command;
    r["seed"] = opts.seed;
    r["samples"] = opts.samples;
    r["classes"] = classes_json(lattice);
    r["strata"] = strata_json(lattice);
    r["pieces"] = Json::array();
    r["lattices"] = Json{{"isotropy", isotropy_json(lattice)}};
    r["checks"] = Json::object();
    return r;
}

Json set_json(const std::set<std::string>& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

} // namespace

Json to_json(const Piece& piece, const IsotropyLattice& lattice) {
    return Json{{"label", piece.label},
                {"kind", to_string(piece.kind)},
                {"upper", lattice.cls(piece.pair.upper).id},
                {"lower", lattice.cls(piece.pair.lower).id},
                {"dim_W", piece.dim_W},
                {"dim_V", piece.dim_V},
                {"rank", piece.rank},
                {"classification", to_string(piece.classification)},
                {"base_class", lattice.cls(piece.base_class).id}};
}

Json to_json(const StratLattice& lattice) {
    Json nodes = Json::array();
    for (const auto& n : lattice.nodes) nodes.push_back(Json{{"label", n.label}, {"dim", n.dim_W}});
    Json edges = Json::array();
    for (const auto& [a, b] : lattice.labelled_edges()) edges.push_back(Json::array({a, b}));
    Json out{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
    if (lattice.open_dense) out["open_dense"] = lattice.nodes[*lattice.open_dense].label;
    return out;
}

Json lattice_report(const IsotropyLattice& lattice, const RunOptions& opts) {
    return base_report("lattice", lattice, opts);
}

Json reduce_report(const IsotropyLattice& lattice, const RunOptions& opts) {
    Json r = base_report("reduce", lattice, opts);
    const auto coiso = coisotropic_lattice(lattice);
    const auto symp = symplectic_lattice(lattice);
    for (const auto& p : coiso.nodes) r["pieces"].push_back(to_json(p, lattice));

    r["lattices"]["symplectic"] = to_json(symp);
    Json secondary = Json::object();
    for (const auto& s : lattice.strata()) secondary[s.cls.id] = to_json(secondary_lattice(s.cls.id, lattice));
    r["lattices"]["secondary"] = std::move(secondary);
    r["lattices"]["coisotropic"] = to_json(coiso);

    bool identity = true;
    Json by_quotient = Json::array(), by_half_dimension = Json::array();
    for (const auto& p : coiso.nodes) {
        identity = identity && p.rank == 2 * p.dim_W - p.dim_V;
        if (p.classification == PieceClass::Lagrangian) by_quotient.push_back(p.label);
        if (p.kind == PieceKind::Seam && 2 * p.dim_W == p.dim_V) by_half_dimension.push_back(p.label);
    }
    const auto refinement = refinement_check(coiso, symp, lattice);
    r["checks"]["coisotropy_identity"] = identity;
    r["checks"]["lagrangian"] = Json{{"by_quotient_dimension", by_quotient},
                                     {"by_half_dimension", by_half_dimension},
                                     {"agree", by_quotient == by_half_dimension}};
    r["checks"]["refinement"] = Json{{"finer", refinement.finer}, {"strict", refinement.strict}};
    r["checks"]["frontier_compatible"] = frontier_compatible(coiso, lattice);
    return r;
}

Json verify_report(const IsotropyLattice& lattice, const RunOptions& opts, std::vector<std::string>& failures) {
    Json r = reduce_report(lattice, opts);
    r["command"] = "verify";
    for (const char* key : {"coisotropy_identity", "frontier_compatible"})
        if (!r["checks"][key].get<bool>()) failures.push_back(key);
    if (!r["checks"]["lagrangian"]["agree"].get<bool>()) failures.push_back("lagrangian");
    if (!r["checks"]["refinement"]["finer"].get<bool>()) failures.push_back("refinement");

    Json fibers = Json::array();
    std::set<std::string> seen;
    for (const auto& c : verify_fiber_classes(lattice, opts.samples, opts.seed)) {
        fibers.push_back(Json{{"class", c.class_id},
                              {"witness", vector_json(c.witness)},
                              {"predicted", set_json(c.predicted)},
                              {"observed", set_json(c.observed)},
                              {"subset", c.subset},
                              {"equal", c.equal}});
        seen.insert(c.observed.begin(), c.observed.end());
        if (!c.equal) failures.push_back("fiber_classes at witness of " + c.class_id);
    }
    r["checks"]["fiber_classes"] = std::move(fibers);

    std::set<std::string> base;
    for (const auto& s : lattice.strata()) base.insert(s.cls.id);
    r["checks"]["zero_level_classes_equal_base"] = seen == base;
    if (seen != base) failures.push_back("zero_level_classes_equal_base");

    Json conormal = Json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const auto predicted = conormal_orbit_types(lattice, i);
        const auto sampled = sample_conormal_classes(lattice, i, std::max<std::size_t>(1, opts.samples / 10), opts.seed);
        conormal.push_back(Json{{"class", lattice.cls(i).id},
                                {"predicted", set_json(predicted)},
                                {"sampled", set_json(sampled)},
                                {"equal", predicted == sampled}});
        if (predicted != sampled) failures.push_back("conormal_classes of " + lattice.cls(i).id);
    }
    r["checks"]["conormal_classes"] = std::move(conormal);

    const auto& spec = lattice.spec();
    const InvariantSet inv = InvariantSet::from_spec(spec);
    if (inv.relations.empty()) {
        r["checks"]["relations"] = "skipped";
    } else {
        Json rel = Json::array();
        for (const auto& res : check_relations(inv, sample_zero_level(spec, opts.samples, opts.seed), spec.tolerance())) {
            rel.push_back(Json{{"name", res.name},
                               {"kind", res.kind == RelationKind::Equality ? "eq" : "nonneg"},
                               {"max_residual", res.max_residual},
                               {"mean_residual", res.mean_residual},
                               {"violations", res.violations},
                               {"passed", res.passed}});
            if (!res.passed) failures.push_back("relation " + res.name);
        }
        r["checks"]["relations"] = std::move(rel);
    }

    if (spec.invariant_data().region_fixture != "double-cone") {
        r["checks"]["regions"] = "skipped";
        r["checks"]["frontier_crosscheck"] = "skipped";
    } else {
        const std::size_t region_budget = std::max<std::size_t>(1, opts.samples / 10);
        Json regions = Json::array();
        for (const auto& c : verify_piece_regions(lattice, inv, region_budget, opts.seed)) {
            regions.push_back(Json{{"piece", c.piece},
                                   {"expected", c.expected},
                                   {"samples", c.samples},
                                   {"hits", c.hits},
                                   {"tally", c.tally},
                                   {"dim_W", c.dim_W},
                                   {"local_dims", c.local_dims},
                                   {"passed", c.passed}});
            if (!c.passed) failures.push_back("regions of " + c.piece);
        }
        r["checks"]["regions"] = std::move(regions);

        Json frontier = Json::array();
        for (const auto& c : frontier_crosscheck(lattice, coisotropic_lattice(lattice), inv, opts.samples, opts.seed)) {
            frontier.push_back(Json{{"from", c.from},
                                    {"to", c.to},
                                    {"samples", c.samples},
                                    {"found", c.found},
                                    {"max_distance", c.max_distance},
                                    {"passed", c.passed}});
            if (!c.passed) failures.push_back("frontier " + c.from + " -> " + c.to);
        }
        r["checks"]["frontier_crosscheck"] = std::move(frontier);
    }
    r["checks"]["failures"] = failures;
    return r;
}

std::string to_dot(const StratLattice& lattice) {
    const char* name = lattice.kind == LatticeKind::Symplectic ? "symplectic"
                       : lattice.kind == LatticeKind::Secondary ? "secondary"
                                                                : "coisotropic";
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    if (lattice.kind == LatticeKind::Secondary) out << "  label=\"secondary:" << lattice.secondary_class << "\";\n";
    for (const auto& n : lattice.nodes) out << "  \"" << n.label << "\" [dim=" << n.dim_W << "];\n";
    for (const auto& [a, b] : lattice.labelled_edges()) out << "  \"" << a << "\" -> \"" << b << "\";\n";
    out << "}\n";
    return out.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorKind::IoError, "cannot write " + tmp.string());
        out << content;
        if (!out.flush()) fail(ErrorKind::IoError, "cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        fail(ErrorKind::IoError, "cannot rename onto " + path.string() + ": " + ec.message());
    }
}

} // namespace stratakit
