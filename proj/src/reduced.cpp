#include "stratakit/reduced.hpp"

#include "stratakit/errors.hpp"

#include <algorithm>

namespace stratakit {

namespace {

std::string seam_label(const IsotropyLattice& lattice, const ConnectablePair& p) {
    if (p.diagonal()) return "C_" + lattice.cls(p.lower).id;
    return "S_" + lattice.cls(p.upper).id + "->" + lattice.cls(p.lower).id;
}

void finish(StratLattice& out, const Relation& generators) {
    out.closure = generators.transitive_closure();
    if (!out.closure.is_acyclic()) fail(ErrorKind::VerificationFailure, "frontier relation has a cycle");
    out.edges = out.closure.transitive_reduction();
}

} // namespace

std::string to_string(PieceKind kind) {
    switch (kind) {
    case PieceKind::Cotangent: return "cotangent";
    case PieceKind::Seam: return "seam";
    case PieceKind::Stratum: return "stratum";
    }
    return "?";
}

std::string to_string(PieceClass c) {
    switch (c) {
    case PieceClass::Symplectic: return "symplectic";
    case PieceClass::CoisotropicProper: return "coisotropic";
    case PieceClass::Lagrangian: return "lagrangian";
    }
    return "?";
}

std::optional<std::size_t> StratLattice::find(std::string_view label) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].label == label) return i;
    return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> StratLattice::labelled_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [a, b] : edges) out.emplace_back(nodes[a].label, nodes[b].label);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ConnectablePair> connectable_pairs(const IsotropyLattice& lattice) {
    std::vector<ConnectablePair> out;
    for (std::size_t i = 0; i < lattice.size(); ++i) out.push_back({i, i});
    // Lattice indices are already in class-id order.
    for (std::size_t h = 0; h < lattice.size(); ++h)
        for (std::size_t l = 0; l < lattice.size(); ++l)
            if (lattice.less(l, h)) out.push_back({h, l});
    return out;
}

Piece piece_dimensions(const ConnectablePair& pair, const IsotropyLattice& lattice) {
    if (!lattice.leq(pair.lower, pair.upper))
        fail(ErrorKind::ClassNotFound, lattice.cls(pair.upper).id + " -> " + lattice.cls(pair.lower).id +
                                           " is not a connectable pair");
    const auto& H = lattice.stratum(pair.upper);
    const auto& L = lattice.stratum(pair.lower);
    const auto k = static_cast<long long>(lattice.spec().k());
    const auto mh = static_cast<long long>(H.dim_stratum), ml = static_cast<long long>(L.dim_stratum);
    const auto dh = static_cast<long long>(H.cls.dim), dl = static_cast<long long>(L.cls.dim);

    Piece p;
    p.pair = pair;
    p.kind = pair.diagonal() ? PieceKind::Cotangent : PieceKind::Seam;
    p.label = seam_label(lattice, pair);
    p.base_class = pair.upper;
    p.dim_V = 2 * (ml - k + dl);
    p.dim_W = mh + ml - 2 * k + dh + dl;
    p.rank = 2 * (mh - k + dh);
    if (p.rank != 2 * p.dim_W - p.dim_V || p.dim_W < 0 || p.dim_W > p.dim_V)
        fail(ErrorKind::CoisotropyIdentityViolation,
             p.label + ": rank " + std::to_string(p.rank) + ", dim W " + std::to_string(p.dim_W) + ", dim V " +
                 std::to_string(p.dim_V));
    if (p.kind == PieceKind::Cotangent)
        p.classification = PieceClass::Symplectic;
    else if (H.dim_quotient == 0)
        p.classification = PieceClass::Lagrangian;
    else
        p.classification = PieceClass::CoisotropicProper;
    return p;
}

StratLattice symplectic_lattice(const IsotropyLattice& lattice) {
    StratLattice out;
    out.kind = LatticeKind::Symplectic;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        Piece p = piece_dimensions({i, i}, lattice);
        p.kind = PieceKind::Stratum;
        p.label = "P_" + lattice.cls(i).id;
        out.nodes.push_back(std::move(p));
    }
    Relation gen(lattice.size());
    for (auto [small, big] : lattice.hasse_edges()) gen.set(big, small);
    finish(out, gen);
    out.open_dense = lattice.principal();
    return out;
}

StratLattice secondary_lattice(std::string_view class_id, const IsotropyLattice& lattice) {
    const std::size_t l = lattice.index(class_id);
    StratLattice out;
    out.kind = LatticeKind::Secondary;
    out.secondary_class = std::string(class_id);
    out.nodes.push_back(piece_dimensions({l, l}, lattice));
    for (std::size_t h = 0; h < lattice.size(); ++h)
        if (lattice.less(l, h)) out.nodes.push_back(piece_dimensions({h, l}, lattice));

    Relation gen(out.nodes.size());
    for (std::size_t a = 1; a < out.nodes.size(); ++a) {
        gen.set(a, 0);
        for (std::size_t b = 1; b < out.nodes.size(); ++b)
            if (lattice.less(out.nodes[b].pair.upper, out.nodes[a].pair.upper)) gen.set(a, b);
    }
    finish(out, gen);
    out.open_dense = 0;
    return out;
}

StratLattice coisotropic_lattice(const IsotropyLattice& lattice) {
    StratLattice out;
    out.kind = LatticeKind::Coisotropic;
    for (const auto& pair : connectable_pairs(lattice)) out.nodes.push_back(piece_dimensions(pair, lattice));

    const std::size_t n = out.nodes.size();
    Relation gen(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const auto& R = out.nodes[r].pair;
            const auto& S = out.nodes[s].pair;
            bool edge = false;
            if (R.diagonal() && S.diagonal())
                edge = lattice.less(S.lower, R.lower);  // C_K -> C_H, H < K
            else if (!R.diagonal() && S.diagonal())
                edge = R.lower == S.lower;  // S_{K->H} -> C_H
            else if (R.diagonal() && !S.diagonal())
                edge = R.lower == S.upper;  // C_K -> S_{K->H}
            else if (R.lower == S.lower)
                edge = lattice.less(S.upper, R.upper);  // S_{K'->H} -> S_{K->H}, K < K'
            else if (R.upper == S.upper)
                edge = lattice.less(S.lower, R.lower);  // S_{K->H'} -> S_{K->H}, H < H'
            if (edge) gen.set(r, s);
        }
    finish(out, gen);
    out.open_dense = lattice.principal();  // diagonal pairs come first, in lattice order
    return out;
}

RefinementResult refinement_check(const StratLattice& coiso, const StratLattice& symp, const IsotropyLattice& lattice) {
    RefinementResult result;
    auto symp_node = [&](std::size_t cls) -> std::optional<std::size_t> {
        return symp.find("P_" + lattice.cls(cls).id);
    };
    result.finer = true;
    for (const auto& piece : coiso.nodes)
        if (!symp_node(piece.pair.lower)) result.finer = false;
    for (std::size_t r = 0; r < coiso.nodes.size() && result.finer; ++r)
        for (std::size_t s = 0; s < coiso.nodes.size(); ++s) {
            if (!coiso.closure(r, s)) continue;
            const auto a = *symp_node(coiso.nodes[r].pair.lower), b = *symp_node(coiso.nodes[s].pair.lower);
            if (a != b && !symp.closure(a, b)) result.finer = false;
        }
    result.strict = result.finer && coiso.nodes.size() > symp.nodes.size();
    return result;
}

const IsotropyClass& projection_image(const Piece& piece, const IsotropyLattice& lattice) {
    return lattice.cls(piece.base_class);
}

bool frontier_compatible(const StratLattice& coiso, const IsotropyLattice& lattice) {
    for (auto [r, s] : coiso.edges)
        if (!lattice.leq(coiso.nodes[s].base_class, coiso.nodes[r].base_class)) return false;
    return true;
}

} // namespace stratakit
