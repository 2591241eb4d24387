#pragma once

#include "stratakit/isotropy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stratakit {

/// H -> L with (H) >= (L); indices into the isotropy lattice.
struct ConnectablePair {
    std::size_t upper = 0;
    std::size_t lower = 0;
    bool diagonal() const noexcept { return upper == lower; }
};

enum class PieceKind { Cotangent, Seam, Stratum };
enum class PieceClass { Symplectic, CoisotropicProper, Lagrangian };

std::string to_string(PieceKind kind);
std::string to_string(PieceClass c);

/// A piece of P_0. Cotangent is C_L, Seam is S_{H->L}; Stratum is a whole
/// symplectic stratum P_0^(L), used as a node of the symplectic lattice.
struct Piece {
    ConnectablePair pair;
    PieceKind kind = PieceKind::Cotangent;
    std::string label;   // "C_<L>", "S_<H>-><L>", "P_<L>"
    long long dim_W = 0;
    long long dim_V = 0;
    long long rank = 0;
    PieceClass classification = PieceClass::Symplectic;
    std::size_t base_class = 0;  // (H): the piece fibres over M^(H)
};

enum class LatticeKind { Symplectic, Secondary, Coisotropic };

/// Edges R -> S mean R lies in the frontier of S. The isotropy lattice uses the
/// opposite (subgroup) direction.
struct StratLattice {
    LatticeKind kind = LatticeKind::Coisotropic;
    std::string secondary_class;  // Secondary only
    std::vector<Piece> nodes;
    std::vector<Edge> edges;      // Hasse reduction, sorted
    Relation closure;             // full strict frontier order
    std::optional<std::size_t> open_dense;

    std::optional<std::size_t> find(std::string_view label) const;
    /// Edges as label pairs, sorted.
    std::vector<std::pair<std::string, std::string>> labelled_edges() const;
};

/// Diagonal pairs first (by class id), then H > L sorted by (id H, id L).
std::vector<ConnectablePair> connectable_pairs(const IsotropyLattice& lattice);

/// Throws CoisotropyIdentityViolation if rank != 2 dim_W - dim_V.
Piece piece_dimensions(const ConnectablePair& pair, const IsotropyLattice& lattice);

StratLattice symplectic_lattice(const IsotropyLattice& lattice);
/// Throws ClassNotFound.
StratLattice secondary_lattice(std::string_view class_id, const IsotropyLattice& lattice);
StratLattice coisotropic_lattice(const IsotropyLattice& lattice);

struct RefinementResult {
    bool finer = false;
    bool strict = false;
};
RefinementResult refinement_check(const StratLattice& coiso, const StratLattice& symp, const IsotropyLattice& lattice);

/// Orbit-type stratum of M/G that the piece submerses onto: (H) for S_{H->L}, (L) for C_L.
const IsotropyClass& projection_image(const Piece& piece, const IsotropyLattice& lattice);

/// Every Hasse edge R -> S of `coiso` has image(R) >= image(S).
bool frontier_compatible(const StratLattice& coiso, const IsotropyLattice& lattice);

} // namespace stratakit
