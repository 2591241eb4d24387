#pragma once

#include "stratakit/kernels.hpp"
#include "stratakit/reduced.hpp"
#include "stratakit/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stratakit {

/// Invariant polynomials over z = (m, p) in R^2n plus relations among their values.
struct InvariantSet {
    std::vector<NamedPolynomial> polynomials;
    std::vector<RelationDecl> relations;
    std::vector<CompiledPolynomial> compiled;
    std::vector<CompiledPolynomial> compiled_relations;

    static InvariantSet from_spec(const ActionSpec& spec);
    bool empty() const noexcept { return polynomials.empty(); }
    std::optional<std::size_t> index(std::string_view name) const;
};

/// Exact check on every element of F combined with quarter-turn torus angles, and a
/// floating check |P(g z) - P(z)| <= tol (1 + |P(z)|) on 200 random (g, z).
/// Throws NonInvariantPolynomial naming the polynomial.
void check_invariance(const ActionSpec& spec, const std::vector<NamedPolynomial>& polys, std::uint64_t seed = 42);

std::vector<std::pair<std::string, double>> eval_invariants(const InvariantSet& inv, std::span<const double> z);
std::vector<std::pair<std::string, Rational>> eval_invariants(const InvariantSet& inv, std::span<const Rational> z);

struct RelationResidual {
    std::string name;
    RelationKind kind = RelationKind::Equality;
    double max_residual = 0.0;  // |r| for equalities, max(0, -r) for sign constraints
    double mean_residual = 0.0;
    std::size_t violations = 0;
    bool passed = true;
};

/// Samples are points z of R^2n. Evaluation runs through the batched kernels.
std::vector<RelationResidual> check_relations(const InvariantSet& inv, const std::vector<std::vector<double>>& samples,
                                              double tolerance);

/// Points (m, p) with m uniform in the unit ball and p uniform in the unit ball of (g.m)°.
std::vector<std::vector<double>> sample_zero_level(const ActionSpec& spec, std::size_t budget, std::uint64_t seed);

enum class ConeLabel { V, E, I };

struct ConeRegion {
    int cone = 1;
    ConeLabel label = ConeLabel::I;
    bool on_B = false;  // on the line sigma1 = -sigma3 (a subset of I)
    std::string name() const;  // "V1", "E2", "I1", ...
    bool operator==(const ConeRegion& o) const { return cone == o.cone && label == o.label; }
};

/// Double-cone coordinates of a zero-level point. Requires the "double-cone" fixture
/// (NotExampleSpec) and |J| within the band (NotOnZeroLevel).
std::pair<ConeRegion, ConeRegion> classify_image(const ActionSpec& spec, const InvariantSet& inv, std::span<const double> z);

/// Exact piece membership of (m, p) in J^{-1}(0): (class of G_m, class of the
/// stabilizer of (m, q)) with q the conormal component of p. Throws NotOnZeroLevel.
ConnectablePair piece_of(const IsotropyLattice& lattice, std::span<const Rational> m, std::span<const Rational> p);

struct PieceSample {
    QVector m;
    QVector p;
    ClosedSubgroup lower_conjugate;  // L' <= H with p's conormal part in Fix(L')
};

/// A random point of the lifted piece of `pair`, built from a base point of
/// M_(H), a cotangent part in S_m^H and a conormal part in Fix(L') ∩ N_m.
PieceSample construct_piece_sample(const IsotropyLattice& lattice, const ConnectablePair& pair, Rng& rng);

/// Rank of the Hilbert-image difference cloud around a piece sample.
std::size_t local_image_dimension(const IsotropyLattice& lattice, const InvariantSet& inv, const ConnectablePair& pair,
                                  const PieceSample& sample, Rng& rng, double tolerance);

struct PieceRegionCheck {
    std::string piece;
    std::string expected;
    std::map<std::string, std::size_t> tally;
    std::size_t samples = 0;
    std::size_t hits = 0;
    long long dim_W = 0;
    std::vector<std::size_t> local_dims;
    bool passed = false;
};

/// Region table for the double-cone fixture, keyed by piece label.
const std::map<std::string, std::string>& double_cone_regions();

std::vector<PieceRegionCheck> verify_piece_regions(const IsotropyLattice& lattice, const InvariantSet& inv,
                                                   std::size_t budget, std::uint64_t seed);

struct FrontierCheck {
    std::string from;
    std::string to;
    std::size_t samples = 0;
    std::size_t found = 0;
    double max_distance = 0.0;
    bool passed = false;
};

/// For each coisotropic Hasse edge R -> S, takes points of R and finds exact points
/// of S within a tiny perturbation; reports the largest Hilbert-image distance.
std::vector<FrontierCheck> frontier_crosscheck(const IsotropyLattice& lattice, const StratLattice& coiso,
                                               const InvariantSet& inv, std::size_t budget, std::uint64_t seed);

} // namespace stratakit
