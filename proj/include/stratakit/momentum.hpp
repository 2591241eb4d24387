#pragma once

#include "stratakit/isotropy.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace stratakit {

/// Components J_i = <p, A_i m>, one per torus factor.
struct MomentumValue {
    std::vector<double> components;
};

/// Splitting of the zero fiber (g.m)° = (S_m^H)* + N*_m M_(H) at a base point.
/// Covectors are identified with vectors through the Euclidean metric.
struct FiberDecomposition {
    QVector base_point;
    IsotropyClass cls;
    Subspace cotangent_part;
    Subspace conormal_part;
    Subspace annihilator;
};

QVector momentum(const ActionSpec& spec, std::span<const Rational> m, std::span<const Rational> p);
MomentumValue momentum(const ActionSpec& spec, std::span<const double> m, std::span<const double> p);

/// Exact basis of the kernel of p -> (<p, A_i m>)_i.
Subspace fiber_zero_basis(const ActionSpec& spec, std::span<const Rational> m);

/// Throws NonProductStabilizer; the class is resolved against `lattice`.
FiberDecomposition fiber_decomposition(const IsotropyLattice& lattice, std::span<const Rational> m);

/// Isotropy class of (m, p) under the cotangent-lifted action of `spec`, named in `lattice`.
IsotropyClass cotangent_class(const IsotropyLattice& lattice, const ActionSpec& spec, std::span<const Rational> m,
                              std::span<const Rational> p);

/// Classes of (m, p) for `budget` covectors drawn uniformly from the unit ball of
/// (g.m)°, plus a directed search over Fix(L') ∩ (g.m)° for every conjugate L'
/// of a class of I_M inside G_m. Covectors are dyadic combinations of the exact
/// annihilator basis, so every draw lies exactly on J^{-1}(0).
std::set<std::string> sample_fiber_classes(const IsotropyLattice& lattice, std::span<const Rational> m,
                                           std::size_t budget, std::uint64_t seed);
/// Same, with stabilizers taken in `sampling_spec` while classes are named in `lattice`.
std::set<std::string> sample_fiber_classes(const IsotropyLattice& lattice, const ActionSpec& sampling_spec,
                                           std::span<const Rational> m, std::size_t budget, std::uint64_t seed);

/// {(L) in I_M : (L) <= (H)}, by class id.
std::set<std::string> conormal_orbit_types(const IsotropyLattice& lattice, std::size_t h);
/// Sampling cross-check of the above with covectors restricted to N*_m M_(H) at the witness.
std::set<std::string> sample_conormal_classes(const IsotropyLattice& lattice, std::size_t h, std::size_t budget,
                                              std::uint64_t seed);

struct FiberCheck {
    std::string class_id;
    QVector witness;
    std::set<std::string> predicted;
    std::set<std::string> observed;
    bool subset = false;  // every observed class lies in the down-set
    bool equal = false;
};

/// Down-set correspondence at every witness of `lattice`, sampling in `sampling_spec`.
std::vector<FiberCheck> verify_fiber_classes(const IsotropyLattice& lattice, const ActionSpec& sampling_spec,
                                             std::size_t budget, std::uint64_t seed);
std::vector<FiberCheck> verify_fiber_classes(const IsotropyLattice& lattice, std::size_t budget, std::uint64_t seed);

} // namespace stratakit
