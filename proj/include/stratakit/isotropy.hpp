#pragma once

#include "stratakit/group.hpp"
#include "stratakit/poset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stratakit {

/// Conjugacy class (H) with its canonical representative and a stable label.
struct IsotropyClass {
    ClosedSubgroup representative;
    std::string id;
    std::size_t dim = 0;
    std::size_t finite_order = 1;
};

/// Orthogonal splitting T_m R^n = g.m + S_m^H + N_m M_(H) at a point m.
struct SliceData {
    Subspace orbit_tangent;
    Subspace slice;
    Subspace slice_fixed;
    Subspace normal;
};

struct StratumInfo {
    IsotropyClass cls;
    QVector witness;
    std::size_t dim_stratum = 0;   // dim M_(H)
    std::size_t dim_quotient = 0;  // dim M^(H) = dim M_(H) - dim G + dim H
    SliceData slice;
};

/// Orbit tangent span{A_i m}.
Subspace orbit_tangent(const ActionSpec& spec, std::span<const Rational> m);
SliceData slice_at(const ActionSpec& spec, std::span<const Rational> m);
/// (dim M_(H), dim M^(H)) from the slice data of s.
std::pair<std::size_t, std::size_t> stratum_dimension(const ActionSpec& spec, const StratumInfo& s);

/// Structural label of a subgroup: finite part (Zn, Zm x Zn, Dn, F<order>) joined
/// with the torus part (S1, T<d>, C<e> torsion); "1" for the trivial group.
std::string structural_name(const ActionSpec& spec, const ClosedSubgroup& h);

/// One StratumInfo per realized class of I_M, sorted by class id.
std::vector<StratumInfo> enumerate_orbit_types(const ActionSpec& spec, std::uint64_t seed);

/// The isotropy lattice I_M. Order and Hasse edges use the subgroup direction:
/// an edge i -> j means (H_i) < (H_j).
class IsotropyLattice {
public:
    IsotropyLattice(ActionSpec spec, std::vector<StratumInfo> strata);

    const ActionSpec& spec() const noexcept { return spec_; }
    const std::vector<StratumInfo>& strata() const noexcept { return strata_; }
    std::size_t size() const noexcept { return strata_.size(); }
    const StratumInfo& stratum(std::size_t i) const { return strata_[i]; }
    const IsotropyClass& cls(std::size_t i) const { return strata_[i].cls; }

    /// Reflexive subconjugacy order: leq(i, j) iff (H_i) <= (H_j).
    bool leq(std::size_t i, std::size_t j) const { return order_(i, j); }
    bool less(std::size_t i, std::size_t j) const { return i != j && order_(i, j); }
    const Relation& order() const noexcept { return order_; }
    const std::vector<Edge>& hasse_edges() const noexcept { return hasse_; }
    std::size_t principal() const noexcept { return principal_; }

    std::optional<std::size_t> find(std::string_view id) const;
    /// Throws ClassNotFound.
    std::size_t index(std::string_view id) const;
    std::optional<std::size_t> index_of(const ClosedSubgroup& h) const;

    /// Class of an arbitrary product subgroup; classes outside I_M get a "?" suffix.
    IsotropyClass class_of(const ClosedSubgroup& h) const;
    /// D(H) = {(L) in I_M : (L) <= (H)}, as indices.
    std::vector<std::size_t> down_set(std::size_t i) const;
    std::vector<std::size_t> up_set(std::size_t i) const;

private:
    ActionSpec spec_;
    std::vector<StratumInfo> strata_;
    Relation order_;
    std::vector<Edge> hasse_;
    std::size_t principal_ = 0;
};

/// Throws NoUniqueMinimum if the order has several minimal classes.
IsotropyLattice build_isotropy_lattice(const ActionSpec& spec, std::vector<StratumInfo> strata);
IsotropyLattice build_isotropy_lattice(const ActionSpec& spec, std::uint64_t seed);

} // namespace stratakit
