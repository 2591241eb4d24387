#pragma once

#include "stratakit/integer_lattice.hpp"
#include "stratakit/polynomial.hpp"
#include "stratakit/rational.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stratakit {

inline constexpr std::size_t kDefaultGroupCap = 256;
inline constexpr double kDefaultTolerance = 1e-9;

/// Finite orthogonal matrix group F, enumerated by closure from its generators.
/// Element 0 is the identity; the order of the remaining elements is the
/// breadth-first order of the closure and is stable for a fixed generator list.
class FiniteGroup {
public:
    FiniteGroup() = default;

    /// Throws InfiniteFiniteGroup once the closure exceeds `cap` elements.
    static FiniteGroup generate(const std::vector<QMatrix>& generators, std::size_t n, std::size_t cap);

    std::size_t order() const noexcept { return matrices_.size(); }
    const QMatrix& matrix(std::size_t e) const { return matrices_[e]; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t conjugate(std::size_t f, std::size_t h) const { return multiply(multiply(f, h), inverse(f)); }
    std::size_t element_order(std::size_t a) const;
    const std::vector<std::size_t>& generator_indices() const noexcept { return generators_; }

    /// Same abstract group acting diagonally on R^n x R^n.
    FiniteGroup doubled() const;

private:
    std::vector<QMatrix> matrices_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> generators_;
};

/// Closed subgroup {theta : w . theta = 0 mod 2pi for all w in L} of the torus T^k,
/// held by the Hermite form of the constraint lattice L (Pontryagin dual picture).
class TorusSubgroup {
public:
    TorusSubgroup() = default;
    explicit TorusSubgroup(std::size_t k) : k_(k) {}

    static TorusSubgroup from_constraints(std::vector<IntVector> rows, std::size_t k);
    static TorusSubgroup full(std::size_t k) { return TorusSubgroup(k); }
    static TorusSubgroup trivial(std::size_t k);

    std::size_t rank() const noexcept { return k_; }
    std::size_t dim() const noexcept { return k_ - hnf_.size(); }
    /// Invariant factors > 1 of the component group.
    std::vector<Integer> torsion() const;
    Integer components() const;
    const std::vector<IntVector>& constraints() const noexcept { return hnf_; }

    /// other is a subgroup of *this.
    bool contains(const TorusSubgroup& other) const;
    /// The character theta -> w . theta is trivial on this subgroup.
    bool character_trivial(const IntVector& weight) const { return lattice_contains(hnf_, weight); }
    TorusSubgroup intersect(const TorusSubgroup& other) const;

    friend bool operator==(const TorusSubgroup& a, const TorusSubgroup& b) { return a.k_ == b.k_ && a.hnf_ == b.hnf_; }
    friend bool operator<(const TorusSubgroup& a, const TorusSubgroup& b) { return lexicographic_less(a.hnf_, b.hnf_); }

private:
    std::size_t k_ = 0;
    std::vector<IntVector> hnf_;
};

/// Sorted element indices of a subgroup of F.
using FiniteSubgroup = std::vector<std::size_t>;

/// Product-form closed subgroup H_F x H_T of G = F x T^k.
struct ClosedSubgroup {
    FiniteSubgroup finite;
    TorusSubgroup torus;

    std::size_t dim() const noexcept { return torus.dim(); }
    std::size_t finite_order() const noexcept { return finite.size(); }
    /// other is a subgroup of *this (no conjugation).
    bool contains(const ClosedSubgroup& other) const;

    friend bool operator==(const ClosedSubgroup& a, const ClosedSubgroup& b) {
        return a.finite == b.finite && a.torus == b.torus;
    }
    friend bool operator<(const ClosedSubgroup& a, const ClosedSubgroup& b) {
        if (a.finite != b.finite) return a.finite < b.finite;
        return a.torus < b.torus;
    }
};

/// An angle on the circle: exact rational turns when possible, else radians.
class Angle {
public:
    Angle() : turns_(Rational(0)) {}
    static Angle from_turns(const Rational& turns);
    static Angle from_radians(double radians);

    bool exact() const noexcept { return turns_.has_value(); }
    const Rational& turns() const { return *turns_; }
    double radians() const;

    Angle operator+(const Angle& other) const;
    Angle operator-() const;
    Angle scaled(long long factor) const;

    friend bool operator==(const Angle& a, const Angle& b);

private:
    std::optional<Rational> turns_;
    double radians_ = 0.0;
};

struct GroupElement {
    std::size_t finite = 0;
    std::vector<Angle> torus;
};

struct TorusBlock {
    std::size_t first = 0;   // 0-based coordinate indices of the rotation plane
    std::size_t second = 0;
};

/// Optional polynomial data carried by a spec document.
struct InvariantData {
    std::vector<NamedPolynomial> invariants;
    std::vector<RelationDecl> relations;
    std::string region_fixture;
};

/// G = F x (S^1)^k acting orthogonally on R^n: F by rational matrices, the torus
/// by weighted rotations of disjoint coordinate planes. Immutable once built.
class ActionSpec {
public:
    /// `weights` is k x (#blocks). Validates orthogonality, finiteness (<= cap),
    /// block disjointness and commutation of F with the torus.
    ActionSpec(std::size_t n, std::vector<QMatrix> generators, std::vector<TorusBlock> blocks,
               std::vector<std::vector<long long>> weights, double tolerance = kDefaultTolerance,
               std::size_t group_cap = kDefaultGroupCap, InvariantData invariant_data = {});

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    double tolerance() const noexcept { return tolerance_; }
    const FiniteGroup& finite_group() const noexcept { return *group_; }
    const std::vector<QMatrix>& generators() const noexcept { return generators_; }
    const std::vector<TorusBlock>& blocks() const noexcept { return blocks_; }
    long long weight(std::size_t factor, std::size_t block) const { return weights_[factor][block]; }
    const std::vector<std::vector<long long>>& weights() const noexcept { return weights_; }
    /// Character of block j as a vector in Z^k.
    IntVector block_character(std::size_t block) const;
    /// Lie-algebra generator A_i of torus factor i (integer skew matrix).
    const QMatrix& torus_generator(std::size_t factor) const { return torus_generators_[factor]; }
    /// Coordinates not in any block (fixed by the torus).
    const std::vector<std::size_t>& free_coordinates() const noexcept { return free_coordinates_; }

    const InvariantData& invariant_data() const noexcept { return invariant_data_; }
    std::size_t group_cap() const noexcept { return group_cap_; }

    /// Same spec with a different tolerance.
    ActionSpec with_tolerance(double tolerance) const;

    /// The diagonal action on T*R^n = R^n x R^n.
    const ActionSpec& cotangent() const;
    bool is_cotangent_lift() const noexcept { return lifted_; }

    GroupElement identity() const;
    GroupElement element(std::size_t finite, std::vector<Angle> angles) const;

private:
    ActionSpec() = default;
    void build_derived();

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    double tolerance_ = kDefaultTolerance;
    std::size_t group_cap_ = kDefaultGroupCap;
    std::vector<QMatrix> generators_;
    std::vector<TorusBlock> blocks_;
    std::vector<std::vector<long long>> weights_;
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<QMatrix> torus_generators_;
    std::vector<std::size_t> free_coordinates_;
    InvariantData invariant_data_;
    bool lifted_ = false;
    std::shared_ptr<const ActionSpec> cotangent_;
};

// ---------------------------------------------------------------- operations

GroupElement compose(const ActionSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const ActionSpec& spec, const GroupElement& g);
bool same_element(const GroupElement& a, const GroupElement& b);

/// Exact action; requires every weighted block angle to be a quarter-turn multiple
/// (throws InexactRotation otherwise).
QVector act(const ActionSpec& spec, const GroupElement& g, std::span<const Rational> v);
std::vector<double> act(const ActionSpec& spec, const GroupElement& g, std::span<const double> v);

std::pair<QVector, QVector> cotangent_act(const ActionSpec& spec, const GroupElement& g, std::span<const Rational> m,
                                          std::span<const Rational> p);
std::pair<std::vector<double>, std::vector<double>> cotangent_act(const ActionSpec& spec, const GroupElement& g,
                                                                  std::span<const double> m,
                                                                  std::span<const double> p);

/// Exact isotropy subgroup {(f, theta) : f . (theta . m) = m}. Throws
/// NonProductStabilizer when the solution set is a twisted subgroup.
ClosedSubgroup stabilizer(const ActionSpec& spec, std::span<const Rational> m);
/// Floating variant; zero tests use the spec tolerance and throw
/// NumericalAmbiguity inside the band (tol, 100 tol].
ClosedSubgroup stabilizer_approx(const ActionSpec& spec, std::span<const double> m);

ClosedSubgroup conjugate(const ActionSpec& spec, std::size_t f, const ClosedSubgroup& h);
/// Canonical representative of the conjugacy class of H.
ClosedSubgroup canonical_class(const ActionSpec& spec, const ClosedSubgroup& h);
/// (H) <= (K): some conjugate of H lies in K.
bool is_subconjugate(const ActionSpec& spec, const ClosedSubgroup& h, const ClosedSubgroup& k);
/// All conjugates of H contained in K (distinct).
std::vector<ClosedSubgroup> conjugates_inside(const ActionSpec& spec, const ClosedSubgroup& h, const ClosedSubgroup& k);

Subspace fixed_subspace(const ActionSpec& spec, const ClosedSubgroup& h);

/// Every subgroup of F (exhaustive closure search).
std::vector<FiniteSubgroup> all_subgroups(const FiniteGroup& group);
FiniteSubgroup generated_subgroup(const FiniteGroup& group, const std::vector<std::size_t>& generators);

ClosedSubgroup whole_group(const ActionSpec& spec);

} // namespace stratakit
