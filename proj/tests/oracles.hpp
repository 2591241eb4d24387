#pragma once

#include "stratakit/isotropy.hpp"
#include "stratakit/rng.hpp"

#include <set>
#include <string>
#include <vector>

namespace test {

/// Seeded grid of points with small integer coordinates; zeros are common so
/// that every coordinate subspace is visited.
inline std::vector<stratakit::QVector> integer_grid(std::size_t n, std::size_t count, std::uint64_t seed) {
    auto rng = stratakit::make_rng(seed);
    std::vector<stratakit::QVector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        stratakit::QVector v(n);
        for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
        out.push_back(std::move(v));
    }
    return out;
}

/// Stabilizer in a finite group by testing every element on the point directly.
inline stratakit::ClosedSubgroup brute_force_stabilizer(const stratakit::ActionSpec& spec, const stratakit::QVector& m) {
    stratakit::ClosedSubgroup h;
    const auto& group = spec.finite_group();
    for (std::size_t f = 0; f < group.order(); ++f)
        if (group.matrix(f) * m == m) h.finite.push_back(f);
    h.torus = stratakit::TorusSubgroup::full(0);
    return h;
}

/// Class ids observed by the brute-force stabilizer over a point set (k = 0 only).
inline std::set<std::string> brute_force_classes(const stratakit::IsotropyLattice& lattice,
                                                 const std::vector<stratakit::QVector>& points) {
    std::set<std::string> out;
    for (const auto& m : points) out.insert(lattice.class_of(brute_force_stabilizer(lattice.spec(), m)).id);
    return out;
}

inline std::set<std::string> class_ids(const stratakit::IsotropyLattice& lattice) {
    std::set<std::string> out;
    for (const auto& s : lattice.strata()) out.insert(s.cls.id);
    return out;
}

} // namespace test
