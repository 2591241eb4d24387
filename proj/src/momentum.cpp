#include "stratakit/momentum.hpp"

#include "stratakit/errors.hpp"
#include "stratakit/rng.hpp"

#include <algorithm>
#include <cmath>

namespace stratakit {

namespace {

constexpr int kDirectedDraws = 8;

void check_lengths(const ActionSpec& spec, std::size_t m, std::size_t p) {
    if (m != spec.n() || p != spec.n())
        fail(ErrorKind::DimensionMismatch, "expected point and covector of length " + std::to_string(spec.n()) +
                                               ", got " + std::to_string(m) + " and " + std::to_string(p));
}

QVector concat(std::span<const Rational> a, std::span<const Rational> b) {
    QVector out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Uniform draw from the unit ball of `space`, as an exact dyadic combination of its basis.
QVector draw_in_ball(const Subspace& space, Rng& rng) {
    const auto coords = uniform_ball(rng, space.dim());
    QVector coeffs(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const double norm = std::sqrt(norm_squared(space.basis()[i]).get_d());
        coeffs[i] = dyadic(coords[i] / norm, 20);
    }
    return space.combine(coeffs);
}

void sample_into(const IsotropyLattice& lattice, const ActionSpec& spec, std::span<const Rational> m,
                 const Subspace& fiber, std::size_t budget, std::uint64_t seed, std::set<std::string>& out) {
    if (fiber.dim() == 0) {
        out.insert(cotangent_class(lattice, spec, m, QVector(spec.n())).id);
        return;
    }
    for (std::size_t s = 0; s < budget; ++s) {
        Rng rng = make_rng(seed, s);
        out.insert(cotangent_class(lattice, spec, m, draw_in_ball(fiber, rng)).id);
    }
}

// For each class L and each conjugate L' <= G_m, probe Fix(L') ∩ fiber, where (m, p)
// is fixed by at least L'. Finds classes living on thin subsets of the fiber.
void directed_search(const IsotropyLattice& lattice, const ActionSpec& spec, std::span<const Rational> m,
                     const Subspace& fiber, std::uint64_t seed, std::set<std::string>& out) {
    const auto gm = stabilizer(spec, m);
    std::uint64_t stream = 0x100000000ull;
    for (const auto& s : lattice.strata()) {
        for (const auto& conj : conjugates_inside(spec, s.cls.representative, gm)) {
            const Subspace probe = fixed_subspace(spec, conj).intersect(fiber);
            Rng rng = make_rng(seed, stream++);
            if (probe.dim() == 0) {
                out.insert(cotangent_class(lattice, spec, m, QVector(spec.n())).id);
                continue;
            }
            for (int d = 0; d < kDirectedDraws; ++d) {
                out.insert(cotangent_class(lattice, spec, m, random_in(probe, rng)).id);
            }
        }
    }
}

} // namespace

QVector momentum(const ActionSpec& spec, std::span<const Rational> m, std::span<const Rational> p) {
    check_lengths(spec, m.size(), p.size());
    QVector j(spec.k());
    for (std::size_t i = 0; i < spec.k(); ++i) j[i] = dot(p, spec.torus_generator(i) * m);
    return j;
}

MomentumValue momentum(const ActionSpec& spec, std::span<const double> m, std::span<const double> p) {
    check_lengths(spec, m.size(), p.size());
    MomentumValue j{std::vector<double>(spec.k(), 0.0)};
    for (std::size_t i = 0; i < spec.k(); ++i) {
        double sum = 0.0;
        for (std::size_t b = 0; b < spec.blocks().size(); ++b) {
            const auto [x, y] = spec.blocks()[b];
            sum += static_cast<double>(spec.weight(i, b)) * (m[x] * p[y] - m[y] * p[x]);
        }
        j.components[i] = sum;
    }
    return j;
}

Subspace fiber_zero_basis(const ActionSpec& spec, std::span<const Rational> m) {
    return orbit_tangent(spec, m).orthogonal_complement();
}

FiberDecomposition fiber_decomposition(const IsotropyLattice& lattice, std::span<const Rational> m) {
    const auto& spec = lattice.spec();
    const auto slice = slice_at(spec, m);
    FiberDecomposition f;
    f.base_point = QVector(m.begin(), m.end());
    f.cls = lattice.class_of(stabilizer(spec, m));
    f.cotangent_part = slice.slice_fixed;
    f.conormal_part = slice.normal;
    f.annihilator = fiber_zero_basis(spec, m);
    return f;
}

IsotropyClass cotangent_class(const IsotropyLattice& lattice, const ActionSpec& spec, std::span<const Rational> m,
                              std::span<const Rational> p) {
    check_lengths(spec, m.size(), p.size());
    return lattice.class_of(stabilizer(spec.cotangent(), concat(m, p)));
}

std::set<std::string> sample_fiber_classes(const IsotropyLattice& lattice, const ActionSpec& sampling_spec,
                                           std::span<const Rational> m, std::size_t budget, std::uint64_t seed) {
    if (budget == 0) fail(ErrorKind::DimensionMismatch, "sampling budget must be at least 1");
    std::set<std::string> out;
    const Subspace fiber = fiber_zero_basis(sampling_spec, m);
    sample_into(lattice, sampling_spec, m, fiber, budget, seed, out);
    directed_search(lattice, sampling_spec, m, fiber, seed, out);
    return out;
}

std::set<std::string> sample_fiber_classes(const IsotropyLattice& lattice, std::span<const Rational> m,
                                           std::size_t budget, std::uint64_t seed) {
    return sample_fiber_classes(lattice, lattice.spec(), m, budget, seed);
}

std::set<std::string> conormal_orbit_types(const IsotropyLattice& lattice, std::size_t h) {
    std::set<std::string> out;
    for (auto l : lattice.down_set(h)) out.insert(lattice.cls(l).id);
    return out;
}

std::set<std::string> sample_conormal_classes(const IsotropyLattice& lattice, std::size_t h, std::size_t budget,
                                              std::uint64_t seed) {
    const auto& spec = lattice.spec();
    const auto& s = lattice.stratum(h);
    std::set<std::string> out;
    sample_into(lattice, spec, s.witness, s.slice.normal, budget, seed, out);
    directed_search(lattice, spec, s.witness, s.slice.normal, seed, out);
    return out;
}

std::vector<FiberCheck> verify_fiber_classes(const IsotropyLattice& lattice, const ActionSpec& sampling_spec,
                                             std::size_t budget, std::uint64_t seed) {
    std::vector<FiberCheck> checks;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        FiberCheck c;
        c.class_id = lattice.cls(i).id;
        c.witness = lattice.stratum(i).witness;
        c.predicted = conormal_orbit_types(lattice, i);
        c.observed = sample_fiber_classes(lattice, sampling_spec, c.witness, budget, seed);
        c.subset = std::includes(c.predicted.begin(), c.predicted.end(), c.observed.begin(), c.observed.end());
        c.equal = c.predicted == c.observed;
        checks.push_back(std::move(c));
    }
    return checks;
}

std::vector<FiberCheck> verify_fiber_classes(const IsotropyLattice& lattice, std::size_t budget, std::uint64_t seed) {
    return verify_fiber_classes(lattice, lattice.spec(), budget, seed);
}

} // namespace stratakit
