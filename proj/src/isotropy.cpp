#include "stratakit/isotropy.hpp"

#include "stratakit/errors.hpp"
#include "stratakit/rng.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stratakit {

namespace {

constexpr int kWitnessRetries = 100;
constexpr int kGenericAgreement = 8;

bool is_abelian(const FiniteGroup& group, const FiniteSubgroup& h) {
    for (auto a : h)
        for (auto b : h)
            if (group.multiply(a, b) != group.multiply(b, a)) return false;
    return true;
}

std::size_t order_in(const FiniteGroup& group, std::size_t a) { return group.element_order(a); }

std::size_t power(const FiniteGroup& group, std::size_t a, std::size_t e) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < e; ++i) r = group.multiply(r, a);
    return r;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "x";
        out += p;
    }
    return out;
}

// Invariant factors of a finite abelian group, ascending by divisibility.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& group, const FiniteSubgroup& h) {
    const std::size_t n = h.size();
    std::vector<std::size_t> primes;
    for (std::size_t m = n, p = 2; m > 1; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    // For each prime, the partition of exponents; parts[p][i] = i-th largest exponent.
    std::vector<std::vector<std::size_t>> partitions;
    for (auto p : primes) {
        std::vector<std::size_t> at_least;  // at_least[j-1] = #cyclic factors with exponent >= j
        std::size_t prev = 1, pj = p;
        while (true) {
            std::size_t count = 0;
            for (auto a : h)
                if (power(group, a, pj) == 0) ++count;
            if (count == prev) break;
            std::size_t ratio = count / prev, e = 0;
            while (ratio > 1) {
                ratio /= p;
                ++e;
            }
            at_least.push_back(e);
            prev = count;
            pj *= p;
        }
        std::vector<std::size_t> parts(at_least.empty() ? 0 : at_least[0], 0);
        for (std::size_t j = 0; j < at_least.size(); ++j)
            for (std::size_t i = 0; i < at_least[j]; ++i) parts[i] = j + 1;
        partitions.push_back(parts);
    }
    std::size_t factors = 0;
    for (const auto& parts : partitions) factors = std::max(factors, parts.size());
    std::vector<std::size_t> inv(factors, 1);
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        for (std::size_t i = 0; i < partitions[pi].size(); ++i)
            for (std::size_t e = 0; e < partitions[pi][i]; ++e) inv[i] *= primes[pi];
    std::sort(inv.begin(), inv.end());
    return inv;
}

std::string finite_name(const FiniteGroup& group, const FiniteSubgroup& h) {
    const std::size_t n = h.size();
    if (n == 1) return "";
    for (auto a : h)
        if (order_in(group, a) == n) return "Z" + std::to_string(n);
    if (is_abelian(group, h)) {
        std::vector<std::string> parts;
        for (auto d : abelian_invariants(group, h)) parts.push_back("Z" + std::to_string(d));
        return join(parts);
    }
    if (n % 2 == 0 && n >= 6) {
        const std::size_t m = n / 2;
        for (auto r : h) {
            if (order_in(group, r) != m) continue;
            auto rotations = generated_subgroup(group, {r});
            bool dihedral = true;
            for (auto x : h)
                if (!std::binary_search(rotations.begin(), rotations.end(), x) && order_in(group, x) != 2) dihedral = false;
            if (dihedral) return "D" + std::to_string(m);
        }
    }
    return "F" + std::to_string(n);
}

std::string torus_name(const TorusSubgroup& t) {
    std::vector<std::string> parts;
    if (t.dim() == 1)
        parts.push_back("S1");
    else if (t.dim() > 1)
        parts.push_back("T" + std::to_string(t.dim()));
    for (const auto& e : t.torsion()) parts.push_back("C" + e.get_str());
    return join(parts);
}

struct WitnessResult {
    std::optional<QVector> witness;
    std::optional<QVector> second;
};

// Searches Fix(H) for points with stabilizer exactly H.
WitnessResult search_witness(const ActionSpec& spec, const ClosedSubgroup& h, const Subspace& fix, Rng& rng) {
    WitnessResult result;
    if (fix.dim() == 0) {
        QVector origin(spec.n());
        if (stabilizer(spec, origin) == h) {
            result.witness = origin;
            result.second = origin;
        }
        return result;
    }
    std::optional<ClosedSubgroup> last;
    int agreement = 0;
    for (int attempt = 0; attempt < kWitnessRetries; ++attempt) {
        QVector m = random_in(fix, rng);
        auto stab = stabilizer(spec, m);
        if (stab == h) {
            if (!result.witness) {
                result.witness = std::move(m);
                continue;
            }
            result.second = std::move(m);
            return result;
        }
        if (result.witness) continue;
        if (last && *last == stab) {
            if (++agreement >= kGenericAgreement) return result;  // generic stabilizer of Fix(H) is larger: unrealized
        } else {
            last = std::move(stab);
            agreement = 1;
        }
    }
    if (result.witness) {
        result.second = result.witness;
        return result;
    }
    fail(ErrorKind::WitnessSearchFailed, "candidate " + structural_name(spec, h) + " undecided after " +
                                             std::to_string(kWitnessRetries) + " draws in its fixed subspace");
}

} // namespace

Subspace orbit_tangent(const ActionSpec& spec, std::span<const Rational> m) {
    if (m.size() != spec.n()) fail(ErrorKind::DimensionMismatch, "point has length " + std::to_string(m.size()));
    std::vector<QVector> vectors;
    for (std::size_t i = 0; i < spec.k(); ++i) vectors.push_back(spec.torus_generator(i) * m);
    return Subspace::span(spec.n(), vectors);
}

SliceData slice_at(const ActionSpec& spec, std::span<const Rational> m) {
    const auto stab = stabilizer(spec, m);
    SliceData s;
    s.orbit_tangent = orbit_tangent(spec, m);
    s.slice = s.orbit_tangent.orthogonal_complement();
    s.slice_fixed = fixed_subspace(spec, stab).intersect(s.slice);
    s.normal = s.slice_fixed.complement_within(s.slice);
    return s;
}

std::pair<std::size_t, std::size_t> stratum_dimension(const ActionSpec& spec, const StratumInfo& s) {
    const std::size_t dim_stratum = s.slice.orbit_tangent.dim() + s.slice.slice_fixed.dim();
    const std::size_t quotient = dim_stratum + s.cls.dim - spec.k();
    return {dim_stratum, quotient};
}

std::string structural_name(const ActionSpec& spec, const ClosedSubgroup& h) {
    auto name = join({finite_name(spec.finite_group(), h.finite), torus_name(h.torus)});
    return name.empty() ? "1" : name;
}

std::vector<StratumInfo> enumerate_orbit_types(const ActionSpec& spec, std::uint64_t seed) {
    const auto& group = spec.finite_group();

    std::set<FiniteSubgroup> finite_reps;
    for (const auto& sub : all_subgroups(group)) {
        ClosedSubgroup c{sub, TorusSubgroup(spec.k())};
        finite_reps.insert(canonical_class(spec, c).finite);
    }

    std::set<TorusSubgroup> torus_candidates;
    const std::size_t blocks = spec.blocks().size();
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << blocks); ++pattern) {
        std::vector<IntVector> rows;
        for (std::size_t j = 0; j < blocks; ++j)
            if (pattern & (std::uint64_t{1} << j)) rows.push_back(spec.block_character(j));
        torus_candidates.insert(TorusSubgroup::from_constraints(std::move(rows), spec.k()));
    }

    std::vector<StratumInfo> strata;
    std::uint64_t stream = 0;
    for (const auto& fin : finite_reps)
        for (const auto& tor : torus_candidates) {
            ClosedSubgroup h{fin, tor};
            Rng rng = make_rng(seed, stream++);
            const Subspace fix = fixed_subspace(spec, h);
            auto found = search_witness(spec, h, fix, rng);
            if (!found.witness) continue;

            StratumInfo info;
            info.cls = IsotropyClass{h, "", h.dim(), h.finite_order()};
            info.witness = *found.witness;
            info.slice = slice_at(spec, info.witness);
            std::tie(info.dim_stratum, info.dim_quotient) = stratum_dimension(spec, info);

            StratumInfo other = info;
            other.slice = slice_at(spec, *found.second);
            if (stratum_dimension(spec, other).first != info.dim_stratum)
                fail(ErrorKind::InconsistentStratumDimension,
                     "two witnesses of " + structural_name(spec, h) + " give different stratum dimensions");
            strata.push_back(std::move(info));
        }

    // Stable ids: structural names, disambiguated in canonical-key order.
    std::map<std::string, std::vector<std::size_t>> by_name;
    for (std::size_t i = 0; i < strata.size(); ++i)
        by_name[structural_name(spec, strata[i].cls.representative)].push_back(i);
    for (auto& [name, members] : by_name) {
        if (members.size() == 1) {
            strata[members[0]].cls.id = name;
            continue;
        }
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return strata[a].cls.representative < strata[b].cls.representative;
        });
        for (std::size_t r = 0; r < members.size(); ++r) strata[members[r]].cls.id = name + "." + std::to_string(r + 1);
    }
    std::sort(strata.begin(), strata.end(), [](const StratumInfo& a, const StratumInfo& b) { return a.cls.id < b.cls.id; });
    return strata;
}

// ---------------------------------------------------------------- lattice

IsotropyLattice::IsotropyLattice(ActionSpec spec, std::vector<StratumInfo> strata)
    : spec_(std::move(spec)), strata_(std::move(strata)) {
    if (strata_.empty()) fail(ErrorKind::NoUniqueMinimum, "no isotropy classes");
    std::sort(strata_.begin(), strata_.end(), [](const StratumInfo& a, const StratumInfo& b) { return a.cls.id < b.cls.id; });
    const std::size_t n = strata_.size();
    order_ = Relation(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (is_subconjugate(spec_, strata_[i].cls.representative, strata_[j].cls.representative)) order_.set(i, j);
    Relation strict = order_;
    for (std::size_t i = 0; i < n; ++i) strict.set(i, i, false);
    if (!strict.is_acyclic()) fail(ErrorKind::NoUniqueMinimum, "subconjugacy order is not antisymmetric");
    hasse_ = strict.transitive_reduction();

    std::vector<std::size_t> minimal;
    for (std::size_t i = 0; i < n; ++i) {
        bool is_min = true;
        for (std::size_t j = 0; j < n && is_min; ++j) is_min = !(j != i && order_(j, i));
        if (is_min) minimal.push_back(i);
    }
    if (minimal.size() != 1)
        fail(ErrorKind::NoUniqueMinimum, std::to_string(minimal.size()) + " minimal isotropy classes");
    principal_ = minimal.front();
}

std::optional<std::size_t> IsotropyLattice::find(std::string_view id) const {
    for (std::size_t i = 0; i < strata_.size(); ++i)
        if (strata_[i].cls.id == id) return i;
    return std::nullopt;
}

std::size_t IsotropyLattice::index(std::string_view id) const {
    auto i = find(id);
    if (!i) fail(ErrorKind::ClassNotFound, "no isotropy class '" + std::string(id) + "'");
    return *i;
}

std::optional<std::size_t> IsotropyLattice::index_of(const ClosedSubgroup& h) const {
    const auto canon = canonical_class(spec_, h);
    for (std::size_t i = 0; i < strata_.size(); ++i)
        if (strata_[i].cls.representative == canon) return i;
    return std::nullopt;
}

IsotropyClass IsotropyLattice::class_of(const ClosedSubgroup& h) const {
    if (auto i = index_of(h)) return strata_[*i].cls;
    const auto canon = canonical_class(spec_, h);
    return IsotropyClass{canon, structural_name(spec_, canon) + "?", canon.dim(), canon.finite_order()};
}

std::vector<std::size_t> IsotropyLattice::down_set(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (order_(j, i)) out.push_back(j);
    return out;
}

std::vector<std::size_t> IsotropyLattice::up_set(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (order_(i, j)) out.push_back(j);
    return out;
}

IsotropyLattice build_isotropy_lattice(const ActionSpec& spec, std::vector<StratumInfo> strata) {
    return IsotropyLattice(spec, std::move(strata));
}

IsotropyLattice build_isotropy_lattice(const ActionSpec& spec, std::uint64_t seed) {
    return IsotropyLattice(spec, enumerate_orbit_types(spec, seed));
}

} // namespace stratakit
