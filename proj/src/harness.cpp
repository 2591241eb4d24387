#include "stratakit/harness.hpp"

#include "stratakit/errors.hpp"
#include "stratakit/momentum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stratakit {

namespace {

constexpr int kFloatInvarianceDraws = 200;
constexpr int kConstructionRetries = 100;
constexpr int kFrontierAttempts = 50;
constexpr double kLocalStep = 1e-5;
constexpr int kLocalBases = 3;

QVector join(std::span<const Rational> a, std::span<const Rational> b) {
    QVector out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<std::vector<double>> orthonormal(const Subspace& s) {
    std::vector<std::vector<double>> out;
    for (const auto& v : s.basis()) {
        auto d = to_double(v);
        double norm = 0.0;
        for (double x : d) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : d) x /= norm;
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<double> random_direction(const std::vector<std::vector<double>>& basis, std::size_t n, Rng& rng) {
    std::vector<double> v(n, 0.0);
    for (const auto& b : basis) {
        const double c = standard_normal(rng);
        for (std::size_t i = 0; i < n; ++i) v[i] += c * b[i];
    }
    return v;
}

// Removes from v its components along span{A_i m}.
void project_off_orbit(const ActionSpec& spec, std::span<const double> m, std::vector<double>& v) {
    std::vector<std::vector<double>> q;
    for (std::size_t i = 0; i < spec.k(); ++i) {
        std::vector<double> a(spec.n(), 0.0);
        for (std::size_t b = 0; b < spec.blocks().size(); ++b) {
            const auto [x, y] = spec.blocks()[b];
            const double w = static_cast<double>(spec.weight(i, b));
            a[x] -= w * m[y];
            a[y] += w * m[x];
        }
        for (const auto& u : q) {
            double d = 0.0;
            for (std::size_t j = 0; j < a.size(); ++j) d += a[j] * u[j];
            for (std::size_t j = 0; j < a.size(); ++j) a[j] -= d * u[j];
        }
        double norm = 0.0;
        for (double x : a) norm += x * x;
        if (norm < 1e-24) continue;
        norm = std::sqrt(norm);
        for (double& x : a) x /= norm;
        q.push_back(std::move(a));
    }
    for (const auto& u : q) {
        double d = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) d += v[j] * u[j];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= d * u[j];
    }
}

std::vector<double> hilbert(const InvariantSet& inv, std::span<const double> z) {
    std::vector<double> out;
    for (const auto& p : inv.polynomials) out.push_back(p.polynomial.evaluate(z));
    return out;
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

void require_fixture(const ActionSpec& spec) {
    if (spec.invariant_data().region_fixture != "double-cone")
        fail(ErrorKind::NotExampleSpec, "region classification needs the \"double-cone\" fixture");
}

} // namespace

// ---------------------------------------------------------------- invariants

InvariantSet InvariantSet::from_spec(const ActionSpec& spec) {
    InvariantSet inv;
    inv.polynomials = spec.invariant_data().invariants;
    inv.relations = spec.invariant_data().relations;
    for (const auto& p : inv.polynomials) inv.compiled.push_back(compile(p.polynomial));
    for (const auto& r : inv.relations) inv.compiled_relations.push_back(compile(r.polynomial));
    return inv;
}

std::optional<std::size_t> InvariantSet::index(std::string_view name) const {
    for (std::size_t i = 0; i < polynomials.size(); ++i)
        if (polynomials[i].name == name) return i;
    return std::nullopt;
}

void check_invariance(const ActionSpec& spec, const std::vector<NamedPolynomial>& polys, std::uint64_t seed) {
    if (polys.empty()) return;
    const std::size_t n = spec.n();
    for (const auto& p : polys)
        if (p.polynomial.variables() != 2 * n)
            fail(ErrorKind::DimensionMismatch, "invariant " + p.name + " is not over 2n variables");

    Rng rng = make_rng(seed, 0x1u);
    for (std::size_t f = 0; f < spec.finite_group().order(); ++f)
        for (int draw = 0; draw < 2; ++draw) {
            std::vector<Angle> angles;
            for (std::size_t i = 0; i < spec.k(); ++i) {
                Rational turns(static_cast<long>(rng() % 4), 4L);
                turns.canonicalize();
                angles.push_back(Angle::from_turns(turns));
            }
            const auto g = spec.element(f, angles);
            QVector m(n), p(n);
            for (auto& x : m) x = small_rational(rng);
            for (auto& x : p) x = small_rational(rng);
            const auto [gm, gp] = cotangent_act(spec, g, m, p);
            const auto z = join(m, p), gz = join(gm, gp);
            for (const auto& poly : polys)
                if (poly.polynomial.evaluate(std::span<const Rational>(gz)) != poly.polynomial.evaluate(std::span<const Rational>(z)))
                    fail(ErrorKind::NonInvariantPolynomial,
                         poly.name + " changes under finite element " + std::to_string(f) + " (exact check)");
        }

    for (int draw = 0; draw < kFloatInvarianceDraws; ++draw) {
        const std::size_t f = rng() % spec.finite_group().order();
        std::vector<Angle> angles;
        for (std::size_t i = 0; i < spec.k(); ++i) angles.push_back(Angle::from_radians(2 * std::numbers::pi * uniform01(rng)));
        const auto g = spec.element(f, angles);
        std::vector<double> m(n), p(n);
        for (auto& x : m) x = standard_normal(rng);
        for (auto& x : p) x = standard_normal(rng);
        const auto [gm, gp] = cotangent_act(spec, g, m, p);
        std::vector<double> z(m), gz(gm);
        z.insert(z.end(), p.begin(), p.end());
        gz.insert(gz.end(), gp.begin(), gp.end());
        for (const auto& poly : polys) {
            const double a = poly.polynomial.evaluate(std::span<const double>(z));
            const double b = poly.polynomial.evaluate(std::span<const double>(gz));
            if (std::abs(a - b) > spec.tolerance() * (1.0 + std::abs(a)))
                fail(ErrorKind::NonInvariantPolynomial,
                     poly.name + " changes by " + std::to_string(std::abs(a - b)) + " under a sampled group element");
        }
    }
}

std::vector<std::pair<std::string, double>> eval_invariants(const InvariantSet& inv, std::span<const double> z) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& p : inv.polynomials) {
        if (z.size() != p.polynomial.variables())
            fail(ErrorKind::DimensionMismatch, "point has length " + std::to_string(z.size()));
        out.emplace_back(p.name, p.polynomial.evaluate(z));
    }
    return out;
}

std::vector<std::pair<std::string, Rational>> eval_invariants(const InvariantSet& inv, std::span<const Rational> z) {
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& p : inv.polynomials) {
        if (z.size() != p.polynomial.variables())
            fail(ErrorKind::DimensionMismatch, "point has length " + std::to_string(z.size()));
        out.emplace_back(p.name, p.polynomial.evaluate(z));
    }
    return out;
}

std::vector<RelationResidual> check_relations(const InvariantSet& inv, const std::vector<std::vector<double>>& samples,
                                              double tolerance) {
    std::vector<RelationResidual> report;
    if (inv.relations.empty() || samples.empty()) return report;
    const auto values = evaluate_rows(inv.compiled, samples);  // invariant x sample
    std::vector<std::vector<double>> rows(samples.size(), std::vector<double>(inv.compiled.size()));
    for (std::size_t j = 0; j < values.size(); ++j)
        for (std::size_t s = 0; s < samples.size(); ++s) rows[s][j] = values[j][s];
    const auto residuals = evaluate_rows(inv.compiled_relations, rows);

    for (std::size_t r = 0; r < inv.relations.size(); ++r) {
        RelationResidual res;
        res.name = inv.relations[r].name;
        res.kind = inv.relations[r].kind;
        double sum = 0.0;
        for (double v : residuals[r]) {
            const double e = res.kind == RelationKind::Equality ? std::abs(v) : std::max(0.0, -v);
            res.max_residual = std::max(res.max_residual, e);
            sum += e;
            if (e > tolerance || std::isnan(e)) ++res.violations;
        }
        res.mean_residual = sum / static_cast<double>(samples.size());
        res.passed = res.violations == 0;
        report.push_back(std::move(res));
    }
    return report;
}

std::vector<std::vector<double>> sample_zero_level(const ActionSpec& spec, std::size_t budget, std::uint64_t seed) {
    if (budget == 0) fail(ErrorKind::DimensionMismatch, "sampling budget must be at least 1");
    const std::size_t n = spec.n();
    std::vector<std::vector<double>> out;
    out.reserve(budget);
    for (std::size_t s = 0; s < budget; ++s) {
        Rng rng = make_rng(seed, s);
        const auto m = uniform_ball(rng, n);
        Eigen::MatrixXd tangent = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(std::max<std::size_t>(spec.k(), 1)));
        for (std::size_t i = 0; i < spec.k(); ++i)
            for (std::size_t b = 0; b < spec.blocks().size(); ++b) {
                const auto [x, y] = spec.blocks()[b];
                const double w = static_cast<double>(spec.weight(i, b));
                tangent(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(i)) -= w * m[y];
                tangent(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(i)) += w * m[x];
            }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(tangent, Eigen::ComputeFullU);
        const auto& sv = svd.singularValues();
        Eigen::Index r = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > 1e-12) ++r;
        const auto coeffs = uniform_ball(rng, n - static_cast<std::size_t>(r));
        std::vector<double> z(m);
        z.resize(2 * n, 0.0);
        for (std::size_t c = 0; c < coeffs.size(); ++c)
            for (std::size_t i = 0; i < n; ++i)
                z[n + i] += coeffs[c] * svd.matrixU()(static_cast<Eigen::Index>(i), r + static_cast<Eigen::Index>(c));
        out.push_back(std::move(z));
    }
    return out;
}

// ---------------------------------------------------------------- double cone

std::string ConeRegion::name() const {
    const char* l = label == ConeLabel::V ? "V" : label == ConeLabel::E ? "E" : "I";
    return l + std::to_string(cone);
}

std::pair<ConeRegion, ConeRegion> classify_image(const ActionSpec& spec, const InvariantSet& inv, std::span<const double> z) {
    require_fixture(spec);
    const auto idx = [&](const char* name) {
        auto i = inv.index(name);
        if (!i) fail(ErrorKind::NotExampleSpec, std::string("fixture needs invariant ") + name);
        return *i;
    };
    if (z.size() != 2 * spec.n()) fail(ErrorKind::DimensionMismatch, "point has length " + std::to_string(z.size()));
    const double s1 = inv.polynomials[idx("sigma1")].polynomial.evaluate(z);
    const double s3 = inv.polynomials[idx("sigma3")].polynomial.evaluate(z);
    const double r1 = inv.polynomials[idx("rho1")].polynomial.evaluate(z);
    const double r3 = inv.polynomials[idx("rho3")].polynomial.evaluate(z);
    const double j = inv.polynomials[idx("j")].polynomial.evaluate(z);
    const double tol = spec.tolerance();
    if (std::abs(j) > tol * (1.0 + std::abs(s1)))
        fail(ErrorKind::NotOnZeroLevel, "momentum " + std::to_string(j) + " is not zero");

    const auto region = [tol](int cone, double a, double c) {
        const double band = tol * (1.0 + std::abs(a));
        ConeRegion r;
        r.cone = cone;
        if (a <= band)
            r.label = ConeLabel::V;
        else if (std::abs(a - c) <= band)
            r.label = ConeLabel::E;
        else {
            r.label = ConeLabel::I;
            r.on_B = std::abs(a + c) <= band;
        }
        return r;
    };
    return {region(1, s1, s3), region(2, r1, r3)};
}

ConnectablePair piece_of(const IsotropyLattice& lattice, std::span<const Rational> m, std::span<const Rational> p) {
    const auto& spec = lattice.spec();
    if (!is_zero(momentum(spec, m, p))) fail(ErrorKind::NotOnZeroLevel, "point is off J^{-1}(0)");
    const auto h = stabilizer(spec, m);
    const QVector q = fixed_subspace(spec, h).orthogonal_complement().project(p);
    const auto l = stabilizer(spec.cotangent(), join(m, q));
    const auto hi = lattice.index_of(h), li = lattice.index_of(l);
    if (!hi || !li) fail(ErrorKind::ClassNotFound, "point has an isotropy class outside the lattice");
    return {*hi, *li};
}

PieceSample construct_piece_sample(const IsotropyLattice& lattice, const ConnectablePair& pair, Rng& rng) {
    const auto& spec = lattice.spec();
    const auto& H = lattice.cls(pair.upper).representative;
    const auto& L = lattice.cls(pair.lower).representative;
    const Subspace fix_h = fixed_subspace(spec, H);
    const auto lowers = conjugates_inside(spec, L, H);
    for (int attempt = 0; attempt < kConstructionRetries; ++attempt) {
        QVector m = random_in(fix_h, rng);
        if (!(stabilizer(spec, m) == H)) continue;
        const auto slice = slice_at(spec, m);
        const auto& lower = lowers[rng() % lowers.size()];
        const QVector c = random_in(slice.slice_fixed, rng);
        const QVector q = random_in(fixed_subspace(spec, lower).intersect(slice.normal), rng);
        QVector p = c + q;
        const auto got = piece_of(lattice, m, p);
        if (got.upper == pair.upper && got.lower == pair.lower) return {std::move(m), std::move(p), lower};
    }
    fail(ErrorKind::WitnessSearchFailed, "no point constructed for piece " + lattice.cls(pair.upper).id + " -> " +
                                             lattice.cls(pair.lower).id);
}

std::size_t local_image_dimension(const IsotropyLattice& lattice, const InvariantSet& inv, const ConnectablePair& pair,
                                  const PieceSample& sample, Rng& rng, double tolerance) {
    const auto& spec = lattice.spec();
    const std::size_t n = spec.n();
    const auto& H = lattice.cls(pair.upper).representative;
    const Subspace fix_h = fixed_subspace(spec, H);
    const auto fix_basis = orthonormal(fix_h);
    const auto conormal_basis = orthonormal(fixed_subspace(spec, sample.lower_conjugate).intersect(fix_h.orthogonal_complement()));

    const auto m0 = to_double(sample.m);
    const auto c0 = to_double(fix_h.project(sample.p));
    const auto q0 = to_double(sample.p - fix_h.project(sample.p));
    std::vector<double> z0(m0);
    for (std::size_t i = 0; i < n; ++i) z0.push_back(c0[i] + q0[i]);
    const auto base = hilbert(inv, z0);

    const std::size_t rows = 4 * (2 * n) + 8;
    Eigen::MatrixXd diffs(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(base.size()));
    for (std::size_t r = 0; r < rows; ++r) {
        const auto dm = random_direction(fix_basis, n, rng);
        const auto dc = random_direction(fix_basis, n, rng);
        const auto dq = random_direction(conormal_basis, n, rng);
        std::vector<double> m(n), c(n), z(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = m0[i] + kLocalStep * dm[i];
            c[i] = c0[i] + kLocalStep * dc[i];
        }
        project_off_orbit(spec, m, c);
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = m[i];
            z[n + i] = c[i] + q0[i] + kLocalStep * dq[i];
        }
        const auto img = hilbert(inv, z);
        for (std::size_t j = 0; j < img.size(); ++j)
            diffs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = img[j] - base[j];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 10.0 * tolerance) ++rank;
    return rank;
}

const std::map<std::string, std::string>& double_cone_regions() {
    static const std::map<std::string, std::string> table = {
        {"C_Z2xS1", "V1xV2"},        {"C_Z2", "I1xV2"},       {"C_S1", "V1xI2"},
        {"C_1", "I1xI2"},            {"S_Z2xS1->Z2", "E1xV2"}, {"S_Z2xS1->S1", "V1xE2"},
        {"S_Z2xS1->1", "E1xE2"},     {"S_Z2->1", "I1xE2"},     {"S_S1->1", "E1xI2"},
    };
    return table;
}

std::vector<PieceRegionCheck> verify_piece_regions(const IsotropyLattice& lattice, const InvariantSet& inv,
                                                   std::size_t budget, std::uint64_t seed) {
    const auto& spec = lattice.spec();
    require_fixture(spec);
    const auto& table = double_cone_regions();
    const auto pairs = connectable_pairs(lattice);
    if (pairs.size() != table.size()) fail(ErrorKind::NotExampleSpec, "lattice does not match the double-cone fixture");

    std::vector<PieceRegionCheck> report;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const Piece piece = piece_dimensions(pairs[idx], lattice);
        auto it = table.find(piece.label);
        if (it == table.end()) fail(ErrorKind::NotExampleSpec, "no region listed for " + piece.label);

        PieceRegionCheck check;
        check.piece = piece.label;
        check.expected = it->second;
        check.dim_W = piece.dim_W;
        Rng rng = make_rng(seed, idx);
        std::vector<PieceSample> bases;
        for (std::size_t s = 0; s < budget; ++s) {
            auto sample = construct_piece_sample(lattice, pairs[idx], rng);
            const auto z = to_double(join(sample.m, sample.p));
            const auto [a, b] = classify_image(spec, inv, z);
            const std::string got = a.name() + "x" + b.name();
            ++check.tally[got];
            ++check.samples;
            if (got == check.expected) ++check.hits;
            if (bases.size() < static_cast<std::size_t>(kLocalBases)) bases.push_back(std::move(sample));
        }
        for (const auto& b : bases)
            check.local_dims.push_back(local_image_dimension(lattice, inv, pairs[idx], b, rng, spec.tolerance()));
        check.passed = check.samples > 0 && check.hits == check.samples &&
                       std::all_of(check.local_dims.begin(), check.local_dims.end(),
                                   [&](std::size_t d) { return static_cast<long long>(d) == check.dim_W; });
        report.push_back(std::move(check));
    }
    return report;
}

std::vector<FrontierCheck> frontier_crosscheck(const IsotropyLattice& lattice, const StratLattice& coiso,
                                               const InvariantSet& inv, std::size_t budget, std::uint64_t seed) {
    const auto& spec = lattice.spec();
    const std::size_t n = spec.n();
    const Rational t(Integer(1), Integer(1) << 34);
    std::vector<FrontierCheck> report;
    const std::size_t per_edge = std::max<std::size_t>(1, budget / std::max<std::size_t>(1, coiso.edges.size()));

    for (std::size_t e = 0; e < coiso.edges.size(); ++e) {
        const auto [ri, si] = coiso.edges[e];
        const auto& R = coiso.nodes[ri].pair;
        const auto& S = coiso.nodes[si].pair;
        FrontierCheck check;
        check.from = coiso.nodes[ri].label;
        check.to = coiso.nodes[si].label;
        Rng rng = make_rng(seed, 0x200000000ull + e);

        const auto& HR = lattice.cls(R.upper).representative;
        std::vector<std::pair<ClosedSubgroup, ClosedSubgroup>> targets;  // (K', L') with L' <= K' <= G_m
        for (const auto& k : conjugates_inside(spec, lattice.cls(S.upper).representative, HR))
            for (const auto& l : conjugates_inside(spec, lattice.cls(S.lower).representative, k)) targets.emplace_back(k, l);

        for (std::size_t s = 0; s < per_edge; ++s) {
            ++check.samples;
            if (targets.empty()) continue;
            const auto sample = construct_piece_sample(lattice, R, rng);
            std::vector<QVector> apm, amm;
            for (std::size_t i = 0; i < spec.k(); ++i) {
                apm.push_back(spec.torus_generator(i) * sample.p);
                amm.push_back(spec.torus_generator(i) * sample.m);
            }
            const Subspace perp_p = Subspace::span(n, apm).orthogonal_complement();
            const Subspace perp_m = Subspace::span(n, amm).orthogonal_complement();
            const auto base = hilbert(inv, to_double(join(sample.m, sample.p)));

            for (int attempt = 0; attempt < kFrontierAttempts; ++attempt) {
                const auto& [k, l] = targets[rng() % targets.size()];
                const QVector dm = random_in(fixed_subspace(spec, k).intersect(perp_p), rng);
                const QVector dp = random_in(fixed_subspace(spec, l).intersect(perp_m), rng);
                const QVector m = sample.m + t * dm;
                const QVector p = fiber_zero_basis(spec, m).project(sample.p + t * dp);
                const auto got = piece_of(lattice, m, p);
                if (got.upper != S.upper || got.lower != S.lower) continue;
                ++check.found;
                check.max_distance = std::max(check.max_distance, distance(base, hilbert(inv, to_double(join(m, p)))));
                break;
            }
        }
        check.passed = check.found == check.samples && check.max_distance < 10.0 * spec.tolerance();
        report.push_back(std::move(check));
    }
    return report;
}

} // namespace stratakit
