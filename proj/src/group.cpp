#include "stratakit/group.hpp"

#include "stratakit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>

namespace stratakit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_radians(double r) {
    double w = std::fmod(r, kTwoPi);
    if (w < 0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

Rational wrap_turns(const Rational& t) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    Rational out = t - Rational(fl);
    out.canonicalize();
    return out;
}

struct QComplex {
    Rational re;
    Rational im;

    QComplex operator*(const QComplex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    QComplex conj() const { return {re, -im}; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
};

// z^e for a unit complex number (negative powers via conjugation).
QComplex unit_power(QComplex z, Integer e) {
    if (e < 0) {
        z = z.conj();
        e = -e;
    }
    QComplex result{1, 0};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = result * z;
        z = z * z;
        e /= 2;
    }
    return result;
}

// cos/sin of a quarter-turn multiple.
std::pair<int, int> quarter_turn(const Angle& a) {
    if (!a.exact()) fail(ErrorKind::InexactRotation, "angle is not an exact rational turn");
    Rational four = a.turns() * 4;
    four.canonicalize();
    if (four.get_den() != 1)
        fail(ErrorKind::InexactRotation, "angle " + a.turns().get_str() + " turns is not a quarter-turn multiple");
    const long q = mpz_fdiv_ui(four.get_num_mpz_t(), 4);
    static constexpr int cs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {cs[q][0], cs[q][1]};
}

Angle block_angle(const ActionSpec& spec, const GroupElement& g, std::size_t block) {
    Angle total;
    for (std::size_t i = 0; i < spec.k(); ++i) total = total + g.torus[i].scaled(spec.weight(i, block));
    return total;
}

void check_element(const ActionSpec& spec, const GroupElement& g) {
    if (g.finite >= spec.finite_group().order())
        fail(ErrorKind::DimensionMismatch, "finite part index out of range");
    if (g.torus.size() != spec.k()) fail(ErrorKind::DimensionMismatch, "torus part has wrong number of angles");
}

std::vector<IntVector> supported_characters(const ActionSpec& spec, const std::vector<std::size_t>& support) {
    std::vector<IntVector> rows;
    rows.reserve(support.size());
    for (auto j : support) rows.push_back(spec.block_character(j));
    return rows;
}

} // namespace

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::generate(const std::vector<QMatrix>& generators, std::size_t n, std::size_t cap) {
    FiniteGroup g;
    g.matrices_.push_back(QMatrix::identity(n));
    std::unordered_map<std::string, std::size_t> index{{g.matrices_[0].key(), 0}};
    std::vector<std::size_t> parent{0};
    std::vector<std::size_t> via{0};
    std::vector<std::vector<std::size_t>> left(generators.size());

    for (std::size_t i = 0; i < g.matrices_.size(); ++i) {
        for (std::size_t s = 0; s < generators.size(); ++s) {
            QMatrix product = generators[s] * g.matrices_[i];
            auto key = product.key();
            auto it = index.find(key);
            std::size_t idx;
            if (it == index.end()) {
                if (g.matrices_.size() >= cap)
                    fail(ErrorKind::InfiniteFiniteGroup,
                         "closure of the finite generators exceeds " + std::to_string(cap) + " elements");
                idx = g.matrices_.size();
                index.emplace(std::move(key), idx);
                g.matrices_.push_back(std::move(product));
                parent.push_back(i);
                via.push_back(s);
            } else {
                idx = it->second;
            }
            left[s].resize(std::max(left[s].size(), i + 1));
            left[s][i] = idx;
        }
    }

    const std::size_t order = g.matrices_.size();
    g.table_.assign(order * order, 0);
    for (std::size_t b = 0; b < order; ++b) g.table_[b] = b;
    for (std::size_t a = 1; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            g.table_[a * order + b] = left[via[a]][g.table_[parent[a] * order + b]];

    g.inverse_.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            if (g.table_[a * order + b] == 0) {
                g.inverse_[a] = b;
                break;
            }
    for (const auto& gen : generators) g.generators_.push_back(index.at(gen.key()));
    return g;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = multiply(x, a)) ++k;
    return a == 0 ? 1 : k;
}

FiniteGroup FiniteGroup::doubled() const {
    FiniteGroup d = *this;
    for (auto& m : d.matrices_) m = QMatrix::block_diagonal(m, m);
    return d;
}

// ---------------------------------------------------------------- TorusSubgroup

TorusSubgroup TorusSubgroup::from_constraints(std::vector<IntVector> rows, std::size_t k) {
    TorusSubgroup t(k);
    t.hnf_ = hermite_normal_form(std::move(rows), k);
    return t;
}

TorusSubgroup TorusSubgroup::trivial(std::size_t k) {
    std::vector<IntVector> rows(k, IntVector(k));
    for (std::size_t i = 0; i < k; ++i) rows[i][i] = 1;
    return from_constraints(std::move(rows), k);
}

std::vector<Integer> TorusSubgroup::torsion() const {
    std::vector<Integer> out;
    for (auto& d : smith_invariants(hnf_, k_))
        if (d > 1) out.push_back(d);
    return out;
}

Integer TorusSubgroup::components() const {
    Integer c = 1;
    for (const auto& d : torsion()) c *= d;
    return c;
}

bool TorusSubgroup::contains(const TorusSubgroup& other) const {
    for (const auto& row : hnf_)
        if (!lattice_contains(other.hnf_, row)) return false;
    return true;
}

TorusSubgroup TorusSubgroup::intersect(const TorusSubgroup& other) const {
    auto rows = hnf_;
    rows.insert(rows.end(), other.hnf_.begin(), other.hnf_.end());
    return from_constraints(std::move(rows), k_);
}

bool ClosedSubgroup::contains(const ClosedSubgroup& other) const {
    return std::includes(finite.begin(), finite.end(), other.finite.begin(), other.finite.end()) &&
           torus.contains(other.torus);
}

// ---------------------------------------------------------------- Angle

Angle Angle::from_turns(const Rational& turns) {
    Angle a;
    a.turns_ = wrap_turns(turns);
    return a;
}

Angle Angle::from_radians(double radians) {
    Angle a;
    a.turns_.reset();
    a.radians_ = wrap_radians(radians);
    return a;
}

double Angle::radians() const { return turns_ ? turns_->get_d() * kTwoPi : radians_; }

Angle Angle::operator+(const Angle& other) const {
    if (exact() && other.exact()) return from_turns(*turns_ + *other.turns_);
    return from_radians(radians() + other.radians());
}

Angle Angle::operator-() const {
    if (exact()) return from_turns(-*turns_);
    return from_radians(-radians_);
}

Angle Angle::scaled(long long factor) const {
    if (exact()) return from_turns(*turns_ * Rational(Integer(std::to_string(factor))));
    return from_radians(radians_ * static_cast<double>(factor));
}

bool operator==(const Angle& a, const Angle& b) {
    if (a.exact() && b.exact()) return a.turns() == b.turns();
    double d = std::fabs(a.radians() - b.radians());
    return std::min(d, kTwoPi - d) <= 1e-12;
}

// ---------------------------------------------------------------- ActionSpec

ActionSpec::ActionSpec(std::size_t n, std::vector<QMatrix> generators, std::vector<TorusBlock> blocks,
                       std::vector<std::vector<long long>> weights, double tolerance, std::size_t group_cap,
                       InvariantData invariant_data)
    : n_(n), k_(weights.size()), tolerance_(tolerance), group_cap_(group_cap), generators_(std::move(generators)),
      blocks_(std::move(blocks)), weights_(std::move(weights)), invariant_data_(std::move(invariant_data)) {
    if (n_ == 0) fail(ErrorKind::DimensionMismatch, "ambient dimension must be positive");
    if (!(tolerance_ >= 0.0)) fail(ErrorKind::DimensionMismatch, "tolerance must be nonnegative");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.rows() != n_ || g.cols() != n_)
            fail(ErrorKind::DimensionMismatch, "finite generator " + std::to_string(i + 1) + " is not n x n");
        if (!g.is_orthogonal())
            fail(ErrorKind::NonOrthogonalGenerator, "finite generator " + std::to_string(i + 1) + " has G^T G != I");
    }
    std::vector<bool> used(n_, false);
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        const auto& b = blocks_[j];
        if (b.first >= n_ || b.second >= n_ || b.first == b.second)
            fail(ErrorKind::IncompatibleBlocks, "torus block " + std::to_string(j + 1) + " is not a pair of distinct coordinates in 1..n");
        if (used[b.first] || used[b.second])
            fail(ErrorKind::IncompatibleBlocks, "torus block " + std::to_string(j + 1) + " overlaps another block");
        used[b.first] = used[b.second] = true;
    }
    for (std::size_t i = 0; i < k_; ++i)
        if (weights_[i].size() != blocks_.size())
            fail(ErrorKind::DimensionMismatch, "torus weight row " + std::to_string(i + 1) + " must have one entry per block");

    build_derived();

    for (std::size_t g = 0; g < generators_.size(); ++g)
        for (std::size_t i = 0; i < k_; ++i)
            if (!(generators_[g] * torus_generators_[i] == torus_generators_[i] * generators_[g]))
                fail(ErrorKind::IncompatibleBlocks, "finite generator " + std::to_string(g + 1) +
                                                        " does not commute with torus factor " + std::to_string(i + 1));

    group_ = std::make_shared<const FiniteGroup>(FiniteGroup::generate(generators_, n_, group_cap_));

    auto lift = std::shared_ptr<ActionSpec>(new ActionSpec());
    lift->n_ = 2 * n_;
    lift->k_ = k_;
    lift->tolerance_ = tolerance_;
    lift->group_cap_ = group_cap_;
    for (const auto& g : generators_) lift->generators_.push_back(QMatrix::block_diagonal(g, g));
    lift->blocks_ = blocks_;
    for (const auto& b : blocks_) lift->blocks_.push_back({b.first + n_, b.second + n_});
    lift->weights_ = weights_;
    for (auto& row : lift->weights_) {
        auto copy = row;
        row.insert(row.end(), copy.begin(), copy.end());
    }
    lift->group_ = std::make_shared<const FiniteGroup>(group_->doubled());
    lift->lifted_ = true;
    lift->build_derived();
    cotangent_ = std::move(lift);
}

void ActionSpec::build_derived() {
    torus_generators_.assign(k_, QMatrix(n_, n_));
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            const long long w = weights_[i][j];
            torus_generators_[i](blocks_[j].first, blocks_[j].second) = Rational(Integer(std::to_string(-w)));
            torus_generators_[i](blocks_[j].second, blocks_[j].first) = Rational(Integer(std::to_string(w)));
        }
    std::vector<bool> used(n_, false);
    for (const auto& b : blocks_) used[b.first] = used[b.second] = true;
    free_coordinates_.clear();
    for (std::size_t c = 0; c < n_; ++c)
        if (!used[c]) free_coordinates_.push_back(c);
}

IntVector ActionSpec::block_character(std::size_t block) const {
    IntVector w(k_);
    for (std::size_t i = 0; i < k_; ++i) w[i] = Integer(std::to_string(weights_[i][block]));
    return w;
}

ActionSpec ActionSpec::with_tolerance(double tolerance) const {
    ActionSpec copy = *this;
    copy.tolerance_ = tolerance;
    if (cotangent_) {
        auto lift = std::make_shared<ActionSpec>(*cotangent_);
        lift->tolerance_ = tolerance;
        copy.cotangent_ = std::move(lift);
    }
    return copy;
}

const ActionSpec& ActionSpec::cotangent() const {
    if (!cotangent_) fail(ErrorKind::DimensionMismatch, "a cotangent lift has no further lift");
    return *cotangent_;
}

GroupElement ActionSpec::identity() const { return GroupElement{0, std::vector<Angle>(k_)}; }

GroupElement ActionSpec::element(std::size_t finite, std::vector<Angle> angles) const {
    GroupElement g{finite, std::move(angles)};
    check_element(*this, g);
    return g;
}

// ---------------------------------------------------------------- element arithmetic

GroupElement compose(const ActionSpec& spec, const GroupElement& a, const GroupElement& b) {
    check_element(spec, a);
    check_element(spec, b);
    GroupElement c{spec.finite_group().multiply(a.finite, b.finite), {}};
    c.torus.reserve(spec.k());
    for (std::size_t i = 0; i < spec.k(); ++i) c.torus.push_back(a.torus[i] + b.torus[i]);
    return c;
}

GroupElement inverse(const ActionSpec& spec, const GroupElement& g) {
    check_element(spec, g);
    GroupElement inv{spec.finite_group().inverse(g.finite), {}};
    for (const auto& a : g.torus) inv.torus.push_back(-a);
    return inv;
}

bool same_element(const GroupElement& a, const GroupElement& b) { return a.finite == b.finite && a.torus == b.torus; }

QVector act(const ActionSpec& spec, const GroupElement& g, std::span<const Rational> v) {
    check_element(spec, g);
    if (v.size() != spec.n()) fail(ErrorKind::DimensionMismatch, "point has length " + std::to_string(v.size()));
    QVector out = spec.finite_group().matrix(g.finite) * v;
    for (std::size_t j = 0; j < spec.blocks().size(); ++j) {
        auto [c, s] = quarter_turn(block_angle(spec, g, j));
        const auto [a, b] = spec.blocks()[j];
        Rational xa = out[a], xb = out[b];
        out[a] = c * xa - s * xb;
        out[b] = s * xa + c * xb;
    }
    return out;
}

std::vector<double> act(const ActionSpec& spec, const GroupElement& g, std::span<const double> v) {
    check_element(spec, g);
    if (v.size() != spec.n()) fail(ErrorKind::DimensionMismatch, "point has length " + std::to_string(v.size()));
    auto out = spec.finite_group().matrix(g.finite).apply(v);
    for (std::size_t j = 0; j < spec.blocks().size(); ++j) {
        const double phi = block_angle(spec, g, j).radians();
        const double c = std::cos(phi), s = std::sin(phi);
        const auto [a, b] = spec.blocks()[j];
        const double xa = out[a], xb = out[b];
        out[a] = c * xa - s * xb;
        out[b] = s * xa + c * xb;
    }
    return out;
}

std::pair<QVector, QVector> cotangent_act(const ActionSpec& spec, const GroupElement& g, std::span<const Rational> m,
                                          std::span<const Rational> p) {
    if (p.size() != spec.n()) fail(ErrorKind::DimensionMismatch, "covector has length " + std::to_string(p.size()));
    return {act(spec, g, m), act(spec, g, p)};
}

std::pair<std::vector<double>, std::vector<double>> cotangent_act(const ActionSpec& spec, const GroupElement& g,
                                                                  std::span<const double> m,
                                                                  std::span<const double> p) {
    if (p.size() != spec.n()) fail(ErrorKind::DimensionMismatch, "covector has length " + std::to_string(p.size()));
    return {act(spec, g, m), act(spec, g, p)};
}

// ---------------------------------------------------------------- stabilizers

ClosedSubgroup stabilizer(const ActionSpec& spec, std::span<const Rational> m) {
    if (m.size() != spec.n()) fail(ErrorKind::DimensionMismatch, "point has length " + std::to_string(m.size()));
    const auto& blocks = spec.blocks();
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < blocks.size(); ++j)
        if (sgn(m[blocks[j].first]) != 0 || sgn(m[blocks[j].second]) != 0) support.push_back(j);

    const auto characters = supported_characters(spec, support);
    ClosedSubgroup h;
    h.torus = TorusSubgroup::from_constraints(characters, spec.k());
    std::vector<IntVector> relations;
    bool relations_ready = false;

    const auto& group = spec.finite_group();
    for (std::size_t f = 0; f < group.order(); ++f) {
        // f (theta . m) = m  <=>  theta . m = f^{-1} m = f^T m.
        const QVector target = group.matrix(group.inverse(f)) * m;
        if (std::equal(target.begin(), target.end(), m.begin())) {
            h.finite.push_back(f);
            continue;
        }
        bool solvable = true;
        for (auto c : spec.free_coordinates())
            if (target[c] != m[c]) solvable = false;
        std::vector<QComplex> rotation;
        for (std::size_t j = 0; j < blocks.size() && solvable; ++j) {
            const auto [a, b] = blocks[j];
            const bool supported = std::binary_search(support.begin(), support.end(), j);
            if (!supported) {
                solvable = sgn(target[a]) == 0 && sgn(target[b]) == 0;
                continue;
            }
            const Rational nu = m[a] * m[a] + m[b] * m[b];
            if (target[a] * target[a] + target[b] * target[b] != nu) {
                solvable = false;
                continue;
            }
            rotation.push_back({(m[a] * target[a] + m[b] * target[b]) / nu, (m[a] * target[b] - m[b] * target[a]) / nu});
        }
        if (!solvable) continue;
        if (!relations_ready) {
            relations = integer_relations(characters, spec.k());
            relations_ready = true;
        }
        for (const auto& rel : relations) {
            QComplex prod{1, 0};
            for (std::size_t j = 0; j < rel.size(); ++j)
                if (rel[j] != 0) prod = prod * unit_power(rotation[j], rel[j]);
            if (!prod.is_one()) {
                solvable = false;
                break;
            }
        }
        if (solvable)
            fail(ErrorKind::NonProductStabilizer,
                 "finite element " + std::to_string(f) + " combines with a nontrivial torus rotation to fix the point");
    }
    return h;
}

ClosedSubgroup stabilizer_approx(const ActionSpec& spec, std::span<const double> m) {
    if (m.size() != spec.n()) fail(ErrorKind::DimensionMismatch, "point has length " + std::to_string(m.size()));
    double scale = 1.0;
    for (double x : m) scale = std::max(scale, 1.0 + std::fabs(x));
    const double tol = spec.tolerance() * scale;
    auto zero = [&](double x, const char* what) {
        const double a = std::fabs(x);
        if (a <= tol) return true;
        if (a <= 100.0 * tol)
            fail(ErrorKind::NumericalAmbiguity, std::string(what) + " is within tolerance band of zero: " + std::to_string(x));
        return false;
    };

    const auto& blocks = spec.blocks();
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < blocks.size(); ++j)
        if (!zero(std::hypot(m[blocks[j].first], m[blocks[j].second]), "block norm")) support.push_back(j);
    const auto characters = supported_characters(spec, support);
    ClosedSubgroup h;
    h.torus = TorusSubgroup::from_constraints(characters, spec.k());
    const auto relations = integer_relations(characters, spec.k());

    const auto& group = spec.finite_group();
    for (std::size_t f = 0; f < group.order(); ++f) {
        const auto target = group.matrix(group.inverse(f)).apply(m);
        bool fixes = true;
        for (std::size_t i = 0; i < m.size() && fixes; ++i) fixes = zero(target[i] - m[i], "coordinate difference");
        if (fixes) {
            h.finite.push_back(f);
            continue;
        }
        bool solvable = true;
        for (auto c : spec.free_coordinates())
            if (!zero(target[c] - m[c], "fixed-coordinate difference")) solvable = false;
        std::vector<double> phase;
        for (std::size_t j = 0; j < blocks.size() && solvable; ++j) {
            const auto [a, b] = blocks[j];
            const bool supported = std::binary_search(support.begin(), support.end(), j);
            const double tnorm = std::hypot(target[a], target[b]);
            if (!supported) {
                solvable = zero(tnorm, "block norm");
                continue;
            }
            if (!zero(tnorm - std::hypot(m[a], m[b]), "block norm difference")) {
                solvable = false;
                continue;
            }
            phase.push_back(std::atan2(m[a] * target[b] - m[b] * target[a], m[a] * target[a] + m[b] * target[b]));
        }
        if (!solvable) continue;
        for (const auto& rel : relations) {
            double s = 0.0;
            for (std::size_t j = 0; j < rel.size(); ++j) s += rel[j].get_d() * phase[j];
            s = std::remainder(s, kTwoPi);
            if (!zero(s, "relation phase")) {
                solvable = false;
                break;
            }
        }
        if (solvable)
            fail(ErrorKind::NonProductStabilizer,
                 "finite element " + std::to_string(f) + " combines with a nontrivial torus rotation to fix the point");
    }
    return h;
}

// ---------------------------------------------------------------- conjugacy

ClosedSubgroup conjugate(const ActionSpec& spec, std::size_t f, const ClosedSubgroup& h) {
    const auto& group = spec.finite_group();
    ClosedSubgroup c;
    c.torus = h.torus;
    c.finite.reserve(h.finite.size());
    for (auto x : h.finite) c.finite.push_back(group.conjugate(f, x));
    std::sort(c.finite.begin(), c.finite.end());
    return c;
}

ClosedSubgroup canonical_class(const ActionSpec& spec, const ClosedSubgroup& h) {
    ClosedSubgroup best = h;
    for (std::size_t f = 1; f < spec.finite_group().order(); ++f) {
        auto c = conjugate(spec, f, h);
        if (c.finite < best.finite) best = std::move(c);
    }
    return best;
}

bool is_subconjugate(const ActionSpec& spec, const ClosedSubgroup& h, const ClosedSubgroup& k) {
    if (!k.torus.contains(h.torus) || h.finite.size() > k.finite.size()) return false;
    const auto& group = spec.finite_group();
    std::vector<bool> in_k(group.order(), false);
    for (auto x : k.finite) in_k[x] = true;
    for (std::size_t f = 0; f < group.order(); ++f) {
        bool inside = true;
        for (auto x : h.finite)
            if (!in_k[group.conjugate(f, x)]) {
                inside = false;
                break;
            }
        if (inside) return true;
    }
    return false;
}

std::vector<ClosedSubgroup> conjugates_inside(const ActionSpec& spec, const ClosedSubgroup& h, const ClosedSubgroup& k) {
    std::set<ClosedSubgroup> found;
    if (!k.torus.contains(h.torus)) return {};
    for (std::size_t f = 0; f < spec.finite_group().order(); ++f) {
        auto c = conjugate(spec, f, h);
        if (k.contains(c)) found.insert(std::move(c));
    }
    return {found.begin(), found.end()};
}

Subspace fixed_subspace(const ActionSpec& spec, const ClosedSubgroup& h) {
    const std::size_t n = spec.n();
    const auto& group = spec.finite_group();
    std::vector<QVector> rows;
    const QMatrix id = QMatrix::identity(n);
    for (auto f : h.finite) {
        if (f == 0) continue;
        const QMatrix d = group.matrix(f) - id;
        for (std::size_t r = 0; r < n; ++r) {
            QVector row(n);
            for (std::size_t c = 0; c < n; ++c) row[c] = d(r, c);
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
    for (std::size_t j = 0; j < spec.blocks().size(); ++j) {
        if (h.torus.character_trivial(spec.block_character(j))) continue;
        for (auto c : {spec.blocks()[j].first, spec.blocks()[j].second}) {
            QVector row(n);
            row[c] = 1;
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return Subspace::whole(n);
    QMatrix a(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = rows[r][c];
    return Subspace::kernel(a);
}

// ---------------------------------------------------------------- subgroups of F

FiniteSubgroup generated_subgroup(const FiniteGroup& group, const std::vector<std::size_t>& generators) {
    std::vector<bool> member(group.order(), false);
    std::vector<std::size_t> elements{0};
    member[0] = true;
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (auto s : generators) {
            const auto x = group.multiply(s, elements[i]);
            if (!member[x]) {
                member[x] = true;
                elements.push_back(x);
            }
        }
    std::sort(elements.begin(), elements.end());
    return elements;
}

std::vector<FiniteSubgroup> all_subgroups(const FiniteGroup& group) {
    struct Entry {
        FiniteSubgroup elements;
        std::vector<std::size_t> generators;
    };
    std::set<FiniteSubgroup> seen{{0}};
    std::vector<Entry> queue{{{0}, {}}};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::vector<bool> member(group.order(), false);
        for (auto x : queue[i].elements) member[x] = true;
        for (std::size_t g = 1; g < group.order(); ++g) {
            if (member[g]) continue;
            auto gens = queue[i].generators;
            gens.push_back(g);
            auto k = generated_subgroup(group, gens);
            if (seen.insert(k).second) queue.push_back({std::move(k), std::move(gens)});
        }
    }
    return {seen.begin(), seen.end()};
}

ClosedSubgroup whole_group(const ActionSpec& spec) {
    ClosedSubgroup g;
    for (std::size_t f = 0; f < spec.finite_group().order(); ++f) g.finite.push_back(f);
    g.torus = TorusSubgroup::full(spec.k());
    return g;
}

} // namespace stratakit
