#include "support.hpp"

#include "stratakit/harness.hpp"
#include "stratakit/momentum.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace stratakit;

namespace {

std::map<std::string, double> values(const InvariantSet& inv, std::vector<double> z) {
    std::map<std::string, double> out;
    for (auto& [name, v] : eval_invariants(inv, z)) out[name] = v;
    return out;
}

std::string regions(const ActionSpec& spec, const InvariantSet& inv, std::vector<double> z) {
    const auto [a, b] = classify_image(spec, inv, z);
    return a.name() + "x" + b.name();
}

/// sigma and rho written out by hand in the coordinates (x1, x2, x3, y1, y2, y3).
std::map<std::string, Rational> hand_invariants(const QVector& z) {
    const auto &x1 = z[0], &x2 = z[1], &x3 = z[2], &y1 = z[3], &y2 = z[4], &y3 = z[5];
    return {{"sigma1", x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2},
            {"sigma2", 2 * (x1 * y1 + x2 * y2)},
            {"sigma3", y1 * y1 + y2 * y2 - x1 * x1 - x2 * x2},
            {"rho1", x3 * x3 + y3 * y3},
            {"rho2", 2 * x3 * y3},
            {"rho3", y3 * y3 - x3 * x3},
            {"j", x1 * y2 - x2 * y1}};
}

} // namespace

TEST_CASE("eval_invariants: worked points") {
    const auto spec = test::bundled("example");
    const auto inv = InvariantSet::from_spec(spec);
    auto a = values(inv, {1, 0, 0, 0, 1, 0});
    CHECK(a["sigma1"] == 2);
    CHECK(a["sigma2"] == 0);
    CHECK(a["sigma3"] == 0);
    CHECK(a["j"] == 1);
    CHECK(a["rho1"] == 0);
    CHECK(a["rho2"] == 0);
    CHECK(a["rho3"] == 0);
    for (auto& [name, v] : values(inv, std::vector<double>(6, 0.0))) CHECK(v == 0);
    auto c = values(inv, {0, 0, 1, 0, 0, 1});
    CHECK(c["rho1"] == 2);
    CHECK(c["rho2"] == 2);
    CHECK(c["rho3"] == 0);
    CHECK(c["sigma1"] == 0);
    CHECK(c["j"] == 0);
    CHECK_THROWS_KIND(eval_invariants(inv, std::vector<double>(3, 0.0)), ErrorKind::DimensionMismatch);
}

TEST_CASE("spec invariants agree with the hand-written table at rational points") {
    const auto inv = InvariantSet::from_spec(test::bundled("example"));
    Rng rng = make_rng(1);
    for (int i = 0; i < 50; ++i) {
        QVector z(6);
        for (auto& x : z) x = small_rational(rng, 13);
        const auto expected = hand_invariants(z);
        for (const auto& [name, v] : eval_invariants(inv, z)) CHECK(v == expected.at(name));
    }
}

TEST_CASE("relations hold exactly at rational points and numerically everywhere") {
    const auto spec = test::bundled("example");
    const auto inv = InvariantSet::from_spec(spec);
    Rng rng = make_rng(2);
    for (int i = 0; i < 10; ++i) {
        QVector z(6);
        for (auto& x : z) x = small_rational(rng, 17);
        const auto v = hand_invariants(z);
        const auto s1 = v.at("sigma1"), s2 = v.at("sigma2"), s3 = v.at("sigma3"), j = v.at("j");
        const auto r1 = v.at("rho1"), r2 = v.at("rho2"), r3 = v.at("rho3");
        CHECK(s1 * s1 - s2 * s2 - s3 * s3 - 4 * j * j == 0);
        CHECK(r1 * r1 - r2 * r2 - r3 * r3 == 0);
        QVector vals;
        for (const auto& [name, x] : eval_invariants(inv, z)) vals.push_back(x);
        for (const auto& rel : inv.relations) {
            if (rel.kind == RelationKind::Equality) CHECK(rel.polynomial.evaluate(vals) == 0);
            else CHECK(rel.polynomial.evaluate(vals) >= 0);
        }
    }

    std::vector<std::vector<double>> cloud;
    for (int i = 0; i < 2000; ++i) {
        std::vector<double> z(6);
        for (auto& x : z) x = 2.0 * uniform01(rng) - 1.0;
        cloud.push_back(z);
    }
    for (const auto& r : check_relations(inv, cloud, 1e-9)) {
        CAPTURE(r.name);
        CHECK(r.passed);
        CHECK(r.max_residual <= 1e-9);
        CHECK(r.violations == 0);
    }
}

TEST_CASE("check_relations flags a false relation") {
    auto spec = load_spec(R"({"n": 1, "invariants": [{"name": "s", "terms": {"2,0": 1, "0,2": 1}}],
                              "relations": [{"name": "wrong", "kind": "eq", "terms": {"1": 1}}]})");
    const auto inv = InvariantSet::from_spec(spec);
    const auto res = check_relations(inv, {{1.0, 0.0}, {0.0, 0.0}}, 1e-9);
    REQUIRE(res.size() == 1);
    CHECK_FALSE(res[0].passed);
    CHECK(res[0].violations == 1);
    CHECK(res[0].max_residual == 1.0);
}

TEST_CASE("with j = 0 the sigma relation is a cone in three variables") {
    const auto spec = test::bundled("example");
    const auto inv = InvariantSet::from_spec(spec);
    for (const auto& z : sample_zero_level(spec, 500, 3)) {
        auto v = values(inv, z);
        CHECK(std::fabs(v["j"]) <= 1e-12);
        CHECK(v["sigma1"] * v["sigma1"] == doctest::Approx(v["sigma2"] * v["sigma2"] + v["sigma3"] * v["sigma3"]).epsilon(1e-12));
    }
}

TEST_CASE("sample_zero_level") {
    const auto spec = test::bundled("example");
    const auto one = sample_zero_level(spec, 1, 42);
    CHECK(one.size() == 1);
    CHECK_THROWS_KIND(sample_zero_level(spec, 0, 42), ErrorKind::DimensionMismatch);
    for (const auto& z : sample_zero_level(spec, 1000, 42)) {
        const std::vector<double> m(z.begin(), z.begin() + 3), p(z.begin() + 3, z.end());
        CHECK(std::fabs(momentum(spec, m, p).components[0]) <= 1e-12);
        CHECK(std::hypot(m[0], m[1], m[2]) <= 1.0 + 1e-12);
        CHECK(std::hypot(p[0], p[1], p[2]) <= 1.0 + 1e-12);
    }
    const auto line = test::bundled("z2_line");
    bool spread = false;
    for (const auto& z : sample_zero_level(line, 100, 42)) spread = spread || std::fabs(z[1]) > 0.5;
    CHECK(spread);
}

TEST_CASE("classify_image: worked points") {
    const auto spec = test::bundled("example");
    const auto inv = InvariantSet::from_spec(spec);
    CHECK(regions(spec, inv, {1, 0, 0, 1, 0, 0}) == "I1xV2");
    const auto [a, b] = classify_image(spec, inv, std::vector<double>{1, 0, 0, 0, 0, 1});
    CHECK(a.name() == "I1");
    CHECK(a.on_B);
    CHECK(b.name() == "E2");
    CHECK(regions(spec, inv, std::vector<double>(6, 0.0)) == "V1xV2");
    CHECK(regions(spec, inv, {0, 0, 0, 1, 0, 0}) == "E1xV2");
    CHECK_THROWS_KIND(classify_image(spec, inv, std::vector<double>{1, 0, 0, 0, 1, 0}), ErrorKind::NotOnZeroLevel);

    const auto other = test::bundled("z2_line");
    CHECK_THROWS_KIND(classify_image(other, InvariantSet::from_spec(other), std::vector<double>{1, 0}),
                      ErrorKind::NotExampleSpec);
}

TEST_CASE("classify_image is G-invariant") {
    const auto spec = test::bundled("example");
    const auto inv = InvariantSet::from_spec(spec);
    Rng rng = make_rng(4);
    const auto points = sample_zero_level(spec, 200, 4);
    for (const auto& z : points) {
        const auto g = spec.element(rng() % 2, {Angle::from_radians(6.283185307179586 * uniform01(rng))});
        const std::vector<double> m(z.begin(), z.begin() + 3), p(z.begin() + 3, z.end());
        const auto [gm, gp] = cotangent_act(spec, g, m, p);
        std::vector<double> gz = gm;
        gz.insert(gz.end(), gp.begin(), gp.end());
        CHECK(classify_image(spec, inv, gz) == classify_image(spec, inv, z));
    }
}

TEST_CASE("points in different regions are never related by the group") {
    // exact points with equal invariants must share a class; distinct classes
    // must differ in some invariant, so no group element can map one to the other
    const auto lattice = build_isotropy_lattice(test::bundled("example"), 42);
    const auto& spec = lattice.spec();
    const auto inv = InvariantSet::from_spec(spec);
    const auto coiso = coisotropic_lattice(lattice);
    Rng rng = make_rng(5);
    std::vector<std::pair<std::string, QVector>> samples;
    for (const auto& p : coiso.nodes)
        for (int i = 0; i < 5; ++i) {
            const auto s = construct_piece_sample(lattice, p.pair, rng);
            QVector z = s.m;
            z.insert(z.end(), s.p.begin(), s.p.end());
            samples.emplace_back(double_cone_regions().at(p.label), z);
        }
    for (std::size_t a = 0; a < samples.size(); ++a)
        for (std::size_t b = a + 1; b < samples.size(); ++b) {
            if (samples[a].first == samples[b].first) continue;
            CHECK(eval_invariants(inv, samples[a].second) != eval_invariants(inv, samples[b].second));
            const auto za = samples[a].second, zb = samples[b].second;
            for (std::size_t f = 0; f < 2; ++f)
                for (long t = 0; t < 4; ++t) {
                    const auto g = spec.element(f, {test::quarter_turns(t)});
                    const auto [gm, gp] = cotangent_act(spec, g, QVector(za.begin(), za.begin() + 3),
                                                        QVector(za.begin() + 3, za.end()));
                    QVector gz = gm;
                    gz.insert(gz.end(), gp.begin(), gp.end());
                    CHECK(gz != zb);
                }
        }
}

TEST_CASE("piece membership of constructed samples") {
    const auto lattice = build_isotropy_lattice(test::bundled("example"), 42);
    Rng rng = make_rng(6);
    for (const auto& pair : connectable_pairs(lattice)) {
        for (int i = 0; i < 20; ++i) {
            const auto s = construct_piece_sample(lattice, pair, rng);
            const auto got = piece_of(lattice, s.m, s.p);
            CHECK(got.upper == pair.upper);
            CHECK(got.lower == pair.lower);
            CHECK(is_zero(momentum(lattice.spec(), s.m, s.p)));
        }
    }
    CHECK_THROWS_KIND(piece_of(lattice, test::q({1, 0, 0}), test::q({0, 1, 0})), ErrorKind::NotOnZeroLevel);
}

TEST_CASE("constructed samples land in the listed regions with the right local dimension") {
    const auto lattice = build_isotropy_lattice(test::bundled("example"), 42);
    const auto inv = InvariantSet::from_spec(lattice.spec());
    const auto checks = verify_piece_regions(lattice, inv, 200, 42);
    CHECK(checks.size() == 9);
    for (const auto& c : checks) {
        CAPTURE(c.piece);
        CHECK(c.expected == double_cone_regions().at(c.piece));
        CHECK(c.hits == c.samples);
        for (auto d : c.local_dims) CHECK(static_cast<long long>(d) == c.dim_W);
        CHECK(c.passed);
    }
}

TEST_CASE("region products have the piece dimension") {
    // V is a point, E a ray and I a two-dimensional region of each cone
    auto dim = [](char label) { return label == 'V' ? 0 : label == 'E' ? 1 : 2; };
    const auto coiso = coisotropic_lattice(build_isotropy_lattice(test::bundled("example"), 42));
    for (const auto& [label, region] : double_cone_regions()) {
        CAPTURE(label);
        const auto x = region.find('x');
        CHECK(dim(region[0]) + dim(region[x + 1]) == coiso.nodes[*coiso.find(label)].dim_W);
    }
}

TEST_CASE("frontier cross-check on the Hilbert image") {
    const auto lattice = build_isotropy_lattice(test::bundled("example"), 42);
    const auto inv = InvariantSet::from_spec(lattice.spec());
    const auto coiso = coisotropic_lattice(lattice);
    const auto checks = frontier_crosscheck(lattice, coiso, inv, 200, 42);
    CHECK(checks.size() == coiso.edges.size());
    for (const auto& c : checks) {
        CAPTURE(c.from + " -> " + c.to);
        CHECK(c.passed);
        CHECK(c.max_distance < 10 * lattice.spec().tolerance());
    }
}
