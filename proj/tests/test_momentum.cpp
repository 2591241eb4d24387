#include "oracles.hpp"
#include "support.hpp"

#include "stratakit/momentum.hpp"

#include <doctest.h>

using namespace stratakit;

namespace {

std::set<std::string> ids(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST_CASE("momentum: worked values") {
    const auto spec = test::bundled("example");
    CHECK(momentum(spec, test::q({1, 0, 0}), test::q({0, 1, 0})) == test::q({1}));
    CHECK(momentum(spec, test::q({3, -2, 1}), test::q({0, 0, 0})) == test::q({0}));
    CHECK(momentum(spec, test::q({1, 0, 0}), test::q({1, 0, 5})) == test::q({0}));
    const auto j = momentum(spec, std::vector<double>{1, 0, 0}, std::vector<double>{0, 1, 0});
    CHECK(j.components == std::vector<double>{1.0});
    CHECK_THROWS_KIND(momentum(spec, test::q({1, 0}), test::q({0, 1, 0})), ErrorKind::DimensionMismatch);
}

TEST_CASE("momentum is x1 y2 - x2 y1 on the example") {
    const auto spec = test::bundled("example");
    Rng rng = make_rng(1);
    for (int i = 0; i < 100; ++i) {
        QVector m(3), p(3);
        for (auto& x : m) x = small_rational(rng, 11);
        for (auto& x : p) x = small_rational(rng, 11);
        CHECK(momentum(spec, m, p)[0] == m[0] * p[1] - m[1] * p[0]);
    }
}

TEST_CASE("fiber_zero_basis: worked points") {
    const auto spec = test::bundled("example");
    CHECK(fiber_zero_basis(spec, test::q({1, 0, 0})) ==
          Subspace::span(3, {test::q({1, 0, 0}), test::q({0, 0, 1})}));
    CHECK(fiber_zero_basis(spec, test::q({0, 0, 1})) == Subspace::whole(3));
    const auto klein = test::bundled("z2z2_plane");
    CHECK(fiber_zero_basis(klein, test::q({2, 3})) == Subspace::whole(2));
}

TEST_CASE("momentum vanishes on the zero fiber and is G-invariant") {
    for (const char* name : test::kAllSpecs) {
        CAPTURE(name);
        const auto spec = test::bundled(name);
        Rng rng = make_rng(2);
        for (int i = 0; i < 200; ++i) {
            QVector m(spec.n()), p(spec.n());
            for (auto& x : m) x = rng() % 3 == 0 ? Rational(0) : small_rational(rng, 9);
            for (auto& x : p) x = small_rational(rng, 9);
            const auto fiber = fiber_zero_basis(spec, m);
            CHECK(fiber.dim() == spec.n() - orbit_tangent(spec, m).dim());
            for (const auto& b : fiber.basis()) CHECK(is_zero(momentum(spec, m, b)));

            std::vector<Angle> angles;
            for (std::size_t t = 0; t < spec.k(); ++t) angles.push_back(test::quarter_turns(static_cast<long>(rng() % 4)));
            const auto g = spec.element(rng() % spec.finite_group().order(), angles);
            const auto [gm, gp] = cotangent_act(spec, g, m, p);
            CHECK(momentum(spec, gm, gp) == momentum(spec, m, p));

            const auto g2 = spec.element(rng() % spec.finite_group().order(),
                                         std::vector<Angle>(spec.k(), Angle::from_radians(6.0 * uniform01(rng))));
            const auto md = to_double(m), pd = to_double(p);
            const auto [hm, hp] = cotangent_act(spec, g2, md, pd);
            const auto before = momentum(spec, md, pd).components, after = momentum(spec, hm, hp).components;
            for (std::size_t t = 0; t < before.size(); ++t) CHECK(after[t] == doctest::Approx(before[t]).epsilon(1e-12));
        }
    }
}

TEST_CASE("fiber_decomposition: worked points") {
    const auto lattice = build_isotropy_lattice(test::bundled("example"), 42);
    const auto a = fiber_decomposition(lattice, test::q({1, 0, 0}));
    CHECK(a.cls.id == "Z2");
    CHECK(a.cotangent_part == Subspace::span(3, {test::q({1, 0, 0})}));
    CHECK(a.conormal_part == Subspace::span(3, {test::q({0, 0, 1})}));
    CHECK(a.annihilator.dim() == 2);

    const auto b = fiber_decomposition(lattice, test::q({0, 0, 1}));
    CHECK(b.cls.id == "S1");
    CHECK(b.cotangent_part == Subspace::span(3, {test::q({0, 0, 1})}));
    CHECK(b.conormal_part == Subspace::span(3, {test::q({1, 0, 0}), test::q({0, 1, 0})}));

    const auto c = fiber_decomposition(lattice, test::q({1, 2, 3}));
    CHECK(c.cls.id == "1");
    CHECK(c.conormal_part.dim() == 0);
    CHECK(c.annihilator == c.cotangent_part);

    CHECK_THROWS_KIND(fiber_decomposition(build_isotropy_lattice(test::bundled("trivial"), 42), test::q({1, 2, 3})),
                      ErrorKind::DimensionMismatch);
}

TEST_CASE("zero fiber splits into cotangent and conormal parts at every witness") {
    for (const char* name : test::kAllSpecs) {
        const auto lattice = build_isotropy_lattice(test::bundled(name), 42);
        for (const auto& s : lattice.strata()) {
            CAPTURE(name);
            CAPTURE(s.cls.id);
            const auto d = fiber_decomposition(lattice, s.witness);
            std::vector<QVector> all = d.cotangent_part.basis();
            all.insert(all.end(), d.conormal_part.basis().begin(), d.conormal_part.basis().end());
            CHECK(all.size() == d.annihilator.dim());
            CHECK(Subspace::span(lattice.spec().n(), all) == d.annihilator);
            CHECK(d.annihilator == fiber_zero_basis(lattice.spec(), s.witness));
            for (const auto& u : d.cotangent_part.basis())
                for (const auto& v : d.conormal_part.basis()) CHECK(dot(u, v) == 0);
        }
    }
}

TEST_CASE("sample_fiber_classes: worked base points") {
    const auto lattice = build_isotropy_lattice(test::bundled("example"), 42);
    CHECK(sample_fiber_classes(lattice, test::q({1, 0, 0}), 10000, 42) == ids({"1", "Z2"}));
    CHECK(sample_fiber_classes(lattice, test::q({0, 0, 1}), 10000, 42) == ids({"1", "S1"}));
    CHECK(sample_fiber_classes(lattice, test::q({0, 0, 0}), 10000, 42) == ids({"1", "S1", "Z2", "Z2xS1"}));
    CHECK_THROWS_KIND(sample_fiber_classes(lattice, test::q({0, 0, 0}), 0, 42), ErrorKind::DimensionMismatch);
}

TEST_CASE("fiber classes are the down-set at every witness, at any budget") {
    for (const char* name : test::kAllSpecs) {
        const auto lattice = build_isotropy_lattice(test::bundled(name), 42);
        std::set<std::string> seen;
        for (std::size_t budget : {1u, 10u, 10000u}) {
            for (const auto& c : verify_fiber_classes(lattice, budget, 42)) {
                CAPTURE(name);
                CAPTURE(c.class_id);
                CHECK(c.subset);
                if (budget == 10000) {
                    CHECK(c.equal);
                    seen.insert(c.observed.begin(), c.observed.end());
                }
            }
        }
        CHECK(seen == test::class_ids(lattice));
    }
}

TEST_CASE("conormal orbit types") {
    const auto lattice = build_isotropy_lattice(test::bundled("example"), 42);
    CHECK(conormal_orbit_types(lattice, lattice.index("Z2xS1")) == ids({"1", "S1", "Z2", "Z2xS1"}));
    CHECK(conormal_orbit_types(lattice, lattice.principal()) == ids({"1"}));
    CHECK(conormal_orbit_types(lattice, lattice.index("S1")) == ids({"1", "S1"}));
    for (const char* name : test::kAllSpecs) {
        const auto l = build_isotropy_lattice(test::bundled(name), 42);
        for (std::size_t i = 0; i < l.size(); ++i) {
            CAPTURE(name);
            CHECK(sample_conormal_classes(l, i, 1000, 42) == conormal_orbit_types(l, i));
        }
    }
}

TEST_CASE("a corrupted action is caught by the down-set check") {
    // weight 2 instead of 1: the half turn now fixes the plane, so sampled
    // stabilizers gain a C2 factor that the reference lattice does not contain
    const auto lattice = build_isotropy_lattice(test::bundled("example"), 42);
    const auto corrupted = load_spec(R"({"n": 3, "finite_generators": [[[1,0,0],[0,1,0],[0,0,-1]]],
                                         "torus": {"blocks": [[1,2]], "weights": [[2]]}})");
    const auto checks = verify_fiber_classes(lattice, corrupted, 1000, 42);
    bool mismatch = false;
    for (const auto& c : checks) {
        if (c.equal) continue;
        mismatch = true;
        CHECK_FALSE(c.subset);
        bool unknown = false;
        for (const auto& id : c.observed) unknown = unknown || id.back() == '?';
        CHECK(unknown);
    }
    CHECK(mismatch);
}
