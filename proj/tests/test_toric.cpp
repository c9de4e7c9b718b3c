#include <catch2/catch_amalgamated.hpp>

#include <toricdisk/catalog.hpp>

using namespace toricdisk;

TEST_CASE("catalog geometries validate cleanly") {
    for (const auto& name : catalog_names()) {
        auto cg = catalog_geometry(name, 4);
        INFO(name);
        CHECK(validate(cg.geom).empty());
        for (const auto& ph : cg.phases) {
            INFO(ph.brane.label);
            CHECK(validate_brane(cg.geom, ph.brane).empty());
        }
    }
}

TEST_CASE("validation reports broken input") {
    auto cg = catalog_geometry("conifold");
    auto bad = cg.geom;
    bad.charge[0][0] = 5;  // rows no longer sum to zero
    CHECK(!validate(bad).empty());
    auto bad2 = cg.geom;
    bad2.max_cones.push_back(bad2.max_cones.front());  // duplicate cone
    CHECK(!validate(bad2).empty());
    BraneSpec nb = cg.phases[0].brane;
    nb.i2 = nb.i3;
    CHECK(!validate_brane(cg.geom, nb).empty());
}

TEST_CASE("open charge vector and pairings") {
    auto cg = catalog_geometry("conifold");
    const auto& b = cg.phases[0].brane;  // inner phase (i1,i2,i3,i4)=(4,1,2,3)
    auto l0 = l0_vector(cg.geom, b, 2);
    CHECK(l0 == std::vector<Int>{2, -3, 0, 1});
    CHECK(pairing(cg.geom, {1}, 1) == -1);
    CHECK(pairing(cg.geom, {1}, 3) == 1);
    ExtExponent bt(1, {1});
    CHECK(extended_pairing(cg.geom, b, 2, bt, 4) == 2);       // w*l0 + <D_4,beta>
    CHECK(extended_pairing(cg.geom, b, 2, bt, cg.geom.r + 1) == 1);
    CHECK(extended_pairing(cg.geom, b, 2, bt, cg.geom.r + 2) == -1);
}

TEST_CASE("anticone effectivity test") {
    auto g = catalog_geometry("conifold").geom;
    CHECK(is_effective(g, {1}));
    CHECK(is_effective(g, {3}));
    CHECK(!is_effective(g, {-1}));
    auto f0 = catalog_geometry("KF0").geom;
    CHECK(is_effective(f0, {1, 0}));
    CHECK(is_effective(f0, {2, 3}));
    CHECK(!is_effective(f0, {1, -1}));
}

TEST_CASE("mori generators of fibered and surface examples") {
    CHECK(mori_generators(catalog_geometry("conifold").geom) ==
          std::vector<std::vector<Int>>{{1}});
    CHECK(mori_generators(catalog_geometry("KP2").geom) ==
          std::vector<std::vector<Int>>{{1}});
    auto gens = mori_generators(catalog_geometry("KF0").geom);
    std::sort(gens.begin(), gens.end());
    CHECK(gens == std::vector<std::vector<Int>>{{0, 1}, {1, 0}});
}

TEST_CASE("compact edge class and degree shift of inner branes") {
    auto cg = catalog_geometry("conifold");
    const auto& b = cg.phases[0].brane;
    CHECK(curve_class_alpha(cg.geom, b) == std::vector<Int>{1});
    CHECK(inner_n(cg.geom, b) == 0);
    auto kp2 = catalog_geometry("KP2");
    const auto& b1 = kp2.phases[0].brane;  // phase with (i1,i2,i3,i4)=(2,3,1,4)
    CHECK(curve_class_alpha(kp2.geom, b1) == std::vector<Int>{1});
    CHECK(inner_n(kp2.geom, b1) == -2);
}

TEST_CASE("grading search is positive on all catalog cones") {
    for (const auto& name : catalog_names()) {
        auto cg = catalog_geometry(name, 4);
        for (const auto& ph : cg.phases) {
            for (Int f : {-2L, 0L, 3L}) {
                auto gr = find_grading(cg.geom, &ph.brane, f);
                INFO(name << " " << ph.brane.label << " f=" << f);
                CHECK(gr.g0 > 0);
                for (const auto& m : mori_generators(cg.geom)) {
                    Int s = 0;
                    for (std::size_t a = 0; a < m.size(); ++a) s += gr.gd[a] * m[a];
                    CHECK(s > 0);
                }
                for (const auto& v : extended_cone_generators(cg.geom, ph.brane, f))
                    CHECK(gr.grade(ExtExponent(v[0], {v.begin() + 1, v.end()})) > 0);
            }
        }
    }
}

TEST_CASE("effective class enumeration") {
    auto g = catalog_geometry("conifold").geom;
    Grading gr(1, {1});
    CHECK(enumerate_effective(g, gr, 3) ==
          std::vector<std::vector<Int>>{{1}, {2}, {3}});
    auto f0 = catalog_geometry("KF0").geom;
    Grading gr2(1, {1, 1});
    auto eff = enumerate_effective(f0, gr2, 2);
    CHECK(eff == std::vector<std::vector<Int>>{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
}

TEST_CASE("extended class enumeration matches the defining inequalities") {
    auto cg = catalog_geometry("KP2");
    const auto& b = cg.phases[2].brane;  // outer phase (1,2,3)
    Int f = 1;
    auto gr = find_grading(cg.geom, &b, f);
    Int N = 3 * gr.g0;
    auto ext = enumerate_extended(cg.geom, b, f, gr, N);
    CHECK(!ext.empty());
    for (const auto& bt : ext) {
        CHECK(bt.w != 0);
        CHECK(gr.grade(bt) <= N);
        for (Int i = 1; i <= cg.geom.r; ++i) {
            if (i == b.i2 || i == b.i3) continue;
            CHECK(extended_pairing(cg.geom, b, f, bt, i) >= 0);
        }
    }
    // outer brane: positive windings only
    for (const auto& bt : ext) CHECK(bt.w > 0);
    CHECK(std::find(ext.begin(), ext.end(), ExtExponent(1, {0})) != ext.end());
}
