#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocenter/conjugacy.hpp"

using namespace cocenter;

TEST_CASE("SL2 classes in ball: translations separated by Newton point") {
    AffineWeyl w(RootDatum::preset("SL2"));
    auto cls = classes_in_ball(w, 4);
    // expected classes meeting ball(4): {e}, two reflection classes,
    // {t^{+-1}} (length 2), {t^{+-2}} (length 4)
    CHECK(cls.size() == 5);
    int translation_classes = 0;
    for (const auto& c : cls) {
        bool all_translations = true;
        for (const auto& m : c.members)
            if (m.u != 0) all_translations = false;
        if (all_translations && c.min_length > 0) {
            ++translation_classes;
            // t^m and t^{m'} conjugate iff same W0-orbit: members are {t^k, t^-k}
            CHECK(c.members.size() == 2);
        }
    }
    CHECK(translation_classes == 2);
    // class count nondecreasing in L
    std::size_t prev = 0;
    for (long L = 0; L <= 8; L += 2) {
        auto cl = classes_in_ball(w, L);
        CHECK(cl.size() >= prev);
        prev = cl.size();
    }
}

TEST_CASE("PGL2 classes: omega merges the two reflection classes") {
    AffineWeyl w(RootDatum::preset("PGL2"));
    auto cls = classes_in_ball(w, 4);
    int refl = 0;
    for (const auto& c : cls) {
        bool has_s0 = false, has_s1 = false;
        for (const auto& m : c.members) {
            if (m == w.simple(0)) has_s0 = true;
            if (m == w.simple(1)) has_s1 = true;
        }
        if (has_s0 || has_s1) {
            ++refl;
            CHECK((has_s0 && has_s1));  // conjugate via omega
        }
    }
    CHECK(refl == 1);
}

TEST_CASE("gp_path on finite groups") {
    CoxGroup a2 = CoxGroup::build(CoxeterMatrix::preset("A2"));
    // already minimal -> empty path
    auto r0 = gp_path_finite(a2, a2.gen(1));
    CHECK(r0.ok);
    CHECK(r0.steps.empty());
    // s1 s2 s1 -> single step conjugating by s1, landing on s2
    int w = a2.from_word({0, 1, 0});
    auto r = gp_path_finite(a2, w);
    REQUIRE(r.ok);
    CHECK(r.steps.size() == 1);
    CHECK(r.steps[0].s == 0);
    CHECK(r.steps[0].result == a2.gen(1));
    CHECK(r.steps[0].delta == -2);
}

TEST_CASE("gp_path exhaustive on small finite groups") {
    for (const char* name : {"A2", "A1xA1", "B2", "G2"}) {
        CoxGroup g = CoxGroup::build(CoxeterMatrix::preset(name));
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto r = gp_path_finite(g, static_cast<int>(i));
            REQUIRE(r.ok);
            const auto& cls = g.conjugacy_classes()[g.class_of(static_cast<int>(i))];
            CHECK(g.length(r.endpoint) == cls.min_length);
            for (const auto& st : r.steps) CHECK((st.delta == 0 || st.delta == -2));
        }
    }
}

TEST_CASE("gp_path affine on SL2 ball") {
    AffineWeyl w(RootDatum::preset("SL2"));
    auto cls = classes_in_ball(w, 6);
    for (const auto& c : cls) {
        if (!c.closed) continue;
        for (const auto& x : c.members) {
            auto r = gp_path_affine(w, x, c.min_length);
            REQUIRE(r.ok);
            CHECK(w.length(r.endpoint) == c.min_length);
            // verify each recorded step really conjugates by the recorded s
            AffineElement cur = x;
            for (const auto& st : r.steps) {
                AffineElement y = w.conj(w.simple(st.s), cur);
                CHECK(y == st.result);
                CHECK((st.delta == 0 || st.delta == -2));
                cur = y;
            }
            CHECK(cur == r.endpoint);
        }
    }
}

TEST_CASE("strong conjugacy witnesses") {
    CoxGroup a2 = CoxGroup::build(CoxeterMatrix::preset("A2"));
    // trivial chain
    CHECK(strong_conjugacy_witness(a2, a2.gen(0), a2.gen(0), 6).found);
    // s1 -> s2, e.g. via x = s1 s2
    auto r = strong_conjugacy_witness(a2, a2.gen(0), a2.gen(1), 6);
    REQUIRE(r.found);
    // verify the chain conditions
    int cur = a2.gen(0);
    for (const auto& st : r.chain) {
        CHECK(a2.length(a2.conj(st.conjugator, cur)) == a2.length(cur));
        CHECK(a2.length(a2.mult(st.conjugator, cur)) ==
              a2.length(st.conjugator) + a2.length(cur));
        cur = a2.conj(st.conjugator, cur);
    }
    CHECK(cur == a2.gen(1));
}

TEST_CASE("witnesses for all minimal pairs in A3 with bound 6") {
    CoxGroup g = CoxGroup::build(CoxeterMatrix::preset("A3"));
    for (const auto& c : g.conjugacy_classes())
        for (int a : c.min_elements)
            for (int b : c.min_elements) {
                auto r = strong_conjugacy_witness(g, a, b, 6);
                CHECK(r.found);
            }
}

TEST_CASE("newton zero classes stabilize for SL2") {
    AffineWeyl w(RootDatum::preset("SL2"));
    auto z8 = newton_zero_classes(w, 8);
    auto z10 = newton_zero_classes(w, 10);
    CHECK(z8.size() == z10.size());
    // identity class qualifies; nontrivial translation classes are excluded
    bool has_identity = false;
    for (const auto& c : z8) {
        for (const auto& m : c.members)
            if (m == w.identity()) has_identity = true;
        for (const Rat& r : c.newton_dom) CHECK(r == 0);
    }
    CHECK(has_identity);
    // SL2: {e}, class of s1, class of s0
    CHECK(z8.size() == 3);
}

TEST_CASE("parametrization of SL2 classes") {
    AffineWeyl w(RootDatum::preset("SL2"));
    auto cls = classes_in_ball(w, 8);
    for (const auto& c : cls) {
        if (!c.closed) continue;
        ClassParam p = parametrize_class(w, c, 8);
        bool is_translation_class = true;
        for (const auto& m : c.members)
            if (m.u != 0) is_translation_class = false;
        if (is_translation_class) {
            CHECK(p.J.empty());
            CHECK(p.C_members.size() == 1);
            CHECK(w.is_dominant(w.newton_point(p.rep)));
        } else {
            // reflection-type classes are elliptic: J = Pi
            CHECK(p.J.size() == 1);
        }
    }
    // injectivity up to ~ on closed classes
    std::vector<ClassParam> params;
    for (const auto& c : cls)
        if (c.closed) params.push_back(parametrize_class(w, c, 8));
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            CHECK_FALSE(params_equivalent(w, params[i], params[j], 8));
}

TEST_CASE("is_elliptic_affine on SL2") {
    AffineWeyl w(RootDatum::preset("SL2"));
    auto cls = classes_in_ball(w, 8);
    for (const auto& c : cls) {
        if (!c.closed) continue;
        bool contains_identity = false, is_refl = false, is_transl = true;
        for (const auto& m : c.members) {
            if (m == w.identity()) contains_identity = true;
            if (m.u != 0) is_transl = false;
        }
        is_refl = !is_transl && c.min_length == 1;
        bool ell = is_elliptic_affine(w, c, 8);
        if (contains_identity) CHECK_FALSE(ell);       // identity never elliptic
        if (is_transl && c.min_length > 0) CHECK_FALSE(ell);  // pure translations
        if (is_refl) CHECK(ell);                        // reflection classes
    }
}

TEST_CASE("closed-class minimal lengths persist when the ball grows") {
    AffineWeyl w(RootDatum::preset("SL2"));
    auto small = classes_in_ball(w, 6);
    auto big = classes_in_ball(w, 8);
    for (const auto& c : small) {
        if (!c.closed) continue;
        int bi = class_index_of(big, c.min_elements.front());
        REQUIRE(bi >= 0);
        CHECK(big[bi].min_length == c.min_length);
    }
}
