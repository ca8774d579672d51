#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocenter/coxeter.hpp"
#include "cocenter/numeric.hpp"

using namespace cocenter;

TEST_CASE("group orders") {
    CHECK(CoxGroup::build(CoxeterMatrix::preset("A1")).size() == 2);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("A2")).size() == 6);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("A1xA1")).size() == 4);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("B2")).size() == 8);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("G2")).size() == 12);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("A3")).size() == 24);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("B3")).size() == 48);
}

TEST_CASE("lengths") {
    CoxGroup g = CoxGroup::build(CoxeterMatrix::preset("A2"));
    CHECK(g.length(g.identity()) == 0);
    for (int s = 0; s < g.rank(); ++s) CHECK(g.length(g.gen(s)) == 1);
    // longest element of A2 has length 3 (maximum over the 6 elements)
    unsigned maxlen = 0;
    for (std::size_t i = 0; i < g.size(); ++i) maxlen = std::max(maxlen, g.length(static_cast<int>(i)));
    CHECK(maxlen == 3);
    CHECK(g.length(g.longest_element()) == 3);
}

TEST_CASE("length equals root-counting length and stored word length") {
    for (const char* name : {"A2", "B2", "G2", "A3", "B3", "A1xA1"}) {
        CoxGroup g = CoxGroup::build(CoxeterMatrix::preset(name));
        for (std::size_t i = 0; i < g.size(); ++i) {
            int a = static_cast<int>(i);
            CHECK(g.length(a) == g.length_by_roots(a));
            CHECK(g.length(a) == g.word(a).size());
            CHECK(g.from_word(g.word(a)) == a);
        }
    }
}

TEST_CASE("l(sw) = l(w) +- 1") {
    for (const char* name : {"A2", "B2", "B3"}) {
        CoxGroup g = CoxGroup::build(CoxeterMatrix::preset(name));
        for (std::size_t i = 0; i < g.size(); ++i)
            for (int s = 0; s < g.rank(); ++s) {
                int sw = g.mult(g.gen(s), static_cast<int>(i));
                long d = static_cast<long>(g.length(sw)) - static_cast<long>(g.length(static_cast<int>(i)));
                CHECK((d == 1 || d == -1));
            }
    }
}

TEST_CASE("conjugacy class counts") {
    CHECK(CoxGroup::build(CoxeterMatrix::preset("A1")).conjugacy_classes().size() == 2);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("A2")).conjugacy_classes().size() == 3);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("B2")).conjugacy_classes().size() == 5);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("G2")).conjugacy_classes().size() == 6);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("A3")).conjugacy_classes().size() == 5);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("B3")).conjugacy_classes().size() == 10);
}

TEST_CASE("classes partition the group and are conjugation invariant") {
    CoxGroup g = CoxGroup::build(CoxeterMatrix::preset("B2"));
    std::size_t total = 0;
    for (const auto& c : g.conjugacy_classes()) {
        total += c.elements.size();
        CHECK(!c.min_elements.empty());
        for (int x : c.min_elements) CHECK(g.length(x) == c.min_length);
        // ellipticity constant on the class
        for (int x : c.elements) CHECK(g.elliptic_element(x) == c.elliptic);
    }
    CHECK(total == g.size());
    Rng rng(42);
    for (int t = 0; t < 50; ++t) {
        int w = static_cast<int>(rng.below(g.size()));
        int x = static_cast<int>(rng.below(g.size()));
        CHECK(g.class_of(g.conj(x, w)) == g.class_of(w));
    }
}

TEST_CASE("ellipticity") {
    CoxGroup a2 = CoxGroup::build(CoxeterMatrix::preset("A2"));
    // identity never elliptic
    CHECK_FALSE(a2.elliptic_element(a2.identity()));
    // the 3-cycle s1 s2 is elliptic
    int c = a2.from_word({0, 1});
    CHECK(a2.elliptic_element(c));
    int count = 0;
    for (const auto& cl : a2.conjugacy_classes()) count += cl.elliptic;
    CHECK(count == 1);

    // B2 has exactly 2 elliptic classes
    CoxGroup b2 = CoxGroup::build(CoxeterMatrix::preset("B2"));
    int eb = 0;
    for (const auto& cl : b2.conjugacy_classes()) eb += cl.elliptic;
    CHECK(eb == 2);
}

TEST_CASE("elliptic iff avoiding every proper parabolic (rank <= 3)") {
    for (const char* name : {"A1", "A2", "A1xA1", "B2", "G2", "A3", "B3"}) {
        CoxGroup g = CoxGroup::build(CoxeterMatrix::preset(name));
        std::vector<char> inpara = g.proper_parabolic_closure();
        for (const auto& cl : g.conjugacy_classes()) {
            bool meets = false;
            for (int x : cl.elements)
                if (inpara[x]) { meets = true; break; }
            CHECK(cl.elliptic == !meets);
        }
    }
}

TEST_CASE("parabolic subgroup sizes") {
    CoxGroup g = CoxGroup::build(CoxeterMatrix::preset("A3"));
    CHECK(g.parabolic_elements({}).size() == 1);
    CHECK(g.parabolic_elements({0}).size() == 2);
    CHECK(g.parabolic_elements({0, 1}).size() == 6);
    CHECK(g.parabolic_elements({0, 2}).size() == 4);
    CHECK(g.parabolic_elements({0, 1, 2}).size() == 24);
}

TEST_CASE("generator parameter classes") {
    // A2: both generators conjugate -> one class
    CHECK(CoxGroup::build(CoxeterMatrix::preset("A2")).num_param_classes() == 1);
    // B2: m=4 even -> two classes
    CHECK(CoxGroup::build(CoxeterMatrix::preset("B2")).num_param_classes() == 2);
    // B3: s2,s3 joined by m=3; s1 separate
    CHECK(CoxGroup::build(CoxeterMatrix::preset("B3")).num_param_classes() == 2);
    CHECK(CoxGroup::build(CoxeterMatrix::preset("A1xA1")).num_param_classes() == 2);
}

TEST_CASE("element cap") {
    // affine A1 (m = infinity) must exceed any small cap
    CoxeterMatrix inf = CoxeterMatrix::from_rows({{1, 0}, {0, 1}});
    CHECK_THROWS(CoxGroup::build(inf, 100));
}

TEST_CASE("non-crystallographic rejected") {
    CoxeterMatrix h2 = CoxeterMatrix::from_rows({{1, 5}, {5, 1}});
    CHECK_THROWS(CoxGroup::build(h2));
}
