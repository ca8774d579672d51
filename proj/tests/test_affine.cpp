#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>

#include "cocenter/affine.hpp"

using namespace cocenter;

namespace {

// independent length oracle: BFS word length over S~ within W_a
std::map<AffineElement, long> bfs_lengths(const AffineWeyl& w, long maxlen) {
    std::map<AffineElement, long> dist;
    std::queue<AffineElement> q;
    dist[w.identity()] = 0;
    q.push(w.identity());
    while (!q.empty()) {
        AffineElement x = q.front();
        q.pop();
        long d = dist[x];
        if (d == maxlen) continue;
        for (int i = 0; i < w.num_simple(); ++i) {
            AffineElement y = w.mult(x, w.simple(i));
            if (!dist.count(y)) {
                dist[y] = d + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("finite Weyl group sizes from data") {
    CHECK(WeylGroup::build(RootDatum::preset("SL2")).size() == 2);
    CHECK(WeylGroup::build(RootDatum::preset("SL3")).size() == 6);
    CHECK(WeylGroup::build(RootDatum::preset("PGL3")).size() == 6);
    CHECK(WeylGroup::build(RootDatum::preset("GL3")).size() == 6);
    CHECK(WeylGroup::build(RootDatum::preset("Sp4")).size() == 8);
}

TEST_CASE("affine length basics") {
    AffineWeyl w(RootDatum::preset("SL2"));
    CHECK(w.length(w.identity()) == 0);
    // l(t^{alpha^vee}) = 2 in the SL2 convention
    CHECK(w.length(w.translation({1})) == 2);
    for (int i = 0; i < w.num_simple(); ++i) CHECK(w.length(w.simple(i)) == 1);
}

TEST_CASE("length formula matches BFS word length (oracle)") {
    for (const char* name : {"SL2", "SL3", "Sp4"}) {
        AffineWeyl w(RootDatum::preset(name));
        long maxlen = (std::string(name) == "SL2") ? 8 : 6;
        auto dist = bfs_lengths(w, maxlen);
        int checked = 0;
        for (const auto& [x, d] : dist) {
            if (d < maxlen) {  // depth == maxlen may be an artifact of the cutoff
                CHECK(w.length(x) == d);
                ++checked;
            }
        }
        CHECK(checked > 10);
    }
}

TEST_CASE("simple reflections") {
    AffineWeyl sl2(RootDatum::preset("SL2"));
    CHECK(sl2.num_simple() == 2);
    CHECK(sl2.stilde_matrix().m[0][1] == 0);  // infinite bond

    AffineWeyl sl3(RootDatum::preset("SL3"));
    CHECK(sl3.num_simple() == 3);
    // affine A2 diagram: all bonds are order 3
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(sl3.stilde_matrix().m[i][j] == 3);

    AffineWeyl gl2(RootDatum::preset("GL2"));
    CHECK(gl2.num_simple() == 2);
    CHECK_FALSE(gl2.omega_finite());
    CHECK(gl2.omega().size() > 0);  // generators of the infinite cyclic part
}

TEST_CASE("Omega") {
    CHECK(AffineWeyl(RootDatum::preset("SL2")).omega().size() == 1);
    CHECK(AffineWeyl(RootDatum::preset("SL3")).omega().size() == 1);
    CHECK(AffineWeyl(RootDatum::preset("PGL2")).omega().size() == 2);
    AffineWeyl pgl3(RootDatum::preset("PGL3"));
    CHECK(pgl3.omega().size() == 3);
    for (const auto& om : pgl3.omega()) CHECK(pgl3.length(om) == 0);
    // the nontrivial omegas rotate the affine A2 diagram (no fixed node)
    int nontrivial = 0;
    for (const auto& act : pgl3.omega_action()) {
        bool ident = true;
        for (int i = 0; i < 3; ++i)
            if (act[i] != i) ident = false;
        if (!ident) {
            ++nontrivial;
            for (int i = 0; i < 3; ++i) CHECK(act[i] != i);
        }
    }
    CHECK(nontrivial == 2);
}

TEST_CASE("Kottwitz map") {
    AffineWeyl pgl3(RootDatum::preset("PGL3"));
    // any element of W_a maps to the identity coset
    AffineElement wa = pgl3.mult(pgl3.simple(0), pgl3.simple(1));
    for (const Int& v : pgl3.kottwitz(wa)) CHECK(v == 0);
    // a fundamental coweight translation generates Z/3
    std::vector<Int> k1 = pgl3.kottwitz(pgl3.translation({1, 0}));
    bool nonzero = false;
    for (const Int& v : k1) nonzero |= (v != 0);
    CHECK(nonzero);
    // kappa is insensitive to the finite part and additive on translations
    auto ball = pgl3.ball(3);
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        const AffineElement& a = ball[rng.below(ball.size())];
        const AffineElement& b = ball[rng.below(ball.size())];
        CHECK(pgl3.kottwitz({a.lambda, 0}) == pgl3.kottwitz(a));
        // kappa(ab): lambda part is lambda_a + u_a(lambda_b)
        AffineElement moved = pgl3.mult(pgl3.finite(a.u), pgl3.translation(b.lambda));
        IVec s3(2);
        for (int i = 0; i < 2; ++i) s3[i] = a.lambda[i] + moved.lambda[i];
        CHECK(pgl3.kottwitz(pgl3.mult(a, b)) == pgl3.kottwitz(pgl3.translation(s3)));
    }
}

TEST_CASE("Newton points") {
    AffineWeyl gl2(RootDatum::preset("GL2"));
    // nu(t^mu) = mu
    auto nu = gl2.newton_point(gl2.translation({3, -1}));
    CHECK(nu[0] == Rat(3));
    CHECK(nu[1] == Rat(-1));
    // nu(w) = 0 for finite parts
    auto nu2 = gl2.newton_point(gl2.finite(gl2.w0().gen(0)));
    CHECK(nu2[0] == 0);
    CHECK(nu2[1] == 0);
    // t^{(1,0)} * s has Newton point (1/2, 1/2)
    AffineElement x = gl2.mult(gl2.translation({1, 0}), gl2.finite(gl2.w0().gen(0)));
    auto nu3 = gl2.newton_point(x);
    CHECK(nu3[0] == Rat(1, 2));
    CHECK(nu3[1] == Rat(1, 2));

    // dominant representative: t^{(0,1)} -> (1,0)
    auto dn = gl2.dominant_newton(gl2.translation({0, 1}));
    CHECK(dn[0] == Rat(1));
    CHECK(dn[1] == Rat(0));

    // nu_{x^n} = n nu_x and conjugation invariance of the dominant point
    AffineWeyl sl3(RootDatum::preset("SL3"));
    auto ball = sl3.ball(4);
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        const AffineElement& a = ball[rng.below(ball.size())];
        auto nua = sl3.newton_point(a);
        for (long n = 2; n <= 3; ++n) {
            auto nun = sl3.newton_point(sl3.power(a, n));
            for (std::size_t i = 0; i < nua.size(); ++i) CHECK(nun[i] == Rat(n) * nua[i]);
        }
        const AffineElement& g = ball[rng.below(ball.size())];
        CHECK(sl3.dominant_newton(sl3.conj(g, a)) == sl3.dominant_newton(a));
        CHECK(sl3.kottwitz(sl3.conj(g, a)) == sl3.kottwitz(a));
    }
}

TEST_CASE("parahoric subgroups") {
    AffineWeyl sl3(RootDatum::preset("SL3"));
    CHECK(sl3.parahoric({}).elements.size() == 1);
    auto p = sl3.parahoric({0, 1});
    CHECK(p.finite);
    CHECK(p.elements.size() == 6);
    CHECK_FALSE(sl3.parahoric({0, 1, 2}).finite);

    AffineWeyl sl2(RootDatum::preset("SL2"));
    CHECK_FALSE(sl2.parahoric({0, 1}).finite);
    CHECK(sl2.parahoric({0}).elements.size() == 2);
}

TEST_CASE("Omega stabilizers (W_J^sharp)") {
    AffineWeyl sl3(RootDatum::preset("SL3"));
    CHECK(sl3.omega_stabilizer({0, 1}).size() == 1);  // trivial Omega

    AffineWeyl pgl3(RootDatum::preset("PGL3"));
    CHECK(pgl3.omega_stabilizer({}).size() == 3);      // W_empty^sharp = Omega
    CHECK(pgl3.omega_stabilizer({0, 1}).size() == 1);  // rotation moves J
}

TEST_CASE("maximal sharp subsets (the set I)") {
    // SL2: {0}, {1}, not conjugate -> two singleton groups
    auto g2 = AffineWeyl(RootDatum::preset("SL2")).maximal_sharp_subsets();
    CHECK(g2.size() == 2);
    CHECK(g2[0].size() == 1);
    CHECK(g2[1].size() == 1);

    // SL3: three two-element subsets, pairwise non-conjugate
    auto g3 = AffineWeyl(RootDatum::preset("SL3")).maximal_sharp_subsets();
    CHECK(g3.size() == 3);
    for (auto& grp : g3) {
        CHECK(grp.size() == 1);
        CHECK(grp[0].size() == 2);
    }

    // PGL3: the three two-element subsets are conjugate, plus the empty set
    auto gp = AffineWeyl(RootDatum::preset("PGL3")).maximal_sharp_subsets();
    CHECK(gp.size() == 2);
    std::size_t sizes[2] = {gp[0].size(), gp[1].size()};
    CHECK(((sizes[0] == 3 && sizes[1] == 1) || (sizes[0] == 1 && sizes[1] == 3)));

    // PGL2: {0} ~ {1} via Omega, plus the empty set
    auto gq = AffineWeyl(RootDatum::preset("PGL2")).maximal_sharp_subsets();
    CHECK(gq.size() == 2);
}

TEST_CASE("ball") {
    AffineWeyl sl2(RootDatum::preset("SL2"));
    CHECK(sl2.ball(0).size() == 1);  // just the identity (Omega trivial)
    CHECK(sl2.ball(1).size() == 3);  // e, s0, s1
    std::size_t prev = 0;
    for (long L = 0; L <= 6; ++L) {
        auto b = sl2.ball(L);
        CHECK(b.size() >= prev);
        prev = b.size();
        for (const auto& x : b) CHECK(sl2.length(x) <= L);
    }
    // PGL2: ball(0) = Omega
    AffineWeyl pgl2(RootDatum::preset("PGL2"));
    CHECK(pgl2.ball(0).size() == 2);

    // subadditivity and Omega-conjugation length invariance on SL3
    AffineWeyl sl3(RootDatum::preset("SL3"));
    auto b = sl3.ball(4);
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        const AffineElement& x = b[rng.below(b.size())];
        const AffineElement& y = b[rng.below(b.size())];
        CHECK(sl3.length(sl3.mult(x, y)) <= sl3.length(x) + sl3.length(y));
    }
    AffineWeyl pgl3(RootDatum::preset("PGL3"));
    auto bp = pgl3.ball(4);
    for (const auto& om : pgl3.omega())
        for (const auto& x : bp) CHECK(pgl3.length(pgl3.conj(om, x)) == pgl3.length(x));
}

TEST_CASE("ball element count via BFS oracle (W_a groups)") {
    AffineWeyl sl3(RootDatum::preset("SL3"));
    auto dist = bfs_lengths(sl3, 5);
    for (long L = 0; L <= 4; ++L) {
        std::size_t cnt = 0;
        for (const auto& [x, d] : dist)
            if (d <= L) ++cnt;
        CHECK(sl3.ball(L).size() == cnt);
    }
}

TEST_CASE("ball with Kottwitz coset restriction (infinite Omega)") {
    AffineWeyl gl2(RootDatum::preset("GL2"));
    CHECK_THROWS(gl2.ball(3));  // must name the cosets
    // the W_a coset: kappa = 0 everywhere
    std::vector<Int> zero = gl2.kottwitz(gl2.identity());
    auto b = gl2.ball(3, {zero});
    CHECK(!b.empty());
    for (const auto& x : b) {
        CHECK(gl2.length(x) <= 3);
        CHECK(gl2.kottwitz(x) == zero);
    }
    // a nontrivial coset: t^{(1,0)}
    std::vector<Int> one = gl2.kottwitz(gl2.translation({1, 0}));
    auto b1 = gl2.ball(3, {one});
    CHECK(!b1.empty());
    for (const auto& x : b1) CHECK(gl2.kottwitz(x) == one);
}

TEST_CASE("words over S~") {
    AffineWeyl pgl3(RootDatum::preset("PGL3"));
    for (const auto& x : pgl3.ball(5)) {
        auto [word, oi] = pgl3.word_and_omega(x);
        REQUIRE(oi >= 0);
        AffineElement rebuilt = pgl3.mult(pgl3.from_word(word), pgl3.omega()[oi]);
        CHECK(rebuilt == x);
        CHECK(static_cast<long>(word.size()) == pgl3.length(x));
    }
}
