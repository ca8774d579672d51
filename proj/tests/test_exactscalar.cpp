#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocenter/exactscalar.hpp"
#include "cocenter/upoly.hpp"

using namespace cocenter;

namespace {

LaurentRing qring() { return LaurentRing({"q"}); }

LaurentPoly qpow(const LaurentRing& r, int e, Int c = 1) {
    return LaurentPoly::monomial(r, 0, e, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_poly(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_poly(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
}

TEST_CASE("Phi_n at 1 and at primitive roots") {
    // Phi_p(1) = p for primes, = p for prime powers p^k, = 1 with two distinct primes
    for (unsigned n = 2; n <= 12; ++n) {
        Field k = Field::cyclotomic(n);
        std::vector<Int> phi = cyclotomic_poly(n);
        // evaluate at 1 over Q
        Rat at1 = 0;
        for (std::size_t i = 0; i < phi.size(); ++i) at1 += Rat(phi[i]);
        unsigned m = n;
        unsigned long smallest = 0;
        for (unsigned long d = 2; d <= m; ++d)
            if (m % d == 0) { smallest = d; while (m % d == 0) m /= d; break; }
        if (m == 1)
            CHECK(at1 == Rat(Int(smallest)));  // prime power
        else
            CHECK(at1 == 1);  // at least two distinct primes
        // Phi_n(zeta_n) = 0 exactly
        FieldElem z = k.generator();
        FieldElem acc = k.zero(), p = k.one();
        for (std::size_t i = 0; i < phi.size(); ++i) {
            acc = acc + k.from_int(phi[i]) * p;
            p = p * z;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("field arithmetic basics") {
    Field q = Field::rationals();
    CHECK(q.from_rat(Rat(2)).inverse() == q.from_rat(Rat(1, 2)));

    Field z3 = Field::cyclotomic(3);
    FieldElem zeta = z3.generator();
    CHECK(zeta.inverse() == zeta * zeta);          // zeta^{-1} = zeta^2
    CHECK((zeta * zeta * zeta).is_one());          // order 3
    CHECK(zeta.pow(3).is_one());

    Field f3 = Field::prime(3);
    CHECK(f3.from_int(2).inverse() == f3.from_int(2));  // 2*2 = 4 = 1 mod 3
    CHECK((f3.from_int(2) * f3.from_int(2)).is_one());

    Field f9 = Field::gf(3, 2);
    CHECK(f9.size() == 9);
    // multiplicative order of every nonzero element divides 8
    for (const FieldElem& e : f9.all_elements()) {
        if (e.is_zero()) continue;
        CHECK(e.pow(8).is_one());
        CHECK((e * e.inverse()).is_one());
    }
}

TEST_CASE("field axioms on seeded random elements") {
    Rng rng(12345);
    for (Field k : {Field::rationals(), Field::cyclotomic(4), Field::gf(3, 2), Field::prime(7)}) {
        auto rnd = [&]() {
            std::vector<Rat> c;
            for (unsigned i = 0; i < k.degree(); ++i)
                c.push_back(Rat(static_cast<long>(rng.below(13)) - 6));
            return k.from_coeffs(c);
        };
        for (int t = 0; t < 25; ++t) {
            FieldElem a = rnd(), b = rnd(), c = rnd();
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("laurent arithmetic") {
    LaurentRing r = qring();
    LaurentPoly one = LaurentPoly::constant(r, 1);
    LaurentPoly q = qpow(r, 1);
    // (q+1)(q-1) = q^2 - 1
    CHECK((q + one) * (q - one) == qpow(r, 2) - one);
    // 1 * a = a
    LaurentPoly a = qpow(r, 3, 5) + qpow(r, -2, -7) + one;
    CHECK(one * a == a);
    // (q^2 - 1) * q^{-2} = 1 - q^{-2}
    CHECK((qpow(r, 2) - one) * qpow(r, -2) == one - qpow(r, -2));
}

TEST_CASE("laurent specialization is a ring homomorphism") {
    LaurentRing r({"q", "t"});
    Field k = Field::cyclotomic(3);
    std::vector<FieldElem> assign = {k.generator(), k.from_rat(Rat(2, 3))};
    Rng rng(99);
    auto rnd = [&]() {
        LaurentPoly p(r);
        for (int t = 0; t < 4; ++t) {
            int e0 = static_cast<int>(rng.below(7)) - 3;
            int e1 = static_cast<int>(rng.below(5)) - 2;
            Int c(static_cast<long>(rng.below(9)) - 4);
            LaurentPoly m = LaurentPoly::monomial(r, 0, e0, c == 0 ? Int(1) : c) *
                            LaurentPoly::monomial(r, 1, e1, 1);
            p += m;
        }
        return p;
    };
    for (int t = 0; t < 20; ++t) {
        LaurentPoly a = rnd(), b = rnd();
        CHECK((a * b).specialize(k, assign) == a.specialize(k, assign) * b.specialize(k, assign));
        CHECK((a + b).specialize(k, assign) == a.specialize(k, assign) + b.specialize(k, assign));
    }
}

TEST_CASE("spec examples for specialization") {
    LaurentRing r = qring();
    LaurentPoly p = qpow(r, 2) + qpow(r, 1) + LaurentPoly::constant(r, 1);  // q^2+q+1
    Field q = Field::rationals();
    CHECK(p.specialize(q, {q.one()}) == q.from_int(3));
    Field z3 = Field::cyclotomic(3);
    CHECK(p.specialize(z3, {z3.generator()}).is_zero());
    Field f2 = Field::prime(2);
    LaurentPoly qp1 = qpow(r, 1) + LaurentPoly::constant(r, 1);
    CHECK(qp1.specialize(f2, {f2.one()}).is_zero());
}

TEST_CASE("polynomial factorization over F_q") {
    Rng rng(7);
    Field f3 = Field::prime(3);
    // x^2 + 1 is irreducible mod 3
    UPoly f(f3, {f3.one(), f3.zero(), f3.one()});
    CHECK(upoly_irreducible(f, rng));
    // x^2 - 1 = (x-1)(x+1)
    UPoly g(f3, {-f3.one(), f3.zero(), f3.one()});
    auto fac = upoly_factor(g, rng);
    CHECK(fac.size() == 2);
    auto roots = upoly_roots(g, rng);
    CHECK(roots.size() == 2);

    Field f9 = Field::gf(3, 2);
    // x^2 + 1 splits over F_9
    UPoly h(f9, {f9.one(), f9.zero(), f9.one()});
    CHECK(upoly_roots(h, rng).size() == 2);

    // squarefree handling: (x-1)^3 * (x^2+1) over F_3
    UPoly xm1(f3, {-f3.one(), f3.one()});
    UPoly big = xm1 * xm1 * xm1 * f;
    auto dec = upoly_factor(big, rng);
    unsigned total = 0;
    for (auto& [p, m] : dec) total += m * static_cast<unsigned>(p.degree());
    CHECK(total == 5);
}

TEST_CASE("polynomial factorization over Q") {
    Rng rng(11);
    Field q = Field::rationals();
    auto P = [&](std::vector<long> cs) {
        std::vector<FieldElem> v;
        for (long c : cs) v.push_back(q.from_int(Int(c)));
        return UPoly(q, std::move(v));
    };
    // x^2 - 2 irreducible
    CHECK(upoly_irreducible(P({-2, 0, 1}), rng));
    // x^2 + x + 1 irreducible
    CHECK(upoly_irreducible(P({1, 1, 1}), rng));
    // x^4 + 1 irreducible over Q (reducible mod every prime)
    CHECK(upoly_irreducible(P({1, 0, 0, 0, 1}), rng));
    // (x^2+x+1)(x^2-2)(x-3)
    UPoly f = P({1, 1, 1}) * P({-2, 0, 1}) * P({-3, 1});
    auto fac = upoly_factor(f, rng);
    CHECK(fac.size() == 3);
    auto roots = upoly_roots(f, rng);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == q.from_int(3));
    // rational roots with denominators: (2x-1)(x+5) -> monic normalization
    UPoly g = P({-1, 2}) * P({5, 1});
    auto r2 = upoly_roots(g, rng);
    CHECK(r2.size() == 2);
}

TEST_CASE("polynomial factorization over cyclotomic fields") {
    Rng rng(13);
    Field k = Field::cyclotomic(4);  // Q(i)
    FieldElem i = k.generator();
    // x^2 + 1 = (x-i)(x+i) over Q(i)
    UPoly f(k, {k.one(), k.zero(), k.one()});
    auto roots = upoly_roots(f, rng);
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == i && roots[1] == -i) || (roots[0] == -i && roots[1] == i)));
    // x^2 - 2 stays irreducible over Q(i)
    UPoly g(k, {k.from_int(-2), k.zero(), k.one()});
    CHECK(upoly_irreducible(g, rng));

    Field z3 = Field::cyclotomic(3);
    // x^2 + x + 1 = (x - z)(x - z^2) over Q(zeta_3)
    UPoly h(z3, {z3.one(), z3.one(), z3.one()});
    auto r3 = upoly_roots(h, rng);
    CHECK(r3.size() == 2);
}

TEST_CASE("field spec invariants") {
    CHECK_THROWS(Field::prime(4));
    CHECK_THROWS(Field::extension(3, {Int(2), Int(0), Int(1)}));  // x^2+2=(x-1)(x+1) mod 3
    CHECK_NOTHROW(Field::extension(3, {Int(1), Int(0), Int(1)}));  // x^2+1 irreducible mod 3
}
