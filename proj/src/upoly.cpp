#include "cocenter/upoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace cocenter {

// ---------------------------------------------------------------------------
// UPoly basics

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Field& k, const FieldElem& e) {
    UPoly p(k);
    if (!e.is_zero()) p.c_ = {e};
    return p;
}

UPoly UPoly::x(const Field& k) {
    UPoly p(k);
    p.c_ = {k.zero(), k.one()};
    return p;
}

UPoly UPoly::element_as_poly(const FieldElem& e) {
    const Field& k = e.field();
    UPoly p(k);
    for (const Rat& r : e.coeffs()) p.c_.push_back(k.from_rat(r));
    p.trim();
    return p;
}

UPoly UPoly::modulus_poly(const Field& k) {
    UPoly p(k);
    for (const Rat& r : k.spec().modulus) p.c_.push_back(k.from_rat(r));
    p.trim();
    return p;
}

FieldElem UPoly::lc() const {
    if (c_.empty()) return k_.zero();
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (FieldElem& e : r.c_) e = -e;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r(k_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), k_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(k_);
    UPoly r(k_);
    r.c_.assign(c_.size() + o.c_.size() - 1, k_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::scale(const FieldElem& e) const {
    UPoly r(*this);
    for (FieldElem& x : r.c_) x = x * e;
    r.trim();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scale(lc().inverse());
}

UPoly UPoly::derivative() const {
    UPoly r(k_);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(k_.from_int(Int(static_cast<long>(i))) * c_[i]);
    r.trim();
    return r;
}

FieldElem UPoly::eval(const FieldElem& a) const {
    FieldElem acc = k_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
    return acc;
}

UPoly UPoly::compose_linear(const FieldElem& a, const FieldElem& b) const {
    // evaluate at a*x + b by Horner
    UPoly lin(k_);
    lin = UPoly(k_, {b, a});
    UPoly acc(k_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(k_, c_[i]);
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly q(k_), r(*this);
    const FieldElem inv = d.lc().inverse();
    if (r.degree() >= d.degree()) q.c_.assign(r.degree() - d.degree() + 1, k_.zero());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int shift = r.degree() - d.degree();
        FieldElem c = r.lc() * inv;
        q.c_[shift] = c;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            r.c_[shift + i] = r.c_[shift + i] - c * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].str() << ")";
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd / xgcd / powmod

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::pair<UPoly, UPoly> upoly_half_xgcd(UPoly a, UPoly m) {
    const Field k = a.field();
    UPoly r0 = std::move(a), r1 = std::move(m);
    UPoly s0 = UPoly::constant(k, k.one()), s1 = UPoly::zero(k);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return {r0, s0};
}

UPoly upoly_powmod(const UPoly& base, const Int& e, const UPoly& m) {
    const Field& k = base.field();
    UPoly r = UPoly::constant(k, k.one());
    UPoly b = base % m;
    Int n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = (r * b) % m;
        b = (b * b) % m;
        n >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// squarefree decomposition

namespace {

// coefficient-wise p-th root of g(x^p) decomposition input, char p field
UPoly pth_root_poly(const UPoly& f) {
    const Field& k = f.field();
    const unsigned long p = k.characteristic();
    const unsigned d = k.degree();
    // a^{p^{d-1}} is the p-th root in F_{p^d}
    Int e = int_pow(Int(p), d >= 1 ? d - 1 : 0);
    std::vector<FieldElem> out;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
        FieldElem c = f.coeff(static_cast<unsigned>(i));
        FieldElem root = c;
        Int n = e;
        // root = c^{p^{d-1}} by repeated powering
        root = k.one();
        FieldElem b = c;
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t())) root = root * b;
            b = b * b;
            n >>= 1;
        }
        out.push_back(root);
    }
    return UPoly(k, std::move(out));
}

}  // namespace

std::vector<std::pair<UPoly, unsigned>> upoly_squarefree_decomposition(const UPoly& f_in) {
    const Field& k = f_in.field();
    UPoly f = f_in.monic();
    std::vector<std::pair<UPoly, unsigned>> out;
    if (f.degree() <= 0) return out;
    const unsigned long p = k.characteristic();

    UPoly fp = f.derivative();
    if (p > 0 && fp.is_zero()) {
        UPoly h = pth_root_poly(f);
        for (auto& [g, m] : upoly_squarefree_decomposition(h))
            out.emplace_back(g, m * static_cast<unsigned>(p));
        return out;
    }
    UPoly g = upoly_gcd(f, fp);
    UPoly w = (f / g).monic();
    unsigned i = 1;
    while (w.degree() > 0) {
        UPoly y = upoly_gcd(w, g);
        UPoly z = (w / y).monic();
        if (z.degree() > 0) out.emplace_back(z, i);
        w = std::move(y);
        g = (g / w).monic();
        ++i;
    }
    if (g.degree() > 0) {
        // remaining part has multiplicities divisible by p
        UPoly h = pth_root_poly(g);
        for (auto& [q, m] : upoly_squarefree_decomposition(h))
            out.emplace_back(q, m * static_cast<unsigned>(p));
    }
    return out;
}

UPoly upoly_squarefree_part(const UPoly& f) {
    const Field& k = f.field();
    UPoly r = UPoly::constant(k, k.one());
    for (auto& [g, m] : upoly_squarefree_decomposition(f)) r = r * g;
    return r;
}

// ---------------------------------------------------------------------------
// factorization over F_{p^k}

namespace {

std::vector<UPoly> equal_degree_split(const UPoly& f, unsigned d, Rng& rng) {
    // f squarefree monic, all irreducible factors of degree d
    const Field& k = f.field();
    std::vector<UPoly> stack = {f}, done;
    const Int q = k.size();
    while (!stack.empty()) {
        UPoly g = stack.back();
        stack.pop_back();
        if (g.degree() == static_cast<int>(d)) {
            done.push_back(g.monic());
            continue;
        }
        // random splitting attempt; coefficients drawn from the whole field,
        // prime-subfield values alone cannot separate Frobenius-conjugate roots
        UPoly a(k);
        {
            std::vector<FieldElem> cs;
            for (int i = 0; i < g.degree(); ++i) {
                std::vector<Rat> v;
                for (unsigned j = 0; j < k.degree(); ++j)
                    v.push_back(Rat(static_cast<long>(rng.below(k.characteristic()))));
                cs.push_back(k.from_coeffs(v));
            }
            a = UPoly(k, std::move(cs));
        }
        if (a.is_zero()) {
            stack.push_back(g);
            continue;
        }
        UPoly h = upoly_gcd(a, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            stack.push_back(h);
            stack.push_back((g / h).monic());
            continue;
        }
        if (k.characteristic() == 2) {
            // trace map splitting
            Int steps = Int(k.degree()) * Int(d);
            UPoly t = a % g, acc = t;
            for (Int i = 1; i < steps; ++i) {
                t = (t * t) % g;
                acc = acc + t;
            }
            h = upoly_gcd(acc, g);
        } else {
            Int e = (int_pow(q, d) - 1) / 2;
            UPoly b = upoly_powmod(a, e, g);
            h = upoly_gcd(b - UPoly::constant(k, k.one()), g);
        }
        if (h.degree() > 0 && h.degree() < g.degree()) {
            stack.push_back(h);
            stack.push_back((g / h).monic());
        } else {
            stack.push_back(g);
        }
    }
    return done;
}

std::vector<UPoly> factor_squarefree_fq(const UPoly& f_in, Rng& rng) {
    const Field& k = f_in.field();
    UPoly f = f_in.monic();
    std::vector<UPoly> out;
    const Int q = k.size();
    UPoly h = UPoly::x(k);
    UPoly xpoly = UPoly::x(k);
    unsigned d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * static_cast<int>(d) > f.degree()) {
            out.push_back(f.monic());
            break;
        }
        h = upoly_powmod(h, q, f);
        UPoly g = upoly_gcd(h - xpoly, f);
        if (g.degree() > 0) {
            for (auto& irr : equal_degree_split(g, d, rng)) out.push_back(irr);
            f = (f / g).monic();
            h = h % f;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// factorization over Q: Zassenhaus with a bifactor Hensel tree.
// Integer polynomials mod m are plain vector<Int> with coefficients in [0, m).

using ZP = std::vector<Int>;

void zp_trim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZP zp_norm(ZP a, const Int& m) {
    for (Int& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    zp_trim(a);
    return a;
}

ZP zp_mul(const ZP& a, const ZP& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zp_norm(std::move(r), m);
}

ZP zp_add(ZP a, const ZP& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return zp_norm(std::move(a), m);
}

ZP zp_sub(ZP a, const ZP& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zp_norm(std::move(a), m);
}

// division by a monic polynomial, valid over Z/m
std::pair<ZP, ZP> zp_divmod_monic(ZP a, const ZP& b, const Int& m) {
    if (b.empty() || b.back() != 1) throw std::logic_error("zp_divmod_monic: divisor not monic");
    a = zp_norm(std::move(a), m);
    ZP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        Int c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= c * b[i];
            a[shift + i] %= m;
            if (a[shift + i] < 0) a[shift + i] += m;
        }
        zp_trim(a);
    }
    zp_trim(q);
    return {q, a};
}

struct HenselPair {
    ZP g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod modulus)
};

// one quadratic lifting step: from modulus m to m*m (capped at target)
HenselPair hensel_step(const ZP& f, const HenselPair& in, const Int& m) {
    const Int m2 = m * m;
    ZP e = zp_sub(f, zp_mul(in.g, in.h, m2), m2);
    auto [q, r] = zp_divmod_monic(zp_mul(in.s, e, m2), in.h, m2);
    ZP gstar = zp_add(zp_add(in.g, zp_mul(in.t, e, m2), m2), zp_mul(q, in.g, m2), m2);
    ZP hstar = zp_add(in.h, r, m2);
    // refresh Bezout data
    ZP b = zp_sub(zp_add(zp_mul(in.s, gstar, m2), zp_mul(in.t, hstar, m2), m2),
                  ZP{1}, m2);
    auto [c, d] = zp_divmod_monic(zp_mul(in.s, b, m2), hstar, m2);
    ZP sstar = zp_sub(in.s, d, m2);
    ZP tstar = zp_sub(zp_sub(in.t, zp_mul(in.t, b, m2), m2), zp_mul(c, gstar, m2), m2);
    return {gstar, hstar, sstar, tstar};
}

// xgcd mod a prime p for ZP
std::pair<ZP, ZP> zp_xgcd_bezout(const ZP& a, const ZP& b, unsigned long p) {
    Field k = Field::prime(p);
    auto to_up = [&](const ZP& v) {
        std::vector<FieldElem> cs;
        for (const Int& c : v) cs.push_back(k.from_int(c));
        return UPoly(k, std::move(cs));
    };
    UPoly A = to_up(a), B = to_up(b);
    // full xgcd
    UPoly r0 = A, r1 = B;
    UPoly s0 = UPoly::constant(k, k.one()), s1 = UPoly::zero(k);
    UPoly t0 = UPoly::zero(k), t1 = UPoly::constant(k, k.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.degree() != 0) throw std::logic_error("hensel: factors not coprime mod p");
    FieldElem inv = r0.coeff(0).inverse();
    s0 = s0.scale(inv);
    t0 = t0.scale(inv);
    auto from_up = [&](const UPoly& u) {
        ZP v;
        for (unsigned i = 0; i <= static_cast<unsigned>(std::max(0, u.degree())); ++i) {
            auto r = u.coeff(i).as_rational();
            v.push_back(r ? Int(r->get_num()) : Int(0));
        }
        zp_trim(v);
        return v;
    };
    return {from_up(s0), from_up(t0)};
}

// lift modular factorization (monic factors mod p of monic f) to mod p^(2^j) >= bound
void hensel_tree(const ZP& f, std::vector<ZP> factors, unsigned long p, const Int& target,
                 std::vector<ZP>& out) {
    if (factors.size() == 1) {
        Int m(p);
        while (m < target) m *= m;
        out.push_back(zp_norm(ZP(f), m));
        return;
    }
    const std::size_t half = factors.size() / 2;
    ZP G{1}, H{1};
    Int pm(p);
    for (std::size_t i = 0; i < half; ++i) G = zp_mul(G, factors[i], pm);
    for (std::size_t i = half; i < factors.size(); ++i) H = zp_mul(H, factors[i], pm);
    auto [s, t] = zp_xgcd_bezout(G, H, p);
    HenselPair hp{G, H, s, t};
    ZP fm = zp_norm(ZP(f), pm);
    Int m(p);
    while (m < target) {
        hp = hensel_step(zp_norm(ZP(f), m * m), hp, m);
        m *= m;
    }
    std::vector<ZP> left(factors.begin(), factors.begin() + half);
    std::vector<ZP> right(factors.begin() + half, factors.end());
    hensel_tree(hp.g, std::move(left), p, target, out);
    hensel_tree(hp.h, std::move(right), p, target, out);
}

// exact division test of integer polynomials; returns quotient if divisible
bool zz_try_divide(const ZP& f, const ZP& g, ZP& q_out) {
    ZP r(f);
    zp_trim(r);
    ZP q(r.size() >= g.size() ? r.size() - g.size() + 1 : 0, 0);
    if (g.empty()) return false;
    while (r.size() >= g.size() && !r.empty()) {
        if (r.back() % g.back() != 0) return false;
        Int c = r.back() / g.back();
        std::size_t shift = r.size() - g.size();
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] -= c * g[i];
        zp_trim(r);
    }
    if (!r.empty()) return false;
    zp_trim(q);
    q_out = std::move(q);
    return true;
}

// factor a squarefree monic integer polynomial over Z into monic-over-Q parts
std::vector<ZP> factor_squarefree_monic_z(const ZP& f_in, Rng& rng) {
    ZP f(f_in);
    zp_trim(f);
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    // choose a prime where f stays squarefree, prefer few modular factors
    static const unsigned long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    std::vector<UPoly> best;
    unsigned long best_p = 0;
    for (unsigned long p : primes) {
        if (f.back() % Int(p) == 0) continue;
        Field k = Field::prime(p);
        std::vector<FieldElem> cs;
        for (const Int& c : f) cs.push_back(k.from_int(c));
        UPoly fp(k, std::move(cs));
        fp = fp.monic();
        if (upoly_gcd(fp, fp.derivative()).degree() != 0) continue;  // not squarefree mod p
        std::vector<UPoly> fac = factor_squarefree_fq(fp, rng);
        if (fac.size() == 1) return {f};  // irreducible over Q
        if (best.empty() || fac.size() < best.size()) {
            best = std::move(fac);
            best_p = p;
            if (best.size() == 2) break;
        }
    }
    if (best.empty()) throw std::runtime_error("factor over Q: no usable prime found");
    if (best.size() > 24) throw std::runtime_error("factor over Q: too many modular factors");

    // Mignotte-style bound on coefficients of monic factors, doubled for sign
    Int norm2 = 0;
    for (const Int& c : f) norm2 += c * c;
    Int sq;
    mpz_sqrt(sq.get_mpz_t(), norm2.get_mpz_t());
    Int bound = (sq + 1) * int_pow(Int(2), static_cast<unsigned long>(n + 1)) * 2;

    std::vector<ZP> lifted;
    {
        std::vector<ZP> mods;
        for (const UPoly& u : best) {
            ZP v;
            for (int i = 0; i <= u.degree(); ++i) {
                auto r = u.coeff(static_cast<unsigned>(i)).as_rational();
                v.push_back(Int(r->get_num()));
            }
            mods.push_back(std::move(v));
        }
        hensel_tree(f, std::move(mods), best_p, bound, lifted);
    }
    Int m(best_p);
    while (m < bound) m *= m;

    auto sym = [&](ZP v) {
        for (Int& c : v) {
            c %= m;
            if (c < 0) c += m;
            if (2 * c >= m) c -= m;
        }
        zp_trim(v);
        return v;
    };

    std::vector<ZP> result;
    ZP rem(f);
    std::vector<ZP> pool(lifted);
    bool progress = true;
    while (pool.size() > 0 && progress) {
        progress = false;
        const std::size_t r = pool.size();
        for (std::size_t take = 1; take <= r / 2 && !progress; ++take) {
            // enumerate subsets of size `take`
            std::vector<std::size_t> idx(take);
            for (std::size_t i = 0; i < take; ++i) idx[i] = i;
            while (true) {
                ZP cand{1};
                for (std::size_t i : idx) cand = zp_mul(cand, pool[i], m);
                cand = sym(cand);
                ZP q;
                if (!cand.empty() && cand.back() == 1 && zz_try_divide(rem, cand, q)) {
                    result.push_back(cand);
                    rem = q;
                    std::vector<ZP> np;
                    for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
                        if (j < idx.size() && idx[j] == i) { ++j; continue; }
                        np.push_back(pool[i]);
                    }
                    pool = std::move(np);
                    progress = true;
                    break;
                }
                // next subset
                int pos = static_cast<int>(take) - 1;
                while (pos >= 0 && idx[pos] == pool.size() - take + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (std::size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    zp_trim(rem);
    if (rem.size() > 1) result.push_back(rem);
    return result;
}

std::vector<UPoly> factor_squarefree_q(const UPoly& f_in, Rng& rng) {
    const Field& k = f_in.field();
    UPoly f = f_in.monic();
    if (f.degree() <= 1) return {f};
    // substitute x -> y/d to make an integer monic polynomial
    Int d(1);
    for (const FieldElem& e : f.coeffs()) {
        auto r = e.as_rational();
        Int den = r->get_den();
        Int g;
        mpz_lcm(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        d = g;
    }
    const int n = f.degree();
    ZP F(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        auto r = f.coeff(static_cast<unsigned>(i)).as_rational();
        Rat scaled = *r * Rat(int_pow(d, static_cast<unsigned long>(n - i)));
        if (scaled.get_den() != 1) throw std::logic_error("monicize: not integral");
        F[i] = scaled.get_num();
    }
    std::vector<UPoly> out;
    FieldElem dinv = k.from_int(d).inverse();
    for (const ZP& g : factor_squarefree_monic_z(F, rng)) {
        // map back: h(x) = g(d x) / d^deg(g)
        std::vector<FieldElem> cs;
        const int m = static_cast<int>(g.size()) - 1;
        for (int i = 0; i <= m; ++i)
            cs.push_back(k.from_rat(Rat(g[i]) * rat_pow(Rat(d), i - m)));
        out.push_back(UPoly(k, std::move(cs)).monic());
    }
    return out;
}

// ---------------------------------------------------------------------------
// factorization over cyclotomic fields: Trager's reduction to Q

std::vector<unsigned> coprime_residues(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned j = 1; j <= n; ++j)
        if (std::gcd(j, n) == 1) out.push_back(j % n == 0 ? n : j);
    return out;
}

// apply the automorphism zeta -> zeta^j coefficient-wise
FieldElem apply_auto(const FieldElem& e, unsigned j) {
    const Field& k = e.field();
    FieldElem zj = k.generator().pow(j);
    FieldElem acc = k.zero(), p = k.one();
    for (const Rat& c : e.coeffs()) {
        acc = acc + k.from_rat(c) * p;
        p = p * zj;
    }
    return acc;
}

UPoly apply_auto_poly(const UPoly& g, unsigned j) {
    std::vector<FieldElem> cs;
    for (const FieldElem& c : g.coeffs()) cs.push_back(apply_auto(c, j));
    return UPoly(g.field(), std::move(cs));
}

std::vector<UPoly> factor_squarefree_cyclo(const UPoly& f_in, Rng& rng) {
    const Field& K = f_in.field();
    const unsigned n = K.spec().cyclotomic_n;
    UPoly f = f_in.monic();
    if (f.degree() <= 1) return {f};
    Field Q = Field::rationals();

    const auto autos = coprime_residues(n);
    for (long s = 0;; s = (s > 0 ? -s : -s + 1)) {
        if (s > 64) throw std::runtime_error("Trager: no squarefree shift found");
        // g_s(x) = f(x - s*zeta)
        UPoly gs = f.compose_linear(K.one(), K.generator() * K.from_int(Int(-s)));
        // norm = product of conjugates
        UPoly norm = UPoly::constant(K, K.one());
        for (unsigned j : autos) norm = norm * apply_auto_poly(gs, j);
        // must be rational
        std::vector<FieldElem> qc;
        bool rational = true;
        for (const FieldElem& c : norm.coeffs()) {
            auto r = c.as_rational();
            if (!r) { rational = false; break; }
            qc.push_back(Q.from_rat(*r));
        }
        if (!rational) throw std::logic_error("Trager: norm not rational");
        UPoly N(Q, std::move(qc));
        if (upoly_gcd(N, N.derivative()).degree() != 0) continue;  // retry with new shift
        std::vector<UPoly> out;
        for (const UPoly& H : factor_squarefree_q(N, rng)) {
            // embed H into K[x] and take gcd with the shifted polynomial
            std::vector<FieldElem> hc;
            for (const FieldElem& c : H.coeffs()) hc.push_back(K.from_rat(*c.as_rational()));
            UPoly HK(K, std::move(hc));
            UPoly h = upoly_gcd(gs, HK);
            if (h.degree() <= 0) continue;
            // shift back: factor of f is h(x + s*zeta)
            out.push_back(h.compose_linear(K.one(), K.generator() * K.from_int(Int(s))).monic());
        }
        return out;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// public factorization API

std::vector<std::pair<UPoly, unsigned>> upoly_factor(const UPoly& f, Rng& rng) {
    const Field& k = f.field();
    std::vector<std::pair<UPoly, unsigned>> out;
    if (f.degree() <= 0) return out;
    for (auto& [g, mult] : upoly_squarefree_decomposition(f)) {
        std::vector<UPoly> irr;
        if (k.characteristic() > 0)
            irr = factor_squarefree_fq(g, rng);
        else if (k.degree() == 1)
            irr = factor_squarefree_q(g, rng);
        else
            irr = factor_squarefree_cyclo(g, rng);
        for (UPoly& h : irr) out.emplace_back(std::move(h), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.str() < b.first.str();
    });
    return out;
}

std::vector<FieldElem> upoly_roots(const UPoly& f, Rng& rng) {
    std::vector<FieldElem> roots;
    for (auto& [g, mult] : upoly_factor(f, rng))
        if (g.degree() == 1) roots.push_back(-g.coeff(0));
    return roots;
}

bool upoly_irreducible(const UPoly& f, Rng& rng) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    auto fs = upoly_factor(f, rng);
    return fs.size() == 1 && fs[0].second == 1;
}

bool upoly_is_irreducible_mod_p(unsigned long p, const std::vector<Int>& f) {
    Field k = Field::prime(p);
    std::vector<FieldElem> cs;
    for (const Int& c : f) cs.push_back(k.from_int(c));
    UPoly g(k, std::move(cs));
    g = g.monic();
    const int d = g.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    // x^{p^d} == x mod g, and gcd(x^{p^{d/r}} - x, g) == 1 for prime r | d
    UPoly xp = UPoly::x(k);
    UPoly acc = upoly_powmod(xp, int_pow(Int(p), static_cast<unsigned long>(d)), g);
    if (!(acc == xp % g)) return false;
    for (int r = 2; r <= d; ++r) {
        if (d % r != 0 || !is_prime_ul(static_cast<unsigned long>(r))) continue;
        UPoly t = upoly_powmod(xp, int_pow(Int(p), static_cast<unsigned long>(d / r)), g);
        if (upoly_gcd(t - xp, g).degree() != 0) return false;
    }
    return true;
}

}  // namespace cocenter
