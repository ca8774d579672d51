#include "cocenter/exactscalar.hpp"

#include <algorithm>
#include <sstream>

#include "cocenter/upoly.hpp"

namespace cocenter {

// ---------------------------------------------------------------------------
// integer polynomial helpers (little-endian, no trailing zeros)

namespace {

void ztrim(std::vector<Int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// exact division of integer polynomials, remainder must vanish
std::vector<Int> zdiv_exact(std::vector<Int> num, const std::vector<Int>& den) {
    ztrim(num);
    std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size() && !num.empty()) {
        Int c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        ztrim(num);
    }
    if (!num.empty()) throw std::logic_error("zdiv_exact: nonzero remainder");
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_poly(unsigned n) {
    if (n == 0) throw std::domain_error("cyclotomic_poly: n must be positive");
    // x^n - 1 divided by all Phi_d, d | n, d < n
    std::vector<Int> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = zdiv_exact(num, cyclotomic_poly(d));
    return num;
}

// ---------------------------------------------------------------------------
// Field

namespace {

std::string field_label(const FieldSpec& s) {
    std::ostringstream os;
    if (s.characteristic == 0) {
        if (s.cyclotomic_n <= 1)
            os << "Q";
        else
            os << "Q(zeta" << s.cyclotomic_n << ")";
    } else {
        os << "F" << s.characteristic;
        if (s.degree() > 1) os << "^" << s.degree();
    }
    return os.str();
}

}  // namespace

Field Field::rationals() { return cyclotomic(1); }

Field Field::cyclotomic(unsigned n) {
    if (n == 0) throw std::domain_error("cyclotomic field index must be >= 1");
    auto s = std::make_shared<FieldSpec>();
    s->characteristic = 0;
    s->cyclotomic_n = n;
    for (const Int& c : cyclotomic_poly(n)) s->modulus.emplace_back(c);
    s->label = field_label(*s);
    return Field(std::move(s));
}

Field Field::prime(unsigned long p) {
    if (!is_prime_ul(p)) throw std::domain_error("characteristic must be prime");
    auto s = std::make_shared<FieldSpec>();
    s->characteristic = p;
    s->modulus = {Rat(0), Rat(1)};  // x
    s->label = field_label(*s);
    return Field(std::move(s));
}

Field Field::extension(unsigned long p, const std::vector<Int>& f) {
    if (!is_prime_ul(p)) throw std::domain_error("characteristic must be prime");
    auto s = std::make_shared<FieldSpec>();
    s->characteristic = p;
    for (const Int& c : f) {
        Int r = c % Int(p);
        if (r < 0) r += p;
        s->modulus.emplace_back(r);
    }
    while (s->modulus.size() > 1 && s->modulus.back() == 0) s->modulus.pop_back();
    if (s->modulus.size() < 2 || s->modulus.back() != 1)
        throw std::domain_error("extension modulus must be monic of degree >= 1");
    s->label = field_label(*s);
    Field k(std::move(s));
    if (k.degree() > 1 && !upoly_is_irreducible_mod_p(p, f))
        throw std::domain_error("extension modulus is reducible");
    return k;
}

Field Field::gf(unsigned long p, unsigned k) {
    if (k == 0) throw std::domain_error("gf: k >= 1 required");
    if (k == 1) return prime(p);
    // deterministic search: x^k + a_{k-1} x^{k-1} + ... + a_0, coefficients
    // enumerated in base-p counting order
    const Int pk = int_pow(Int(p), k);
    for (Int tail = 0; tail < pk; ++tail) {
        std::vector<Int> f(k + 1, 0);
        Int t = tail;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = t % Int(p);
            t /= Int(p);
        }
        f[k] = 1;
        if (upoly_is_irreducible_mod_p(p, f)) return extension(p, f);
    }
    throw std::logic_error("gf: no irreducible polynomial found");
}

bool Field::same_as(const Field& o) const {
    if (spec_ == o.spec_) return true;
    if (!spec_ || !o.spec_) return false;
    return spec_->characteristic == o.spec_->characteristic &&
           spec_->cyclotomic_n == o.spec_->cyclotomic_n && spec_->modulus == o.spec_->modulus;
}

Int Field::size() const {
    if (spec_->characteristic == 0) return 0;
    return int_pow(Int(spec_->characteristic), spec_->degree());
}

FieldElem Field::zero() const { return FieldElem(*this, std::vector<Rat>(degree(), Rat(0))); }
FieldElem Field::one() const { return from_rat(Rat(1)); }
FieldElem Field::from_int(const Int& v) const { return from_rat(Rat(v)); }

FieldElem Field::from_rat(const Rat& v) const {
    std::vector<Rat> c(degree(), Rat(0));
    c[0] = v;
    return FieldElem(*this, std::move(c));
}

FieldElem Field::generator() const {
    std::vector<Rat> c(degree(), Rat(0));
    if (degree() == 1) {
        // x reduces to the root of the (linear) modulus
        c[0] = -spec_->modulus[0];
    } else {
        c[1] = 1;
    }
    return FieldElem(*this, std::move(c));
}

FieldElem Field::from_coeffs(std::vector<Rat> c) const {
    c.resize(degree(), Rat(0));
    return FieldElem(*this, std::move(c));
}

std::vector<FieldElem> Field::all_elements() const {
    if (characteristic() == 0) throw std::domain_error("all_elements: infinite field");
    std::vector<FieldElem> out;
    const unsigned long p = characteristic();
    const unsigned d = degree();
    std::vector<Rat> c(d, Rat(0));
    Int total = size();
    for (Int idx = 0; idx < total; ++idx) {
        Int t = idx;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = Rat(t % Int(p));
            t /= Int(p);
        }
        out.push_back(from_coeffs(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// FieldElem

void FieldElem::reduce() {
    const unsigned long p = fld_.characteristic();
    if (p == 0) return;
    for (Rat& x : c_) {
        Int num = x.get_num(), den = x.get_den();
        if (den != 1) {
            // denominators arise only from rational input; invert mod p
            Int dp = den % Int(p);
            if (dp < 0) dp += p;
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), dp.get_mpz_t(), Int(p).get_mpz_t()) == 0)
                throw std::domain_error("rational with denominator divisible by p");
            num = num * inv;
        }
        Int r = num % Int(p);
        if (r < 0) r += p;
        x = Rat(r);
    }
}

void FieldElem::check_compat(const FieldElem& o) const {
    if (!fld_.same_as(o.fld_)) throw std::domain_error("field mismatch");
}

bool FieldElem::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<Rat> FieldElem::as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_.empty() ? Rat(0) : c_[0];
}

FieldElem FieldElem::operator-() const {
    std::vector<Rat> r(c_);
    for (Rat& x : r) x = -x;
    return FieldElem(fld_, std::move(r));
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_compat(o);
    std::vector<Rat> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return FieldElem(fld_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_compat(o);
    const std::size_t d = c_.size();
    if (d == 1) return FieldElem(fld_, {c_[0] * o.c_[0]});
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    // reduce modulo the (monic) modulus
    const std::vector<Rat>& m = fld_.spec().modulus;
    for (std::size_t k = prod.size(); k-- > d;) {
        Rat c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= c * m[i];
    }
    prod.resize(d);
    return FieldElem(fld_, std::move(prod));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (auto r = as_rational()) {
        // scalar: invert in the prime field directly
        std::vector<Rat> oc(c_.size(), Rat(0));
        if (fld_.characteristic() == 0) {
            oc[0] = 1 / *r;
        } else {
            Int p(fld_.characteristic());
            Int a = r->get_num() % p;
            if (a < 0) a += p;
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
                throw std::domain_error("division by zero (mod p)");
            oc[0] = Rat(inv);
        }
        return FieldElem(fld_, std::move(oc));
    }
    // extended Euclid in (prime field)[x] against the modulus; all coefficient
    // arithmetic below stays scalar, so no recursion into this branch
    UPoly a = UPoly::element_as_poly(*this);
    UPoly m = UPoly::modulus_poly(fld_);
    auto [g, s] = upoly_half_xgcd(a, m);
    if (g.degree() != 0) throw std::logic_error("modulus not irreducible?");
    FieldElem ginv = g.coeff(0).inverse();
    std::vector<Rat> oc(fld_.degree(), Rat(0));
    UPoly scaled = s.scale(ginv);
    for (int i = 0; i <= scaled.degree() && i < static_cast<int>(fld_.degree()); ++i) {
        auto r = scaled.coeff(static_cast<unsigned>(i)).as_rational();
        if (!r) throw std::logic_error("inverse: non-scalar coefficient");
        oc[static_cast<std::size_t>(i)] = *r;
    }
    return FieldElem(fld_, std::move(oc));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(long e) const {
    FieldElem b = *this;
    if (e < 0) {
        b = b.inverse();
        e = -e;
    }
    FieldElem r = fld_.one();
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_compat(o);
    return c_ == o.c_;
}

int FieldElem::cmp(const FieldElem& o) const {
    check_compat(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] < o.c_[i]) return -1;
        if (c_[i] > o.c_[i]) return 1;
    }
    return 0;
}

std::uint64_t FieldElem::hash() const {
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    for (const Rat& x : c_) {
        h = hash_mix(h, hash_int(Int(x.get_num())));
        h = hash_mix(h, hash_int(Int(x.get_den())));
    }
    return h;
}

std::string FieldElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i >= 1) {
            if (c_[i] != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

FieldElem field_inverse(const FieldElem& x) { return x.inverse(); }

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(const LaurentRing& r, const Int& c) {
    LaurentPoly p(r);
    if (c != 0) p.terms_[std::vector<int>(r.nvars(), 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(const LaurentRing& r, std::size_t var, int e, const Int& c) {
    if (var >= r.nvars()) throw std::domain_error("monomial: bad variable index");
    LaurentPoly p(r);
    if (c != 0) {
        std::vector<int> exps(r.nvars(), 0);
        exps[var] = e;
        p.terms_[exps] = c;
    }
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Int LaurentPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::domain_error("not a constant Laurent polynomial");
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const std::vector<int>& e, const Int& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (!ring_.same_as(o.ring_)) throw std::domain_error("Laurent ring mismatch");
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (!ring_.same_as(o.ring_)) throw std::domain_error("Laurent ring mismatch");
    LaurentPoly r(ring_);
    std::vector<int> e(ring_.nvars());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) {
        if (terms_.size() != 1 || abs(terms_.begin()->second) != 1)
            throw std::domain_error("negative power of a non-unit Laurent polynomial");
        const auto& [exps, c] = *terms_.begin();
        LaurentPoly inv(ring_);
        std::vector<int> ie(exps);
        for (int& x : ie) x = -x;
        inv.terms_[ie] = c;  // c = ±1
        return inv.pow(-e);
    }
    LaurentPoly r = constant(ring_, 1);
    LaurentPoly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

FieldElem LaurentPoly::specialize(const Field& k, const std::vector<FieldElem>& assignment) const {
    if (assignment.size() != ring_.nvars())
        throw std::domain_error("specialize: assignment size mismatch");
    for (const FieldElem& v : assignment)
        if (v.is_zero()) throw std::domain_error("specialize: value not invertible");
    FieldElem acc = k.zero();
    for (const auto& [e, c] : terms_) {
        FieldElem t = k.from_int(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * assignment[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        bool allzero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (c != 1 || allzero) {
            os << c;
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << ring_.vars()[i];
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

FieldElem laurent_specialize(const LaurentPoly& p, const Field& k,
                             const std::vector<FieldElem>& assignment) {
    return p.specialize(k, assignment);
}

}  // namespace cocenter
