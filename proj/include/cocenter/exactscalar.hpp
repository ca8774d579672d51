#ifndef COCENTER_EXACTSCALAR_HPP
#define COCENTER_EXACTSCALAR_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cocenter/numeric.hpp"

namespace cocenter {

// n-th cyclotomic polynomial, integer coefficients, little-endian.
std::vector<Int> cyclotomic_poly(unsigned n);

// A concrete exact field:
//   char 0:  Q[x]/(Phi_n)   (n = 1 gives Q itself)
//   char p:  F_p[x]/(f)     (f monic irreducible; f = x gives F_p)
// Elements are coefficient vectors of length deg in the image of x.
struct FieldSpec {
    unsigned long characteristic = 0;
    unsigned cyclotomic_n = 1;        // meaningful iff characteristic == 0
    std::vector<Rat> modulus;         // monic, little-endian, degree >= 1
    std::string label;

    unsigned degree() const { return static_cast<unsigned>(modulus.size()) - 1; }
};

class FieldElem;

class Field {
public:
    Field() = default;  // invalid until assigned

    static Field rationals();
    static Field cyclotomic(unsigned n);
    static Field prime(unsigned long p);
    // F_p[x]/(f); f little-endian with integer coefficients, monic after reduction.
    static Field extension(unsigned long p, const std::vector<Int>& f);
    // F_{p^k} with a deterministically chosen irreducible modulus.
    static Field gf(unsigned long p, unsigned k);

    const FieldSpec& spec() const { return *spec_; }
    unsigned long characteristic() const { return spec_->characteristic; }
    unsigned degree() const { return spec_->degree(); }
    const std::string& label() const { return spec_->label; }
    bool same_as(const Field& o) const;
    // number of elements; 0 means infinite
    Int size() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(const Int& v) const;
    FieldElem from_rat(const Rat& v) const;
    FieldElem generator() const;  // image of x (zeta_n in the cyclotomic case)
    FieldElem from_coeffs(std::vector<Rat> c) const;
    // all field elements, characteristic p only (used by small searches)
    std::vector<FieldElem> all_elements() const;

private:
    friend class FieldElem;
    explicit Field(std::shared_ptr<const FieldSpec> s) : spec_(std::move(s)) {}
    std::shared_ptr<const FieldSpec> spec_;
};

class FieldElem {
public:
    FieldElem() = default;

    const Field& field() const { return fld_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    // rational value when the element lies in the prime field
    std::optional<Rat> as_rational() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inverse() const;
    FieldElem pow(long e) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    // total order on canonical forms (for deterministic containers)
    bool operator<(const FieldElem& o) const { return cmp(o) < 0; }
    int cmp(const FieldElem& o) const;

    std::uint64_t hash() const;
    std::string str() const;

private:
    friend class Field;
    FieldElem(Field f, std::vector<Rat> c) : fld_(std::move(f)), c_(std::move(c)) { reduce(); }
    void reduce();       // mod p reduction of every coefficient (char p)
    void check_compat(const FieldElem& o) const;

    Field fld_;
    std::vector<Rat> c_;
};

FieldElem field_inverse(const FieldElem& x);

// ---------------------------------------------------------------------------
// Multivariate Laurent polynomials over Z: the parameter ring for generic
// Hecke algebras, one variable per conjugacy class of simple reflections.

class LaurentRing {
public:
    LaurentRing() = default;
    explicit LaurentRing(std::vector<std::string> vars)
        : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {}

    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const std::vector<std::string>& vars() const { return *vars_; }
    bool same_as(const LaurentRing& o) const { return vars_ == o.vars_ || (vars_ && o.vars_ && *vars_ == *o.vars_); }

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(LaurentRing r) : ring_(std::move(r)) {}

    static LaurentPoly constant(const LaurentRing& r, const Int& c);
    // c * x_var^e
    static LaurentPoly monomial(const LaurentRing& r, std::size_t var, int e, const Int& c = 1);

    const LaurentRing& ring() const { return ring_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Int constant_value() const;  // requires is_constant()

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly pow(long e) const;  // e < 0 only for single monomials

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;  // structural, deterministic

    // Evaluation homomorphism; every variable must get an invertible value.
    FieldElem specialize(const Field& k, const std::vector<FieldElem>& assignment) const;

    std::string str() const;

private:
    void add_term(const std::vector<int>& e, const Int& c);
    LaurentRing ring_;
    std::map<std::vector<int>, Int> terms_;
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
FieldElem laurent_specialize(const LaurentPoly& p, const Field& k,
                             const std::vector<FieldElem>& assignment);

}  // namespace cocenter

#endif
