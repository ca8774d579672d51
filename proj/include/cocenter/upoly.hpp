#ifndef COCENTER_UPOLY_HPP
#define COCENTER_UPOLY_HPP

#include <utility>
#include <vector>

#include "cocenter/exactscalar.hpp"
#include "cocenter/numeric.hpp"

namespace cocenter {

// Univariate polynomials over an exact Field, little-endian coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Field k) : k_(std::move(k)) {}
    UPoly(Field k, std::vector<FieldElem> c) : k_(std::move(k)), c_(std::move(c)) { trim(); }

    static UPoly zero(const Field& k) { return UPoly(k); }
    static UPoly constant(const Field& k, const FieldElem& e);
    static UPoly x(const Field& k);
    // the element's coefficient vector as a polynomial with scalar coefficients
    static UPoly element_as_poly(const FieldElem& e);
    // the field's defining modulus as a polynomial with scalar coefficients
    static UPoly modulus_poly(const Field& k);

    const Field& field() const { return k_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FieldElem coeff(unsigned i) const { return i < c_.size() ? c_[i] : k_.zero(); }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem lc() const;
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly scale(const FieldElem& e) const;
    UPoly monic() const;
    UPoly derivative() const;
    FieldElem eval(const FieldElem& a) const;
    // g(a*x + b)
    UPoly compose_linear(const FieldElem& a, const FieldElem& b) const;

    // division with remainder; divisor must be nonzero
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }

    std::string str() const;

private:
    void trim();
    Field k_;
    std::vector<FieldElem> c_;
};

UPoly upoly_gcd(UPoly a, UPoly b);                       // monic gcd
std::pair<UPoly, UPoly> upoly_half_xgcd(UPoly a, UPoly m);  // (g, s): s*a = g mod m
UPoly upoly_powmod(const UPoly& base, const Int& e, const UPoly& m);

// squarefree decomposition f = prod f_i ^ m_i (f monic), any characteristic
std::vector<std::pair<UPoly, unsigned>> upoly_squarefree_decomposition(const UPoly& f);
UPoly upoly_squarefree_part(const UPoly& f);

// Full factorization into monic irreducibles with multiplicities.
// Supported fields: F_{p^k}; Q; cyclotomic Q(zeta_n).
std::vector<std::pair<UPoly, unsigned>> upoly_factor(const UPoly& f, Rng& rng);
std::vector<FieldElem> upoly_roots(const UPoly& f, Rng& rng);  // distinct roots in the field
bool upoly_irreducible(const UPoly& f, Rng& rng);

// irreducibility over F_p for raw integer coefficient vectors (used while
// constructing extension fields)
bool upoly_is_irreducible_mod_p(unsigned long p, const std::vector<Int>& f);

}  // namespace cocenter

#endif
