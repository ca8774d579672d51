#ifndef COCENTER_HECKE_HPP
#define COCENTER_HECKE_HPP

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cocenter/affine.hpp"
#include "cocenter/conjugacy.hpp"
#include "cocenter/coxeter.hpp"
#include "cocenter/exactscalar.hpp"

namespace cocenter {

// ---------------------------------------------------------------------------
// coefficient rings: generic Laurent polynomials in q(s), or a specialized
// exact field with one value per parameter class

struct GenericCoeffs {
    using Value = LaurentPoly;
    LaurentRing ring;

    explicit GenericCoeffs(int nclasses) {
        std::vector<std::string> names;
        for (int i = 0; i < nclasses; ++i)
            names.push_back(nclasses == 1 ? "q" : ("q" + std::to_string(i)));
        ring = LaurentRing(std::move(names));
    }
    Value zero() const { return LaurentPoly(ring); }
    Value one() const { return LaurentPoly::constant(ring, 1); }
    Value q2(int cls) const { return LaurentPoly::monomial(ring, cls, 2); }
    Value q2inv(int cls) const { return LaurentPoly::monomial(ring, cls, -2); }
    static bool is_zero(const Value& v) { return v.is_zero(); }
};

struct FieldCoeffs {
    using Value = FieldElem;
    Field k;
    std::vector<FieldElem> qval;  // per parameter class

    FieldCoeffs(Field kk, std::vector<FieldElem> q) : k(std::move(kk)), qval(std::move(q)) {
        for (const FieldElem& v : qval)
            if (v.is_zero()) throw std::domain_error("Hecke parameter must be invertible");
    }
    Value zero() const { return k.zero(); }
    Value one() const { return k.one(); }
    Value q2(int cls) const { return qval[cls] * qval[cls]; }
    Value q2inv(int cls) const { return q2(cls).inverse(); }
    static bool is_zero(const Value& v) { return v.is_zero(); }
};

// ---------------------------------------------------------------------------
// group backends

struct FiniteBackend {
    using Elem = int;
    const CoxGroup* g = nullptr;

    explicit FiniteBackend(const CoxGroup& gg) : g(&gg) {}
    Elem identity() const { return g->identity(); }
    int ngens() const { return g->rank(); }
    Elem gen(int s) const { return g->gen(s); }
    int param_class(int s) const { return g->generator_param_class()[s]; }
    int num_param_classes() const { return g->num_param_classes(); }
    Elem mult(const Elem& a, const Elem& b) const { return g->mult(a, b); }
    long length(const Elem& a) const { return g->length(a); }
    // reduced word plus trailing length-zero part (none in the finite case)
    std::pair<std::vector<int>, Elem> word_and_tail(const Elem& a) const {
        return {g->word(a), g->identity()};
    }
    Elem act_tail(const Elem& tail, const Elem& y) const { return g->mult(tail, y); }
};

struct AffineBackend {
    using Elem = AffineElement;
    const AffineWeyl* w = nullptr;

    explicit AffineBackend(const AffineWeyl& ww) : w(&ww) {}
    Elem identity() const { return w->identity(); }
    int ngens() const { return w->num_simple(); }
    Elem gen(int s) const { return w->simple(s); }
    int param_class(int s) const { return w->stilde_param_class()[s]; }
    int num_param_classes() const { return w->num_param_classes(); }
    Elem mult(const Elem& a, const Elem& b) const { return w->mult(a, b); }
    long length(const Elem& a) const { return w->length(a); }
    std::pair<std::vector<int>, Elem> word_and_tail(const Elem& a) const {
        auto [word, oi] = w->word_and_omega(a);
        return {word, oi >= 0 ? w->omega()[oi] : w->identity()};
    }
    Elem act_tail(const Elem& tail, const Elem& y) const { return w->mult(tail, y); }
};

// ---------------------------------------------------------------------------
// Hecke algebra operations in the T-basis

template <class B, class C>
class Hecke {
public:
    using Elem = typename B::Elem;
    using Val = typename C::Value;
    using HElem = std::map<Elem, Val>;

    Hecke(B backend, C coeffs) : b_(std::move(backend)), c_(std::move(coeffs)) {}

    const B& backend() const { return b_; }
    const C& coeffs() const { return c_; }

    HElem zero() const { return {}; }
    HElem t(const Elem& x) const { return {{x, c_.one()}}; }
    HElem scaled(const Elem& x, const Val& v) const {
        HElem h;
        add_term(h, x, v);
        return h;
    }

    void add_term(HElem& h, const Elem& x, const Val& v) const {
        if (C::is_zero(v)) return;
        auto it = h.find(x);
        if (it == h.end()) {
            h.emplace(x, v);
        } else {
            it->second = it->second + v;
            if (C::is_zero(it->second)) h.erase(it);
        }
    }

    HElem add(const HElem& a, const HElem& b) const {
        HElem r = a;
        for (const auto& [x, v] : b) add_term(r, x, v);
        return r;
    }

    HElem scale(const HElem& a, const Val& v) const {
        HElem r;
        for (const auto& [x, c] : a) add_term(r, x, c * v);
        return r;
    }

    HElem neg(const HElem& a) const {
        HElem r;
        for (const auto& [x, c] : a) r.emplace(x, c_.zero() - c);
        return r;
    }

    // h * T_s
    HElem mul_gen_right(const HElem& h, int s) const {
        HElem r;
        const Elem gs = b_.gen(s);
        const Val q2 = c_.q2(b_.param_class(s));
        const Val q2m1 = q2 - c_.one();
        for (const auto& [x, v] : h) {
            Elem xs = b_.mult(x, gs);
            if (b_.length(xs) > b_.length(x)) {
                add_term(r, xs, v);
            } else {
                add_term(r, x, v * q2m1);
                add_term(r, xs, v * q2);
            }
        }
        return r;
    }

    // h * T_y for a basis element y
    HElem mul_basis_right(const HElem& h, const Elem& y) const {
        auto [word, tail] = b_.word_and_tail(y);
        HElem r = h;
        for (int s : word) r = mul_gen_right(r, s);
        if (!(tail == b_.identity())) {
            HElem r2;
            for (const auto& [x, v] : r) r2.emplace(b_.mult(x, tail), v);
            r = std::move(r2);
        }
        return r;
    }

    HElem mul(const HElem& a, const HElem& b) const {
        HElem r;
        for (const auto& [y, v] : b) {
            HElem part = mul_basis_right(a, y);
            for (const auto& [x, c] : part) add_term(r, x, c * v);
        }
        return r;
    }

    // T_s^{-1} = q(s)^{-2} T_s + (q(s)^{-2} - 1) T_e
    HElem t_inverse_gen(int s) const {
        const Val q2i = c_.q2inv(b_.param_class(s));
        HElem h;
        add_term(h, b_.gen(s), q2i);
        add_term(h, b_.identity(), q2i - c_.one());
        return h;
    }

    // (T_w)^{-1} along a reduced word
    HElem t_inverse(const Elem& x) const {
        auto [word, tail] = b_.word_and_tail(x);
        // x = s_1 ... s_k * tail; inverse = T_{tail^{-1}} * T_{s_k}^{-1} ... T_{s_1}^{-1}
        HElem r = t(invert_elem(tail));
        for (std::size_t i = word.size(); i-- > 0;) r = mul(r, t_inverse_gen(word[i]));
        return r;
    }

    std::string str(const HElem& h) const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [x, v] : h) {
            if (!first) os << " + ";
            first = false;
            os << "(" << val_str(v) << ")*T[" << elem_label(x) << "]";
        }
        if (first) os << "0";
        return os.str();
    }

    std::string elem_label(const Elem& x) const {
        if constexpr (std::is_same_v<B, FiniteBackend>) {
            std::ostringstream os;
            const auto& w = b_.g->word(x);
            if (w.empty()) return "e";
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) os << " ";
                os << "s" << (w[i] + 1);
            }
            return os.str();
        } else {
            return b_.w->elem_str(x);
        }
    }

private:
    static std::string val_str(const LaurentPoly& v) { return v.str(); }
    static std::string val_str(const FieldElem& v) { return v.str(); }

    Elem invert_elem(const Elem& x) const {
        if constexpr (std::is_same_v<B, FiniteBackend>) {
            return b_.g->inverse(x);
        } else {
            return b_.w->inverse(x);
        }
    }

    B b_;
    C c_;
};

using FiniteHeckeGeneric = Hecke<FiniteBackend, GenericCoeffs>;
using FiniteHeckeField = Hecke<FiniteBackend, FieldCoeffs>;
using AffineHeckeGeneric = Hecke<AffineBackend, GenericCoeffs>;
using AffineHeckeField = Hecke<AffineBackend, FieldCoeffs>;

// ---------------------------------------------------------------------------
// theta elements (affine backends)

// a lattice vector with all simple pairings strictly positive, smallest in a
// deterministic search order
IVec dominant_regular_vector(const AffineWeyl& w);

template <class C>
typename Hecke<AffineBackend, C>::HElem theta(const Hecke<AffineBackend, C>& h, const IVec& x) {
    const AffineWeyl& w = *h.backend().w;
    const int n = w.datum().xrank;
    IVec v = dominant_regular_vector(w);
    long m = 0;
    auto dominant = [&](const IVec& y) {
        for (const IVec& cr : w.datum().simple_coroots)
            if (dot(y, cr) < 0) return false;
        return true;
    };
    IVec x1 = x;
    IVec x2(n, 0);
    while (!dominant(x1) || !dominant(x2)) {
        ++m;
        for (int i = 0; i < n; ++i) {
            x1[i] = x[i] + m * v[i];
            x2[i] = m * v[i];
        }
        if (m > 1000) throw std::logic_error("theta: no dominant decomposition found");
    }
    auto h1 = h.t(w.translation(x1));
    auto h2 = h.t_inverse(w.translation(x2));
    return h.mul(h1, h2);
}

// ---------------------------------------------------------------------------
// cocenter reduction

template <class C>
void cocenter_add(std::map<int, typename C::Value>& acc, int cls, const typename C::Value& v) {
    if (C::is_zero(v)) return;
    auto it = acc.find(cls);
    if (it == acc.end()) {
        acc.emplace(cls, v);
    } else {
        it->second = it->second + v;
        if (C::is_zero(it->second)) acc.erase(it);
    }
}

// reduce a single basis element T_x to the T_O basis; smallest admissible
// simple reflection first, splitting on strict descents
template <class B, class C>
std::map<int, typename C::Value> reduce_elem(
    const Hecke<B, C>& h, const typename B::Elem& x,
    const std::function<long(const typename B::Elem&)>& class_min_of,
    const std::function<int(const typename B::Elem&)>& class_of,
    std::map<typename B::Elem, std::map<int, typename C::Value>>& memo) {
    using Val = typename C::Value;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;

    std::map<int, Val> result;
    const long len = h.backend().length(x);
    if (len == class_min_of(x)) {
        cocenter_add<C>(result, class_of(x), h.coeffs().one());
    } else {
        // find the first step of a non-increasing conjugation path: prefer the
        // smallest strict descent, else follow a breadth-first level move
        int chosen = -1;
        for (int s = 0; s < h.backend().ngens(); ++s) {
            auto y = h.backend().mult(h.backend().mult(h.backend().gen(s), x), h.backend().gen(s));
            if (h.backend().length(y) < len) { chosen = s; break; }
        }
        if (chosen >= 0) {
            // T_x = (q2-1) T_{sx} + q2 T_{sxs} in the cocenter
            int s = chosen;
            auto sx = h.backend().mult(h.backend().gen(s), x);
            auto sxs = h.backend().mult(sx, h.backend().gen(s));
            const Val q2 = h.coeffs().q2(h.backend().param_class(s));
            const Val q2m1 = q2 - h.coeffs().one();
            auto r1 = reduce_elem(h, sx, class_min_of, class_of, memo);
            auto r2 = reduce_elem(h, sxs, class_min_of, class_of, memo);
            for (const auto& [cls, v] : r1) cocenter_add<C>(result, cls, v * q2m1);
            for (const auto& [cls, v] : r2) cocenter_add<C>(result, cls, v * q2);
        } else {
            // level move along a GP path: pick the first step of the
            // deterministic BFS path towards a minimal element
            int step_s = -1;
            typename B::Elem next = x;
            if constexpr (std::is_same_v<B, FiniteBackend>) {
                auto path = gp_path_finite(*h.backend().g, x);
                if (!path.ok || path.steps.empty())
                    throw std::logic_error("cocenter: no conjugation path found");
                step_s = path.steps[0].s;
                next = path.steps[0].result;
            } else {
                auto path = gp_path_affine(*h.backend().w, x, class_min_of(x));
                if (!path.ok || path.steps.empty())
                    throw std::logic_error("cocenter: no conjugation path found");
                step_s = path.steps[0].s;
                next = path.steps[0].result;
            }
            (void)step_s;
            result = reduce_elem(h, next, class_min_of, class_of, memo);
        }
    }
    memo.emplace(x, result);
    return result;
}

// finite Coxeter group version
template <class C>
std::map<int, typename C::Value> cocenter_reduce(
    const Hecke<FiniteBackend, C>& h, const typename Hecke<FiniteBackend, C>::HElem& elem,
    std::map<int, std::map<int, typename C::Value>>* memo_store = nullptr) {
    const CoxGroup& g = *h.backend().g;
    std::function<long(const int&)> cmin = [&](const int& x) {
        return static_cast<long>(g.conjugacy_classes()[g.class_of(x)].min_length);
    };
    std::function<int(const int&)> cof = [&](const int& x) { return g.class_of(x); };
    std::map<int, std::map<int, typename C::Value>> local;
    auto& memo = memo_store ? *memo_store : local;
    std::map<int, typename C::Value> out;
    for (const auto& [x, v] : elem) {
        auto part = reduce_elem(h, x, cmin, cof, memo);
        for (const auto& [cls, c] : part) cocenter_add<C>(out, cls, c * v);
    }
    return out;
}

// affine version against a class partition of a ball
struct AffineClassCtx {
    const std::vector<AffineConjClass>* classes;
    long L;
};

template <class C>
std::map<int, typename C::Value> cocenter_reduce(
    const Hecke<AffineBackend, C>& h, const AffineClassCtx& ctx,
    const typename Hecke<AffineBackend, C>::HElem& elem,
    std::map<AffineElement, std::map<int, typename C::Value>>* memo_store = nullptr) {
    std::function<int(const AffineElement&)> cof = [&](const AffineElement& x) {
        int i = class_index_of(*ctx.classes, x);
        if (i < 0) throw std::domain_error("cocenter: element outside the working ball");
        if (!(*ctx.classes)[i].closed)
            throw std::domain_error("cocenter: class not closed in the working ball");
        return i;
    };
    std::function<long(const AffineElement&)> cmin = [&](const AffineElement& x) {
        return (*ctx.classes)[cof(x)].min_length;
    };
    std::map<AffineElement, std::map<int, typename C::Value>> local;
    auto& memo = memo_store ? *memo_store : local;
    std::map<int, typename C::Value> out;
    for (const auto& [x, v] : elem) {
        auto part = reduce_elem(h, x, cmin, cof, memo);
        for (const auto& [cls, c] : part) cocenter_add<C>(out, cls, c * v);
    }
    return out;
}

// all admissible first rewriting steps agree (well-definedness check)
template <class B, class C>
bool cocenter_confluent_at(const Hecke<B, C>& h, const typename B::Elem& x,
                           const std::function<std::map<int, typename C::Value>(
                               const typename Hecke<B, C>::HElem&)>& reduce) {
    using Val = typename C::Value;
    const long len = h.backend().length(x);
    std::optional<std::map<int, Val>> first;
    for (int s = 0; s < h.backend().ngens(); ++s) {
        auto gs = h.backend().gen(s);
        auto sx = h.backend().mult(gs, x);
        auto sxs = h.backend().mult(sx, gs);
        const long lsxs = h.backend().length(sxs);
        if (lsxs > len) continue;
        std::map<int, Val> r;
        if (lsxs == len) {
            r = reduce(h.t(sxs));
        } else {
            const Val q2 = h.coeffs().q2(h.backend().param_class(s));
            const Val q2m1 = q2 - h.coeffs().one();
            auto r1 = reduce(h.t(sx));
            auto r2 = reduce(h.t(sxs));
            for (const auto& [cls, v] : r1) cocenter_add<C>(r, cls, v * q2m1);
            for (const auto& [cls, v] : r2) cocenter_add<C>(r, cls, v * q2);
        }
        if (!first) {
            first = r;
        } else if (!(*first == r)) {
            return false;
        }
    }
    return true;
}

}  // namespace cocenter

#endif
