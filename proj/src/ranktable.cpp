#include "cocenter/ranktable.hpp"

#include <algorithm>
#include <sstream>

namespace cocenter {

namespace {

FieldElem eval_phi(unsigned n, const FieldElem& x) {
    const Field& k = x.field();
    FieldElem acc = k.zero(), p = k.one();
    for (const Int& c : cyclotomic_poly(n)) {
        acc += k.from_int(c) * p;
        p = p * x;
    }
    return acc;
}

FieldElem poincare_eval(const CoxGroup& g, const FieldElem& q2) {
    FieldElem acc = q2.field().zero();
    for (std::size_t i = 0; i < g.size(); ++i)
        acc += q2.pow(static_cast<long>(g.length(static_cast<int>(i))));
    return acc;
}

// all Coxeter groups appearing as summands (one per ~ class representative)
std::vector<CoxGroup> summand_groups(const AffineWeyl& w,
                                     const std::vector<std::vector<std::vector<int>>>& groups) {
    std::vector<CoxGroup> out;
    for (const auto& grp : groups)
        out.push_back(CoxGroup::build(w.stilde_matrix().restrict(grp.front())));
    return out;
}

// a parameter q is table-generic when the row cyclotomic and every summand
// Poincare polynomial are nonzero at q^2
bool generic_ok(const FieldElem& q, unsigned phi_n, const std::vector<CoxGroup>& wjs) {
    FieldElem q2 = q * q;
    if (eval_phi(phi_n, q2).is_zero()) return false;
    for (const CoxGroup& g : wjs)
        if (poincare_eval(g, q2).is_zero()) return false;
    return true;
}

std::pair<Field, FieldElem> generic_point_char0(unsigned phi_n, const std::vector<CoxGroup>& wjs) {
    Field Q = Field::rationals();
    for (long c : {5, 7, 11, 13, 17}) {
        FieldElem q = Q.from_int(c);
        if (generic_ok(q, phi_n, wjs)) return {Q, q};
    }
    throw std::runtime_error("no generic rational parameter found");
}

std::pair<Field, FieldElem> generic_point_charp(unsigned long p, unsigned phi_n,
                                                const std::vector<CoxGroup>& wjs) {
    for (unsigned k = 1; k <= 3; ++k) {
        Field F = Field::gf(p, k);
        for (const FieldElem& e : F.all_elements()) {
            if (e.is_zero()) continue;
            if (generic_ok(e, phi_n, wjs)) return {F, e};
        }
    }
    throw std::runtime_error("no generic parameter found in characteristic p");
}

std::pair<Field, FieldElem> root_point_char0(unsigned phi_n) {
    // q with Phi_n(q^2) = 0
    if (phi_n % 2 == 1) {
        Field K = Field::cyclotomic(phi_n);
        FieldElem q = K.generator().pow((phi_n + 1) / 2);
        if (!eval_phi(phi_n, q * q).is_zero()) throw std::logic_error("bad cyclotomic point");
        return {K, q};
    }
    Field K = Field::cyclotomic(2 * phi_n);
    FieldElem q = K.generator();
    if (!eval_phi(phi_n, q * q).is_zero()) throw std::logic_error("bad cyclotomic point");
    return {K, q};
}

std::pair<Field, FieldElem> root_point_charp(unsigned long p, unsigned phi_n,
                                             std::uint64_t seed) {
    Rng rng(seed);
    for (unsigned k = 1; k <= 6; ++k) {
        Field F = Field::gf(p, k);
        std::vector<FieldElem> cs;
        for (const Int& c : cyclotomic_poly(phi_n)) cs.push_back(F.from_int(c));
        UPoly phi(F, std::move(cs));
        auto roots = upoly_roots(phi, rng);
        if (roots.empty()) continue;
        std::sort(roots.begin(), roots.end());
        for (unsigned kp : {k, 2 * k}) {
            Field F2 = Field::gf(p, kp);
            auto gi = embedding_generator(F, F2, rng);
            if (!gi) continue;
            for (const FieldElem& r : roots) {
                FieldElem r2 = embed_elem(r, F2, *gi);
                for (const FieldElem& q : F2.all_elements()) {
                    if (q.is_zero()) continue;
                    if (q * q == r2) return {F2, q};
                }
            }
        }
    }
    throw std::runtime_error("no root-of-Phi parameter found in characteristic p");
}

}  // namespace

unsigned default_phi_index(const RootDatum& d) {
    if (d.name == "SL3" || d.name == "GL3") return 3;
    return 2;
}

unsigned long default_char_prime(const AffineWeyl& w) {
    const RootDatum& d = w.datum();
    const int k = d.ssrank();
    IMat cart(k, IVec(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) cart[i][j] = dot(d.simple_roots[i], d.simple_coroots[j]);
    Int det = imat_det(cart);
    Int a = abs(det);
    unsigned long best = 0;
    for (unsigned long p = 2; Int(p) <= a; ++p)
        if (a % Int(p) == 0) best = p;
    if (best > 1) return best;
    // connection index 1: fall back to the largest prime dividing |W0|
    unsigned long n = static_cast<unsigned long>(w.w0().size());
    for (unsigned long p = 2; p <= n; ++p)
        if (n % p == 0) best = p;
    return best;
}

ParaAlg summand_algebra(const AffineWeyl& w, const std::vector<int>& J, const FieldElem& q) {
    std::vector<int> Js(J);
    std::sort(Js.begin(), Js.end());
    CoxeterMatrix cm = w.stilde_matrix().restrict(Js);

    // Omega_J as an abstract group with its permutation action on J
    std::vector<int> stab = w.omega_stabilizer(Js);
    // identity first
    int id_pos = -1;
    for (std::size_t i = 0; i < stab.size(); ++i)
        if (w.omega()[stab[i]] == w.identity()) { id_pos = static_cast<int>(i); break; }
    if (id_pos < 0) throw std::logic_error("identity missing from Omega stabilizer");
    std::swap(stab[0], stab[id_pos]);
    std::sort(stab.begin() + 1, stab.end());

    OmegaGroup om;
    const int M = static_cast<int>(stab.size());
    for (int a = 0; a < M; ++a) {
        const auto& act = w.omega_action()[stab[a]];
        std::vector<int> perm(Js.size());
        for (std::size_t t = 0; t < Js.size(); ++t) {
            int image = act[Js[t]];
            auto it = std::find(Js.begin(), Js.end(), image);
            if (it == Js.end()) throw std::logic_error("stabilizer does not stabilize J");
            perm[t] = static_cast<int>(it - Js.begin());
        }
        om.perms.push_back(std::move(perm));
    }
    om.table.assign(M, std::vector<int>(M, -1));
    for (int a = 0; a < M; ++a)
        for (int b = 0; b < M; ++b) {
            AffineElement prod = w.mult(w.omega()[stab[a]], w.omega()[stab[b]]);
            for (int c = 0; c < M; ++c)
                if (w.omega()[stab[c]] == prod) om.table[a][b] = c;
            if (om.table[a][b] < 0) throw std::logic_error("Omega stabilizer not closed");
        }
    om.inv.assign(M, -1);
    for (int a = 0; a < M; ++a)
        for (int b = 0; b < M; ++b)
            if (om.table[a][b] == 0) { om.inv[a] = b; break; }

    return ParaAlg::equal_parameter(cm, q.field(), q, om);
}

RankTable rank_table(const AffineWeyl& w, unsigned phi_n, unsigned long p0, std::uint64_t seed) {
    RankTable out;
    out.datum_name = w.datum().name;
    out.phi_n = phi_n;
    out.p0 = p0;
    auto groups = w.maximal_sharp_subsets();
    auto wjs = summand_groups(w, groups);

    for (int row = 0; row < 2; ++row)
        for (int col = 0; col < 2; ++col) {
            std::pair<Field, FieldElem> pt =
                (row == 0)
                    ? (col == 0 ? generic_point_char0(phi_n, wjs)
                                : generic_point_charp(p0, phi_n, wjs))
                    : (col == 0 ? root_point_char0(phi_n) : root_point_charp(p0, phi_n, seed));
            CellReport cell;
            cell.field_label = pt.first.label();
            cell.q_label = pt.second.str();
            for (const auto& grp : groups) {
                SummandReport sr;
                sr.J = grp.front();
                sr.orbit_size = static_cast<int>(grp.size());
                ParaAlg alg = summand_algebra(w, sr.J, pt.second);
                sr.omega_order = alg.omega().size();
                sr.rank = elliptic_rank(alg, seed);
                cell.total += sr.rank;
                cell.summands.push_back(std::move(sr));
            }
            out.cell[row][col] = std::move(cell);
        }
    return out;
}

}  // namespace cocenter
