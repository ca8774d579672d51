#include "cocenter/repmod.hpp"

#include <algorithm>
#include <numeric>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace cocenter {

// ---------------------------------------------------------------------------
// FMat

FMat FMat::identity(const Field& k, int n) {
    FMat m(k, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
}

FMat FMat::operator*(const FMat& o) const {
    FMat r(k_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            const FieldElem& x = at(i, t);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const FieldElem& y = o.at(t, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    return r;
}

FMat FMat::operator+(const FMat& o) const {
    FMat r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

FMat FMat::operator-(const FMat& o) const {
    FMat r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

FMat FMat::scaled(const FieldElem& c) const {
    FMat r(*this);
    for (auto& x : r.a_) x = x * c;
    return r;
}

FMat FMat::transpose() const {
    FMat r(k_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool FMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

FieldElem FMat::trace() const {
    FieldElem t = k_.zero();
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

FieldElem FMat::det() const {
    FMat m(*this);
    const int n = rows_;
    FieldElem d = k_.one();
    for (int col = 0, row = 0; col < n && row < n; ++col, ++row) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return k_.zero();
        if (piv != row) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(row, j));
            d = k_.zero() - d;
        }
        d = d * m.at(row, col);
        FieldElem inv = m.at(row, col).inverse();
        for (int i = row + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FieldElem f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(row, j);
        }
    }
    return d;
}

std::vector<int> fmat_rref(FMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        FieldElem inv = m.at(row, col).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElem f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int fmat_rank(FMat m) { return static_cast<int>(fmat_rref(m).size()); }

FMat fmat_kernel(const FMat& m) {
    FMat r(m);
    std::vector<int> pivots = fmat_rref(r);
    const Field& k = m.field();
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    int nfree = m.cols() - static_cast<int>(pivots.size());
    FMat ker(k, nfree, m.cols());
    int kr = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        ker.at(kr, c) = k.one();
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            ker.at(kr, pivots[pi]) = k.zero() - r.at(static_cast<int>(pi), c);
        ++kr;
    }
    return ker;
}

UPoly fmat_minpoly(const FMat& m) {
    const Field& k = m.field();
    const int n = m.rows();
    UPoly acc = UPoly::constant(k, k.one());
    for (int start = 0; start < n; ++start) {
        if (acc.degree() == n) break;
        // Krylov sequence from e_start
        std::vector<std::vector<FieldElem>> kry;
        std::vector<FieldElem> v(n, k.zero());
        v[start] = k.one();
        FMat rows(k, 0, 0);
        // grow until dependence
        std::vector<std::vector<FieldElem>> basis;  // rref rows
        std::vector<int> pivots;
        while (true) {
            kry.push_back(v);
            // reduce v against basis
            std::vector<FieldElem> red = v;
            for (std::size_t bi = 0; bi < basis.size(); ++bi) {
                const FieldElem& c = red[pivots[bi]];
                if (c.is_zero()) continue;
                FieldElem f = c;
                for (int j = 0; j < n; ++j) red[j] -= f * basis[bi][j];
            }
            int piv = -1;
            for (int j = 0; j < n; ++j)
                if (!red[j].is_zero()) { piv = j; break; }
            if (piv < 0) break;  // dependence found
            FieldElem inv = red[piv].inverse();
            for (int j = 0; j < n; ++j) red[j] = red[j] * inv;
            basis.push_back(red);
            pivots.push_back(piv);
            // v = m * v
            std::vector<FieldElem> nv(n, k.zero());
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const FieldElem& c = m.at(i, j);
                    if (!c.is_zero() && !v[j].is_zero()) nv[i] += c * v[j];
                }
            }
            v = std::move(nv);
        }
        // express kry.back() in terms of previous Krylov vectors:
        // solve sum_{i<d} x_i kry[i] = kry[d]
        const int d = static_cast<int>(kry.size()) - 1;
        FMat sys(k, n, d + 1);
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < d; ++c) sys.at(i, c) = kry[c][i];
            sys.at(i, d) = kry[d][i];
        }
        std::vector<int> piv = fmat_rref(sys);
        std::vector<FieldElem> coef(d, k.zero());
        for (std::size_t pi = 0; pi < piv.size(); ++pi) {
            if (piv[pi] == d) throw std::logic_error("minpoly: inconsistent Krylov system");
            coef[piv[pi]] = sys.at(static_cast<int>(pi), d);
        }
        // local minimal polynomial: x^d - sum coef_i x^i
        std::vector<FieldElem> loc(d + 1, k.zero());
        loc[d] = k.one();
        for (int i = 0; i < d; ++i) loc[i] = k.zero() - coef[i];
        UPoly local(k, std::move(loc));
        // acc = lcm(acc, local)
        UPoly g = upoly_gcd(acc, local);
        acc = (acc * local) / g;
        acc = acc.monic();
    }
    return acc;
}

FMat fmat_eval_poly(const UPoly& p, const FMat& m) {
    const Field& k = m.field();
    const int n = m.rows();
    FMat acc(k, n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        FieldElem c = p.coeff(static_cast<unsigned>(i));
        if (!c.is_zero())
            for (int t = 0; t < n; ++t) acc.at(t, t) += c;
    }
    return acc;
}

FMat fmat_spin(const FMat& seed, const std::vector<FMat>& acts) {
    const Field& k = seed.field();
    const int n = seed.cols();
    std::vector<std::vector<FieldElem>> basis;
    std::vector<int> pivots;
    std::deque<std::vector<FieldElem>> queue;

    auto add_row = [&](std::vector<FieldElem> v) -> bool {
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            const FieldElem c = v[pivots[bi]];
            if (c.is_zero()) continue;
            for (int j = 0; j < n; ++j) v[j] -= c * basis[bi][j];
        }
        int piv = -1;
        for (int j = 0; j < n; ++j)
            if (!v[j].is_zero()) { piv = j; break; }
        if (piv < 0) return false;
        FieldElem inv = v[piv].inverse();
        for (int j = 0; j < n; ++j) v[j] = v[j] * inv;
        // back-substitute to keep full rref
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            const FieldElem c = basis[bi][piv];
            if (c.is_zero()) continue;
            for (int j = 0; j < n; ++j) basis[bi][j] -= c * v[j];
        }
        basis.push_back(v);
        pivots.push_back(piv);
        queue.push_back(std::move(v));
        return true;
    };

    for (int i = 0; i < seed.rows(); ++i) {
        std::vector<FieldElem> v(n, k.zero());
        for (int j = 0; j < n; ++j) v[j] = seed.at(i, j);
        add_row(std::move(v));
    }
    while (!queue.empty() && static_cast<int>(basis.size()) < n) {
        std::vector<FieldElem> v = queue.front();
        queue.pop_front();
        for (const FMat& mT : acts) {
            // row vector times matrix
            std::vector<FieldElem> w(n, k.zero());
            for (int i = 0; i < n; ++i) {
                if (v[i].is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    const FieldElem& c = mT.at(i, j);
                    if (!c.is_zero()) w[j] += v[i] * c;
                }
            }
            add_row(std::move(w));
            if (static_cast<int>(basis.size()) == n) break;
        }
    }
    FMat out(k, static_cast<int>(basis.size()), n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < n; ++j) out.at(static_cast<int>(i), j) = basis[i][j];
    // rows sorted by pivot for determinism
    std::vector<int> order(basis.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots[a] < pivots[b]; });
    FMat sorted(k, out.rows(), n);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < n; ++j) sorted.at(i, j) = out.at(order[i], j);
    return sorted;
}

// ---------------------------------------------------------------------------
// OmegaGroup

OmegaGroup OmegaGroup::trivial(int rank) {
    OmegaGroup g;
    std::vector<int> id(rank);
    std::iota(id.begin(), id.end(), 0);
    g.perms = {id};
    g.table = {{0}};
    g.inv = {0};
    return g;
}

OmegaGroup OmegaGroup::cyclic(int rank, const std::vector<int>& gen_perm, int order) {
    OmegaGroup g;
    std::vector<int> id(rank);
    std::iota(id.begin(), id.end(), 0);
    std::vector<int> cur = id;
    for (int i = 0; i < order; ++i) {
        g.perms.push_back(cur);
        std::vector<int> next(rank);
        for (int j = 0; j < rank; ++j) next[j] = gen_perm[cur[j]];
        cur = next;
    }
    if (cur != id) throw std::domain_error("cyclic: generator order mismatch");
    g.table.assign(order, std::vector<int>(order));
    g.inv.assign(order, 0);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) g.table[a][b] = (a + b) % order;
        g.inv[a] = (order - a) % order;
    }
    return g;
}

OmegaGroup OmegaGroup::generate(int rank, const std::vector<std::vector<int>>& gens) {
    OmegaGroup g;
    std::vector<int> id(rank);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems = {id};
    auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    };
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (const auto& gen : gens) {
                auto c = compose(elems[i], gen);
                if (std::find(elems.begin(), elems.end(), c) == elems.end()) {
                    elems.push_back(c);
                    grew = true;
                }
            }
    }
    // identity first, rest sorted for determinism
    std::sort(elems.begin() + 1, elems.end());
    g.perms = elems;
    const int n = static_cast<int>(elems.size());
    g.table.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto c = compose(elems[a], elems[b]);
            auto it = std::find(elems.begin(), elems.end(), c);
            g.table[a][b] = static_cast<int>(it - elems.begin());
        }
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.table[a][b] == 0) { g.inv[a] = b; break; }
    return g;
}

// ---------------------------------------------------------------------------
// ParaAlg

ParaAlg::ParaAlg(CoxeterMatrix cm, Field k, std::vector<FieldElem> q_per_class, OmegaGroup om)
    : g_(CoxGroup::build(cm)), k_(std::move(k)), qcls_(std::move(q_per_class)), om_(std::move(om)) {
    if (static_cast<int>(qcls_.size()) != g_.num_param_classes())
        throw std::domain_error("ParaAlg: one parameter per class of simple reflections required");
    for (const FieldElem& q : qcls_)
        if (q.is_zero()) throw std::domain_error("ParaAlg: parameters must be invertible");
    if (static_cast<int>(om_.perms.empty() ? 0 : om_.perms[0].size()) != g_.rank())
        throw std::domain_error("ParaAlg: omega permutation rank mismatch");
    // omega must act by genuine diagram automorphisms
    for (const auto& p : om_.perms)
        for (int i = 0; i < g_.rank(); ++i)
            for (int j = 0; j < g_.rank(); ++j)
                if (cm.m[i][j] != cm.m[p[i]][p[j]])
                    throw std::domain_error("ParaAlg: omega is not a diagram automorphism");
    // parameters must be omega-invariant
    for (const auto& p : om_.perms)
        for (int i = 0; i < g_.rank(); ++i)
            if (!(qcls_[g_.generator_param_class()[i]] == qcls_[g_.generator_param_class()[p[i]]]))
                throw std::domain_error("ParaAlg: parameters not omega-invariant");
}

ParaAlg ParaAlg::equal_parameter(const CoxeterMatrix& cm, const Field& k, const FieldElem& q,
                                 OmegaGroup om) {
    CoxGroup g = CoxGroup::build(cm);
    std::vector<FieldElem> qs(g.num_param_classes(), q);
    return ParaAlg(cm, k, std::move(qs), std::move(om));
}

FieldElem ParaAlg::q2_of_gen(int s) const {
    const FieldElem& q = qcls_[g_.generator_param_class()[s]];
    return q * q;
}

int ParaAlg::apply_auto(int o, int w) const {
    const auto& word = g_.word(w);
    std::vector<int> mapped;
    for (int s : word) mapped.push_back(om_.perms[o][s]);
    return g_.from_word(mapped);
}

std::vector<ParaAlg::CrossedClass> ParaAlg::crossed_classes() const {
    const int N = static_cast<int>(g_.size());
    const int M = om_.size();
    auto flat = [&](int w, int o) { return w * M + o; };
    std::vector<int> cls(N * M, -1);
    std::vector<CrossedClass> out;
    // product in the crossed group: (w1,o1)(w2,o2) = (w1 * o1(w2), o1 o2)
    auto cmult = [&](std::pair<int, int> a, std::pair<int, int> b) {
        return std::make_pair(g_.mult(a.first, apply_auto(a.second, b.first)),
                              om_.table[a.second][b.second]);
    };
    auto cinv = [&](std::pair<int, int> a) {
        int oi = om_.inv[a.second];
        return std::make_pair(apply_auto(oi, g_.inverse(a.first)), oi);
    };
    for (int w = 0; w < N; ++w)
        for (int o = 0; o < M; ++o) {
            if (cls[flat(w, o)] >= 0) continue;
            int cid = static_cast<int>(out.size());
            CrossedClass c;
            std::deque<std::pair<int, int>> q = {{w, o}};
            cls[flat(w, o)] = cid;
            while (!q.empty()) {
                auto x = q.front();
                q.pop_front();
                c.elements.push_back(x);
                // conjugate by generators of the crossed group
                std::vector<std::pair<int, int>> gens;
                for (int s = 0; s < g_.rank(); ++s) gens.push_back({g_.gen(s), 0});
                for (int a = 1; a < M; ++a) gens.push_back({0, a});
                for (const auto& gpair : gens) {
                    auto y = cmult(cmult(gpair, x), cinv(gpair));
                    if (cls[flat(y.first, y.second)] < 0) {
                        cls[flat(y.first, y.second)] = cid;
                        q.push_back(y);
                    }
                }
            }
            std::sort(c.elements.begin(), c.elements.end());
            c.min_length = g_.length(c.elements[0].first);
            for (const auto& e : c.elements)
                c.min_length = std::min(c.min_length, static_cast<long>(g_.length(e.first)));
            c.min_rep = {-1, -1};
            for (const auto& e : c.elements)
                if (static_cast<long>(g_.length(e.first)) == c.min_length) { c.min_rep = e; break; }
            out.push_back(std::move(c));
        }
    return out;
}

ParaAlg ParaAlg::with_field(const Field& k2, const FieldElem& gen_image) const {
    std::vector<FieldElem> q2;
    for (const FieldElem& q : qcls_) q2.push_back(embed_elem(q, k2, gen_image));
    return ParaAlg(g_.coxeter_matrix(), k2, std::move(q2), om_);
}

// ---------------------------------------------------------------------------
// modules

FDModule regular_module(const ParaAlg& alg) {
    const CoxGroup& g = alg.group();
    const int N = static_cast<int>(g.size());
    const int M = alg.omega().size();
    const Field& k = alg.field();
    FDModule m;
    m.k = k;
    m.dim = N * M;
    for (int s = 0; s < g.rank(); ++s) {
        FMat mat(k, m.dim, m.dim);
        FieldElem q2 = alg.q2_of_gen(s);
        FieldElem q2m1 = q2 - k.one();
        for (int w = 0; w < N; ++w) {
            int sw = g.mult(g.gen(s), w);
            for (int o = 0; o < M; ++o) {
                int col = alg.basis_index(w, o);
                if (g.length(sw) > g.length(w)) {
                    mat.at(alg.basis_index(sw, o), col) = k.one();
                } else {
                    mat.at(alg.basis_index(w, o), col) = q2m1;
                    mat.at(alg.basis_index(sw, o), col) = q2;
                }
            }
        }
        m.act.push_back(std::move(mat));
    }
    for (int a = 1; a < M; ++a) {
        FMat mat(k, m.dim, m.dim);
        for (int w = 0; w < N; ++w) {
            int aw = alg.apply_auto(a, w);
            for (int o = 0; o < M; ++o)
                mat.at(alg.basis_index(aw, alg.omega().table[a][o]), alg.basis_index(w, o)) = k.one();
        }
        m.act.push_back(std::move(mat));
    }
    return m;
}

bool FDModule::check_relations(const ParaAlg& alg) const {
    const CoxGroup& g = alg.group();
    const int r = g.rank();
    // quadratic
    for (int s = 0; s < r; ++s) {
        FieldElem q2 = alg.q2_of_gen(s);
        FMat lhs = act[s] * act[s] - act[s].scaled(q2 - k.one());
        for (int i = 0; i < dim; ++i) lhs.at(i, i) -= q2;
        if (!lhs.is_zero()) return false;
    }
    // braid
    for (int s = 0; s < r; ++s)
        for (int t = s + 1; t < r; ++t) {
            int m = g.coxeter_matrix().m[s][t];
            if (m == 0) continue;
            FMat a = FMat::identity(k, dim), b = a;
            int x = s, y = t;
            for (int i = 0; i < m; ++i) {
                a = a * act[x];
                b = b * act[y];
                std::swap(x, y);
            }
            if (!(a == b)) return false;
        }
    // omega relations
    const int M = alg.omega().size();
    for (int a = 1; a < M; ++a)
        for (int b = 1; b < M; ++b) {
            FMat lhs = act[r + a - 1] * act[r + b - 1];
            int ab = alg.omega().table[a][b];
            FMat rhs = ab == 0 ? FMat::identity(k, dim) : act[r + ab - 1];
            if (!(lhs == rhs)) return false;
        }
    for (int a = 1; a < M; ++a)
        for (int s = 0; s < r; ++s) {
            FMat lhs = act[r + a - 1] * act[s];
            FMat rhs = act[alg.omega().perms[a][s]] * act[r + a - 1];
            if (!(lhs == rhs)) return false;
        }
    return true;
}

FieldElem embed_elem(const FieldElem& x, const Field& k2, const FieldElem& gen_image) {
    FieldElem acc = k2.zero(), p = k2.one();
    for (const Rat& c : x.coeffs()) {
        if (c != 0) acc += k2.from_rat(c) * p;
        p = p * gen_image;
    }
    return acc;
}

std::optional<FieldElem> embedding_generator(const Field& k, const Field& k2, Rng& rng) {
    if (k.degree() == 1) {
        auto r = k.generator().as_rational();
        return k2.from_rat(*r);
    }
    std::vector<FieldElem> cs;
    for (const Rat& c : k.spec().modulus) cs.push_back(k2.from_rat(c));
    UPoly mod(k2, std::move(cs));
    auto roots = upoly_roots(mod, rng);
    if (roots.empty()) return std::nullopt;
    std::sort(roots.begin(), roots.end());
    return roots.front();
}

FDModule embed_module(const FDModule& m, const Field& k2, const FieldElem& gen_image) {
    FDModule r;
    r.k = k2;
    r.dim = m.dim;
    for (const FMat& a : m.act) {
        FMat b(k2, a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) b.at(i, j) = embed_elem(a.at(i, j), k2, gen_image);
        r.act.push_back(std::move(b));
    }
    return r;
}

// ---------------------------------------------------------------------------
// chop

namespace {

// right-multiplication matrices for row-vector spinning of a left module
std::vector<FMat> transposes(const std::vector<FMat>& acts) {
    std::vector<FMat> t;
    for (const FMat& a : acts) t.push_back(a.transpose());
    return t;
}

// deterministic pseudo-random algebra element as a matrix
FMat random_algebra_element(const FDModule& m, Rng& rng, int round) {
    const Field& k = m.k;
    const int n = m.dim;
    FMat acc(k, n, n);
    if (m.act.empty()) return acc;
    const int terms = 1 + round % 3;
    for (int t = 0; t <= terms; ++t) {
        FMat word = FMat::identity(k, n);
        const int len = 1 + static_cast<int>(rng.below(3 + round % 2));
        for (int i = 0; i < len; ++i) word = word * m.act[rng.below(m.act.size())];
        long c = 1 + static_cast<long>(rng.below(4));
        acc = acc + word.scaled(k.from_int(Int(c)));
    }
    return acc;
}

// express a vector in terms of an rref basis; nullopt if not in the row space
std::optional<std::vector<FieldElem>> express_in_rref(const FMat& basis,
                                                      const std::vector<int>& pivots,
                                                      std::vector<FieldElem> v) {
    const Field& k = basis.field();
    std::vector<FieldElem> coords(basis.rows(), k.zero());
    for (int bi = 0; bi < basis.rows(); ++bi) {
        const FieldElem c = v[pivots[bi]];
        if (c.is_zero()) continue;
        coords[bi] = c;
        for (int j = 0; j < basis.cols(); ++j) v[j] -= c * basis.at(bi, j);
    }
    for (const FieldElem& x : v)
        if (!x.is_zero()) return std::nullopt;
    return coords;
}

std::vector<int> pivots_of_rref(const FMat& b) {
    std::vector<int> pivots;
    for (int i = 0; i < b.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < b.cols(); ++j)
            if (!b.at(i, j).is_zero()) { p = j; break; }
        pivots.push_back(p);
    }
    return pivots;
}

// split a module along a proper invariant row subspace (rref rows)
std::pair<FDModule, FDModule> split_module(const FDModule& m, const FMat& sub) {
    const Field& k = m.k;
    const int n = m.dim;
    const int d = sub.rows();
    std::vector<int> spiv = pivots_of_rref(sub);
    // complement: standard vectors at non-pivot positions
    std::vector<char> isp(n, 0);
    for (int p : spiv) isp[p] = 1;
    std::vector<int> comp;
    for (int j = 0; j < n; ++j)
        if (!isp[j]) comp.push_back(j);

    FDModule msub, mq;
    msub.k = k;
    msub.dim = d;
    mq.k = k;
    mq.dim = n - d;
    for (const FMat& a : m.act) {
        FMat aT = a.transpose();
        // sub action: rows of sub times aT, expressed in sub basis
        FMat as(k, d, d);
        for (int i = 0; i < d; ++i) {
            std::vector<FieldElem> v(n, k.zero());
            for (int c = 0; c < n; ++c) {
                if (sub.at(i, c).is_zero()) continue;
                for (int j = 0; j < n; ++j) v[j] += sub.at(i, c) * aT.at(c, j);
            }
            auto coords = express_in_rref(sub, spiv, v);
            if (!coords) throw std::logic_error("split: subspace not invariant");
            for (int j = 0; j < d; ++j) as.at(i, j) = (*coords)[j];
        }
        // row convention -> column convention
        msub.act.push_back(as.transpose());

        // quotient action on complement coordinates: e_{comp[i]} * aT, reduce
        // modulo sub, then read off complement coordinates
        FMat aq(k, n - d, n - d);
        for (int i = 0; i < n - d; ++i) {
            std::vector<FieldElem> v(n, k.zero());
            for (int j = 0; j < n; ++j) v[j] = aT.at(comp[i], j);
            // reduce modulo the submodule
            for (int bi = 0; bi < d; ++bi) {
                const FieldElem c = v[spiv[bi]];
                if (c.is_zero()) continue;
                for (int j = 0; j < n; ++j) v[j] -= c * sub.at(bi, j);
            }
            for (int j = 0; j < n - d; ++j) aq.at(i, j) = v[comp[j]];
        }
        mq.act.push_back(aq.transpose());
    }
    return {msub, mq};
}

// search for a proper invariant subspace; nullopt certifies simplicity
std::optional<FMat> find_proper_submodule(const FDModule& m, Rng& rng) {
    const Field& k = m.k;
    const int n = m.dim;
    if (n <= 1) return std::nullopt;
    if (m.act.empty()) {
        // the algebra is the ground field: any line is a submodule
        FMat line(k, 1, n);
        line.at(0, 0) = k.one();
        return line;
    }
    std::vector<FMat> actsT = transposes(m.act);
    for (int round = 0; round < 60; ++round) {
        FMat a = round == 0 && !m.act.empty() ? m.act[0] : random_algebra_element(m, rng, round);
        UPoly mp = fmat_minpoly(a);
        auto facs = upoly_factor(mp, rng);
        for (const auto& [f, mult] : facs) {
            FMat fa = fmat_eval_poly(f, a);
            FMat ker = fmat_kernel(fa);  // rows span the kernel
            if (ker.rows() == 0) continue;
            for (int i = 0; i < ker.rows(); ++i) {
                FMat seed(k, 1, n);
                for (int j = 0; j < n; ++j) seed.at(0, j) = ker.at(i, j);
                FMat spun = fmat_spin(seed, actsT);
                if (spun.rows() < n) return spun;
            }
            // transpose side
            FMat kerT = fmat_kernel(fa.transpose());
            for (int i = 0; i < kerT.rows(); ++i) {
                FMat seed(k, 1, n);
                for (int j = 0; j < n; ++j) seed.at(0, j) = kerT.at(i, j);
                FMat spunT = fmat_spin(seed, m.act);  // transpose module: right-mult by act
                if (spunT.rows() < n) {
                    // annihilator of the transpose submodule is a proper submodule
                    FMat ann = fmat_kernel(spunT);
                    FMat r(ann);
                    fmat_rref(r);
                    if (r.rows() == 0 || r.rows() == n)
                        throw std::logic_error("annihilator dimension out of range");
                    return r;
                }
            }
            // both spins full: certified simple when the nullity is minimal
            if (ker.rows() == f.degree()) return std::nullopt;
        }
    }
    throw std::runtime_error("chop: no certificate after search budget (increase rounds)");
}

}  // namespace

std::vector<std::pair<FDModule, int>> chop(const ParaAlg& alg, const FDModule& m,
                                           std::uint64_t seed) {
    Rng rng(seed);
    std::vector<FDModule> simple_parts;
    std::deque<FDModule> stack = {m};
    while (!stack.empty()) {
        FDModule cur = stack.front();
        stack.pop_front();
        if (cur.dim == 0) continue;
        auto sub = find_proper_submodule(cur, rng);
        if (!sub) {
            simple_parts.push_back(std::move(cur));
            continue;
        }
        auto [s, q] = split_module(cur, *sub);
        stack.push_back(std::move(s));
        stack.push_back(std::move(q));
    }
    // group by isomorphism
    std::vector<std::pair<FDModule, int>> out;
    for (auto& sp : simple_parts) {
        bool matched = false;
        for (auto& [rep, mult] : out)
            if (rep.dim == sp.dim && modules_isomorphic(alg, rep, sp)) {
                ++mult;
                matched = true;
                break;
            }
        if (!matched) out.emplace_back(std::move(sp), 1);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.dim < b.first.dim; });
    return out;
}

int hom_dim(const ParaAlg& alg, const FDModule& a, const FDModule& b) {
    (void)alg;
    const Field& k = a.k;
    const int da = a.dim, db = b.dim;
    const int unknowns = da * db;  // X: db x da with rho_b(g) X = X rho_a(g)
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t g = 0; g < a.act.size(); ++g) {
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < da; ++j) {
                std::vector<FieldElem> row(unknowns, k.zero());
                // (rho_b X)_{ij} = sum_t rho_b[i][t] X[t][j]
                for (int t = 0; t < db; ++t)
                    if (!b.act[g].at(i, t).is_zero()) row[t * da + j] += b.act[g].at(i, t);
                // (X rho_a)_{ij} = sum_t X[i][t] rho_a[t][j]
                for (int t = 0; t < da; ++t)
                    if (!a.act[g].at(t, j).is_zero()) row[i * da + t] -= a.act[g].at(t, j);
                bool nz = false;
                for (const auto& x : row) nz = nz || !x.is_zero();
                if (nz) rows.push_back(std::move(row));
            }
    }
    FMat sys(k, static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
    return unknowns - fmat_rank(sys);
}

bool modules_isomorphic(const ParaAlg& alg, const FDModule& a, const FDModule& b) {
    if (a.dim != b.dim) return false;
    return hom_dim(alg, a, b) > 0;  // valid for simple modules
}

FieldElem character(const ParaAlg& alg, const FDModule& m, int w, int o) {
    FMat acc = FMat::identity(m.k, m.dim);
    for (int s : alg.group().word(w)) acc = acc * m.act[s];
    if (o != 0) acc = acc * m.act[alg.rank() + o - 1];
    return acc.trace();
}

// ---------------------------------------------------------------------------
// splitting-field management

namespace {

struct NeedExtension {
    UPoly obstruction;  // irreducible over the current field, degree >= 2
};

Field extend_field_for(const Field& k, const UPoly& h, Rng& rng) {
    if (k.characteristic() > 0) {
        unsigned target = k.degree() * static_cast<unsigned>(h.degree());
        return Field::gf(k.characteristic(), target);
    }
    const unsigned n = k.spec().cyclotomic_n;
    for (unsigned mul = 2; mul <= 48; ++mul) {
        unsigned m = n * mul;
        if (m > 60) break;
        Field k2 = Field::cyclotomic(m);
        auto gi = embedding_generator(k, k2, rng);
        if (!gi) continue;
        // does the obstruction acquire a root?
        std::vector<FieldElem> cs;
        for (int i = 0; i <= h.degree(); ++i)
            cs.push_back(embed_elem(h.coeff(static_cast<unsigned>(i)), k2, *gi));
        UPoly h2(k2, std::move(cs));
        if (!upoly_roots(h2, rng).empty()) return k2;
    }
    throw std::runtime_error("no cyclotomic splitting field found for the obstruction");
}

// non-scalar endomorphism obstruction of a K-simple module, if any
std::optional<UPoly> endo_obstruction(const ParaAlg& alg, const FDModule& s, Rng& rng) {
    const Field& k = s.k;
    int hd = hom_dim(alg, s, s);
    if (hd == 1) return std::nullopt;
    // find a non-scalar endomorphism by solving the commutant equations and
    // picking a basis element that is not a multiple of the identity
    const int d = s.dim;
    const int unknowns = d * d;
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t g = 0; g < s.act.size(); ++g)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::vector<FieldElem> row(unknowns, k.zero());
                for (int t = 0; t < d; ++t) {
                    if (!s.act[g].at(i, t).is_zero()) row[t * d + j] += s.act[g].at(i, t);
                    if (!s.act[g].at(t, j).is_zero()) row[i * d + t] -= s.act[g].at(t, j);
                }
                bool nz = false;
                for (const auto& x : row) nz = nz || !x.is_zero();
                if (nz) rows.push_back(std::move(row));
            }
    FMat sys(k, static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
    FMat ker = fmat_kernel(sys);
    for (int r = 0; r < ker.rows(); ++r) {
        FMat e(k, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) e.at(i, j) = ker.at(r, i * d + j);
        // non-scalar?
        FMat scal = FMat::identity(k, d).scaled(e.at(0, 0));
        if (e == scal) continue;
        UPoly mp = fmat_minpoly(e);
        auto fac = upoly_factor(mp, rng);
        for (const auto& [f, mult] : fac)
            if (f.degree() >= 2) return f;
        // reducible minimal polynomial of an endomorphism would have split the
        // module earlier; treat as an internal error
        throw std::logic_error("non-scalar endomorphism with split minimal polynomial");
    }
    return std::nullopt;
}

}  // namespace

AlgebraModules simples_split(const ParaAlg& alg0, std::uint64_t seed) {
    ParaAlg alg = alg0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng rng(seed + attempt);
        FDModule reg = regular_module(alg);
        auto factors = chop(alg, reg, seed);
        std::optional<UPoly> obstruction;
        for (const auto& [s, mult] : factors) {
            obstruction = endo_obstruction(alg, s, rng);
            if (obstruction) break;
        }
        if (!obstruction) {
            AlgebraModules out{alg, alg.field(), {}, {}};
            for (auto& [s, mult] : factors) {
                out.simples.push_back(s);
                out.regular_multiplicity.push_back(mult);
            }
            return out;
        }
        Field k2 = extend_field_for(alg.field(), *obstruction, rng);
        auto gi = embedding_generator(alg.field(), k2, rng);
        if (!gi) throw std::runtime_error("field embedding failed during splitting");
        alg = alg.with_field(k2, *gi);
    }
    throw std::runtime_error("splitting field not found within the degree budget");
}

// ---------------------------------------------------------------------------
// Ext^1 via the defining presentation

int ext1_dim(const ParaAlg& alg, const FDModule& s, const FDModule& t) {
    const Field& k = alg.field();
    const int ds = s.dim, dt = t.dim;
    const int ng = alg.ngens();
    const int unknowns = ng * dt * ds;  // c_g in Hom(S,T) = dt x ds

    // D(word)(c) with rho_t on the left and rho_s on the right
    auto word_matrices = [&](const std::vector<int>& word, const FDModule& m) {
        std::vector<FMat> pre(word.size() + 1);
        pre[0] = FMat::identity(m.k, m.dim);
        for (std::size_t i = 0; i < word.size(); ++i) pre[i + 1] = pre[i] * m.act[word[i]];
        return pre;
    };
    struct LinForm {
        // coefficient of unknown block g: L_g * c_g * R_g summed
        std::vector<std::pair<FMat, FMat>> parts;  // indexed by generator
    };
    auto d_of_word = [&](const std::vector<int>& word) {
        std::vector<std::vector<std::pair<FMat, FMat>>> parts(ng);
        auto preT = word_matrices(word, t);
        // suffix products in s
        std::vector<FMat> sufS(word.size() + 1);
        sufS[word.size()] = FMat::identity(k, ds);
        for (std::size_t i = word.size(); i-- > 0;) sufS[i] = s.act[word[i]] * sufS[i + 1];
        for (std::size_t i = 0; i < word.size(); ++i)
            parts[word[i]].emplace_back(preT[i], sufS[i + 1]);
        return parts;
    };

    std::vector<std::vector<FieldElem>> rows;
    auto add_equation = [&](const std::vector<std::vector<std::pair<FMat, FMat>>>& lhs,
                            const std::vector<std::vector<std::pair<FMat, FMat>>>& rhs,
                            const std::vector<std::pair<FieldElem, int>>& extra) {
        // entries (i, j) of sum_g sum_parts L c_g R - (rhs) - extra scalar terms
        for (int i = 0; i < dt; ++i)
            for (int j = 0; j < ds; ++j) {
                std::vector<FieldElem> row(unknowns, k.zero());
                auto acc = [&](const std::vector<std::vector<std::pair<FMat, FMat>>>& side,
                               bool negate) {
                    for (int g = 0; g < ng; ++g)
                        for (const auto& [L, R] : side[g])
                            for (int a = 0; a < dt; ++a)
                                for (int b = 0; b < ds; ++b) {
                                    FieldElem c = L.at(i, a) * R.at(b, j);
                                    if (c.is_zero()) continue;
                                    int idx = (g * dt + a) * ds + b;
                                    if (negate)
                                        row[idx] -= c;
                                    else
                                        row[idx] += c;
                                }
                };
                acc(lhs, false);
                acc(rhs, true);
                for (const auto& [coef, g] : extra) {
                    // + coef * c_g entry (i, j)
                    int idx = (g * dt + i) * ds + j;
                    row[idx] += coef;
                }
                bool nz = false;
                for (const auto& x : row) nz = nz || !x.is_zero();
                if (nz) rows.push_back(std::move(row));
            }
    };

    const int r = alg.rank();
    const auto& cm = alg.group().coxeter_matrix();
    // quadratic: D(T_s T_s) = (q2-1) c_s
    for (int gi = 0; gi < r; ++gi) {
        auto lhs = d_of_word({gi, gi});
        std::vector<std::vector<std::pair<FMat, FMat>>> rhs(ng);
        FieldElem q2m1 = alg.q2_of_gen(gi) - k.one();
        add_equation(lhs, rhs, {{k.zero() - q2m1, gi}});
    }
    // braid (including commuting pairs)
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            int m = cm.m[a][b];
            if (m == 0) continue;
            std::vector<int> w1, w2;
            int x = a, y = b;
            for (int i = 0; i < m; ++i) {
                w1.push_back(x);
                w2.push_back(y);
                std::swap(x, y);
            }
            add_equation(d_of_word(w1), d_of_word(w2), {});
        }
    // omega group law and cross relations
    const int M = alg.omega().size();
    auto ogen = [&](int a) { return r + a - 1; };
    for (int a = 1; a < M; ++a)
        for (int b = 1; b < M; ++b) {
            auto lhs = d_of_word({ogen(a), ogen(b)});
            int ab = alg.omega().table[a][b];
            std::vector<std::vector<std::pair<FMat, FMat>>> rhs(ng);
            if (ab != 0) rhs = d_of_word({ogen(ab)});
            add_equation(lhs, rhs, {});
        }
    for (int a = 1; a < M; ++a)
        for (int gi = 0; gi < r; ++gi)
            add_equation(d_of_word({ogen(a), gi}),
                         d_of_word({alg.omega().perms[a][gi], ogen(a)}), {});

    FMat sys(k, static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
    int z = unknowns - fmat_rank(sys);
    int b = dt * ds - hom_dim(alg, s, t);
    return z - b;
}

// ---------------------------------------------------------------------------
// trace pairing

TracePairing trace_pairing_matrix(const ParaAlg& alg, std::uint64_t seed) {
    TracePairing tp;
    auto cls = alg.crossed_classes();
    AlgebraModules am = simples_split(alg, seed);
    const ParaAlg& a2 = am.alg;
    auto cls2 = a2.crossed_classes();
    for (const auto& c : cls2) tp.row_reps.push_back(c.min_rep);
    for (const auto& s : am.simples) tp.col_dims.push_back(s.dim);
    tp.matrix = FMat(am.field, static_cast<int>(cls2.size()), static_cast<int>(am.simples.size()));
    for (std::size_t i = 0; i < cls2.size(); ++i)
        for (std::size_t j = 0; j < am.simples.size(); ++j)
            tp.matrix.at(static_cast<int>(i), static_cast<int>(j)) =
                character(a2, am.simples[j], cls2[i].min_rep.first, cls2[i].min_rep.second);
    tp.square = cls2.size() == am.simples.size();
    if (tp.square) {
        tp.determinant = tp.matrix.det();
        tp.invertible = !tp.determinant.is_zero();
    } else {
        tp.determinant = am.field.zero();
        tp.invertible = false;
    }
    (void)cls;
    return tp;
}

// ---------------------------------------------------------------------------
// induction

FDModule induce(const ParaAlg& big, const std::vector<int>& K, const ParaAlg& sub,
                const FDModule& v) {
    const CoxGroup& G = big.group();
    const Field& k = big.field();
    std::vector<int> Ks(K);
    std::sort(Ks.begin(), Ks.end());
    // subgroup W_K inside big's Coxeter part and minimal coset representatives
    std::vector<int> WK = G.parabolic_elements(Ks);
    std::set<int> wkset(WK.begin(), WK.end());
    const int N = static_cast<int>(G.size());
    std::vector<int> rep_of(N, -1);
    std::vector<int> reps;
    for (int w = 0; w < N; ++w) {
        if (rep_of[w] >= 0) continue;
        // coset w W_K: minimal length element
        int best = -1;
        std::vector<int> coset;
        for (int kk : WK) {
            int y = G.mult(w, kk);
            coset.push_back(y);
            if (best < 0 || G.length(y) < G.length(best) ||
                (G.length(y) == G.length(best) && y < best))
                best = y;
        }
        for (int y : coset) rep_of[y] = best;
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end());
    std::map<int, int> rep_index;
    for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);

    // map a W_K element to the subalgebra's group via its word
    std::map<int, int> kmap;  // big letter -> sub letter
    for (std::size_t i = 0; i < Ks.size(); ++i) kmap[Ks[i]] = static_cast<int>(i);
    auto to_sub = [&](int w) {
        std::vector<int> word;
        for (int s : G.word(w)) {
            auto it = kmap.find(s);
            if (it == kmap.end()) throw std::logic_error("induce: element not in W_K");
            word.push_back(it->second);
        }
        return sub.group().from_word(word);
    };

    const int M = big.omega().size();
    const int nc = static_cast<int>(reps.size());
    FDModule out;
    out.k = k;
    out.dim = M * nc * v.dim;
    auto bidx = [&](int o, int ci, int vi) { return (o * nc + ci) * v.dim + vi; };

    // action of rho_v for a W_K element
    auto rho_sub = [&](int wk) {
        FMat m = FMat::identity(k, v.dim);
        for (int s : sub.group().word(to_sub(wk))) m = m * v.act[s];
        return m;
    };

    // T_s generators
    for (int s = 0; s < big.rank(); ++s) {
        FMat mat(k, out.dim, out.dim);
        for (int o = 0; o < M; ++o) {
            int sprime = big.omega().perms[big.omega().inv[o]][s];
            FieldElem q2 = big.q2_of_gen(sprime);
            FieldElem q2m1 = q2 - k.one();
            for (int ci = 0; ci < nc; ++ci) {
                int x = reps[ci];
                int sx = G.mult(G.gen(sprime), x);
                auto place = [&](int target_w, const FieldElem& coeff) {
                    // decompose target_w = x' * k'
                    int xp = rep_of[target_w];
                    int kk = G.mult(G.inverse(xp), target_w);
                    if (!wkset.count(kk)) throw std::logic_error("induce: bad decomposition");
                    FMat rv = rho_sub(kk).scaled(coeff);
                    int cj = rep_index.at(xp);
                    for (int a = 0; a < v.dim; ++a)
                        for (int b = 0; b < v.dim; ++b)
                            if (!rv.at(a, b).is_zero())
                                mat.at(bidx(o, cj, a), bidx(o, ci, b)) += rv.at(a, b);
                };
                if (G.length(sx) > G.length(x)) {
                    place(sx, k.one());
                } else {
                    place(x, q2m1);
                    place(sx, q2);
                }
            }
        }
        out.act.push_back(std::move(mat));
    }
    // omega generators
    for (int a = 1; a < M; ++a) {
        FMat mat(k, out.dim, out.dim);
        for (int o = 0; o < M; ++o) {
            int ao = big.omega().table[a][o];
            for (int ci = 0; ci < nc; ++ci)
                for (int vi = 0; vi < v.dim; ++vi)
                    mat.at(bidx(ao, ci, vi), bidx(o, ci, vi)) = k.one();
        }
        out.act.push_back(std::move(mat));
    }
    return out;
}

// ---------------------------------------------------------------------------
// elliptic rank

namespace {

struct SubAlgSpec {
    std::vector<int> K;   // generator subset of the Coxeter part
    bool omega_less_full = false;
};

ParaAlg make_subalgebra(const ParaAlg& big, const std::vector<int>& K) {
    CoxeterMatrix cm = big.group().coxeter_matrix().restrict(K);
    CoxGroup gsub = CoxGroup::build(cm);
    // per-class parameters inherited generator-wise
    std::vector<FieldElem> q(gsub.num_param_classes(), big.field().one());
    for (std::size_t i = 0; i < K.size(); ++i) {
        int cls = gsub.generator_param_class()[static_cast<int>(i)];
        const FieldElem& qg = big.q_per_class()[big.group().generator_param_class()[K[i]]];
        q[cls] = qg;
    }
    return ParaAlg(cm, big.field(), q, OmegaGroup::trivial(static_cast<int>(K.size())));
}

}  // namespace

int elliptic_rank(const ParaAlg& alg0, std::uint64_t seed) {
    // subalgebra layout: every proper subset of the Coxeter generators, plus
    // the Omega-less full subalgebra when the Omega part is nontrivial
    std::vector<SubAlgSpec> specs;
    const int r0 = alg0.rank();
    for (unsigned mask = 0; (1u << r0) > 1 && mask + 1 < (1u << r0); ++mask) {
        SubAlgSpec sp;
        for (int i = 0; i < r0; ++i)
            if (mask & (1u << i)) sp.K.push_back(i);
        specs.push_back(sp);
    }
    if (alg0.omega().size() > 1) {
        SubAlgSpec sp;
        for (int i = 0; i < r0; ++i) sp.K.push_back(i);
        sp.omega_less_full = true;
        specs.push_back(sp);
    }
    if (r0 == 0 && alg0.omega().size() == 1) {
        // the ground field: one simple, nothing to quotient by
        return 1;
    }

    // find a common splitting field
    ParaAlg alg = alg0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        AlgebraModules am = simples_split(alg, seed);
        if (!am.field.same_as(alg.field())) {
            alg = am.alg;
            continue;
        }
        bool extended = false;
        for (const auto& sp : specs) {
            ParaAlg sub = make_subalgebra(alg, sp.K);
            AlgebraModules ams = simples_split(sub, seed);
            if (!ams.field.same_as(alg.field())) {
                Rng rng(seed);
                auto gi = embedding_generator(alg.field(), ams.field, rng);
                if (!gi) throw std::runtime_error("subalgebra splitting field does not embed");
                alg = alg.with_field(ams.field, *gi);
                extended = true;
                break;
            }
        }
        if (extended) continue;

        // everything splits over alg.field()
        const auto simples = am.simples;
        const int n = static_cast<int>(simples.size());

        std::vector<std::vector<Int>> ind_vectors;
        for (const auto& sp : specs) {
            ParaAlg sub = make_subalgebra(alg, sp.K);
            AlgebraModules ams = simples_split(sub, seed);
            for (const auto& vs : ams.simples) {
                FDModule ind = induce(alg, sp.K, sub, vs);
                auto factors = chop(alg, ind, seed);
                std::vector<Int> vec(n, 0);
                int total = 0;
                for (const auto& [f, mult] : factors) {
                    bool placed = false;
                    for (int i = 0; i < n; ++i)
                        if (f.dim == simples[i].dim && modules_isomorphic(alg, f, simples[i])) {
                            vec[i] += mult;
                            placed = true;
                            break;
                        }
                    if (!placed) throw std::logic_error("induced factor not among the simples");
                    total += mult * f.dim;
                }
                if (total != ind.dim) throw std::logic_error("induction bookkeeping failed");
                ind_vectors.push_back(std::move(vec));
            }
        }

        // Euler form beta = Hom - Ext^1 on the split simples
        std::vector<std::vector<Int>> beta(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int h = (i == j) ? 1 : 0;
                int e = ext1_dim(alg, simples[i], simples[j]);
                beta[i][j] = Int(h - e);
            }

        // constraints: v' beta u = 0 for all induced classes u
        std::vector<std::vector<Rat>> cons;
        for (const auto& u : ind_vectors) {
            std::vector<Rat> row(n, Rat(0));
            bool nz = false;
            for (int i = 0; i < n; ++i) {
                Int acc(0);
                for (int j = 0; j < n; ++j) acc += beta[i][j] * u[j];
                row[i] = Rat(acc);
                nz = nz || acc != 0;
            }
            if (nz) cons.push_back(std::move(row));
        }
        // kernel of the constraint matrix over Q
        Field Q = Field::rationals();
        FMat cmat(Q, static_cast<int>(cons.size()), n);
        for (std::size_t i = 0; i < cons.size(); ++i)
            for (int j = 0; j < n; ++j) cmat.at(static_cast<int>(i), j) = Q.from_rat(cons[i][j]);
        FMat P = fmat_kernel(cmat);  // rows: basis of the orthogonal complement
        // G = P beta P^T, rank over Q
        const int p = P.rows();
        FMat G(Q, p, p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                Rat acc(0);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        auto ra = P.at(i, a).as_rational();
                        auto rb = P.at(j, b).as_rational();
                        acc += *ra * Rat(beta[a][b]) * *rb;
                    }
                G.at(i, j) = Q.from_rat(acc);
            }
        return fmat_rank(G);
    }
    throw std::runtime_error("elliptic_rank: common splitting field not found");
}

bool is_semisimple_split(const ParaAlg& alg, std::uint64_t seed) {
    AlgebraModules am = simples_split(alg, seed);
    long total = 0;
    for (const auto& s : am.simples) total += static_cast<long>(s.dim) * s.dim;
    return total == alg.dim();
}

}  // namespace cocenter
