#include "cocenter/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace cocenter {

// ---------------------------------------------------------------------------
// CoxeterMatrix

CoxeterMatrix CoxeterMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    CoxeterMatrix cm;
    cm.rank = static_cast<int>(rows.size());
    cm.m = rows;
    for (int i = 0; i < cm.rank; ++i) {
        if (static_cast<int>(rows[i].size()) != cm.rank)
            throw std::domain_error("Coxeter matrix must be square");
        if (rows[i][i] != 1) throw std::domain_error("Coxeter matrix diagonal must be 1");
        for (int j = 0; j < cm.rank; ++j) {
            if (rows[i][j] != rows[j][i]) throw std::domain_error("Coxeter matrix must be symmetric");
            if (i != j && rows[i][j] != 0 && rows[i][j] < 2)
                throw std::domain_error("off-diagonal entries must be >= 2 or 0 (infinity)");
        }
    }
    return cm;
}

CoxeterMatrix CoxeterMatrix::preset(const std::string& name) {
    auto chain = [](std::vector<int> ms) {
        // consecutive orders along a chain, all other pairs commute
        int n = static_cast<int>(ms.size()) + 1;
        std::vector<std::vector<int>> rows(n, std::vector<int>(n, 2));
        for (int i = 0; i < n; ++i) rows[i][i] = 1;
        for (int i = 0; i + 1 < n; ++i) rows[i][i + 1] = rows[i + 1][i] = ms[i];
        return from_rows(rows);
    };
    if (name == "A1") return from_rows({{1}});
    if (name == "A2") return chain({3});
    if (name == "A1xA1") return chain({2});
    if (name == "B2" || name == "C2") return chain({4});
    if (name == "G2") return chain({6});
    if (name == "A3") return chain({3, 3});
    if (name == "B3" || name == "C3") return chain({4, 3});
    throw std::domain_error("unknown Coxeter preset: " + name);
}

CoxeterMatrix CoxeterMatrix::restrict(const std::vector<int>& subset) const {
    std::vector<std::vector<int>> rows(subset.size(), std::vector<int>(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j) rows[i][j] = m[subset[i]][subset[j]];
    return from_rows(rows);
}

bool CoxeterMatrix::crystallographic() const {
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            int v = m[i][j];
            if (v != 0 && v != 2 && v != 3 && v != 4 && v != 6) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// integer matrices

IMat imat_identity(int n) {
    IMat r(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    const int n = static_cast<int>(a.size());
    IMat r(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long aik = a[i][k];
            if (!aik) continue;
            for (int j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

IVec imat_apply(const IMat& a, const IVec& v) {
    const int n = static_cast<int>(a.size());
    IVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += a[i][j] * v[j];
    return r;
}

Int imat_det(const IMat& a) {
    // Bareiss fraction-free elimination
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    std::vector<std::vector<Int>> b(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = a[i][j];
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (b[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (b[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(b[k], b[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
        prev = b[k][k];
    }
    return sign * b[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// CoxGroup

namespace {

// crystallographic Cartan integers: c[i][j] = <alpha_j, alpha_i^vee>
std::vector<std::vector<long>> cartan_ints(const CoxeterMatrix& M) {
    const int n = M.rank;
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            switch (M.m[i][j]) {
                case 0: c[i][j] = -2; break;  // infinite bond, affine A1 Cartan
                case 2: c[i][j] = 0; break;
                case 3: c[i][j] = -1; break;
                case 4: c[i][j] = (i < j) ? -1 : -2; break;
                case 6: c[i][j] = (i < j) ? -1 : -3; break;
                default:
                    throw std::domain_error(
                        "non-crystallographic Coxeter matrix (entries must be 2,3,4,6)");
            }
        }
    return c;
}

}  // namespace

std::uint64_t CoxGroup::mat_hash(const IMat& m) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const IVec& row : m)
        for (long v : row) h = hash_mix(h, static_cast<std::uint64_t>(v) + 0x7f);
    return h;
}

CoxGroup CoxGroup::build(const CoxeterMatrix& M, std::size_t element_cap) {
    CoxGroup g;
    g.M_ = M;
    const int n = M.rank;
    auto cart = cartan_ints(M);
    for (int s = 0; s < n; ++s) {
        IMat m = imat_identity(n);
        for (int j = 0; j < n; ++j) m[s][j] -= cart[s][j];
        g.gen_mats_.push_back(std::move(m));
    }

    auto push = [&](IMat m, unsigned len, std::vector<int> w) -> int {
        std::uint64_t h = g.mat_hash(m);
        auto& bucket = g.index_[h];
        for (int id : bucket)
            if (g.mats_[id] == m) return -(id + 1);  // already present
        int id = static_cast<int>(g.mats_.size());
        bucket.push_back(id);
        g.mats_.push_back(std::move(m));
        g.len_.push_back(len);
        g.word_.push_back(std::move(w));
        return id;
    };

    push(imat_identity(n), 0, {});
    std::deque<int> frontier = {0};
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop_front();
        for (int s = 0; s < n; ++s) {
            IMat m = imat_mul(g.mats_[cur], g.gen_mats_[s]);
            std::vector<int> w = g.word_[cur];
            w.push_back(s);
            int id = push(std::move(m), g.len_[cur] + 1, std::move(w));
            if (id >= 0) {
                if (g.mats_.size() > element_cap)
                    throw std::runtime_error("Coxeter group enumeration exceeded element cap");
                frontier.push_back(id);
            }
        }
    }

    const std::size_t N = g.mats_.size();
    g.gen_ids_.resize(n);
    for (int s = 0; s < n; ++s) g.gen_ids_[s] = g.element_of_matrix(g.gen_mats_[s]);

    if (N <= 4096) {
        g.mult_table_.assign(N, std::vector<int>(N, -1));
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) {
                IMat m = imat_mul(g.mats_[a], g.mats_[b]);
                int id = g.element_of_matrix(m);
                if (id < 0) throw std::logic_error("group not closed");
                g.mult_table_[a][b] = id;
            }
    }
    g.inv_.assign(N, -1);
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b)
            if (g.mult(static_cast<int>(a), static_cast<int>(b)) == 0) {
                g.inv_[a] = static_cast<int>(b);
                break;
            }
        if (g.inv_[a] < 0) throw std::logic_error("no inverse found");
    }

    // positive roots: closure of the simple basis vectors
    {
        std::vector<IVec> roots;
        auto seen = [&](const IVec& v) {
            return std::find(roots.begin(), roots.end(), v) != roots.end();
        };
        std::deque<IVec> q;
        for (int s = 0; s < n; ++s) {
            IVec e(n, 0);
            e[s] = 1;
            roots.push_back(e);
            q.push_back(e);
        }
        while (!q.empty()) {
            IVec v = q.front();
            q.pop_front();
            for (int s = 0; s < n; ++s) {
                IVec w = imat_apply(g.gen_mats_[s], v);
                bool pos = true, neg = true;
                for (long x : w) {
                    if (x > 0) neg = false;
                    if (x < 0) pos = false;
                }
                if (!pos && !neg) throw std::logic_error("root with mixed signs");
                if (pos && !seen(w)) {
                    roots.push_back(w);
                    q.push_back(w);
                }
            }
        }
        std::sort(roots.begin(), roots.end());
        g.pos_roots_ = std::move(roots);
    }

    // generator parameter classes: odd-m chains identify conjugate generators
    {
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (M.m[i][j] != 0 && M.m[i][j] % 2 == 1) parent[find(i)] = find(j);
        std::vector<int> label(n, -1);
        int next = 0;
        g.gen_class_.resize(n);
        for (int i = 0; i < n; ++i) {
            int r = find(i);
            if (label[r] < 0) label[r] = next++;
            g.gen_class_[i] = label[r];
        }
        g.n_param_classes_ = next;
    }

    g.compute_classes();
    return g;
}

int CoxGroup::mult(int a, int b) const {
    if (!mult_table_.empty()) return mult_table_[a][b];
    IMat m = imat_mul(mats_[a], mats_[b]);
    int id = element_of_matrix(m);
    if (id < 0) throw std::logic_error("group not closed under multiplication");
    return id;
}

int CoxGroup::element_of_matrix(const IMat& m) const {
    auto it = index_.find(mat_hash(m));
    if (it == index_.end()) return -1;
    for (int id : it->second)
        if (mats_[id] == m) return id;
    return -1;
}

int CoxGroup::from_word(const std::vector<int>& w) const {
    int cur = 0;
    for (int s : w) {
        if (s < 0 || s >= rank()) throw std::domain_error("word letter out of range");
        cur = mult(cur, gen_ids_[s]);
    }
    return cur;
}

bool CoxGroup::elliptic_element(int a) const {
    IMat m = mats_[a];
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == static_cast<std::size_t>(j) ? 1 : 0) - m[i][j];
    return imat_det(m) != 0;
}

void CoxGroup::compute_classes() {
    const int N = static_cast<int>(size());
    class_of_.assign(N, -1);
    classes_.clear();
    for (int seed = 0; seed < N; ++seed) {
        if (class_of_[seed] >= 0) continue;
        const int cid = static_cast<int>(classes_.size());
        std::vector<int> members;
        std::deque<int> q = {seed};
        class_of_[seed] = cid;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            members.push_back(x);
            for (int s = 0; s < rank(); ++s) {
                int y = conj(gen_ids_[s], x);
                if (class_of_[y] < 0) {
                    class_of_[y] = cid;
                    q.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        ConjClass c;
        c.elements = std::move(members);
        c.min_length = len_[c.elements[0]];
        for (int x : c.elements) c.min_length = std::min(c.min_length, len_[x]);
        for (int x : c.elements)
            if (len_[x] == c.min_length) c.min_elements.push_back(x);
        c.elliptic = elliptic_element(c.elements[0]);
        classes_.push_back(std::move(c));
    }
}

std::vector<int> CoxGroup::parabolic_elements(const std::vector<int>& K) const {
    std::vector<char> in(size(), 0);
    std::deque<int> q = {0};
    in[0] = 1;
    std::vector<int> out = {0};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int s : K) {
            int y = mult(x, gen_ids_[s]);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
                q.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<char> CoxGroup::proper_parabolic_closure() const {
    std::vector<char> flag(size(), 0);
    const int n = rank();
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        std::vector<int> K;
        for (int s = 0; s < n; ++s)
            if (mask & (1u << s)) K.push_back(s);
        for (int x : parabolic_elements(K)) {
            if (flag[x]) continue;
            for (std::size_t g = 0; g < size(); ++g) flag[conj(static_cast<int>(g), x)] = 1;
        }
    }
    return flag;
}

unsigned CoxGroup::length_by_roots(int a) const {
    unsigned cnt = 0;
    for (const IVec& r : pos_roots_) {
        IVec w = imat_apply(mats_[a], r);
        bool neg = true;
        for (long x : w)
            if (x > 0) { neg = false; break; }
        if (neg) ++cnt;
    }
    return cnt;
}

int CoxGroup::longest_element() const {
    int best = 0;
    for (std::size_t i = 0; i < size(); ++i)
        if (len_[i] > len_[best]) best = static_cast<int>(i);
    return best;
}

}  // namespace cocenter
