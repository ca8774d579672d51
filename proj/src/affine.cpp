#include "cocenter/affine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cocenter {

long dot(const IVec& a, const IVec& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dotq(const std::vector<Rat>& a, const IVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

// ---------------------------------------------------------------------------
// RootDatum

RootDatum RootDatum::from_matrices(int xrank, std::vector<IVec> roots, std::vector<IVec> coroots,
                                   std::string name) {
    RootDatum d;
    d.xrank = xrank;
    d.simple_roots = std::move(roots);
    d.simple_coroots = std::move(coroots);
    d.name = std::move(name);
    if (d.simple_roots.size() != d.simple_coroots.size())
        throw std::domain_error("root datum: roots/coroots size mismatch");
    for (const IVec& r : d.simple_roots)
        if (static_cast<int>(r.size()) != xrank) throw std::domain_error("root datum: bad root size");
    for (const IVec& c : d.simple_coroots)
        if (static_cast<int>(c.size()) != xrank) throw std::domain_error("root datum: bad coroot size");
    for (std::size_t i = 0; i < d.simple_roots.size(); ++i)
        if (dot(d.simple_roots[i], d.simple_coroots[i]) != 2)
            throw std::domain_error("root datum: <alpha, alpha^vee> must be 2");
    return d;
}

RootDatum RootDatum::preset(const std::string& name) {
    // X is the translation lattice (cocharacters); simple_roots generate the
    // W_a-translations, simple_coroots are their partners in the dual lattice.
    if (name == "SL2") return from_matrices(1, {{1}}, {{2}}, name);
    if (name == "PGL2") return from_matrices(1, {{2}}, {{1}}, name);
    if (name == "SL3")
        return from_matrices(2, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}}, name);
    if (name == "PGL3")
        return from_matrices(2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}, name);
    if (name == "GL2") return from_matrices(2, {{1, -1}}, {{1, -1}}, name);
    if (name == "GL3")
        return from_matrices(3, {{1, -1, 0}, {0, 1, -1}}, {{1, -1, 0}, {0, 1, -1}}, name);
    if (name == "Sp4")
        return from_matrices(2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}, name);
    throw std::domain_error("unknown root datum preset: " + name);
}

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup WeylGroup::build(const RootDatum& d) {
    WeylGroup g;
    const int n = d.xrank;
    const int k = d.ssrank();
    std::vector<IMat> gens;
    for (int i = 0; i < k; ++i) {
        IMat m = imat_identity(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m[r][c] -= d.simple_roots[i][r] * d.simple_coroots[i][c];
        gens.push_back(std::move(m));
    }
    auto push = [&](IMat m, unsigned len, std::vector<int> w) -> int {
        auto it = g.index_.find(m);
        if (it != g.index_.end()) return -1;
        int id = static_cast<int>(g.mats_.size());
        g.index_.emplace(m, id);
        g.mats_.push_back(std::move(m));
        g.len_.push_back(len);
        g.word_.push_back(std::move(w));
        return id;
    };
    push(imat_identity(n), 0, {});
    std::deque<int> q = {0};
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        for (int s = 0; s < k; ++s) {
            IMat m = imat_mul(g.mats_[cur], gens[s]);
            std::vector<int> w = g.word_[cur];
            w.push_back(s);
            int id = push(std::move(m), g.len_[cur] + 1, std::move(w));
            if (id >= 0) {
                if (g.mats_.size() > 100000)
                    throw std::runtime_error("finite Weyl group enumeration exceeded cap");
                q.push_back(id);
            }
        }
    }
    const std::size_t N = g.mats_.size();
    g.gen_ids_.resize(k);
    for (int s = 0; s < k; ++s) g.gen_ids_[s] = g.index_.at(gens[s]);
    g.table_.assign(N, std::vector<int>(N, -1));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            g.table_[a][b] = g.index_.at(imat_mul(g.mats_[a], g.mats_[b]));
    g.inv_.assign(N, -1);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            if (g.table_[a][b] == 0) { g.inv_[a] = static_cast<int>(b); break; }

    // positive root/coroot pairs: closure of the simple pairs
    std::vector<std::pair<IVec, IVec>> all;
    std::deque<std::pair<IVec, IVec>> qq;
    for (int i = 0; i < k; ++i) {
        all.emplace_back(d.simple_roots[i], d.simple_coroots[i]);
        qq.push_back(all.back());
    }
    auto have = [&](const std::pair<IVec, IVec>& p) {
        return std::find(all.begin(), all.end(), p) != all.end();
    };
    while (!qq.empty()) {
        auto [r, cr] = qq.front();
        qq.pop_front();
        for (int i = 0; i < k; ++i) {
            IVec nr = r, ncr = cr;
            long c1 = dot(r, d.simple_coroots[i]);
            long c2 = dot(d.simple_roots[i], cr);
            for (int t = 0; t < n; ++t) {
                nr[t] -= c1 * d.simple_roots[i][t];
                ncr[t] -= c2 * d.simple_coroots[i][t];
            }
            auto p = std::make_pair(nr, ncr);
            if (!have(p)) {
                all.push_back(p);
                qq.push_back(p);
            }
        }
    }
    // positivity: the first nonzero coefficient of the expansion in simple
    // roots decides the sign; expansions by exact elimination
    {
        auto expand = [&](const IVec& r) -> std::vector<Rat> {
            std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(k + 1, Rat(0)));
            for (int row = 0; row < n; ++row) {
                for (int col = 0; col < k; ++col) aug[row][col] = Rat(d.simple_roots[col][row]);
                aug[row][k] = Rat(r[row]);
            }
            int rrow = 0;
            std::vector<int> pivot_col;
            for (int col = 0; col < k && rrow < n; ++col) {
                int p = -1;
                for (int i = rrow; i < n; ++i)
                    if (aug[i][col] != 0) { p = i; break; }
                if (p < 0) continue;
                std::swap(aug[p], aug[rrow]);
                Rat pv = aug[rrow][col];
                for (int j = 0; j <= k; ++j) aug[rrow][j] /= pv;
                for (int i = 0; i < n; ++i) {
                    if (i == rrow || aug[i][col] == 0) continue;
                    Rat f = aug[i][col];
                    for (int j = 0; j <= k; ++j) aug[i][j] -= f * aug[rrow][j];
                }
                pivot_col.push_back(col);
                ++rrow;
            }
            std::vector<Rat> c(k, Rat(0));
            for (std::size_t i = 0; i < pivot_col.size(); ++i) c[pivot_col[i]] = aug[i][k];
            return c;
        };
        for (auto& p : all) {
            std::vector<Rat> c = expand(p.first);
            bool pos = false;
            for (const Rat& x : c) {
                if (x > 0) { pos = true; break; }
                if (x < 0) { pos = false; break; }
            }
            if (pos) g.pos_pairs_.push_back(p);
        }
        std::sort(g.pos_pairs_.begin(), g.pos_pairs_.end());
        for (auto& p : g.pos_pairs_) g.pos_roots_sorted_.push_back(p.first);
        std::sort(g.pos_roots_sorted_.begin(), g.pos_roots_sorted_.end());
    }
    return g;
}

std::vector<Rat> WeylGroup::apply(int a, const std::vector<Rat>& v) const {
    const IMat& m = mats_[a];
    std::vector<Rat> r(v.size(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0) r[i] += Rat(m[i][j]) * v[j];
    return r;
}

int WeylGroup::element_of_matrix(const IMat& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

bool WeylGroup::is_positive_root(const IVec& r) const {
    return std::binary_search(pos_roots_sorted_.begin(), pos_roots_sorted_.end(), r);
}

// ---------------------------------------------------------------------------
// AffineWeyl

AffineWeyl::AffineWeyl(RootDatum d) : d_(std::move(d)), w0_(WeylGroup::build(d_)) {
    build_kottwitz();
    build_stilde();
    build_omega();
    // parameter classes of S~: odd-order bonds plus Omega-orbits
    const int m = num_simple();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (stilde_cm_.m[i][j] != 0 && stilde_cm_.m[i][j] % 2 == 1) parent[find(i)] = find(j);
    for (const auto& act : omega_action_)
        for (int i = 0; i < m; ++i) parent[find(i)] = find(act[i]);
    std::vector<int> label(m, -1);
    stilde_class_.resize(m);
    int next = 0;
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (label[r] < 0) label[r] = next++;
        stilde_class_[i] = label[r];
    }
    n_param_classes_ = next;
}

AffineElement AffineWeyl::mult(const AffineElement& a, const AffineElement& b) const {
    IVec lam = a.lambda;
    IVec moved = w0_.apply(a.u, b.lambda);
    for (int i = 0; i < d_.xrank; ++i) lam[i] += moved[i];
    return {std::move(lam), w0_.mult(a.u, b.u)};
}

AffineElement AffineWeyl::inverse(const AffineElement& a) const {
    int ui = w0_.inverse(a.u);
    IVec lam = w0_.apply(ui, a.lambda);
    for (long& x : lam) x = -x;
    return {std::move(lam), ui};
}

AffineElement AffineWeyl::conj(const AffineElement& g, const AffineElement& x) const {
    return mult(mult(g, x), inverse(g));
}

AffineElement AffineWeyl::power(const AffineElement& a, long n) const {
    AffineElement r = identity();
    for (long i = 0; i < n; ++i) r = mult(r, a);
    return r;
}

long AffineWeyl::length(const AffineElement& x) const {
    long len = 0;
    const int ui = w0_.inverse(x.u);
    for (const auto& [alpha, coalpha] : w0_.positive_pairs()) {
        long pairing = dot(x.lambda, coalpha);
        IVec back = w0_.apply(ui, alpha);
        if (w0_.is_positive_root(back))
            len += std::abs(pairing);
        else
            len += std::abs(pairing - 1);
    }
    return len;
}

void AffineWeyl::build_stilde() {
    const int k = d_.ssrank();
    // irreducible components via pairing connectivity
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::deque<int> q = {i};
        comp[i] = ncomp;
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (int b = 0; b < k; ++b)
                if (comp[b] < 0 && dot(d_.simple_roots[a], d_.simple_coroots[b]) != 0) {
                    comp[b] = ncomp;
                    q.push_back(b);
                }
        }
        ++ncomp;
    }
    if (k == 0) throw std::domain_error("degenerate root datum: no roots");

    const int n = d_.xrank;
    auto coexpand = [&](const IVec& cr) -> std::vector<Rat> {
        std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(k + 1, Rat(0)));
        for (int row = 0; row < n; ++row) {
            for (int col = 0; col < k; ++col) aug[row][col] = Rat(d_.simple_coroots[col][row]);
            aug[row][k] = Rat(cr[row]);
        }
        int rrow = 0;
        std::vector<int> pivots;
        for (int col = 0; col < k && rrow < n; ++col) {
            int p = -1;
            for (int i = rrow; i < n; ++i)
                if (aug[i][col] != 0) { p = i; break; }
            if (p < 0) continue;
            std::swap(aug[p], aug[rrow]);
            Rat pv = aug[rrow][col];
            for (int j = 0; j <= k; ++j) aug[rrow][j] /= pv;
            for (int i = 0; i < n; ++i) {
                if (i == rrow || aug[i][col] == 0) continue;
                Rat f = aug[i][col];
                for (int j = 0; j <= k; ++j) aug[i][j] -= f * aug[rrow][j];
            }
            pivots.push_back(col);
            ++rrow;
        }
        std::vector<Rat> c(k, Rat(0));
        for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = aug[i][k];
        return c;
    };

    // one affine reflection per component: s_0 = t^{theta^vee} s_theta with
    // theta the highest root of the dual-side (character) system
    std::vector<AffineElement> affines;
    for (int c = 0; c < ncomp; ++c) {
        std::optional<std::pair<IVec, IVec>> best;
        Rat best_h(-1);
        for (const auto& pr : w0_.positive_pairs()) {
            std::vector<Rat> e = coexpand(pr.second);
            bool incomp = true;
            Rat h(0);
            for (int i = 0; i < k; ++i) {
                if (e[i] != 0 && comp[i] != c) { incomp = false; break; }
                h += e[i];
            }
            if (!incomp) continue;
            if (h > best_h) {
                best_h = h;
                best = pr;
            }
        }
        if (!best) throw std::logic_error("component without a highest root");
        IMat m = imat_identity(n);
        for (int r = 0; r < n; ++r)
            for (int cc = 0; cc < n; ++cc) m[r][cc] -= best->first[r] * best->second[cc];
        int srefl = w0_.element_of_matrix(m);
        if (srefl < 0) throw std::logic_error("highest-root reflection not in W0");
        affines.push_back({best->first, srefl});
    }
    for (auto& a : affines) stilde_.push_back(a);
    for (int i = 0; i < k; ++i) stilde_.push_back(finite(w0_.gen(i)));

    for (const auto& s : stilde_)
        if (length(s) != 1) throw std::logic_error("simple reflection with length != 1");

    const int m = num_simple();
    std::vector<std::vector<int>> rows(m, std::vector<int>(m, 2));
    for (int i = 0; i < m; ++i) rows[i][i] = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            AffineElement p = mult(stilde_[i], stilde_[j]);
            AffineElement acc = p;
            int order = 1;
            while (!(acc == identity()) && order <= 8) {
                acc = mult(acc, p);
                ++order;
            }
            rows[i][j] = rows[j][i] = (order > 8 ? 0 : order);
        }
    stilde_cm_ = CoxeterMatrix::from_rows(rows);
}

void AffineWeyl::build_kottwitz() {
    const int n = d_.xrank, k = d_.ssrank();
    std::vector<std::vector<Int>> B(n, std::vector<Int>(k, 0));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) B[i][j] = d_.simple_roots[j][i];
    kottwitz_snf_ = smith_normal_form(B);
}

std::vector<Int> AffineWeyl::kottwitz(const AffineElement& x) const {
    const int n = d_.xrank, k = d_.ssrank();
    std::vector<Int> y(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += kottwitz_snf_.U[i][j] * Int(x.lambda[j]);
    for (int i = 0; i < n; ++i) {
        if (i < k && kottwitz_snf_.diag[i] != 0) {
            Int d = kottwitz_snf_.diag[i];
            y[i] %= d;
            if (y[i] < 0) y[i] += d;
        }
    }
    return y;
}

namespace {

// solve <lambda, coroot rows> = t over Q: returns {} if inconsistent, else
// {particular, kernel basis vectors...}
std::vector<std::vector<Rat>> solve_pairings(const RootDatum& d, const std::vector<long>& t) {
    const int n = d.xrank, k = d.ssrank();
    std::vector<std::vector<Rat>> aug(k, std::vector<Rat>(n + 1, Rat(0)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rat(d.simple_coroots[i][j]);
        aug[i][n] = Rat(t[i]);
    }
    int rrow = 0;
    std::vector<int> pivots;
    for (int col = 0; col < n && rrow < k; ++col) {
        int p = -1;
        for (int i = rrow; i < k; ++i)
            if (aug[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(aug[p], aug[rrow]);
        Rat pv = aug[rrow][col];
        for (int j = 0; j <= n; ++j) aug[rrow][j] /= pv;
        for (int i = 0; i < k; ++i) {
            if (i == rrow || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (int j = 0; j <= n; ++j) aug[i][j] -= f * aug[rrow][j];
        }
        pivots.push_back(col);
        ++rrow;
    }
    for (int i = rrow; i < k; ++i)
        if (aug[i][n] != 0) return {};
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<Rat> part(n, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) part[pivots[i]] = aug[i][n];
    std::vector<std::vector<Rat>> out = {part};
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> kv(n, Rat(0));
        kv[c] = Rat(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) kv[pivots[i]] = -aug[i][c];
        out.push_back(std::move(kv));
    }
    return out;
}

}  // namespace

void AffineWeyl::build_omega() {
    const int n = d_.xrank, k = d_.ssrank();
    omega_finite_ = d_.semisimple();

    std::set<AffineElement> found;
    const long shift_cap = 2;
    for (std::size_t u = 0; u < w0_.size(); ++u) {
        std::vector<long> t(k, 0);
        int ui = w0_.inverse(static_cast<int>(u));
        for (int i = 0; i < k; ++i) {
            IVec back = w0_.apply(ui, d_.simple_roots[i]);
            t[i] = w0_.is_positive_root(back) ? 0 : 1;
        }
        auto sols = solve_pairings(d_, t);
        if (sols.empty()) continue;
        const auto& part = sols[0];
        const int nker = static_cast<int>(sols.size()) - 1;
        std::vector<long> idx(nker, -shift_cap);
        while (true) {
            std::vector<Rat> lam(part);
            for (int j = 0; j < nker; ++j)
                for (int c = 0; c < n; ++c) lam[c] += Rat(idx[j]) * sols[j + 1][c];
            bool integral = true;
            IVec lz(n, 0);
            for (int c = 0; c < n; ++c) {
                Rat v = lam[c];
                v.canonicalize();
                if (v.get_den() != 1) { integral = false; break; }
                lz[c] = static_cast<long>(v.get_num().get_si());
            }
            if (integral) {
                AffineElement cand{lz, static_cast<int>(u)};
                if (length(cand) == 0) found.insert(cand);
            }
            int pos = nker - 1;
            while (pos >= 0 && idx[pos] == shift_cap) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < nker; ++j) idx[j] = -shift_cap;
        }
    }
    omega_.assign(found.begin(), found.end());

    if (omega_finite_) {
        Int expected(1);
        for (const Int& dd : kottwitz_snf_.diag)
            if (dd != 0) expected *= dd;
        if (Int(static_cast<long>(omega_.size())) != expected)
            throw std::logic_error("Omega size does not match X/ZR torsion");
        omega_action_.clear();
        for (const auto& w : omega_) {
            std::vector<int> act(num_simple(), -1);
            for (int i = 0; i < num_simple(); ++i) {
                AffineElement c = conj(w, stilde_[i]);
                for (int j = 0; j < num_simple(); ++j)
                    if (c == stilde_[j]) { act[i] = j; break; }
                if (act[i] < 0) throw std::logic_error("Omega does not permute S~");
            }
            omega_action_.push_back(std::move(act));
        }
    }
}

int AffineWeyl::omega_index(const AffineElement& w) const {
    std::vector<Int> kw = kottwitz(w);
    for (std::size_t i = 0; i < omega_.size(); ++i)
        if (kottwitz(omega_[i]) == kw) return static_cast<int>(i);
    return -1;
}

std::vector<Rat> AffineWeyl::newton_point(const AffineElement& x) const {
    const long m = static_cast<long>(w0_.size());
    AffineElement p = power(x, m);
    if (p.u != 0) throw std::logic_error("x^|W0| must be a translation");
    std::vector<Rat> nu(d_.xrank);
    for (int i = 0; i < d_.xrank; ++i) {
        nu[i] = Rat(p.lambda[i], m);
        nu[i].canonicalize();
    }
    return nu;
}

bool AffineWeyl::is_dominant(const std::vector<Rat>& v) const {
    for (const IVec& cr : d_.simple_coroots)
        if (dotq(v, cr) < 0) return false;
    return true;
}

std::vector<Rat> AffineWeyl::make_dominant(std::vector<Rat> v) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < d_.ssrank(); ++i) {
            Rat p = dotq(v, d_.simple_coroots[i]);
            if (p < 0) {
                for (int c = 0; c < d_.xrank; ++c) v[c] -= p * Rat(d_.simple_roots[i][c]);
                changed = true;
            }
        }
    }
    return v;
}

std::vector<Rat> AffineWeyl::dominant_newton(const AffineElement& x) const {
    return make_dominant(newton_point(x));
}

std::pair<std::vector<Int>, std::vector<Rat>> AffineWeyl::invariant_f(const AffineElement& x) const {
    return {kottwitz(x), dominant_newton(x)};
}

std::pair<std::vector<int>, int> AffineWeyl::word_and_omega(const AffineElement& x) const {
    int oi = -1;
    AffineElement wa = x;
    if (omega_finite_) {
        oi = omega_index(x);
        if (oi < 0) throw std::logic_error("no Omega representative for Kottwitz class");
        wa = mult(x, inverse(omega_[oi]));
    } else {
        std::vector<Int> kx = kottwitz(x);
        for (const Int& v : kx)
            if (v != 0) throw std::domain_error("word_and_omega: element outside W_a (infinite Omega)");
    }
    std::vector<int> word;
    long len = length(wa);
    while (len > 0) {
        bool stepped = false;
        for (int i = 0; i < num_simple(); ++i) {
            AffineElement y = mult(stilde_[i], wa);
            long ly = length(y);
            if (ly < len) {
                word.push_back(i);
                wa = y;
                len = ly;
                stepped = true;
                break;
            }
        }
        if (!stepped) throw std::logic_error("no descent found");
    }
    if (!(wa == identity())) throw std::logic_error("word extraction did not reach identity");
    return {word, oi};
}

AffineElement AffineWeyl::from_word(const std::vector<int>& w) const {
    AffineElement x = identity();
    for (int i : w) {
        if (i < 0 || i >= num_simple()) throw std::domain_error("bad simple reflection index");
        x = mult(x, stilde_[i]);
    }
    return x;
}

std::vector<AffineElement> AffineWeyl::ball(long L) const {
    if (!omega_finite_)
        throw std::domain_error("ball: infinite Omega, restrict to Kottwitz classes");
    return ball(L, {});
}

std::vector<AffineElement> AffineWeyl::ball(long L, const std::vector<std::vector<Int>>& cosets) const {
    const int n = d_.xrank, k = d_.ssrank();
    std::vector<AffineElement> out;
    std::vector<long> p(k, -(L + 1));
    const long central_cap = L + 2;

    auto coset_ok = [&](const AffineElement& x) {
        if (cosets.empty()) return true;
        std::vector<Int> kx = kottwitz(x);
        return std::find(cosets.begin(), cosets.end(), kx) != cosets.end();
    };

    while (true) {
        auto sols = solve_pairings(d_, p);
        if (!sols.empty()) {
            const auto& part = sols[0];
            const int nker = static_cast<int>(sols.size()) - 1;
            if (!omega_finite_ && cosets.empty() && nker > 0)
                throw std::domain_error("ball: infinite Omega, restrict to Kottwitz classes");
            std::vector<long> idx(nker, -central_cap);
            while (true) {
                std::vector<Rat> lam(part);
                for (int j = 0; j < nker; ++j)
                    for (int c = 0; c < n; ++c) lam[c] += Rat(idx[j]) * sols[j + 1][c];
                bool integral = true;
                IVec lz(n, 0);
                for (int c = 0; c < n; ++c) {
                    Rat v = lam[c];
                    v.canonicalize();
                    if (v.get_den() != 1) { integral = false; break; }
                    lz[c] = static_cast<long>(v.get_num().get_si());
                }
                if (integral) {
                    for (std::size_t u = 0; u < w0_.size(); ++u) {
                        AffineElement cand{lz, static_cast<int>(u)};
                        if (length(cand) <= L && coset_ok(cand)) out.push_back(cand);
                    }
                }
                int pos = nker - 1;
                while (pos >= 0 && idx[pos] == central_cap) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int j = pos + 1; j < nker; ++j) idx[j] = -central_cap;
            }
        }
        int pos = k - 1;
        while (pos >= 0 && p[pos] == L + 1) --pos;
        if (pos < 0) break;
        ++p[pos];
        for (int j = pos + 1; j < k; ++j) p[j] = -(L + 1);
    }
    std::sort(out.begin(), out.end(), [&](const AffineElement& a, const AffineElement& b) {
        long la = length(a), lb = length(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AffineWeyl::Parahoric AffineWeyl::parahoric(const std::vector<int>& J, std::size_t cap) const {
    Parahoric p;
    p.J = J;
    std::sort(p.J.begin(), p.J.end());
    p.cm = stilde_cm_.restrict(p.J);
    for (int i = 0; i < p.cm.rank; ++i)
        for (int j = i + 1; j < p.cm.rank; ++j)
            if (p.cm.m[i][j] == 0) { p.finite = false; return p; }
    std::set<AffineElement> seen;
    std::deque<AffineElement> q;
    seen.insert(identity());
    q.push_back(identity());
    while (!q.empty()) {
        AffineElement x = q.front();
        q.pop_front();
        for (int j : p.J) {
            AffineElement y = mult(x, stilde_[j]);
            if (seen.insert(y).second) {
                if (seen.size() > cap) { p.finite = false; return p; }
                q.push_back(y);
            }
        }
    }
    p.finite = true;
    p.elements.assign(seen.begin(), seen.end());
    return p;
}

bool AffineWeyl::parahoric_finite(const std::vector<int>& J) const {
    return parahoric(J, 20000).finite;
}

std::vector<int> AffineWeyl::omega_stabilizer(const std::vector<int>& J) const {
    if (!omega_finite_) throw std::domain_error("omega_stabilizer: Omega is infinite");
    std::vector<int> out;
    std::set<int> js(J.begin(), J.end());
    for (std::size_t i = 0; i < omega_.size(); ++i) {
        std::set<int> img;
        for (int j : J) img.insert(omega_action_[i][j]);
        if (img == js) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> AffineWeyl::maximal_sharp_subsets() const {
    if (!omega_finite_) throw std::domain_error("maximal_sharp_subsets: Omega is infinite");
    const int m = num_simple();
    std::vector<std::vector<int>> finite_J;
    std::vector<unsigned> finite_mask;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) J.push_back(i);
        if (parahoric_finite(J)) {
            finite_J.push_back(J);
            finite_mask.push_back(mask);
        }
    }
    std::vector<std::set<int>> stabs;
    for (const auto& J : finite_J) {
        std::vector<int> s = omega_stabilizer(J);
        stabs.emplace_back(s.begin(), s.end());
    }

    std::vector<std::vector<int>> maximal;
    for (std::size_t a = 0; a < finite_J.size(); ++a) {
        bool is_max = true;
        for (std::size_t b = 0; b < finite_J.size() && is_max; ++b) {
            if (a == b) continue;
            if ((finite_mask[a] & finite_mask[b]) == finite_mask[a] && finite_mask[a] != finite_mask[b] &&
                std::includes(stabs[b].begin(), stabs[b].end(), stabs[a].begin(), stabs[a].end()))
                is_max = false;
        }
        if (is_max) maximal.push_back(finite_J[a]);
    }

    // group by the Omega diagram action, with transitive closure
    std::vector<int> grp(maximal.size(), -1);
    int ng = 0;
    for (std::size_t a = 0; a < maximal.size(); ++a) {
        if (grp[a] >= 0) continue;
        grp[a] = ng;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t b = 0; b < maximal.size(); ++b) {
                if (grp[b] != ng) continue;
                for (const auto& act : omega_action_) {
                    std::set<int> img;
                    for (int j : maximal[b]) img.insert(act[j]);
                    for (std::size_t c = 0; c < maximal.size(); ++c) {
                        if (grp[c] >= 0) continue;
                        std::set<int> jc(maximal[c].begin(), maximal[c].end());
                        if (img == jc) {
                            grp[c] = ng;
                            changed = true;
                        }
                    }
                }
            }
        }
        ++ng;
    }
    std::vector<std::vector<std::vector<int>>> groups(ng);
    for (std::size_t a = 0; a < maximal.size(); ++a) groups[grp[a]].push_back(maximal[a]);
    return groups;
}

std::string AffineWeyl::elem_str(const AffineElement& x) const {
    std::ostringstream os;
    os << "t[";
    for (int i = 0; i < d_.xrank; ++i) {
        if (i) os << ",";
        os << x.lambda[i];
    }
    os << "]";
    for (int s : w0_.word(x.u)) os << "*s" << (s + 1);
    return os.str();
}

}  // namespace cocenter
