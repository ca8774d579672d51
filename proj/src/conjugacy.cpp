#include "cocenter/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cocenter {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<AffineConjClass> classes_in_ball(const AffineWeyl& w, long L) {
    std::vector<AffineElement> elems = w.ball(L + 2);
    std::map<AffineElement, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

    Dsu dsu(static_cast<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (int s = 0; s < w.num_simple(); ++s) {
            AffineElement y = w.conj(w.simple(s), elems[i]);
            auto it = index.find(y);
            if (it != index.end()) dsu.join(static_cast<int>(i), it->second);
        }
        for (const auto& om : w.omega()) {
            AffineElement y = w.conj(om, elems[i]);
            auto it = index.find(y);
            if (it != index.end()) dsu.join(static_cast<int>(i), it->second);
        }
    }

    std::map<int, std::vector<int>> comps;
    for (std::size_t i = 0; i < elems.size(); ++i) comps[dsu.find(static_cast<int>(i))].push_back(static_cast<int>(i));

    std::vector<AffineConjClass> out;
    for (auto& [root, idxs] : comps) {
        AffineConjClass c;
        long minlen = -1;
        for (int i : idxs) {
            long l = w.length(elems[i]);
            if (minlen < 0 || l < minlen) minlen = l;
            if (l <= L)
                c.members.push_back(elems[i]);
            else
                c.slack_members.push_back(elems[i]);
        }
        if (c.members.empty()) continue;  // lives entirely in the slack shell
        c.min_length = minlen;
        for (int i : idxs)
            if (w.length(elems[i]) == minlen) c.min_elements.push_back(elems[i]);
        std::sort(c.members.begin(), c.members.end());
        std::sort(c.min_elements.begin(), c.min_elements.end());
        auto inv = w.invariant_f(c.members.front());
        c.kappa = inv.first;
        c.newton_dom = inv.second;
        // the invariant must be constant across the component
        for (const auto& m : c.members) {
            auto i2 = w.invariant_f(m);
            if (i2.first != c.kappa || i2.second != c.newton_dom)
                throw std::logic_error("conjugation merged elements with distinct invariants");
        }
        c.closed = (c.min_length <= L - 2);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const AffineConjClass& a, const AffineConjClass& b) {
        if (a.min_length != b.min_length) return a.min_length < b.min_length;
        return a.min_elements.front() < b.min_elements.front();
    });
    return out;
}

int class_index_of(const std::vector<AffineConjClass>& cls, const AffineElement& x) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (std::binary_search(cls[i].members.begin(), cls[i].members.end(), x))
            return static_cast<int>(i);
        if (std::find(cls[i].slack_members.begin(), cls[i].slack_members.end(), x) !=
            cls[i].slack_members.end())
            return static_cast<int>(i);
    }
    return -1;
}

AffineGPResult gp_path_affine(const AffineWeyl& w, const AffineElement& x, long class_min) {
    AffineGPResult res;
    // FIFO BFS over non-increasing conjugation steps, generators tried in
    // ascending index order: deterministic, and the first step prefers the
    // smallest admissible simple reflection
    std::map<AffineElement, std::pair<AffineElement, int>> parent;  // child -> (parent, s)
    std::deque<AffineElement> frontier = {x};
    std::set<AffineElement> visited = {x};
    AffineElement goal;
    bool found = false;
    while (!frontier.empty()) {
        AffineElement cur = frontier.front();
        frontier.pop_front();
        long len = w.length(cur);
        if (len == class_min) {
            goal = cur;
            found = true;
            break;
        }
        for (int s = 0; s < w.num_simple(); ++s) {
            AffineElement y = w.conj(w.simple(s), cur);
            long ly = w.length(y);
            if (ly > len) continue;  // only non-increasing steps
            if (visited.insert(y).second) {
                parent[y] = {cur, s};
                frontier.push_back(y);
            }
        }
    }
    if (!found) {
        res.ok = false;
        res.reachable.assign(visited.begin(), visited.end());
        return res;
    }
    // backtrack
    std::vector<AffineConjStep> rev;
    AffineElement cur = goal;
    while (!(cur == x)) {
        auto [par, s] = parent.at(cur);
        int delta = static_cast<int>(w.length(cur) - w.length(par));
        rev.push_back({s, cur, delta});
        cur = par;
    }
    std::reverse(rev.begin(), rev.end());
    res.ok = true;
    res.steps = std::move(rev);
    res.endpoint = goal;
    return res;
}

FiniteGPResult gp_path_finite(const CoxGroup& g, int x) {
    FiniteGPResult res;
    const long class_min = g.conjugacy_classes()[g.class_of(x)].min_length;
    std::map<int, std::pair<int, int>> parent;
    std::deque<int> frontier = {x};
    std::set<int> visited = {x};
    int goal = -1;
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop_front();
        long len = g.length(cur);
        if (len == class_min) {
            goal = cur;
            break;
        }
        for (int s = 0; s < g.rank(); ++s) {
            int y = g.conj(g.gen(s), cur);
            long ly = g.length(y);
            if (ly > len) continue;
            if (visited.insert(y).second) {
                parent[y] = {cur, s};
                frontier.push_back(y);
            }
        }
    }
    if (goal < 0) {
        res.ok = false;
        res.reachable.assign(visited.begin(), visited.end());
        return res;
    }
    std::vector<FiniteConjStep> rev;
    int cur = goal;
    while (cur != x) {
        auto [par, s] = parent.at(cur);
        rev.push_back({s, cur, static_cast<int>(g.length(cur)) - static_cast<int>(g.length(par))});
        cur = par;
    }
    std::reverse(rev.begin(), rev.end());
    res.ok = true;
    res.steps = std::move(rev);
    res.endpoint = goal;
    return res;
}

WitnessResult strong_conjugacy_witness(const CoxGroup& g, int w1, int w2, unsigned bound) {
    WitnessResult res;
    if (w1 == w2) {
        res.found = true;
        return res;
    }
    // BFS over minimal elements, edges are length-additive conjugations
    const unsigned lw = g.length(w1);
    std::map<int, std::pair<int, int>> parent;  // node -> (prev node, conjugator)
    std::deque<int> q = {w1};
    std::set<int> seen = {w1};
    bool found = false;
    while (!q.empty() && !found) {
        int cur = q.front();
        q.pop_front();
        for (std::size_t xi = 0; xi < g.size(); ++xi) {
            int x = static_cast<int>(xi);
            if (g.length(x) > bound) continue;
            int y = g.conj(x, cur);
            if (g.length(y) != lw) continue;
            // length-additive condition l(x cur) = l(x) + l(cur)
            if (g.length(g.mult(x, cur)) != g.length(x) + lw) continue;
            if (seen.insert(y).second) {
                parent[y] = {cur, x};
                if (y == w2) { found = true; break; }
                q.push_back(y);
            }
        }
    }
    if (!found) return res;
    std::vector<WitnessStep> rev;
    int cur = w2;
    while (cur != w1) {
        auto [prev, x] = parent.at(cur);
        rev.push_back({x, cur});
        cur = prev;
    }
    std::reverse(rev.begin(), rev.end());
    res.found = true;
    res.chain = std::move(rev);
    return res;
}

namespace {

bool newton_zero(const AffineConjClass& c) {
    for (const Rat& r : c.newton_dom)
        if (r != 0) return false;
    return true;
}

std::size_t count_newton_zero(const std::vector<AffineConjClass>& cls) {
    std::size_t n = 0;
    for (const auto& c : cls)
        if (c.closed && newton_zero(c)) ++n;
    return n;
}

}  // namespace

std::vector<AffineConjClass> newton_zero_classes(const AffineWeyl& w, long L) {
    auto cls = classes_in_ball(w, L);
    auto cls2 = classes_in_ball(w, L + 2);
    if (count_newton_zero(cls) != count_newton_zero(cls2))
        throw UnstableBallError("newton-zero class count not stabilized; enlarge the ball");
    std::vector<AffineConjClass> out;
    for (auto& c : cls)
        if (c.closed && newton_zero(c)) out.push_back(std::move(c));
    return out;
}

// ---------------------------------------------------------------------------
// Prop 5.3 parametrization

namespace {

// elements of W_J as a subgroup of W0 (element ids), J a subset of Pi
std::vector<int> wj_subgroup(const WeylGroup& w0, const std::vector<int>& J) {
    std::set<int> seen = {0};
    std::deque<int> q = {0};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int j : J) {
            int y = w0.mult(x, w0.gen(j));
            if (seen.insert(y).second) q.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

// union of W_J-conjugates of all proper standard parabolics W_K, K strictly
// inside J; finite parts landing here certify non-ellipticity inside W~_J
std::set<int> proper_parabolic_parts(const WeylGroup& w0, const std::vector<int>& J) {
    std::set<int> out;
    std::vector<int> WJ = wj_subgroup(w0, J);
    const std::size_t nj = J.size();
    for (unsigned mask = 0; mask + 1 < (1u << nj); ++mask) {
        std::vector<int> K;
        for (std::size_t t = 0; t < nj; ++t)
            if (mask & (1u << t)) K.push_back(J[t]);
        for (int x : wj_subgroup(w0, K))
            for (int v : WJ) out.insert(w0.mult(w0.mult(v, x), w0.inverse(v)));
    }
    return out;
}

// W~_J-conjugacy closure of x within the big-length ball L
std::vector<AffineElement> wj_class_in_ball(const AffineWeyl& w, const std::vector<int>& J,
                                            const AffineElement& x, long L) {
    std::set<AffineElement> seen = {x};
    std::deque<AffineElement> q = {x};
    const int n = w.datum().xrank;
    while (!q.empty()) {
        AffineElement cur = q.front();
        q.pop_front();
        std::vector<AffineElement> conjugators;
        for (int j : J) conjugators.push_back(w.finite(w.w0().gen(j)));
        for (int c = 0; c < n; ++c) {
            IVec e(n, 0);
            e[c] = 1;
            conjugators.push_back(w.translation(e));
            e[c] = -1;
            conjugators.push_back(w.translation(e));
        }
        for (const auto& g : conjugators) {
            AffineElement y = w.conj(g, cur);
            if (w.length(y) > L) continue;
            if (seen.insert(y).second) q.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

ClassParam parametrize_class(const AffineWeyl& w, const AffineConjClass& c, long L) {
    const int k = w.datum().ssrank();
    // subsets of Pi in (size, lex) order
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) J.push_back(i);
        subsets.push_back(J);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::vector<AffineElement> all_members(c.members);
    for (const auto& m : c.slack_members) all_members.push_back(m);
    std::sort(all_members.begin(), all_members.end());

    for (const auto& J : subsets) {
        std::vector<int> WJ = wj_subgroup(w.w0(), J);
        std::set<int> wjset(WJ.begin(), WJ.end());
        std::set<int> bad = proper_parabolic_parts(w.w0(), J);
        for (const auto& x : all_members) {
            if (!wjset.count(x.u)) continue;
            // candidate representative; explore its W~_J-class in the ball
            std::vector<AffineElement> C = wj_class_in_ball(w, J, x, L + 2);
            bool ok = true;
            for (const auto& y : C) {
                if (bad.count(y.u)) { ok = false; break; }           // not elliptic in W~_J
                if (!w.is_dominant(w.newton_point(y))) { ok = false; break; }
            }
            if (!ok) continue;
            ClassParam p;
            p.J = J;
            p.rep = x;
            p.C_members = std::move(C);
            std::sort(p.C_members.begin(), p.C_members.end());
            return p;
        }
    }
    throw std::logic_error("parametrize_class: no admissible (J, C) found (Prop 5.3 violation?)");
}

bool is_elliptic_affine(const AffineWeyl& w, const AffineConjClass& c, long L) {
    ClassParam p = parametrize_class(w, c, L);
    return static_cast<int>(p.J.size()) == w.datum().ssrank();
}

bool params_equivalent(const AffineWeyl& w, const ClassParam& a, const ClassParam& b, long L) {
    if (a.J.size() != b.J.size()) return false;
    // the W0-part must map the J-subsystem onto the J'-subsystem
    const auto& d = w.datum();
    auto subsystem = [&](const std::vector<int>& J) {
        std::set<IVec> roots;
        std::vector<int> WJ = wj_subgroup(w.w0(), J);
        for (int u : WJ)
            for (int j : J) {
                roots.insert(w.w0().apply(u, d.simple_roots[j]));
            }
        return roots;
    };
    std::set<IVec> ra = subsystem(a.J), rb = subsystem(b.J);
    for (std::size_t u = 0; u < w.w0().size(); ++u) {
        std::set<IVec> img;
        for (const IVec& r : ra) img.insert(w.w0().apply(static_cast<int>(u), r));
        if (img != rb) continue;
        // search a translation part: conj by t^mu u must carry rep(a) into C(b)
        const int n = d.xrank;
        const long box = 2;
        std::vector<long> mu(n, -box);
        while (true) {
            IVec m(mu.begin(), mu.end());
            AffineElement g = w.mult(w.translation(m), w.finite(static_cast<int>(u)));
            AffineElement y = w.conj(g, a.rep);
            if (std::binary_search(b.C_members.begin(), b.C_members.end(), y)) return true;
            int pos = n - 1;
            while (pos >= 0 && mu[pos] == box) --pos;
            if (pos < 0) break;
            ++mu[pos];
            for (int j = pos + 1; j < n; ++j) mu[j] = -box;
        }
    }
    (void)L;
    return false;
}

std::vector<ClassParam> admissible_pairs(const AffineWeyl& w, long L) {
    const int k = w.datum().ssrank();
    std::vector<ClassParam> out;
    auto ball = w.ball(L);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) J.push_back(i);
        std::vector<int> WJ = wj_subgroup(w.w0(), J);
        std::set<int> wjset(WJ.begin(), WJ.end());
        std::set<int> bad = proper_parabolic_parts(w.w0(), J);
        std::set<AffineElement> used;
        for (const auto& x : ball) {
            if (!wjset.count(x.u)) continue;
            if (used.count(x)) continue;
            std::vector<AffineElement> C = wj_class_in_ball(w, J, x, L + 2);
            for (const auto& y : C) used.insert(y);
            bool ok = true;
            for (const auto& y : C) {
                if (bad.count(y.u)) { ok = false; break; }
                if (!w.is_dominant(w.newton_point(y))) { ok = false; break; }
            }
            if (!ok) continue;
            ClassParam p;
            p.J = J;
            p.rep = x;
            p.C_members = std::move(C);
            std::sort(p.C_members.begin(), p.C_members.end());
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace cocenter
