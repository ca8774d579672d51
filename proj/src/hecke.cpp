#include "cocenter/hecke.hpp"

namespace cocenter {

IVec dominant_regular_vector(const AffineWeyl& w) {
    const RootDatum& d = w.datum();
    const int n = d.xrank;
    for (long radius = 1; radius <= 6; ++radius) {
        // deterministic box sweep
        IVec v(n, -radius);
        while (true) {
            bool ok = true;
            for (const IVec& cr : d.simple_coroots)
                if (dot(v, cr) <= 0) { ok = false; break; }
            if (ok) return v;
            int pos = n - 1;
            while (pos >= 0 && v[pos] == radius) --pos;
            if (pos < 0) break;
            ++v[pos];
            for (int j = pos + 1; j < n; ++j) v[j] = -radius;
        }
    }
    throw std::logic_error("no dominant regular vector in the search box");
}

}  // namespace cocenter
