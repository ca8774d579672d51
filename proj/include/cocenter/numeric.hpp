#ifndef COCENTER_NUMERIC_HPP
#define COCENTER_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocenter {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("rat_pow: zero to negative power");
        b = 1 / b;
        e = -e;
    }
    Rat r(1);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bool is_prime_ul(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Deterministic 64-bit mixer, used for hashing canonical forms.
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    v *= 0x9e3779b97f4a7c15ULL;
    v ^= v >> 32;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

inline std::uint64_t hash_int(const Int& z) {
    std::uint64_t h = (mpz_sgn(z.get_mpz_t()) < 0) ? 0x5bull : 0x17ull;
    const std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
        h = hash_mix(h, static_cast<std::uint64_t>(mpz_getlimbn(z.get_mpz_t(), i)));
    return h;
}

// Seeded deterministic RNG (splitmix64); reproducibility across runs matters
// more than statistical quality here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
    std::uint64_t state_;
};

// Smith normal form of an integer matrix; returns diagonal entries d_1 | d_2 | ...
// U*A*V = D with U, V unimodular. U is returned when requested (row transform).
struct SmithResult {
    std::vector<Int> diag;                 // elementary divisors incl. zeros
    std::vector<std::vector<Int>> U;       // rows x rows, unimodular
};

inline SmithResult smith_normal_form(std::vector<std::vector<Int>> a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<std::vector<Int>> u(m, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t k = 0; k < n; ++k) a[dst][k] += c * a[src][k];
        for (std::size_t k = 0; k < m; ++k) u[dst][k] += c * u[src][k];
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t r = 0; r < m; ++r) a[r][dst] += c * a[r][src];
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // find pivot: nonzero entry of least absolute value in the submatrix
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (!found || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    pi = i; pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i)
            if (a[i][t] != 0) {
                Int q = a[i][t] / a[t][t];
                add_row(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
        for (std::size_t j = t + 1; j < n; ++j)
            if (a[t][j] != 0) {
                Int q = a[t][j] / a[t][t];
                add_col(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
        if (!clean) continue;  // re-pick a smaller pivot
        // divisibility fixup so d_t | d_{t+1}
        bool redo = false;
        for (std::size_t i = t + 1; i < m && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    add_row(t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        if (a[t][t] < 0) {
            for (std::size_t k = 0; k < n; ++k) a[t][k] = -a[t][k];
            for (std::size_t k = 0; k < m; ++k) u[t][k] = -u[t][k];
        }
        ++t;
    }
    SmithResult res;
    res.diag.resize(std::min(m, n), 0);
    for (std::size_t i = 0; i < res.diag.size(); ++i) res.diag[i] = a[i][i];
    res.U = std::move(u);
    return res;
}

}  // namespace cocenter

#endif
