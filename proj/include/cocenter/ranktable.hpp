#ifndef COCENTER_RANKTABLE_HPP
#define COCENTER_RANKTABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cocenter/affine.hpp"
#include "cocenter/repmod.hpp"

namespace cocenter {

struct SummandReport {
    std::vector<int> J;      // subset of S~ (representative of its ~ class)
    int orbit_size = 1;      // size of the ~ class
    int omega_order = 1;     // |Omega_J|
    int rank = 0;
};

struct CellReport {
    std::string field_label;
    std::string q_label;
    std::vector<SummandReport> summands;
    int total = 0;
};

struct RankTable {
    std::string datum_name;
    unsigned phi_n = 0;
    unsigned long p0 = 0;
    // rows: Phi_n(q) != 0 / Phi_n(q) == 0; columns: char 0 / char p0
    CellReport cell[2][2];
};

// the cyclotomic index the table rows vary (from the datum's torsion)
unsigned default_phi_index(const RootDatum& d);
// the positive-characteristic column: largest prime of the connection index,
// falling back to the largest prime dividing |W0|
unsigned long default_char_prime(const AffineWeyl& w);

// the summand algebra W_J^sharp at parameter q over q.field()
ParaAlg summand_algebra(const AffineWeyl& w, const std::vector<int>& J, const FieldElem& q);

RankTable rank_table(const AffineWeyl& w, unsigned phi_n, unsigned long p0, std::uint64_t seed);

}  // namespace cocenter

#endif
