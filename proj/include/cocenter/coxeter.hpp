#ifndef COCENTER_COXETER_HPP
#define COCENTER_COXETER_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cocenter/numeric.hpp"

namespace cocenter {

// Coxeter matrix; entry 0 encodes infinity.
struct CoxeterMatrix {
    int rank = 0;
    std::vector<std::vector<int>> m;

    static CoxeterMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static CoxeterMatrix preset(const std::string& name);
    // submatrix on a subset of generators
    CoxeterMatrix restrict(const std::vector<int>& subset) const;
    bool crystallographic() const;  // all off-diagonal entries in {2,3,4,6,0}
};

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;  // row-major, square

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_apply(const IMat& a, const IVec& v);
Int imat_det(const IMat& a);

// A finite Coxeter group, fully enumerated through the crystallographic
// reflection representation on the root lattice. Elements are dense ids;
// id 0 is the identity.
class CoxGroup {
public:
    struct ConjClass {
        std::vector<int> elements;      // sorted ids
        unsigned min_length = 0;
        std::vector<int> min_elements;  // sorted ids
        bool elliptic = false;
    };

    static CoxGroup build(const CoxeterMatrix& M, std::size_t element_cap = 1000000);

    const CoxeterMatrix& coxeter_matrix() const { return M_; }
    int rank() const { return M_.rank; }
    std::size_t size() const { return mats_.size(); }
    int identity() const { return 0; }
    int gen(int s) const { return gen_ids_[s]; }

    int mult(int a, int b) const;
    int inverse(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mult(mult(g, x), inverse(g)); }
    unsigned length(int a) const { return len_[a]; }
    const std::vector<int>& word(int a) const { return word_[a]; }
    int from_word(const std::vector<int>& w) const;
    const IMat& matrix(int a) const { return mats_[a]; }
    int element_of_matrix(const IMat& m) const;  // -1 if absent

    // det(1 - w) != 0 on the reflection representation
    bool elliptic_element(int a) const;

    const std::vector<ConjClass>& conjugacy_classes() const { return classes_; }
    int class_of(int a) const { return class_of_[a]; }

    // all elements of the standard parabolic subgroup W_K
    std::vector<int> parabolic_elements(const std::vector<int>& K) const;
    // union of all conjugates of all proper standard parabolics (as id set flags)
    std::vector<char> proper_parabolic_closure() const;

    // conjugacy classes of generators (odd-m chains); one Hecke parameter each
    const std::vector<int>& generator_param_class() const { return gen_class_; }
    int num_param_classes() const { return n_param_classes_; }

    // positive roots as lattice vectors in the simple-root basis
    const std::vector<IVec>& positive_roots() const { return pos_roots_; }
    // length via root counting, an independent oracle for tests
    unsigned length_by_roots(int a) const;

    // longest element (exists, finite group)
    int longest_element() const;

private:
    CoxeterMatrix M_;
    std::vector<IMat> gen_mats_;
    std::vector<int> gen_ids_;
    std::vector<IMat> mats_;
    std::vector<unsigned> len_;
    std::vector<std::vector<int>> word_;
    std::vector<int> inv_;
    std::unordered_map<std::uint64_t, std::vector<int>> index_;  // hash -> candidate ids
    std::vector<std::vector<int>> mult_table_;                   // filled when small
    std::vector<ConjClass> classes_;
    std::vector<int> class_of_;
    std::vector<int> gen_class_;
    int n_param_classes_ = 0;
    std::vector<IVec> pos_roots_;

    std::uint64_t mat_hash(const IMat& m) const;
    void compute_classes();
};

}  // namespace cocenter

#endif
