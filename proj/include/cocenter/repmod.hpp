#ifndef COCENTER_REPMOD_HPP
#define COCENTER_REPMOD_HPP

#include <optional>
#include <string>
#include <vector>

#include "cocenter/coxeter.hpp"
#include "cocenter/exactscalar.hpp"
#include "cocenter/upoly.hpp"

namespace cocenter {

// ---------------------------------------------------------------------------
// dense exact matrices

class FMat {
public:
    FMat() = default;
    FMat(Field k, int rows, int cols)
        : k_(std::move(k)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, k_.zero()) {}
    static FMat identity(const Field& k, int n);

    const Field& field() const { return k_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldElem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const FieldElem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    FMat operator*(const FMat& o) const;
    FMat operator+(const FMat& o) const;
    FMat operator-(const FMat& o) const;
    FMat scaled(const FieldElem& c) const;
    FMat transpose() const;
    bool operator==(const FMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    FieldElem trace() const;
    FieldElem det() const;

private:
    Field k_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

// reduced row echelon form in place; returns pivot columns
std::vector<int> fmat_rref(FMat& m);
int fmat_rank(FMat m);
// basis of the right kernel (column vectors returned as rows)
FMat fmat_kernel(const FMat& m);
// minimal polynomial of a square matrix
UPoly fmat_minpoly(const FMat& m);
// apply a polynomial to a matrix
FMat fmat_eval_poly(const UPoly& p, const FMat& m);

// row-space spin: smallest subspace containing `seed` rows and stable under
// right multiplication by every matrix in acts; returns an rref basis
FMat fmat_spin(const FMat& seed, const std::vector<FMat>& acts);

// ---------------------------------------------------------------------------
// finite (possibly Omega-extended) specialized Hecke algebras

struct OmegaGroup {
    // perms[o] is a permutation of the Coxeter generators; perms[0] = identity
    std::vector<std::vector<int>> perms;
    std::vector<std::vector<int>> table;  // composition indices
    std::vector<int> inv;

    static OmegaGroup trivial(int rank);
    // closure of the given nonidentity permutations
    static OmegaGroup generate(int rank, const std::vector<std::vector<int>>& gens);
    // abstract cyclic group of the given order whose generator acts by gen_perm
    // (the action may be unfaithful, e.g. on an empty generator set)
    static OmegaGroup cyclic(int rank, const std::vector<int>& gen_perm, int order);
    int size() const { return static_cast<int>(perms.size()); }
};

class ParaAlg {
public:
    // q values are eigenvalue square roots: the quadratic relation reads
    // (T_s + 1)(T_s - q(s)^2) = 0, with q constant on parameter classes
    ParaAlg(CoxeterMatrix cm, Field k, std::vector<FieldElem> q_per_class, OmegaGroup om);
    static ParaAlg equal_parameter(const CoxeterMatrix& cm, const Field& k, const FieldElem& q,
                                   OmegaGroup om);

    const CoxGroup& group() const { return g_; }
    const Field& field() const { return k_; }
    const OmegaGroup& omega() const { return om_; }
    int rank() const { return g_.rank(); }
    int dim() const { return static_cast<int>(g_.size()) * om_.size(); }
    const std::vector<FieldElem>& q_per_class() const { return qcls_; }
    FieldElem q2_of_gen(int s) const;

    // generators: T_s for s < rank, then nontrivial omega elements
    int ngens() const { return rank() + (om_.size() - 1); }
    bool gen_is_omega(int gi) const { return gi >= rank(); }
    int gen_omega_index(int gi) const { return gi - rank() + 1; }

    // basis index of T_w * omega_o
    int basis_index(int w, int o) const { return w * om_.size() + o; }
    std::pair<int, int> basis_pair(int b) const { return {b / om_.size(), b % om_.size()}; }

    // image of the group element w under the diagram automorphism o
    int apply_auto(int o, int w) const;

    struct CrossedClass {
        std::vector<std::pair<int, int>> elements;
        std::pair<int, int> min_rep;
        long min_length = 0;
    };
    std::vector<CrossedClass> crossed_classes() const;

    ParaAlg with_field(const Field& k2, const FieldElem& gen_image) const;

private:
    CoxGroup g_;
    Field k_;
    std::vector<FieldElem> qcls_;
    OmegaGroup om_;
};

struct FDModule {
    Field k;
    int dim = 0;
    std::vector<FMat> act;  // one matrix per algebra generator

    bool check_relations(const ParaAlg& alg) const;
};

FDModule regular_module(const ParaAlg& alg);

// embed an element of K into K2 given the image of K's generator
FieldElem embed_elem(const FieldElem& x, const Field& k2, const FieldElem& gen_image);
// find an embedding K -> K2 (root of K's modulus in K2)
std::optional<FieldElem> embedding_generator(const Field& k, const Field& k2, Rng& rng);
FDModule embed_module(const FDModule& m, const Field& k2, const FieldElem& gen_image);

// ---------------------------------------------------------------------------
// chop and simples

struct AlgebraModules {
    ParaAlg alg;           // over the (possibly extended) splitting field
    Field field;
    std::vector<FDModule> simples;          // pairwise non-isomorphic
    std::vector<int> regular_multiplicity;  // multiplicities in the regular module
};

// composition factors of m; deterministic for a fixed seed
std::vector<std::pair<FDModule, int>> chop(const ParaAlg& alg, const FDModule& m,
                                           std::uint64_t seed);

// all simple modules, computed over an automatically determined splitting
// field extension of alg.field()
AlgebraModules simples_split(const ParaAlg& alg, std::uint64_t seed);

bool modules_isomorphic(const ParaAlg& alg, const FDModule& a, const FDModule& b);
int hom_dim(const ParaAlg& alg, const FDModule& a, const FDModule& b);
int ext1_dim(const ParaAlg& alg, const FDModule& s, const FDModule& t);

// trace of T_w * omega_o on a module
FieldElem character(const ParaAlg& alg, const FDModule& m, int w, int o);

struct TracePairing {
    std::vector<std::pair<int, int>> row_reps;  // minimal (w, o) per crossed class
    std::vector<int> col_dims;
    FMat matrix;
    bool square = false;
    FieldElem determinant;  // valid when square
    bool invertible = false;
};
TracePairing trace_pairing_matrix(const ParaAlg& alg, std::uint64_t seed);

// induction from the subalgebra generated by a subset K of the Coxeter
// generators (no omega part in the subalgebra); sub must be the matching
// ParaAlg of the restricted Coxeter matrix
FDModule induce(const ParaAlg& big, const std::vector<int>& K, const ParaAlg& sub,
                const FDModule& v);

// ---------------------------------------------------------------------------
// elliptic rank and the rank table

// Euler-form elliptic rank over a splitting field: rank of the form
// beta(S,T) = dim Hom(S,T) - dim Ext^1(S,T) restricted to the orthogonal
// complement of all classes induced from proper subalgebras (proper subsets
// of the Coxeter generators; additionally the Omega-less subalgebra when the
// Omega part is nontrivial).  For semisimple algebras this equals the free
// rank of the cokernel of the induction matrix.
int elliptic_rank(const ParaAlg& alg, std::uint64_t seed);

bool is_semisimple_split(const ParaAlg& alg, std::uint64_t seed);

}  // namespace cocenter

#endif
