#ifndef COCENTER_AFFINE_HPP
#define COCENTER_AFFINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cocenter/coxeter.hpp"
#include "cocenter/numeric.hpp"

namespace cocenter {

// Based root datum in the translation-lattice convention: X is the lattice the
// group translates by, `simple_roots` lie in X and generate the W_a-translation
// sublattice, `simple_coroots` lie in the dual lattice; <alpha_i, alpha_i^vee> = 2.
// (For the Iwahori-Weyl group of G this means X = X_*(T) and `simple_roots` are
// the simple coroots of G.)
struct RootDatum {
    int xrank = 0;
    std::vector<IVec> simple_roots;    // in X
    std::vector<IVec> simple_coroots;  // in X^vee
    std::string name;

    static RootDatum preset(const std::string& name);  // SL2 PGL2 SL3 PGL3 GL2 GL3 Sp4
    static RootDatum from_matrices(int xrank, std::vector<IVec> roots, std::vector<IVec> coroots,
                                   std::string name = "custom");

    int ssrank() const { return static_cast<int>(simple_roots.size()); }
    bool semisimple() const { return ssrank() == xrank; }
};

long dot(const IVec& a, const IVec& b);
Rat dotq(const std::vector<Rat>& a, const IVec& b);

// t^lambda * u with u an element id of the finite Weyl group
struct AffineElement {
    IVec lambda;
    int u = 0;

    bool operator==(const AffineElement& o) const { return u == o.u && lambda == o.lambda; }
    bool operator<(const AffineElement& o) const {
        if (lambda != o.lambda) return lambda < o.lambda;
        return u < o.u;
    }
};

// The finite Weyl group of the datum acting on X by integer matrices.
class WeylGroup {
public:
    static WeylGroup build(const RootDatum& d);

    std::size_t size() const { return mats_.size(); }
    int identity() const { return 0; }
    int gen(int i) const { return gen_ids_[i]; }
    int mult(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    const IMat& matrix(int a) const { return mats_[a]; }
    IVec apply(int a, const IVec& v) const { return imat_apply(mats_[a], v); }
    std::vector<Rat> apply(int a, const std::vector<Rat>& v) const;
    unsigned length(int a) const { return len_[a]; }
    const std::vector<int>& word(int a) const { return word_[a]; }
    int element_of_matrix(const IMat& m) const;

    // positive root/coroot pairs of the datum
    const std::vector<std::pair<IVec, IVec>>& positive_pairs() const { return pos_pairs_; }
    bool is_positive_root(const IVec& r) const;

private:
    std::vector<IMat> mats_;
    std::vector<int> gen_ids_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<unsigned> len_;
    std::vector<std::vector<int>> word_;
    std::map<IMat, int> index_;
    std::vector<std::pair<IVec, IVec>> pos_pairs_;
    std::vector<IVec> pos_roots_sorted_;
};

// Extended affine Weyl group W~ = X x| W0 with its quasi-Coxeter structure.
class AffineWeyl {
public:
    explicit AffineWeyl(RootDatum d);

    const RootDatum& datum() const { return d_; }
    const WeylGroup& w0() const { return w0_; }

    AffineElement identity() const { return {IVec(d_.xrank, 0), 0}; }
    AffineElement translation(const IVec& lambda) const { return {lambda, 0}; }
    AffineElement finite(int u) const { return {IVec(d_.xrank, 0), u}; }
    AffineElement mult(const AffineElement& a, const AffineElement& b) const;
    AffineElement inverse(const AffineElement& a) const;
    AffineElement conj(const AffineElement& g, const AffineElement& x) const;
    AffineElement power(const AffineElement& a, long n) const;

    long length(const AffineElement& x) const;

    // simple reflections of W_a: affine ones (one per component) first, then finite
    int num_simple() const { return static_cast<int>(stilde_.size()); }
    const AffineElement& simple(int i) const { return stilde_[i]; }
    const CoxeterMatrix& stilde_matrix() const { return stilde_cm_; }
    // parameter classes of S~ under W~-conjugacy (odd chains + Omega orbits)
    const std::vector<int>& stilde_param_class() const { return stilde_class_; }
    int num_param_classes() const { return n_param_classes_; }

    // Omega: all length-zero elements when finite, else generators within a box
    const std::vector<AffineElement>& omega() const { return omega_; }
    bool omega_finite() const { return omega_finite_; }
    // permutation action of omega()[k] on S~ by conjugation (finite Omega only)
    const std::vector<std::vector<int>>& omega_action() const { return omega_action_; }
    int omega_index(const AffineElement& w) const;  // matching Kottwitz class, -1 if none

    // invariants
    std::vector<Int> kottwitz(const AffineElement& x) const;
    std::vector<Rat> newton_point(const AffineElement& x) const;
    std::vector<Rat> dominant_newton(const AffineElement& x) const;
    std::pair<std::vector<Int>, std::vector<Rat>> invariant_f(const AffineElement& x) const;
    bool is_dominant(const std::vector<Rat>& v) const;
    std::vector<Rat> make_dominant(std::vector<Rat> v) const;

    // factor x = w_a * omega and return a reduced S~-word for the W_a part
    std::pair<std::vector<int>, int> word_and_omega(const AffineElement& x) const;
    AffineElement from_word(const std::vector<int>& w) const;

    // all elements of length <= L (semisimple datum, or finite Omega);
    // for infinite Omega restrict to the given Kottwitz classes
    std::vector<AffineElement> ball(long L) const;
    std::vector<AffineElement> ball(long L, const std::vector<std::vector<Int>>& cosets) const;

    struct Parahoric {
        std::vector<int> J;
        bool finite = false;
        CoxeterMatrix cm;                     // restricted Coxeter matrix
        std::vector<AffineElement> elements;  // when finite
    };
    Parahoric parahoric(const std::vector<int>& J, std::size_t cap = 200000) const;
    bool parahoric_finite(const std::vector<int>& J) const;

    // Omega_J: indices of omega elements stabilizing J setwise
    std::vector<int> omega_stabilizer(const std::vector<int>& J) const;

    // the set I of J with W_J^sharp maximal, grouped by the equivalence ~
    // (diagram equivalence under Omega, cross-checked by conjugation search)
    std::vector<std::vector<std::vector<int>>> maximal_sharp_subsets() const;

    std::string elem_str(const AffineElement& x) const;

private:
    RootDatum d_;
    WeylGroup w0_;
    std::vector<AffineElement> stilde_;
    CoxeterMatrix stilde_cm_;
    std::vector<int> stilde_class_;
    int n_param_classes_ = 0;
    std::vector<AffineElement> omega_;
    bool omega_finite_ = true;
    std::vector<std::vector<int>> omega_action_;
    SmithResult kottwitz_snf_;

    void build_stilde();
    void build_omega();
    void build_kottwitz();
};

}  // namespace cocenter

#endif
