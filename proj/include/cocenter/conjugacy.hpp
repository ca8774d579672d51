#ifndef COCENTER_CONJUGACY_HPP
#define COCENTER_CONJUGACY_HPP

#include <stdexcept>
#include <vector>

#include "cocenter/affine.hpp"
#include "cocenter/coxeter.hpp"

namespace cocenter {

struct UnstableBallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A W~-conjugacy class seen through a length ball.  Members are the elements
// of length <= L; the closure was explored with slack 2, which covers every
// elementary-conjugation neighbour of a ball element.
struct AffineConjClass {
    std::vector<Int> kappa;
    std::vector<Rat> newton_dom;
    std::vector<AffineElement> members;        // length <= L
    std::vector<AffineElement> slack_members;  // length in (L, L+2]
    long min_length = 0;
    std::vector<AffineElement> min_elements;
    bool closed = false;
};

std::vector<AffineConjClass> classes_in_ball(const AffineWeyl& w, long L);
// locate the class of x in a computed partition; -1 if absent
int class_index_of(const std::vector<AffineConjClass>& cls, const AffineElement& x);

// ---------------------------------------------------------------------------
// Geck-Pfeiffer descent paths (conjugation by simple reflections, length
// non-increasing at every step)

struct AffineConjStep {
    int s;  // S~ index
    AffineElement result;
    int delta;  // 0 or -2
};
struct AffineGPResult {
    bool ok = false;
    std::vector<AffineConjStep> steps;
    AffineElement endpoint;
    std::vector<AffineElement> reachable;  // counterexample certificate when !ok
};
AffineGPResult gp_path_affine(const AffineWeyl& w, const AffineElement& x, long class_min);

struct FiniteConjStep {
    int s;
    int result;
    int delta;
};
struct FiniteGPResult {
    bool ok = false;
    std::vector<FiniteConjStep> steps;
    int endpoint = -1;
    std::vector<int> reachable;
};
FiniteGPResult gp_path_finite(const CoxGroup& g, int x);

// ---------------------------------------------------------------------------
// strong conjugacy witnesses: chains of length-additive conjugations

struct WitnessStep {
    int conjugator;
    int result;
};
struct WitnessResult {
    bool found = false;
    std::vector<WitnessStep> chain;
};
WitnessResult strong_conjugacy_witness(const CoxGroup& g, int w1, int w2, unsigned bound);

// ---------------------------------------------------------------------------
// Newton-zero classes; throws UnstableBallError when the count at L and L+2
// disagree

std::vector<AffineConjClass> newton_zero_classes(const AffineWeyl& w, long L);

// ---------------------------------------------------------------------------
// parametrization by pairs (J, C), J subset of the finite simple roots,
// C an elliptic conjugacy class of W~_J = X x| W_J with dominant Newton points

struct ClassParam {
    std::vector<int> J;  // indices into the finite simple roots (Pi)
    AffineElement rep;
    std::vector<AffineElement> C_members;  // ball part of the W~_J-class of rep
};

ClassParam parametrize_class(const AffineWeyl& w, const AffineConjClass& c, long L);
bool is_elliptic_affine(const AffineWeyl& w, const AffineConjClass& c, long L);
// simultaneous-conjugacy equivalence of parameters
bool params_equivalent(const AffineWeyl& w, const ClassParam& a, const ClassParam& b, long L);

// all admissible pairs (J, C) discoverable in the ball, deduplicated up to ~
std::vector<ClassParam> admissible_pairs(const AffineWeyl& w, long L);

}  // namespace cocenter

#endif
