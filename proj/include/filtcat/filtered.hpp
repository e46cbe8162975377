#pragma once

#include <vector>

#include "filtcat/functor.hpp"

namespace filtcat {

// Filtered objects are the functors whose transition maps are all injective.
// They form a quasi-abelian (not abelian) full subcategory of the functor
// category; the operations here realize its kernels, cokernels, images and
// coimages, which differ from the pointwise ones for coker/im.

struct FilteredWitness {
    bool ok = true;
    size_t from = 0, to = 0;      // failing cover pair when !ok
    std::vector<Rat> kernel_vec;  // nonzero vector killed by that transition
};

FilteredWitness is_filtered_witness(const FctObj& m);
bool is_filtered(const FctObj& m);

// kappa(M)(lambda) = image of M(lambda) -> M(top), the universal filtered
// object under M. incl[lambda] is the chosen image basis inside M(top);
// at the top it is the identity. unit: M -> obj is the corestriction and is
// an isomorphism exactly when M is already filtered.
struct KappaData {
    FctPtr obj;
    FctMor unit;
    std::vector<RatMatrix> incl;
};

KappaData kappa_obj(const FctPtr& m);

// Functorial action: the filtered morphism induced between the kappa
// objects of f.src and f.dst (which must be ks.obj's and kd.obj's sources).
FctMor kappa_mor(const KappaData& ks, const KappaData& kd, const FctMor& f);

enum class FiltOpKind { Ker, Coker, Im, Coim };

// Kernel/cokernel/image/coimage of f computed in the filtered category:
//   ker  f (l) = ker f(l)                          structural: incl into src
//   coker f (l) = im [dst(l) -> coker f(top)]       structural: proj from dst
//   im   f (l) = ker [dst(l) -> coker f(top)]       structural: incl into dst
//   coim f (l) = im f(l), pointwise                 structural: proj from src
// companion carries the other leg when there is one: the epi src -> im for
// Im, the mono coim -> dst for Coim; empty (no components) otherwise.
struct FiltOpResult {
    FctPtr obj;
    FctMor structural;
    FctMor companion;
};

FiltOpResult filt_op(FiltOpKind kind, const FctMor& f);
FiltOpKind filt_op_kind(const std::string& name);

// f is strict when the canonical mono coim f -> im f is an isomorphism.
// Checked twice: componentwise invertibility of that morphism, and the
// independent Cartesian-square criterion dim(dst(l) x_{dst(top)} im f(top))
// = dim im f(l). The two verdicts must agree; disagreement throws.
struct StrictnessReport {
    bool is_strict = false;
    FctMor coim_to_im;
    std::vector<char> cartesian_ok;
};

StrictnessReport strictness(const FctMor& f);

// f' o f = 0 is strictly exact iff the canonical mono im f(l) -> ker f'(l)
// is an isomorphism at every element.  For filtered objects this pointwise
// condition already forces f to be strict, so it matches the definition
// (f strict and image = kernel as subobjects).
struct ExactnessReport {
    bool ok = false;
    std::vector<char> at;
};

ExactnessReport strictly_exact_pair(const FctMor& f, const FctMor& fp);

// Pullback of f and g with common codomain, computed pointwise (the
// filtered objects are stable under subobjects, so this stays filtered).
struct PullbackData {
    FctPtr obj;
    FctMor to_src_f;  // leg to f.src
    FctMor to_src_g;  // leg to g.src
};

PullbackData pullback(const FctMor& f, const FctMor& g);

// Pushout of f and u with common domain, computed as kappa applied to the
// pointwise functor-category pushout.
struct PushoutData {
    FctPtr obj;
    FctMor from_dst_f;  // leg from f.dst
    FctMor from_dst_u;  // leg from u.dst
};

PushoutData pushout_filt(const FctMor& f, const FctMor& u);

}  // namespace filtcat
