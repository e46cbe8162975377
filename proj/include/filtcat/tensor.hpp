#pragma once

#include <map>
#include <utility>
#include <vector>

#include "filtcat/filtered.hpp"
#include "filtcat/functor.hpp"
#include "filtcat/rees.hpp"

namespace filtcat {

// Day-convolution style tensor product over the additive index monoid:
// (M1 (x) M2)(l) = colim over {(i, j) : i + j <= l} of M1(i) (x) M2(j).
// The node set uses plain integer addition, so it is a triangle inside the
// window and is not directed once both coordinates can move; every value is
// computed by the general coequalizer presentation, never by evaluation at
// a maximal node.
struct TensorStructure {
    FctPtr m1, m2;
    FctPtr obj;
    // All (i, j) with i + j <= bound, in lexicographic order. Level l uses
    // the prefix-filtered sublist {(i, j) : i + j <= l} in the same order.
    std::vector<std::pair<size_t, size_t>> universe;
    std::vector<ColimitCone> cones;  // per level, legs in local node order

    size_t local_index(size_t level, size_t u) const;
    const RatMatrix& leg(size_t level, size_t u) const;
};

TensorStructure tensor_fct(const IndexMonoid& mon, const FctPtr& m1, const FctPtr& m2);

// Induced morphism on tensors; ts, td must be the tensor structures of the
// sources resp. targets of f1, f2. Well-definedness on the colimit
// presentations is asserted.
FctMor tensor_fct_mor(const TensorStructure& ts, const TensorStructure& td, const FctMor& f1,
                      const FctMor& f2);

// Tensor product in the filtered category: kappa of the plain tensor.
struct TensorFiltData {
    TensorStructure plain;
    KappaData kap;
    FctPtr obj;
};

TensorFiltData tensor_filt(const IndexMonoid& mon, const FctPtr& m1, const FctPtr& m2);

// The canonical morphism kappa(M1 (x) M2) -> kappa(M1) (x)_F kappa(M2),
// built from the units of kappa and certified to be an isomorphism.
// It genuinely fails to be one when the inputs keep growing up to the
// window boundary (the finite window truncates the colimit on the left
// side only), hence the certification; callers feed stabilized inputs.
struct KappaTensorWitness {
    KappaData k_tensor;   // kappa(M1 (x) M2)
    TensorFiltData filt;  // kappa(M1) (x)_F kappa(M2)
    FctMor comparison;    // the isomorphism between them
};

KappaTensorWitness kappa_tensor_compat(const IndexMonoid& mon, const FctPtr& m1,
                                       const FctPtr& m2);

// Triple colimit over {(i, j, k) : i + j + k <= l} together with the two
// canonical comparisons from the iterated tensors. Both are isomorphisms
// (colimits commute with colimits and with (x) over a field), which is the
// associativity of the tensor structure in checkable form.
struct AssocWitness {
    FctPtr triple;
    FctMor from_left;   // ((m1 x m2) x m3)(l) -> triple(l)
    FctMor from_right;  // (m1 x (m2 x m3))(l) -> triple(l)
};

AssocWitness tensor_assoc(const IndexMonoid& mon, const FctPtr& m1, const FctPtr& m2,
                          const FctPtr& m3);

// Ring object for the tensor structure: multiplication matrices
// A(a) (x) A(b) -> A(add(a, b)) stored for every window pair, saturating
// addition included. Tensor coordinates are always left-factor major.
struct LambdaRing {
    IndexMonoid mon;
    FctPtr carrier;
    std::map<std::pair<size_t, size_t>, RatMatrix> mult;
    bool has_unit = false;
    RatMatrix unit;  // dim A(0) x 1

    const RatMatrix& mult_at(size_t a, size_t b) const;
};

struct LambdaModule {
    FctPtr carrier;
    std::map<std::pair<size_t, size_t>, RatMatrix> action;  // A(a) (x) M(b) -> M(add(a, b))

    const RatMatrix& action_at(size_t a, size_t b) const;
};

// Exhaustive axiom checks; throw AxiomFailure with a witnessing tuple.
// Functoriality squares run over all comparable index pairs in each
// argument, associativity over every window triple (clamped sums included),
// unit laws when the ring has a unit.
void validate_ring(const LambdaRing& a);
void validate_module(const LambdaRing& a, const LambdaModule& m);

// A-linearity of f between module carriers; throws NotLinear with the
// witnessing index pair.
void check_linear(const LambdaRing& a, const LambdaModule& ms, const LambdaModule& md,
                  const FctMor& f);
bool is_linear(const LambdaRing& a, const LambdaModule& ms, const LambdaModule& md,
               const FctMor& f);

// The unit ring: constant Q with the canonical multiplication. Filtered,
// and a two-sided tensor unit up to canonical isomorphism.
LambdaRing unit_object(const IndexMonoid& mon);

struct ModuleSub {
    LambdaModule mod;
    FctMor incl;
};
struct ModuleQuot {
    LambdaModule mod;
    FctMor proj;
    std::vector<RatMatrix> sections;
};

// Kernel and cokernel of an A-linear morphism, with the action induced on
// the underlying pointwise kernel/cokernel and re-validated.
ModuleSub module_kernel(const LambdaRing& a, const LambdaModule& ms, const LambdaModule& md,
                        const FctMor& f);
ModuleQuot module_cokernel(const LambdaRing& a, const LambdaModule& ms, const LambdaModule& md,
                           const FctMor& f);

// A-module structure on Rees(M) for a filtered ring A. The action splits
// ring elements into their canonical filtration degrees (the complement of
// each transition image) and sends the degree-d component of a acting on
// the summand labeled mu into the summand labeled add(d, mu). This is
// functorial in both indices and makes epsilon A-linear for every valid
// module; the module axioms additionally need the ring's degree splitting
// to be multiplicative, which is re-validated and rejected otherwise.
struct ReesModuleData {
    ReesStructure r;
    LambdaModule mod;
};

ReesModuleData rees_module(const LambdaRing& a, const LambdaModule& m);

// kappa on carriers with the action pushed through the unit epimorphisms;
// the left adjoint to the forgetful inclusion of filtered modules.
struct KappaModuleData {
    KappaData k;
    LambdaModule mod;
};

KappaModuleData kappa_module(const LambdaRing& a, const LambdaModule& m);

// Basis of the space of A-linear natural transformations ms -> md:
// hom_space's naturality system extended by the linearity equations of
// every window pair.
std::vector<FctMor> hom_space_linear(const LambdaRing& a, const LambdaModule& ms,
                                     const LambdaModule& md);

}  // namespace filtcat
