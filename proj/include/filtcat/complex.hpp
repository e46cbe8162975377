#pragma once

#include <vector>

#include "filtcat/filtered.hpp"
#include "filtcat/functor.hpp"
#include "filtcat/rees.hpp"

namespace filtcat {

// Bounded cochain complex of functors. Terms outside the stored range are
// the zero functor; term() and diff() hand those out on demand so degree
// arithmetic never needs bounds checks at call sites.
class Complex {
public:
    PosetPtr poset;
    long lo = 0;

    long hi() const { return lo + static_cast<long>(terms_.size()) - 1; }
    bool in_range(long n) const { return n >= lo && n <= hi(); }
    size_t length() const { return terms_.size(); }

    FctPtr term(long n) const;
    FctMor diff(long n) const;  // d^n : X^n -> X^{n+1}

    static Complex zero(PosetPtr p);
    static Complex single(const FctPtr& m, long deg);
    static Complex make(PosetPtr p, long lo, std::vector<FctPtr> terms,
                        std::vector<FctMor> diffs, bool validate = true);

    // d o d = 0 and shape/poset coherence; throws ComposeNonzero.
    void validate() const;

private:
    std::vector<FctPtr> terms_;
    std::vector<FctMor> diffs_;  // diffs_[i] : terms_[i] -> terms_[i+1]
};

// Chain map; components outside the stored range are zero.
struct ComplexMor {
    Complex src, dst;
    long clo = 0;
    std::vector<FctMor> comp_;

    FctMor comp(long n) const;
    static ComplexMor make(Complex src, Complex dst, long clo, std::vector<FctMor> comp,
                           bool validate = true);
    static ComplexMor zero(Complex src, Complex dst);
    // Commutation with the differentials on the whole support.
    void validate() const;
};

// X[k]: term n is X^{n+k}, differential scaled by (-1)^k.
Complex shift(const Complex& x, long k);

// H^n = ker d^n / im d^{n-1} in the functor category, kept with enough
// structure (cycle subobject, quotient presentation) to push morphisms
// through functorially.
struct CohomologyData {
    FctPtr obj;
    SubObject cycles;
    QuotObject quot;  // cycles.obj -> obj
};

CohomologyData cohomology(const Complex& x, long n);

// Induced map H^n(f); hx, hy must be cohomology(f.src, n), cohomology(f.dst, n).
FctMor cohomology_map(const ComplexMor& f, long n, const CohomologyData& hx,
                      const CohomologyData& hy);

// True when every induced cohomology map is an isomorphism.
bool qis_check(const ComplexMor& f);

// Strict exactness of X^{n-1} -> X^n -> X^{n+1} for complexes of filtered
// objects, via the filtered image against the pointwise kernel.
bool strictly_exact_in_degree(const Complex& x, long n);

enum class Cat { Fct, Filt };

// Left t-structure truncations. tau_le replaces X^n by ker d^n and drops
// higher degrees (the kernel is computed pointwise in both categories).
// tau_ge keeps degrees >= n and puts coim d^{n-1} in degree n-1; the
// coimage differs between the two categories, hence the flag.
Complex truncate_le(const Complex& x, long n);
Complex truncate_ge(const Complex& x, long n, Cat cat);

// Standard mapping cone: cone^n = X^{n+1} (+) Y^n with differential
// [[-d_X, 0], [f, d_Y]]. parts[i] holds the biproduct structure of the
// cone term at degree parts_lo + i.
struct ConeData {
    Complex cone;
    ComplexMor incl_dst;    // Y -> cone
    ComplexMor proj_shift;  // cone -> X[1]
    long parts_lo = 0;
    std::vector<BiproductData> parts;
};

ConeData mapping_cone(const ComplexMor& f);

// For q: Y -> Z with q o f = 0 termwise, the induced chain map cone -> Z.
ComplexMor cone_to_quotient(const ConeData& c, const ComplexMor& q);

// Termwise two-term Rees resolution assembled as the cone of the inclusion
// of kernels into Rees terms; the augmentation [0, epsilon]: total -> x is
// checked to be a quasi-isomorphism. Terms of total are filtered.
struct LkappaData {
    Complex total;
    ComplexMor augmentation;
};

LkappaData lkappa(const Complex& x);

// Degree (-1, 0) pair of filtered objects with injective e_incl; the
// cokernel correspondence below is inverse to the resolution construction.
struct HeartObj {
    FctMor e_incl;
};

HeartObj functor_to_heart(const FctPtr& m);
QuotObject heart_to_functor(const HeartObj& h);
// The canonical isomorphism heart_to_functor(functor_to_heart(m)) -> m.
FctMor heart_round_trip(const FctPtr& m);

}  // namespace filtcat
