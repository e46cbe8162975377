#pragma once

#include <vector>

#include "filtcat/filtered.hpp"
#include "filtcat/functor.hpp"

namespace filtcat {

// Rees(M)(l) = direct sum of M(mu) over mu <= l, summands ordered by element
// index. Transitions send each summand identically to the same-label summand,
// so they are split injections and Rees(M) is always filtered.
struct ReesStructure {
    FctPtr base;  // the M it was built from
    FctPtr rees;
    // summand_index[l] lists the mu <= l in index order; summand_offset[l]
    // gives each summand's starting coordinate inside Rees(M)(l).
    std::vector<std::vector<size_t>> summand_index;
    std::vector<std::vector<size_t>> summand_offset;
    // epsilon(l) restricted to summand mu is M(mu <= l); a natural split epi.
    FctMor epsilon;

    // Summand injection M(mu) -> Rees(M)(l) for mu <= l.
    RatMatrix sigma(size_t mu, size_t l) const;
    // Splitting Rees(M)(b) -> Rees(M)(a) of the transition for a <= b:
    // identity on summands with label <= a, zero on the others.
    RatMatrix rho(size_t a, size_t b) const;
};

ReesStructure rees(const FctPtr& m);

// Rees is functorial: blockwise f(mu) on each summand.
FctMor rees_mor(const ReesStructure& rs, const ReesStructure& rd, const FctMor& f);

// The two-term resolution 0 -> K -> Rees(M) -> M -> 0, pointwise exact with
// K = kernel of epsilon. K is filtered since Rees(M) is.
struct ReesResolution {
    ReesStructure r;
    SubObject k;  // k.incl : K -> Rees(M)
};

ReesResolution rees_resolution(const FctPtr& m);

// Adjunction transposition Hom(M', iota M) = Hom(kappa M', M) for filtered M.
// k_src must be kappa_obj(f.src) (resp. of g's underlying source).
FctMor adjoint_transpose(const KappaData& k_src, const FctMor& f);
FctMor adjoint_transpose_inv(const KappaData& k_src, const FctMor& g);

}  // namespace filtcat
