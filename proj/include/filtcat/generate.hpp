#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "filtcat/complex.hpp"
#include "filtcat/functor.hpp"
#include "filtcat/instance.hpp"
#include "filtcat/tensor.hpp"

namespace filtcat {

// Deterministic randomness: one fixed engine and modulo draws only, no
// distribution objects, so a seed pins the exact output on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    size_t below(size_t n);             // uniform-ish in [0, n); below(0) = 0
    long int_in(long lo, long hi);      // inclusive
    bool chance(size_t num, size_t den);
    Rat scalar();                       // small integer in [-2, 2]

private:
    std::mt19937_64 eng_;
};

// Random finite directed poset with <= max_elems elements: a chain, or a
// random DAG on index order with the last element forced on top.
PosetPtr gen_poset(Rng& rng, size_t max_elems);

// Direct sum of indicator summands on order-convex subsets, conjugated by
// random unimodular changes of basis at every element. Interval summands
// give arbitrary functors; up-set summands give filtered ones.
FctPtr gen_functor(Rng& rng, const PosetPtr& p, size_t max_dim);
FctPtr gen_filtered(Rng& rng, const PosetPtr& p, size_t max_dim);

// Chain functor whose transitions at or above stable_from are isomorphisms
// (summands either end below stable_from or run to the top from a start
// at most stable_from).
FctPtr gen_stable(Rng& rng, const PosetPtr& chain, size_t max_dim, size_t stable_from);

// Random element of the hom space, so naturality holds by construction.
FctMor gen_morphism(Rng& rng, const FctPtr& src, const FctPtr& dst);

// Bounded complex with <= max_terms terms. Each differential is sampled
// from the kernel of composition with its predecessor, so d o d = 0 holds
// exactly. With filtered set, every term passes is_filtered.
Complex gen_complex(Rng& rng, const PosetPtr& p, size_t max_dim, size_t max_terms, bool filtered);

// Commutative monomial algebra on the window: carrier at l spans the
// monomials of weighted degree <= l, products that overflow the window are
// zero. Filtered with a multiplicative degree splitting by construction.
LambdaRing monomial_ring(const IndexMonoid& mon, const std::vector<size_t>& gen_degrees);
LambdaRing truncated_polynomial_ring(const IndexMonoid& mon);
LambdaRing gen_ring(Rng& rng, const IndexMonoid& mon);

// Free module with v generators in filtration degree mu: the carrier is
// A(l - mu) (x) V below the top and A(bound) (x) V at the top, the action
// is multiplication followed by a carrier transition.
LambdaModule free_module(const LambdaRing& a, size_t mu, size_t v);

// Free modules and kernels/cokernels of random linear maps between them.
LambdaModule gen_module(Rng& rng, const LambdaRing& a, size_t max_dim);

// Random element of the linear hom space.
FctMor gen_linear_morphism(Rng& rng, const LambdaRing& a, const LambdaModule& ms,
                           const LambdaModule& md);

// The shipped worked example: on the chain 0 <= ... <= 4, M' is degree-<= n
// polynomials, M is degree-<= n+1 capped at the top, f the inclusion. f is
// mono and epi but not strict.
Instance coim_vs_im_instance();

}  // namespace filtcat
