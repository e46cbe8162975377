#pragma once

#include <map>
#include <memory>
#include <vector>

#include "filtcat/linalg.hpp"
#include "filtcat/poset.hpp"

namespace filtcat {

// Functor from a finite directed poset to finite dimensional Q-vector
// spaces: a dimension per element and a transition matrix per comparable
// pair, closed under composition. Immutable once built.
class FctObj {
public:
    PosetPtr poset;
    std::vector<size_t> dims;

    size_t dim(size_t i) const { return dims[i]; }
    size_t n() const { return poset->size(); }
    // Transition M(a) -> M(b) for a <= b.
    const RatMatrix& map(size_t a, size_t b) const;
    size_t total_dim() const;

    static FctObj zero(PosetPtr p);
    static FctObj constant(PosetPtr p, size_t d);

    // maps must cover at least the covering pairs; remaining composites are
    // derived along cover chains. Functor laws are verified unless deferred.
    static FctObj make(PosetPtr p, std::vector<size_t> dims,
                       const std::map<std::pair<size_t, size_t>, RatMatrix>& maps,
                       bool validate = true);

    // Identity transitions and all composition triangles; throws FunctorLaw.
    void validate() const;

    bool operator==(const FctObj& o) const;

private:
    FctObj() = default;
    std::vector<RatMatrix> maps_;  // dense n*n, comparable pairs filled
};

using FctPtr = std::shared_ptr<const FctObj>;

// Natural transformation between functors on the same poset.
struct FctMor {
    FctPtr src, dst;
    std::vector<RatMatrix> comp;  // per element, dims_dst x dims_src

    const RatMatrix& at(size_t i) const { return comp[i]; }
    bool is_zero() const;
    bool is_iso() const;  // every component square and invertible
    // Naturality squares on covering pairs (composites follow); throws
    // NotNatural with the offending pair.
    void validate() const;
};

FctMor identity_mor(const FctPtr& m);
FctMor zero_mor(const FctPtr& src, const FctPtr& dst);
FctMor compose(const FctMor& g, const FctMor& f);  // g after f
FctMor mor_sub(const FctMor& a, const FctMor& b);
bool mor_equal(const FctMor& a, const FctMor& b);

// Colimit presented as the cokernel of the cover-relation map
// (+)_{a covered by b} M(a) -> (+)_c M(c), x |-> sigma_b(M(a<=b)x) - sigma_a(x).
// legs[i] = projection restricted to the i-th block; for directed posets the
// canonical comparison with evaluation at top() is checked to be invertible.
struct ColimitCone {
    size_t dim = 0;
    RatMatrix projection;  // dim x total
    RatMatrix section;     // total x dim, projection * section = id
    std::vector<RatMatrix> legs;
    std::vector<size_t> offsets;
};

ColimitCone colimit(const FctObj& m);

// Shared engine: colimit of an arbitrary finite diagram given by node
// dimensions and edges (from, to, matrix). Relations are generated per edge,
// so passing a generating set of edges (covers) is enough.
struct DiagramEdge {
    size_t from, to;
    RatMatrix map;
};
ColimitCone diagram_colimit(const std::vector<size_t>& node_dims,
                            const std::vector<DiagramEdge>& edges);

// Map induced on colimits by a pointwise morphism; verified well defined.
RatMatrix colimit_map(const FctMor& f, const ColimitCone& src_cone, const ColimitCone& dst_cone);

struct SubObject {
    FctPtr obj;
    FctMor incl;
};
struct QuotObject {
    FctPtr obj;
    FctMor proj;
    std::vector<RatMatrix> sections;  // pointwise right inverses of proj
};
struct ImageData {
    FctPtr obj;
    FctMor incl;  // into the codomain
    FctMor epi;   // from the domain
};
struct CoimageData {
    FctPtr obj;
    FctMor proj;  // from the domain
    FctMor mono;  // into the codomain, mono . proj = f
};

// Subfunctor spanned pointwise by the given independent columns inside m;
// transition maps are factored through the inclusions.
SubObject sub_functor(const FctPtr& m, const std::vector<RatMatrix>& basis);
// Quotient of m by the pointwise presentation data (projections+sections);
// transitions are descended through the sections and verified.
QuotObject quotient_functor(const FctPtr& m, const std::vector<CokernelData>& data);

SubObject fct_kernel(const FctMor& f);
QuotObject fct_cokernel(const FctMor& f);
ImageData fct_image(const FctMor& f);
CoimageData fct_coimage(const FctMor& f);

struct BiproductData {
    FctPtr obj;
    FctMor inj1, inj2, proj1, proj2;
};
BiproductData direct_sum(const FctPtr& a, const FctPtr& b);

// Basis of the space of natural transformations m -> n, solved from the
// naturality system over covering pairs; all_pairs switches to the brute
// force system over every comparable pair (used as a cross check).
std::vector<FctMor> hom_space(const FctPtr& m, const FctPtr& n, bool all_pairs = false);

// Linear combination sum_i coeffs[i] * basis[i].
FctMor mor_combination(const std::vector<FctMor>& basis, const std::vector<Rat>& coeffs,
                       const FctPtr& src, const FctPtr& dst);

// Lifts f through a pointwise injective morphism: unique g with incl . g = f.
FctMor factor_through_sub(const FctMor& f, const FctMor& incl);
// Descends f through a quotient: unique g with g . proj = f (verified).
FctMor descend_through_quotient(const FctMor& f, const QuotObject& q);

}  // namespace filtcat
