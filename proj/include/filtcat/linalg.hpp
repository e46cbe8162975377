#pragma once

#include <vector>

#include "filtcat/matrix.hpp"

namespace filtcat {

// Reduced row echelon form data. Pivot choice is the leftmost nonzero column,
// rows swapped only to bring the first nonzero entry up, so the output is a
// deterministic function of the input.
struct RrefResult {
    RatMatrix rref;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

RrefResult rref(const RatMatrix& a);

// Kernel basis as matrix columns. Basis vectors are indexed by the free
// columns in ascending order, each with a 1 in its free coordinate.
RatMatrix kernel_basis(const RatMatrix& a);

// Basis of the column space: the pivot columns of a itself, in order.
RatMatrix image_basis(const RatMatrix& a);

size_t rank(const RatMatrix& a);
bool is_invertible(const RatMatrix& a);
RatMatrix inverse(const RatMatrix& a);

// Cokernel Q = target / im(a), presented by a projection matrix p with
// p * a = 0 and full row rank, plus a section s with p * s = id. The basis
// of Q corresponds to the non-pivot coordinates of the row space of a^T,
// and s is the coordinate inclusion of those coordinates, so descended maps
// built as g = q . f . s are deterministic.
struct CokernelData {
    size_t dim = 0;
    RatMatrix projection;  // dim x rows(target)
    RatMatrix section;     // rows(target) x dim
};

CokernelData cokernel_presentation(const RatMatrix& a);

// Unique g with i * g = f for injective i whose image contains im(f).
// Throws NotInjective / NotContained otherwise.
RatMatrix factor_through_mono(const RatMatrix& f, const RatMatrix& i);

// Deterministic right inverse of a surjective matrix (throws if not onto).
RatMatrix right_inverse(const RatMatrix& a);

// Solves a * x = b (all columns); throws NotContained if unsolvable.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

}  // namespace filtcat
