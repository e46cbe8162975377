#include "filtcat/linalg.hpp"

#include <algorithm>

#include "filtcat/error.hpp"

namespace filtcat {

RrefResult rref(const RatMatrix& a) {
    RrefResult res;
    res.rref = a;
    RatMatrix& m = res.rref;
    size_t pr = 0;  // next pivot row
    for (size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        size_t sel = pr;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pr, j));
        Rat inv = 1 / m.at(pr, c);
        for (size_t j = c; j < m.cols(); ++j) m.at(pr, j) *= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || m.at(r, c) == 0) continue;
            Rat f = m.at(r, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(pr, j);
        }
        res.pivot_cols.push_back(c);
        ++pr;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

RatMatrix kernel_basis(const RatMatrix& a) {
    RrefResult r = rref(a);
    std::vector<size_t> free_cols;
    {
        size_t p = 0;
        for (size_t c = 0; c < a.cols(); ++c) {
            if (p < r.pivot_cols.size() && r.pivot_cols[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    RatMatrix k(a.cols(), free_cols.size());
    for (size_t j = 0; j < free_cols.size(); ++j) {
        size_t fc = free_cols[j];
        k.at(fc, j) = 1;
        for (size_t i = 0; i < r.pivot_cols.size(); ++i)
            k.at(r.pivot_cols[i], j) = -r.rref.at(i, fc);
    }
    return k;
}

RatMatrix image_basis(const RatMatrix& a) {
    RrefResult r = rref(a);
    return a.columns(r.pivot_cols);
}

size_t rank(const RatMatrix& a) { return rref(a).rank; }

bool is_invertible(const RatMatrix& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

RatMatrix inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("inverse of non-square");
    RrefResult r = rref(RatMatrix::hstack(a, RatMatrix::identity(a.rows())));
    if (r.rank < a.rows() ||
        (a.rows() > 0 && r.pivot_cols.back() >= a.cols()))
        throw ComparisonNotIso("matrix not invertible: " + a.str());
    RatMatrix inv(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) inv.at(i, j) = r.rref.at(i, a.cols() + j);
    return inv;
}

CokernelData cokernel_presentation(const RatMatrix& a) {
    RrefResult rt = rref(a.transposed());
    const std::vector<size_t>& piv = rt.pivot_cols;  // coordinates of the target
    std::vector<size_t> rest;
    {
        size_t p = 0;
        for (size_t c = 0; c < a.rows(); ++c) {
            if (p < piv.size() && piv[p] == c)
                ++p;
            else
                rest.push_back(c);
        }
    }
    CokernelData out;
    out.dim = rest.size();
    out.projection = RatMatrix(rest.size(), a.rows());
    out.section = RatMatrix(a.rows(), rest.size());
    for (size_t j = 0; j < rest.size(); ++j) {
        out.projection.at(j, rest[j]) = 1;
        for (size_t i = 0; i < piv.size(); ++i)
            out.projection.at(j, piv[i]) = -rt.rref.at(i, rest[j]);
        out.section.at(rest[j], j) = 1;
    }
    return out;
}

RatMatrix factor_through_mono(const RatMatrix& f, const RatMatrix& i) {
    if (f.rows() != i.rows()) throw ShapeMismatch("factor_through_mono");
    RrefResult r = rref(RatMatrix::hstack(i, f));
    size_t pivots_in_i = 0;
    for (size_t p : r.pivot_cols)
        if (p < i.cols())
            ++pivots_in_i;
        else
            throw NotContained("image not contained in the monomorphism");
    if (pivots_in_i < i.cols()) throw NotInjective("factor target has a kernel");
    RatMatrix g(i.cols(), f.cols());
    for (size_t row = 0; row < i.cols(); ++row)
        for (size_t c = 0; c < f.cols(); ++c) g.at(row, c) = r.rref.at(row, i.cols() + c);
    return g;
}

RatMatrix right_inverse(const RatMatrix& a) {
    if (rank(a) != a.rows()) throw NotContained("right_inverse of non-surjective matrix");
    return solve(a, RatMatrix::identity(a.rows()));
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve");
    RrefResult r = rref(RatMatrix::hstack(a, b));
    for (size_t p : r.pivot_cols)
        if (p >= a.cols()) throw NotContained("inconsistent linear system");
    RatMatrix x(a.cols(), b.cols());
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
        for (size_t c = 0; c < b.cols(); ++c) x.at(r.pivot_cols[i], c) = r.rref.at(i, a.cols() + c);
    return x;
}

}  // namespace filtcat
