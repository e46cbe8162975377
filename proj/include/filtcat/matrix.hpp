#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "filtcat/rat.hpp"

namespace filtcat {

// Dense exact-rational matrix. Zero-row and zero-column shapes are legal and
// show up constantly (kernels of injective maps, empty posets levels, ...).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(size_t n);
    static RatMatrix zero(size_t rows, size_t cols) { return RatMatrix(rows, cols); }
    // Convenience for tests: nested integer initializer, row major.
    static RatMatrix from_int(std::initializer_list<std::initializer_list<long>> rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator-() const;
    RatMatrix scaled(const Rat& c) const;
    RatMatrix transposed() const;

    // Column/row extraction and stacking.
    RatMatrix columns(const std::vector<size_t>& idx) const;
    std::vector<Rat> column(size_t c) const;
    static RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
    static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
    // Places b into this at (r0, c0); shapes must fit.
    void paste(const RatMatrix& b, size_t r0, size_t c0);

    // Kronecker product with lexicographic (left factor major) basis order:
    // basis vector (i, j) of V (x) W sits at index i * dim(W) + j.
    static RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<Rat> data_;
};

// Block diagonal of a list of matrices, in order.
RatMatrix block_diag(const std::vector<RatMatrix>& blocks);

}  // namespace filtcat
