#include "filtcat/matrix.hpp"

#include <sstream>

#include "filtcat/error.hpp"

namespace filtcat {

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(std::initializer_list<std::initializer_list<long>> rows) {
    size_t nr = rows.size();
    size_t nc = nr == 0 ? 0 : rows.begin()->size();
    RatMatrix m(nr, nc);
    size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw ShapeMismatch("ragged initializer");
        size_t c = 0;
        for (long v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& q : data_)
        if (q != 0) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_)
        throw ShapeMismatch("mul " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    RatMatrix m(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(r, k);
            if (a == 0) continue;
            for (size_t c = 0; c < o.cols_; ++c) {
                const Rat& b = o.at(k, c);
                if (b != 0) m.at(r, c) += a * b;
            }
        }
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("add");
    RatMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("sub");
    RatMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
    RatMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * c;
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

RatMatrix RatMatrix::columns(const std::vector<size_t>& idx) const {
    RatMatrix m(rows_, idx.size());
    for (size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw ShapeMismatch("column index out of range");
        for (size_t r = 0; r < rows_; ++r) m.at(r, j) = at(r, idx[j]);
    }
    return m;
}

std::vector<Rat> RatMatrix::column(size_t c) const {
    std::vector<Rat> v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

RatMatrix RatMatrix::hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_) throw ShapeMismatch("hstack");
    RatMatrix m(a.rows_, a.cols_ + b.cols_);
    m.paste(a, 0, 0);
    m.paste(b, 0, a.cols_);
    return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.cols_) throw ShapeMismatch("vstack");
    RatMatrix m(a.rows_ + b.rows_, a.cols_);
    m.paste(a, 0, 0);
    m.paste(b, a.rows_, 0);
    return m;
}

void RatMatrix::paste(const RatMatrix& b, size_t r0, size_t c0) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("paste");
    for (size_t r = 0; r < b.rows_; ++r)
        for (size_t c = 0; c < b.cols_; ++c) at(r0 + r, c0 + c) = b.at(r, c);
}

RatMatrix RatMatrix::kronecker(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (size_t ar = 0; ar < a.rows_; ++ar)
        for (size_t ac = 0; ac < a.cols_; ++ac) {
            const Rat& v = a.at(ar, ac);
            if (v == 0) continue;
            for (size_t br = 0; br < b.rows_; ++br)
                for (size_t bc = 0; bc < b.cols_; ++bc)
                    m.at(ar * b.rows_ + br, ac * b.cols_ + bc) = v * b.at(br, bc);
        }
    return m;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << rat_str(at(r, c));
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

RatMatrix block_diag(const std::vector<RatMatrix>& blocks) {
    size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    RatMatrix m(rows, cols);
    size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        m.paste(b, r0, c0);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

}  // namespace filtcat
