#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "homlie/errors.hpp"
#include "homlie/scalar.hpp"

namespace homlie {

template <ExactField K>
using Vec = std::vector<K>;

// Dense exact matrix.  Zero row/column counts are legal everywhere; quotient
// and tensor constructions routinely produce empty spaces.
template <ExactField K>
class Matrix {
public:
    using Desc = typename K::Desc;

    Matrix() : rows_(0), cols_(0), desc_{} {}
    Matrix(std::size_t rows, std::size_t cols, Desc desc)
        : rows_(rows), cols_(cols), desc_(desc), data_(rows * cols, K::zero(desc)) {}

    static Matrix identity(std::size_t n, Desc desc) {
        Matrix m(n, n, desc);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K::one(desc);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols, Desc desc) {
        Matrix m(rows.size(), cols, desc);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw ShapeError("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_cols(const std::vector<Vec<K>>& cols, std::size_t rows, Desc desc) {
        Matrix m(rows, cols.size(), desc);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw ShapeError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Desc desc() const { return desc_; }

    K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<K> row(std::size_t i) const {
        Vec<K> r;
        r.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
        return r;
    }
    Vec<K> col(std::size_t j) const {
        Vec<K> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }
    void set_row(std::size_t i, const Vec<K>& v) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }
    void set_col(std::size_t j, const Vec<K>& v) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, desc_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        check_desc(o.desc_);
        if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_, desc_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }
    Matrix scaled(const K& c) const {
        Matrix r = *this;
        for (auto& x : r.data_) x *= c;
        return r;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
        Vec<K> r(rows_, K::zero(desc_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && desc_ == o.desc_ && data_ == o.data_;
    }

    // stacks rows of `o` below this matrix
    Matrix vstack(const Matrix& o) const {
        if (cols_ != o.cols_) throw ShapeError("vstack column mismatch");
        check_desc(o.desc_);
        Matrix r(rows_ + o.rows_, cols_, desc_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    Matrix hstack(const Matrix& o) const {
        if (rows_ != o.rows_) throw ShapeError("hstack row mismatch");
        check_desc(o.desc_);
        Matrix r(rows_, cols_ + o.cols_, desc_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += at(i, j).str();
            }
        }
        return s + "]";
    }

private:
    void check_desc(Desc o) const {
        if (!(desc_ == o)) throw FieldMismatch("matrices over different fields");
    }
    void check_same_shape(const Matrix& o) const {
        check_desc(o.desc_);
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    Desc desc_;
    std::vector<K> data_;
};

// small vector helpers

template <ExactField K>
Vec<K> vec_zero(std::size_t n, typename K::Desc desc) {
    return Vec<K>(n, K::zero(desc));
}

template <ExactField K>
Vec<K> vec_unit(std::size_t n, std::size_t i, typename K::Desc desc) {
    Vec<K> v(n, K::zero(desc));
    v[i] = K::one(desc);
    return v;
}

template <ExactField K>
bool vec_is_zero(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <ExactField K>
Vec<K>& vec_add_scaled(Vec<K>& a, const K& c, const Vec<K>& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    if (c.is_zero()) return a;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}

template <ExactField K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    Vec<K> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

template <ExactField K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    Vec<K> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

template <ExactField K>
Vec<K> vec_neg(const Vec<K>& a) {
    Vec<K> r = a;
    for (auto& x : r) x = -x;
    return r;
}

template <ExactField K>
Vec<K> vec_scale(const K& c, const Vec<K>& a) {
    Vec<K> r = a;
    for (auto& x : r) x *= c;
    return r;
}

template <ExactField K>
std::string vec_str(const Vec<K>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace homlie
