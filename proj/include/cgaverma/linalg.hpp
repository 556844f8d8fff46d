#pragma once

#include "cgaverma/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cga {

inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }
inline Scalar exact_divide(const Scalar& a, const Scalar& b) { return a / b; }
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) { return exact_quotient(a, b); }

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    // Appends the rows of other; column counts must match (or this must be empty).
    void append_rows(const Matrix& other) {
        if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
        if (other.cols_ != cols_) throw std::invalid_argument("append_rows: column mismatch");
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        rows_ += other.rows_;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
struct Echelon {
    Matrix<T> matrix;
    std::vector<std::size_t> pivot_columns;  // pivot of row i is pivot_columns[i]
    int sign = 1;                            // parity of row swaps
};

// Bareiss fraction-free row echelon form over an integral domain. Pivots are
// taken column by column, choosing the first usable row, so the result is a
// deterministic function of the input.
template <class T>
Echelon<T> fraction_free_echelon(Matrix<T> a) {
    Echelon<T> out;
    T previous(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row) {
            a.swap_rows(pivot, row);
            out.sign = -out.sign;
        }
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            for (std::size_t j = col + 1; j < a.cols(); ++j)
                a(i, j) = exact_divide(a(row, col) * a(i, j) - a(i, col) * a(row, j), previous);
            a(i, col) = T();
        }
        previous = a(row, col);
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.matrix = std::move(a);
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
    return fraction_free_echelon(a).pivot_columns.size();
}

template <class T>
T determinant(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (a.rows() == 0) return T(1);
    Echelon<T> e = fraction_free_echelon(a);
    if (e.pivot_columns.size() < a.rows()) return T();
    T det = e.matrix(a.rows() - 1, a.cols() - 1);
    return e.sign < 0 ? -det : det;
}

// Scale so the first nonzero entry is 1. Field types only.
template <class T>
void normalize_leading(std::vector<T>& v) {
    for (const T& x : v) {
        if (x.is_zero()) continue;
        T inv = T(1) / x;
        for (T& y : v) y *= inv;
        return;
    }
}

// Basis of the right nullspace over a field: one vector per free column, in
// column order, each normalized so its first nonzero entry is 1.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a) {
    const std::size_t n = a.cols();
    Echelon<T> e = fraction_free_echelon(a);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> x(n);
        x[free] = T(1);
        for (std::size_t r = e.pivot_columns.size(); r-- > 0;) {
            const std::size_t pc = e.pivot_columns[r];
            T sum;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (!x[j].is_zero() && !e.matrix(r, j).is_zero()) sum += e.matrix(r, j) * x[j];
            x[pc] = -sum / e.matrix(r, pc);
        }
        normalize_leading(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class T>
std::vector<T> multiply(const Matrix<T>& a, const std::vector<T>& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<T> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
    return y;
}

template <class T>
bool is_zero_vector(const std::vector<T>& v) {
    for (const T& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Span of a set of vectors kept in reduced echelon form, with each row's
// pivot at its *last* nonzero coordinate. Reducing a vector modulo the span
// therefore leaves support only on the non-pivot coordinates, which are
// exactly the coordinates a greedy first-to-last complement would pick.
template <class T>
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    [[nodiscard]] std::size_t ambient_dimension() const { return ambient_; }
    [[nodiscard]] std::size_t dimension() const { return rows_.size(); }
    [[nodiscard]] const std::vector<std::vector<T>>& rows() const { return rows_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    [[nodiscard]] bool is_pivot(std::size_t c) const {
        for (std::size_t p : pivots_)
            if (p == c) return true;
        return false;
    }

    [[nodiscard]] std::vector<T> reduce(std::vector<T> v) const {
        check(v);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const T f = v[pivots_[i]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
        }
        return v;
    }

    [[nodiscard]] bool contains(const std::vector<T>& v) const { return is_zero_vector(reduce(v)); }

    // Returns false when v already lies in the span.
    bool insert(std::vector<T> v) {
        v = reduce(std::move(v));
        std::optional<std::size_t> last;
        for (std::size_t j = ambient_; j-- > 0;)
            if (!v[j].is_zero()) {
                last = j;
                break;
            }
        if (!last) return false;
        const T inv = T(1) / v[*last];
        for (T& x : v) x *= inv;
        for (auto& row : rows_) {
            const T f = row[*last];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!v[j].is_zero()) row[j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(*last);
        return true;
    }

private:
    void check(const std::vector<T>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
    }

    std::size_t ambient_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace cga
