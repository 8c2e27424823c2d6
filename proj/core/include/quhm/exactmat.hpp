// Copyright 2026 The quhm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUHM_EXACTMAT_HPP
#define QUHM_EXACTMAT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "quhm/checked.hpp"
#include "quhm/errors.hpp"

namespace quhm {

/// Gaussian integer re + im*i with overflow-checked arithmetic.
struct Gauss {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr Gauss() = default;
    constexpr Gauss(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}  // NOLINT(implicit)

    friend constexpr bool operator==(const Gauss&, const Gauss&) = default;
};

inline constexpr Gauss kImagUnit{0, 1};

inline Gauss operator+(Gauss a, Gauss b) { return {checked_add(a.re, b.re), checked_add(a.im, b.im)}; }
inline Gauss operator-(Gauss a, Gauss b) { return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)}; }
inline Gauss operator-(Gauss a) { return {checked_neg(a.re), checked_neg(a.im)}; }
inline Gauss operator*(Gauss a, Gauss b) {
    return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
            checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}
inline Gauss conj(Gauss a) { return {a.re, checked_neg(a.im)}; }
inline std::ostream& operator<<(std::ostream& os, Gauss g) { return os << '(' << g.re << ',' << g.im << ')'; }

// Ring primitives used by the generic matrix templates. Class types (Gauss,
// QuadComplex) provide their own operators; plain integers go through the
// checked helpers.
inline std::int64_t ring_add(std::int64_t a, std::int64_t b) { return checked_add(a, b); }
inline std::int64_t ring_sub(std::int64_t a, std::int64_t b) { return checked_sub(a, b); }
inline std::int64_t ring_mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
inline std::int64_t conj(std::int64_t a) { return a; }
template <class T>
T ring_add(const T& a, const T& b) { return a + b; }
template <class T>
T ring_sub(const T& a, const T& b) { return a - b; }
template <class T>
T ring_mul(const T& a, const T& b) { return a * b; }

struct Coord {
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const Coord&, const Coord&) = default;
};

inline std::ostream& operator<<(std::ostream& os, Coord c) { return os << '(' << c.row << ',' << c.col << ')'; }

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ParameterError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < m.rows_; ++r) {
            if (rows[r].size() != m.cols_) throw ParameterError("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    /// Order of a square matrix.
    [[nodiscard]] std::size_t order() const {
        if (!is_square()) throw ParameterError("matrix is not square");
        return rows_;
    }

    T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const T> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<T> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const T> data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using GaussMatrix = Matrix<Gauss>;

template <class T>
Matrix<T> identity(std::size_t n) {
    Matrix<T> m(n, n, T{0});
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
}

template <class T>
Matrix<T> ones(std::size_t rows, std::size_t cols) {
    return Matrix<T>(rows, cols, T{1});
}

template <class T>
Matrix<T> ones(std::size_t n) {
    return ones<T>(n, n);
}

/// circ(c_0, ..., c_{n-1}): entry (r, c) = first_row[(c - r) mod n].
template <class T>
Matrix<T> circulant(const std::vector<T>& first_row) {
    const std::size_t n = first_row.size();
    Matrix<T> m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = first_row[(c + n - r) % n];
    return m;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
    return t;
}

template <class T>
Matrix<T> conj_transpose(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = conj(a(r, c));
    return t;
}

/// Kronecker product: block (i, j) equals a(i, j) * b.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& s = a(i, j);
            for (std::size_t r = 0; r < b.rows(); ++r) {
                for (std::size_t c = 0; c < b.cols(); ++c)
                    out(i * b.rows() + r, j * b.cols() + c) = ring_mul(s, b(r, c));
            }
        }
    }
    return out;
}

/// c1*m1 + c2*m2, exactly.
template <class T>
Matrix<T> combine(const T& c1, const Matrix<T>& m1, const T& c2, const Matrix<T>& m2) {
    if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) throw ParameterError("combine: shape mismatch");
    Matrix<T> out(m1.rows(), m1.cols());
    for (std::size_t r = 0; r < m1.rows(); ++r)
        for (std::size_t c = 0; c < m1.cols(); ++c)
            out(r, c) = ring_add(ring_mul(c1, m1(r, c)), ring_mul(c2, m2(r, c)));
    return out;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    return combine(T{1}, a, T{1}, b);
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    return combine(T{1}, a, T{-1}, b);
}

template <class T>
Matrix<T> scale(const T& s, const Matrix<T>& a) {
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ring_mul(s, a(r, c));
    return out;
}

/// Reference product a * conj(b)^T by the textbook triple loop; generic over
/// the scalar type. IntMatrix and GaussMatrix have faster overloads below.
template <class T>
Matrix<T> gram_generic(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw ParameterError("gram: inner dimension mismatch");
    Matrix<T> out(a.rows(), b.rows(), T{0});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            T acc{0};
            for (std::size_t k = 0; k < a.cols(); ++k) acc = ring_add(acc, ring_mul(a(i, k), conj(b(j, k))));
            out(i, j) = acc;
        }
    }
    return out;
}

/// a * b^T. Overflow is excluded up front from the entry bounds; the inner
/// loop then runs on narrow integers when the bound allows it.
IntMatrix gram(const IntMatrix& a, const IntMatrix& b);

/// a * b^* (conjugate transpose of the second argument).
GaussMatrix gram(const GaussMatrix& a, const GaussMatrix& b);

template <class T>
Matrix<T> gram(const Matrix<T>& a, const Matrix<T>& b) {
    return gram_generic(a, b);
}

/// Ordinary matrix product.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw ParameterError("multiply: inner dimension mismatch");
    if constexpr (std::is_same_v<T, std::int64_t>) {
        return gram(a, transpose(b));
    } else if constexpr (std::is_same_v<T, Gauss>) {
        return gram(a, conj_transpose(b));
    } else {
        Matrix<T> out(a.rows(), b.cols(), T{0});
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const T& s = a(i, k);
                for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = ring_add(out(i, j), ring_mul(s, b(k, j)));
            }
        }
        return out;
    }
}

/// Excess S(M): the sum of all entries.
template <class T>
T total_sum(const Matrix<T>& m) {
    T acc{0};
    for (const T& v : m.data()) acc = ring_add(acc, v);
    return acc;
}

/// S(R_i) for every row.
template <class T>
std::vector<T> row_sums(const Matrix<T>& m) {
    std::vector<T> out(m.rows(), T{0});
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const T& v : m.row(r)) out[r] = ring_add(out[r], v);
    return out;
}

std::int64_t max_abs(const IntMatrix& m);

/// First coordinate (row-major) where a and b differ; nullopt when equal.
/// Throws on shape mismatch.
template <class T>
std::optional<Coord> first_difference(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ParameterError("first_difference: shape mismatch");
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!(a(r, c) == b(r, c))) return Coord{r, c};
    return std::nullopt;
}

GaussMatrix to_gauss(const IntMatrix& m);

/// Splits into (real part, imaginary part).
std::pair<IntMatrix, IntMatrix> split_parts(const GaussMatrix& m);

/// True iff every entry lies in {1, -1, i, -i}.
bool is_quaternary(const GaussMatrix& m);

/// Square matrix with every entry in {+1, -1}.
class SignMatrix {
public:
    SignMatrix() = default;
    explicit SignMatrix(IntMatrix values);

    [[nodiscard]] const IntMatrix& values() const noexcept { return values_; }
    [[nodiscard]] std::size_t order() const noexcept { return values_.rows(); }
    std::int64_t operator()(std::size_t r, std::size_t c) const noexcept { return values_(r, c); }

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
    IntMatrix values_;
};

/// Square matrix with every entry in {+1, 0, -1}.
class TernaryMatrix {
public:
    TernaryMatrix() = default;
    explicit TernaryMatrix(IntMatrix values);

    [[nodiscard]] const IntMatrix& values() const noexcept { return values_; }
    [[nodiscard]] std::size_t order() const noexcept { return values_.rows(); }
    std::int64_t operator()(std::size_t r, std::size_t c) const noexcept { return values_(r, c); }

    friend bool operator==(const TernaryMatrix&, const TernaryMatrix&) = default;

private:
    IntMatrix values_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
        os << "]\n";
    }
    return os;
}

}  // namespace quhm

#endif  // QUHM_EXACTMAT_HPP
