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

// Test-only helpers: independent reference implementations and random
// generators. Nothing here calls the library routine it is used to check.

#ifndef QUHM_TESTS_SUPPORT_HPP
#define QUHM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "quhm/exactmat.hpp"
#include "quhm/gfield.hpp"
#include "quhm/quh.hpp"

namespace quhm::support {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, lo, hi);
    return m;
}

inline IntMatrix random_sign_values(Rng& rng, std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = uniform(rng, 0, 1) ? 1 : -1;
    return m;
}

inline GaussMatrix random_gauss_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
    GaussMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Gauss{uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
    return m;
}

/// Textbook triple loop for A B^T.
inline IntMatrix naive_gram(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), b.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(j, k);
            out(i, j) = s;
        }
    return out;
}

/// Textbook triple loop for A B^*.
inline GaussMatrix naive_gram(const GaussMatrix& a, const GaussMatrix& b) {
    GaussMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) {
            std::int64_t re = 0;
            std::int64_t im = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Gauss x = a(i, k);
                const Gauss y = b(j, k);
                re += x.re * y.re + x.im * y.im;
                im += x.im * y.re - x.re * y.im;
            }
            out(i, j) = Gauss{re, im};
        }
    return out;
}

inline IntMatrix naive_product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
    return out;
}

/// Nonzero squares of GF(q), by squaring every element.
inline std::set<std::uint64_t> square_indices(const gf::FieldSpec& f) {
    std::set<std::uint64_t> out;
    for (const auto& x : gf::enumerate_elements(f)) {
        const auto sq = gf::mul(f, x, x);
        const auto k = gf::index_of(f, sq);
        if (k != 0) out.insert(k);
    }
    return out;
}

/// chi by square enumeration.
inline int brute_character(const gf::FieldSpec& f, const std::set<std::uint64_t>& squares, std::uint64_t k) {
    if (k == 0) return 0;
    return squares.count(k) ? 1 : -1;
}

inline std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit, bool odd_only) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= limit; ++q) {
        if (odd_only && q % 2 == 0) continue;
        std::uint64_t p = 2;
        while (q % p != 0) ++p;
        std::uint64_t r = q;
        while (r % p == 0) r /= p;
        if (r == 1) out.push_back(q);
    }
    return out;
}

/// Direct recursive block-circulant generator: a circulant arrangement of
/// dims[0] blocks, each itself generated for the remaining dims.
inline IntMatrix random_multicirculant(Rng& rng, const std::vector<std::size_t>& dims, std::size_t level = 0,
                                       std::int64_t lo = -3, std::int64_t hi = 3) {
    if (level == dims.size()) return IntMatrix(1, 1, uniform(rng, lo, hi));
    const std::size_t d = dims[level];
    std::vector<IntMatrix> blocks;
    for (std::size_t i = 0; i < d; ++i) blocks.push_back(random_multicirculant(rng, dims, level + 1, lo, hi));
    const std::size_t b = blocks.front().rows();
    IntMatrix m(d * b, d * b);
    for (std::size_t bi = 0; bi < d; ++bi)
        for (std::size_t bj = 0; bj < d; ++bj) {
            const IntMatrix& blk = blocks[(bj + d - bi) % d];
            for (std::size_t r = 0; r < b; ++r)
                for (std::size_t c = 0; c < b; ++c) m(bi * b + r, bj * b + c) = blk(r, c);
        }
    return m;
}

/// H = (A + i sqrt(q) B) / sqrt(q + 1) in floating point.
inline std::vector<std::vector<std::complex<double>>> materialize(const QuhMatrix& h) {
    const double q = static_cast<double>(h.q_param());
    const double s = std::sqrt(q + 1.0);
    const std::size_t n = h.order();
    std::vector<std::vector<std::complex<double>>> out(n, std::vector<std::complex<double>>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[r][c] = std::complex<double>(h.real_pattern()(r, c) / s, std::sqrt(q) * h.imag_pattern()(r, c) / s);
    return out;
}

/// max |H H^* - n I| in floating point.
inline double unit_hadamard_residual(const std::vector<std::vector<std::complex<double>>>& h) {
    const std::size_t n = h.size();
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> s = 0;
            for (std::size_t k = 0; k < n; ++k) s += h[i][k] * std::conj(h[j][k]);
            if (i == j) s -= static_cast<double>(n);
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

/// (q, m) with q^m <= limit.
inline std::vector<std::pair<std::uint64_t, unsigned>> grid(const std::vector<std::uint64_t>& qs, std::uint64_t limit,
                                                            unsigned m_min = 0) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (auto q : qs) {
        std::uint64_t n = 1;
        for (unsigned m = 0; n <= limit; ++m, n *= q)
            if (m >= m_min) out.emplace_back(q, m);
    }
    return out;
}

inline IntMatrix circ(std::vector<std::int64_t> first_row) { return circulant<std::int64_t>(first_row); }

}  // namespace quhm::support

#endif  // QUHM_TESTS_SUPPORT_HPP
