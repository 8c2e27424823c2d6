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

#include "quhm/exactmat.hpp"

#include <algorithm>
#include <limits>

namespace quhm {

namespace {

constexpr std::int64_t kInt16Max = std::numeric_limits<std::int16_t>::max();
constexpr std::int64_t kInt32Max = std::numeric_limits<std::int32_t>::max();

// Rows of `out` are the dot products of rows of a and rows of b.
void gram_narrow(const IntMatrix& a, const IntMatrix& b, IntMatrix& out) {
    const std::size_t k = a.cols();
    std::vector<std::int16_t> pa(a.rows() * k);
    std::vector<std::int16_t> pb(b.rows() * k);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = static_cast<std::int16_t>(a.data()[i]);
    for (std::size_t i = 0; i < pb.size(); ++i) pb[i] = static_cast<std::int16_t>(b.data()[i]);

    constexpr std::size_t kTile = 64;
    for (std::size_t j0 = 0; j0 < b.rows(); j0 += kTile) {
        const std::size_t j1 = std::min(b.rows(), j0 + kTile);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const std::int16_t* ra = pa.data() + i * k;
            for (std::size_t j = j0; j < j1; ++j) {
                const std::int16_t* rb = pb.data() + j * k;
                std::int32_t acc = 0;
                for (std::size_t t = 0; t < k; ++t) acc += static_cast<std::int32_t>(ra[t]) * rb[t];
                out(i, j) = acc;
            }
        }
    }
}

void gram_wide(const IntMatrix& a, const IntMatrix& b, IntMatrix& out) {
    const std::size_t k = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto ra = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const auto rb = b.row(j);
            std::int64_t acc = 0;
            for (std::size_t t = 0; t < k; ++t) acc += ra[t] * rb[t];
            out(i, j) = acc;
        }
    }
}

void gram_checked(const IntMatrix& a, const IntMatrix& b, IntMatrix& out) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            std::int64_t acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) acc = checked_add(acc, checked_mul(a(i, t), b(j, t)));
            out(i, j) = acc;
        }
    }
}

}  // namespace

std::int64_t max_abs(const IntMatrix& m) {
    std::int64_t best = 0;
    for (auto v : m.data()) best = std::max(best, checked_abs(v));
    return best;
}

IntMatrix gram(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw ParameterError("gram: inner dimension mismatch");
    IntMatrix out(a.rows(), b.rows(), 0);
    if (a.rows() == 0 || b.rows() == 0) return out;

    const std::int64_t ma = max_abs(a);
    const std::int64_t mb = max_abs(b);
    // |sum_t a_it b_jt| <= k * ma * mb bounds every partial sum as well.
    std::int64_t bound = 0;
    const bool bounded = !__builtin_mul_overflow(static_cast<std::int64_t>(a.cols()), ma, &bound) &&
                         !__builtin_mul_overflow(bound, mb, &bound);
    if (bounded && ma <= kInt16Max && mb <= kInt16Max && bound <= kInt32Max) {
        gram_narrow(a, b, out);
    } else if (bounded) {
        gram_wide(a, b, out);
    } else {
        gram_checked(a, b, out);
    }
    return out;
}

GaussMatrix gram(const GaussMatrix& a, const GaussMatrix& b) {
    if (a.cols() != b.cols()) throw ParameterError("gram: inner dimension mismatch");
    const auto [ar, ai] = split_parts(a);
    const auto [br, bi] = split_parts(b);
    // (ar + i ai)(br - i bi)^T = (ar br^T + ai bi^T) + i (ai br^T - ar bi^T)
    const IntMatrix re = gram(ar, br) + gram(ai, bi);
    const IntMatrix im = gram(ai, br) - gram(ar, bi);
    GaussMatrix out(a.rows(), b.rows());
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = Gauss{re(r, c), im(r, c)};
    return out;
}

GaussMatrix to_gauss(const IntMatrix& m) {
    GaussMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Gauss{m(r, c), 0};
    return out;
}

std::pair<IntMatrix, IntMatrix> split_parts(const GaussMatrix& m) {
    IntMatrix re(m.rows(), m.cols());
    IntMatrix im(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            re(r, c) = m(r, c).re;
            im(r, c) = m(r, c).im;
        }
    }
    return {std::move(re), std::move(im)};
}

bool is_quaternary(const GaussMatrix& m) {
    for (const Gauss& g : m.data()) {
        const bool unit = (g.im == 0 && (g.re == 1 || g.re == -1)) || (g.re == 0 && (g.im == 1 || g.im == -1));
        if (!unit) return false;
    }
    return true;
}

SignMatrix::SignMatrix(IntMatrix values) : values_(std::move(values)) {
    if (!values_.is_square()) throw ParameterError("sign matrix must be square");
    for (std::size_t r = 0; r < values_.rows(); ++r)
        for (std::size_t c = 0; c < values_.cols(); ++c)
            if (values_(r, c) != 1 && values_(r, c) != -1)
                throw ParameterError("sign matrix entry at (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") is not +1 or -1");
}

TernaryMatrix::TernaryMatrix(IntMatrix values) : values_(std::move(values)) {
    if (!values_.is_square()) throw ParameterError("ternary matrix must be square");
    for (std::size_t r = 0; r < values_.rows(); ++r)
        for (std::size_t c = 0; c < values_.cols(); ++c)
            if (values_(r, c) < -1 || values_(r, c) > 1)
                throw ParameterError("ternary matrix entry at (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") is not in {-1,0,1}");
}

}  // namespace quhm
