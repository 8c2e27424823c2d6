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

#ifndef QUHM_QUADCOMPLEX_HPP
#define QUHM_QUADCOMPLEX_HPP

#include <cstdint>
#include <ostream>
#include <string>

namespace quhm {

/// Exact element (a + b sqrt(-q)) / d of the imaginary quadratic field Q(sqrt(-q)).
///
/// Stored in lowest terms with d > 0. A value with b = 0 is rational and
/// carries q = 0, which combines with any radicand; mixing two different
/// nonzero radicands throws ParameterError.
class QuadComplex {
public:
    constexpr QuadComplex() = default;
    QuadComplex(std::int64_t integer);  // NOLINT(implicit)
    QuadComplex(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t q);

    /// sqrt(-q) itself.
    static QuadComplex radical(std::int64_t q) { return {0, 1, 1, q}; }
    static QuadComplex rational(std::int64_t num, std::int64_t den) { return {num, 0, den, 0}; }

    [[nodiscard]] std::int64_t a() const noexcept { return a_; }
    [[nodiscard]] std::int64_t b() const noexcept { return b_; }
    [[nodiscard]] std::int64_t d() const noexcept { return d_; }
    [[nodiscard]] std::int64_t q() const noexcept { return q_; }
    [[nodiscard]] bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    [[nodiscard]] bool is_rational() const noexcept { return b_ == 0; }

    /// Field norm |x|^2 = (a^2 + q b^2) / d^2, as its numerator and denominator
    /// before reduction.
    [[nodiscard]] std::int64_t norm_numerator() const;
    [[nodiscard]] std::int64_t norm_denominator() const;

    [[nodiscard]] QuadComplex conj() const;
    [[nodiscard]] QuadComplex inverse() const;

    [[nodiscard]] std::string to_string() const;

    friend QuadComplex operator+(const QuadComplex& x, const QuadComplex& y);
    friend QuadComplex operator-(const QuadComplex& x, const QuadComplex& y);
    friend QuadComplex operator-(const QuadComplex& x);
    friend QuadComplex operator*(const QuadComplex& x, const QuadComplex& y);
    friend QuadComplex operator/(const QuadComplex& x, const QuadComplex& y);
    friend bool operator==(const QuadComplex& x, const QuadComplex& y) noexcept {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_ && (x.b_ == 0 || x.q_ == y.q_);
    }

private:
    void normalize();

    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    std::int64_t d_ = 1;
    std::int64_t q_ = 0;
};

inline QuadComplex conj(const QuadComplex& x) { return x.conj(); }

inline std::ostream& operator<<(std::ostream& os, const QuadComplex& x) { return os << x.to_string(); }

/// x^k by repeated multiplication.
QuadComplex power(const QuadComplex& x, unsigned k);

}  // namespace quhm

#endif  // QUHM_QUADCOMPLEX_HPP
