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

#include "quhm/quadcomplex.hpp"

#include <numeric>

#include "quhm/checked.hpp"
#include "quhm/errors.hpp"

namespace quhm {

namespace {

std::int64_t merged_radicand(const QuadComplex& x, const QuadComplex& y) {
    if (x.q() == 0) return y.q();
    if (y.q() == 0 || x.q() == y.q()) return x.q();
    throw ParameterError("mixing Q(sqrt(-" + std::to_string(x.q()) + ")) with Q(sqrt(-" + std::to_string(y.q()) +
                         "))");
}

}  // namespace

QuadComplex::QuadComplex(std::int64_t integer) : a_(integer) {}

QuadComplex::QuadComplex(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t q) : a_(a), b_(b), d_(d), q_(q) {
    if (d == 0) throw ParameterError("QuadComplex denominator is zero");
    if (q < 0) throw ParameterError("QuadComplex radicand must be nonnegative");
    if (b != 0 && q == 0) throw ParameterError("QuadComplex with radical part needs q > 0");
    normalize();
}

void QuadComplex::normalize() {
    if (d_ < 0) {
        a_ = checked_neg(a_);
        b_ = checked_neg(b_);
        d_ = checked_neg(d_);
    }
    const std::int64_t g = std::gcd(std::gcd(checked_abs(a_), checked_abs(b_)), d_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        d_ /= g;
    }
    if (b_ == 0) q_ = 0;
}

std::int64_t QuadComplex::norm_numerator() const {
    return checked_add(checked_mul(a_, a_), checked_mul(q_, checked_mul(b_, b_)));
}

std::int64_t QuadComplex::norm_denominator() const { return checked_mul(d_, d_); }

QuadComplex QuadComplex::conj() const { return {a_, checked_neg(b_), d_, q_}; }

QuadComplex QuadComplex::inverse() const {
    if (is_zero()) throw ParameterError("QuadComplex division by zero");
    const std::int64_t n = norm_numerator();
    return {checked_mul(d_, a_), checked_neg(checked_mul(d_, b_)), n, q_};
}

QuadComplex operator+(const QuadComplex& x, const QuadComplex& y) {
    const std::int64_t q = merged_radicand(x, y);
    return {checked_add(checked_mul(x.a_, y.d_), checked_mul(y.a_, x.d_)),
            checked_add(checked_mul(x.b_, y.d_), checked_mul(y.b_, x.d_)), checked_mul(x.d_, y.d_), q};
}

QuadComplex operator-(const QuadComplex& x) { return {checked_neg(x.a_), checked_neg(x.b_), x.d_, x.q_}; }

QuadComplex operator-(const QuadComplex& x, const QuadComplex& y) { return x + (-y); }

QuadComplex operator*(const QuadComplex& x, const QuadComplex& y) {
    const std::int64_t q = merged_radicand(x, y);
    // sqrt(-q)^2 = -q
    const std::int64_t re = checked_sub(checked_mul(x.a_, y.a_), checked_mul(q, checked_mul(x.b_, y.b_)));
    const std::int64_t im = checked_add(checked_mul(x.a_, y.b_), checked_mul(x.b_, y.a_));
    return {re, im, checked_mul(x.d_, y.d_), q};
}

QuadComplex operator/(const QuadComplex& x, const QuadComplex& y) { return x * y.inverse(); }

std::string QuadComplex::to_string() const {
    std::string num;
    if (b_ == 0) {
        num = std::to_string(a_);
        return d_ == 1 ? num : num + "/" + std::to_string(d_);
    }
    if (a_ != 0) num = std::to_string(a_);
    if (b_ < 0) {
        num += '-';
    } else if (a_ != 0) {
        num += '+';
    }
    const std::int64_t mag = checked_abs(b_);
    if (mag != 1) num += std::to_string(mag) + "*";
    num += "sqrt(-" + std::to_string(q_) + ")";
    if (d_ == 1) return num;
    return "(" + num + ")/" + std::to_string(d_);
}

QuadComplex power(const QuadComplex& x, unsigned k) {
    QuadComplex r{1};
    for (unsigned i = 0; i < k; ++i) r = r * x;
    return r;
}

}  // namespace quhm
