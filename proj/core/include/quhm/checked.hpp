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

#ifndef QUHM_CHECKED_HPP
#define QUHM_CHECKED_HPP

#include <cstdint>

#include "quhm/errors.hpp"

namespace quhm {

// Overflow-checked 64-bit integer primitives. Every exact computation in the
// library funnels through these (or through an a-priori bound built from them).

[[nodiscard]] inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

[[nodiscard]] inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

[[nodiscard]] inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

[[nodiscard]] inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

[[nodiscard]] inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

[[nodiscard]] inline std::int64_t checked_pow(std::int64_t base, unsigned exponent) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace quhm

#endif  // QUHM_CHECKED_HPP
