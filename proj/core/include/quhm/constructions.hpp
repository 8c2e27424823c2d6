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

#ifndef QUHM_CONSTRUCTIONS_HPP
#define QUHM_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>

#include "quhm/cores.hpp"
#include "quhm/exactmat.hpp"
#include "quhm/quh.hpp"

namespace quhm {

inline constexpr std::size_t kDefaultOrderCap = 2048;

/// QUHM_ORDER_CAP when set to a positive integer, kDefaultOrderCap otherwise.
std::size_t order_cap_from_env();

struct ConstructOptions {
    /// Run the O(n^3) Gram checks on every result.
    bool verify = true;
    std::size_t order_cap = kDefaultOrderCap;
};

/// (first, second) = (J_m, A_m) or (X_m, Y_m).
struct SignPair {
    SignMatrix first;
    SignMatrix second;
};

/// (first, second) = (C_m, D_m).
struct GaussPair {
    GaussMatrix first;
    GaussMatrix second;
};

/// Amicable sign matrices X, Y of order n with X X^T + q Y Y^T = n (q + 1) I.
class SeedPair {
public:
    /// Throws VerificationError naming the failing identity.
    static SeedPair make(SignMatrix x, SignMatrix y, std::int64_t q);

    [[nodiscard]] const SignMatrix& x() const noexcept { return x_; }
    [[nodiscard]] const SignMatrix& y() const noexcept { return y_; }
    [[nodiscard]] std::int64_t q() const noexcept { return q_; }
    [[nodiscard]] std::size_t order() const noexcept { return x_.order(); }

private:
    SeedPair(SignMatrix x, SignMatrix y, std::int64_t q) : x_(std::move(x)), y_(std::move(y)), q_(q) {}

    SignMatrix x_;
    SignMatrix y_;
    std::int64_t q_;
};

/// J_0 = A_0 = [1];  J_m = J_q (x) A_{m-1};  A_m = I_q (x) J_{m-1} + Q (x) A_{m-1}.
/// Requires a skew core.
SignPair construct_ja(const CoreMatrix& core, unsigned m, const ConstructOptions& options = {});

/// Same recursion started from (X_0, Y_0) = (X, Y).
SignPair construct_seeded(const SeedPair& seed, const CoreMatrix& core, unsigned m,
                          const ConstructOptions& options = {});

/// QUH(n, q) from the real/imaginary sign patterns; verifies both identities.
QuhMatrix assemble_quh(const SignMatrix& real_pattern, const SignMatrix& imag_pattern, std::int64_t q,
                       unsigned depth = 0);

/// assemble_quh(construct_ja(core, m)).
QuhMatrix construct_quh(const CoreMatrix& core, unsigned m, const ConstructOptions& options = {});

/// C_0 = D_0 = [1];  C_m = J_q (x) D_{m-1};  D_m = I_q (x) C_{m-1} + i Q (x) D_{m-1}.
/// Requires a symmetric core.
GaussPair construct_cd(const CoreMatrix& core, unsigned m, const ConstructOptions& options = {});

/// [[0, j], [j^T, Q]] (x) D_m + i I_{q+1} (x) C_m, of order q^m (q + 1), with
/// entries in {+-1, +-i}.
GaussMatrix assemble_quaternary_hadamard(const CoreMatrix& core, unsigned m, const ConstructOptions& options = {});

/// factor * base^m, throwing ParameterError if it exceeds cap.
std::size_t checked_order(std::size_t base, unsigned m, std::size_t factor, std::size_t cap);

}  // namespace quhm

#endif  // QUHM_CONSTRUCTIONS_HPP
