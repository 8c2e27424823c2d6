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

#ifndef QUHM_QUH_HPP
#define QUHM_QUH_HPP

#include <cstddef>
#include <cstdint>

#include "quhm/exactmat.hpp"

namespace quhm {

/// Quaternary unit Hadamard matrix QUH(n, q_param), held symbolically as
///
///     H = A / sqrt(q_param + 1) + i * sqrt(q_param / (q_param + 1)) * B
///
/// for sign matrices A and B. A value built through assemble() has passed
/// A B^T = B A^T and A A^T + q_param B B^T = (q_param + 1) n I, which together
/// are equivalent to H H^* = n I.
class QuhMatrix {
public:
    /// Verifies both pair identities; throws VerificationError on failure.
    static QuhMatrix assemble(SignMatrix a, SignMatrix b, std::int64_t q_param, unsigned depth = 0);

    /// No verification. For imported documents that are checked afterwards.
    static QuhMatrix unchecked(SignMatrix a, SignMatrix b, std::int64_t q_param, unsigned depth = 0);

    [[nodiscard]] std::int64_t q_param() const noexcept { return q_param_; }
    [[nodiscard]] unsigned depth() const noexcept { return depth_; }
    [[nodiscard]] std::size_t order() const noexcept { return real_.order(); }
    /// A (coefficient pattern of 1/sqrt(q+1)).
    [[nodiscard]] const SignMatrix& real_pattern() const noexcept { return real_; }
    /// B (coefficient pattern of i sqrt(q/(q+1))).
    [[nodiscard]] const SignMatrix& imag_pattern() const noexcept { return imag_; }

    friend bool operator==(const QuhMatrix&, const QuhMatrix&) = default;

private:
    QuhMatrix(SignMatrix a, SignMatrix b, std::int64_t q_param, unsigned depth);

    SignMatrix real_;
    SignMatrix imag_;
    std::int64_t q_param_ = 1;
    unsigned depth_ = 0;
};

}  // namespace quhm

#endif  // QUHM_QUH_HPP
