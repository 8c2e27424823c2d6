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

#ifndef QUHM_CORES_HPP
#define QUHM_CORES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quhm/exactmat.hpp"

namespace quhm {

enum class CoreKind { symmetric, skew };
enum class CoreProvenance { jacobsthal, extracted, user_supplied };

std::string to_string(CoreKind kind);
std::string to_string(CoreProvenance provenance);

/// Outcome of every core check, with the first failing coordinate of each.
struct CoreReport {
    std::size_t order = 0;
    bool square = true;
    bool zero_diagonal = true;
    bool offdiagonal_signs = true;
    bool zero_line_sums = true;
    bool gram_identity = true;
    bool symmetric = true;
    bool skew = true;
    std::optional<Coord> zero_diagonal_witness;
    std::optional<Coord> offdiagonal_witness;
    std::optional<Coord> line_sum_witness;  // (line, 0) for a row, (0, line) for a column
    std::optional<Coord> gram_witness;
    std::optional<Coord> symmetry_witness;
    std::optional<Coord> skew_witness;

    /// Skew wins for the order-1 zero matrix, which is both.
    [[nodiscard]] std::optional<CoreKind> kind() const;
    [[nodiscard]] bool ok() const;
    [[nodiscard]] std::string summary() const;
};

/// Checks zero diagonal, +-1 off the diagonal, Q^T = +-Q, J Q = Q J = 0 and
/// Q Q^T = q I - J.
CoreReport verify_core(const IntMatrix& q_matrix);
inline CoreReport verify_core(const TernaryMatrix& q_matrix) { return verify_core(q_matrix.values()); }

/// A verified (symmetric or skew) core Q of order q.
class CoreMatrix {
public:
    /// Throws VerificationError with the report summary if any check fails.
    static CoreMatrix from_matrix(TernaryMatrix q_matrix, CoreProvenance provenance);

    [[nodiscard]] std::size_t order() const noexcept { return matrix_.order(); }
    [[nodiscard]] const TernaryMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] const IntMatrix& values() const noexcept { return matrix_.values(); }
    [[nodiscard]] CoreKind kind() const noexcept { return kind_; }
    [[nodiscard]] CoreProvenance provenance() const noexcept { return provenance_; }

    friend bool operator==(const CoreMatrix& a, const CoreMatrix& b) {
        return a.matrix_ == b.matrix_ && a.kind_ == b.kind_;
    }

private:
    CoreMatrix(TernaryMatrix m, CoreKind kind, CoreProvenance provenance)
        : matrix_(std::move(m)), kind_(kind), provenance_(provenance) {}

    TernaryMatrix matrix_;
    CoreKind kind_;
    CoreProvenance provenance_;
};

/// Q[i][j] = chi(a_i - a_j) over GF(q) in the canonical element ordering.
CoreMatrix jacobsthal(std::uint64_t q);

/// [[1, j], [-j^T, I + Q]] with Q = jacobsthal(q); requires q = 3 (mod 4).
SignMatrix paley_skew_hadamard(std::uint64_t q);

struct SkewHadamardReport {
    bool hadamard = false;
    bool skew_type = false;
    std::optional<Coord> witness;
};

/// H H^T = n I, and H + H^T = 2 I.
SkewHadamardReport check_skew_hadamard(const SignMatrix& h);

/// Normalises a skew-type Hadamard matrix by simultaneous row/column negations
/// to [[1, j], [-j^T, I + Q]] and returns the verified core Q.
CoreMatrix extract_core(const SignMatrix& h);

/// First entry breaking the recursive block-circulant structure with block
/// counts dims (outermost first); nullopt when M is multicirculant.
/// Every entry must equal row 0 at the digitwise difference of (col - row).
template <class T>
std::optional<Coord> multicirculant_witness(const Matrix<T>& m, std::span<const std::size_t> dims) {
    const std::size_t n = m.order();
    std::size_t prod = 1;
    for (auto d : dims) {
        if (d == 0) throw ParameterError("multicirculant factor must be positive");
        prod *= d;
    }
    if (prod != n) throw ParameterError("factorization product does not match matrix order");
    std::vector<std::size_t> weight(dims.size());
    std::size_t w = 1;
    for (std::size_t t = dims.size(); t-- > 0;) {
        weight[t] = w;
        w *= dims[t];
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t diff = 0;
            for (std::size_t t = 0; t < dims.size(); ++t) {
                const std::size_t rt = (r / weight[t]) % dims[t];
                const std::size_t ct = (c / weight[t]) % dims[t];
                diff += ((ct + dims[t] - rt) % dims[t]) * weight[t];
            }
            if (!(m(r, c) == m(0, diff))) return Coord{r, c};
        }
    }
    return std::nullopt;
}

template <class T>
bool is_multicirculant(const Matrix<T>& m, std::span<const std::size_t> dims) {
    return !multicirculant_witness(m, dims).has_value();
}

/// [p] repeated e*m times for q = p^e; the block structure the canonical
/// ordering induces on level-m constructions.
std::vector<std::size_t> prime_factorization_chain(std::uint64_t q, unsigned m);

}  // namespace quhm

#endif  // QUHM_CORES_HPP
