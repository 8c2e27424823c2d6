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

#ifndef QUHM_VERIFY_HPP
#define QUHM_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quhm/cores.hpp"
#include "quhm/exactmat.hpp"
#include "quhm/quh.hpp"

namespace quhm {

// All verdicts below are exact: irrational scale factors are cleared before
// comparing, so no tolerance is involved anywhere.

/// Verdict of one identity check. `witness` is the first failing coordinate
/// (row-major) and `residual` the largest absolute deviation.
struct CheckResult {
    bool ok = true;
    std::optional<Coord> witness;
    std::int64_t residual = 0;
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
};

/// A B^T = B A^T. Since B A^T = (A B^T)^T this is symmetry of one product.
CheckResult verify_amicable(const SignMatrix& a, const SignMatrix& b);
CheckResult verify_amicable(const IntMatrix& a, const IntMatrix& b);

/// A B^* = B A^*, i.e. A B^* is Hermitian.
CheckResult verify_amicable(const GaussMatrix& a, const GaussMatrix& b);

/// A A^T + q_param B B^T = (q_param + 1) n I.
CheckResult verify_pair_identity(const SignMatrix& a, const SignMatrix& b, std::int64_t q_param);
CheckResult verify_pair_identity(const IntMatrix& a, const IntMatrix& b, std::int64_t q_param);

/// A A^* + q_param B B^* = (q_param + 1) n I.
CheckResult verify_pair_identity(const GaussMatrix& a, const GaussMatrix& b, std::int64_t q_param);

/// M M^* = n I with every entry in {+-1, +-i}.
CheckResult verify_unit_hadamard(const GaussMatrix& m);

/// H H^* = n I through the amicable pair: with H = (A + i sqrt(q) B)/sqrt(q+1),
/// (q+1) H H^* = A A^T + q B B^T + i sqrt(q) (B A^T - A B^T).
CheckResult verify_unit_hadamard(const QuhMatrix& h);

/// zeta = 1/sqrt(m+1) + i sqrt(m/(m+1)) is a root of unity iff m in {1, 3}:
/// zeta^2 + conj(zeta)^2 = -2(m-1)/(m+1) must be an integer, i.e. (m+1) | 4.
bool butson_parameter_admissible(std::int64_t q_param);

struct ButsonVerdict {
    bool butson = false;
    /// 6 for q_param = 3, 8 for q_param = 1, 0 otherwise.
    int k = 0;
    /// No entry of H is real.
    bool unreal = false;
    /// H H^* = n I.
    bool unit_hadamard = false;
    /// Every distinct entry value was raised to the k-th power exactly and gave 1.
    bool roots_certified = false;
};

ButsonVerdict verify_butson(const QuhMatrix& h);

/// Entry (r, c) of H equals exp(2 pi i e / k) with e = exponents(r, c).
/// Requires q_param in {1, 3}.
IntMatrix butson_exponents(const QuhMatrix& h);

/// S(H) = (u + i v sqrt(q)) / sqrt(q + 1) with u = S(A), v = S(B).
struct ExcessValue {
    std::int64_t q = 1;
    std::int64_t u = 0;
    std::int64_t v = 0;
    /// u^2 + q v^2 = (q + 1) |S(H)|^2.
    std::int64_t magnitude_squared_times_qplus1 = 0;
};

ExcessValue excess(const QuhMatrix& h);

struct RegularityReport {
    bool rows_regular = true;
    /// First row i with (sum A_i)^2 + q (sum B_i)^2 != (q + 1) n.
    std::optional<std::size_t> failing_row;
    /// u^2 + q v^2 = (q + 1) n^3.
    bool meets_best_bound = false;
    /// u^2 + q v^2 <= (q + 1) n^3.
    bool within_best_bound = false;
    ExcessValue excess;
};

RegularityReport regularity(const QuhMatrix& h);
bool is_regular(const QuhMatrix& h);

struct ExcessLemmaRow {
    unsigned m = 0;
    std::int64_t sum_j = 0;
    std::int64_t sum_a = 0;
    std::int64_t expected_j = 0;
    std::int64_t expected_a = 0;
    /// S(X_m) = q^3 S(X_{m-2}); vacuous (true) for m < 2.
    bool recurrence_ok = true;

    [[nodiscard]] bool closed_form_ok() const noexcept { return sum_j == expected_j && sum_a == expected_a; }
};

struct ExcessLemmaReport {
    std::int64_t q = 0;
    std::vector<ExcessLemmaRow> rows;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] std::string table() const;
};

/// Closed forms: S(J_2k) = S(A_2k) = q^3k, S(J_2k+1) = q^(3k+2), S(A_2k+1) = q^(3k+1).
std::int64_t expected_excess_j(std::int64_t q, unsigned m);
std::int64_t expected_excess_a(std::int64_t q, unsigned m);

/// Builds (J_m, A_m) for m = 0 .. m_max (stopping at the order cap) and
/// compares their entry sums with the closed forms and recurrences.
ExcessLemmaReport check_excess_lemma(const CoreMatrix& core, unsigned m_max, std::size_t order_cap);

}  // namespace quhm

#endif  // QUHM_VERIFY_HPP
