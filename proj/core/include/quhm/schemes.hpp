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

#ifndef QUHM_SCHEMES_HPP
#define QUHM_SCHEMES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quhm/cores.hpp"
#include "quhm/exactmat.hpp"
#include "quhm/quadcomplex.hpp"
#include "quhm/quh.hpp"

namespace quhm {

using QuadMatrix = Matrix<QuadComplex>;

/// Which of the five commutative-scheme axioms hold, plus the intersection
/// numbers p_ij^k when axiom (iv) holds.
struct SchemeReport {
    bool nonzero_01 = true;       // every A_i is a nonzero (0,1)-matrix
    bool identity_first = true;   // (i)   A_0 = I
    bool sums_to_ones = true;     // (ii)  sum A_i = J
    bool transpose_closed = true; // (iii) A_i^T in {A_j}
    bool product_closed = true;   // (iv)  A_i A_j = sum_k p_ij^k A_k
    bool commutative = true;      // (v)   A_i A_j = A_j A_i
    std::string failure;

    [[nodiscard]] bool ok() const noexcept {
        return nonzero_01 && identity_first && sums_to_ones && transpose_closed && product_closed && commutative;
    }
};

/// Intersection numbers indexed [i][j][k].
using IntersectionNumbers = std::vector<std::vector<std::vector<std::int64_t>>>;

SchemeReport check_scheme_axioms(const std::vector<IntMatrix>& adjacency, IntersectionNumbers* intersection = nullptr);

/// A commutative association scheme whose axioms have been verified.
class Scheme {
public:
    /// Throws VerificationError naming the failing axiom.
    static Scheme from_adjacency(std::vector<IntMatrix> adjacency);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency_.front().rows(); }
    [[nodiscard]] std::size_t class_count() const noexcept { return adjacency_.size() - 1; }
    [[nodiscard]] const std::vector<IntMatrix>& adjacency() const noexcept { return adjacency_; }
    [[nodiscard]] const IntersectionNumbers& intersection_numbers() const noexcept { return intersection_; }
    [[nodiscard]] std::int64_t p(std::size_t i, std::size_t j, std::size_t k) const { return intersection_.at(i).at(j).at(k); }

private:
    Scheme(std::vector<IntMatrix> adjacency, IntersectionNumbers intersection)
        : adjacency_(std::move(adjacency)), intersection_(std::move(intersection)) {}

    std::vector<IntMatrix> adjacency_;
    IntersectionNumbers intersection_;
};

/// The 2-class scheme {I, A_1, A_2} of a skew core: A_1 holds the +1
/// positions of Q and A_2 = A_1^T the -1 positions, so Q = A_1 - A_2.
Scheme scheme_from_core(const CoreMatrix& core);

/// A A^T = ((n+1)/4) I + ((n-3)/4) J with out-degree (n-1)/2 and A + A^T = J - I.
bool is_doubly_regular_tournament(const IntMatrix& a);

/// [[1, (q-1)/2, (q-1)/2], [1, (-1+s)/2, (-1-s)/2], [1, (-1-s)/2, (-1+s)/2]], s = sqrt(-q).
/// Requires q = 3 (mod 4).
QuadMatrix eigenmatrix_base(std::int64_t q);

/// Kronecker power P^(x)m, rows and columns in lexicographic class-tuple order.
/// Capped at order 729.
QuadMatrix tensor_eigenmatrix(const QuadMatrix& p, unsigned m);

inline constexpr std::size_t kEigenmatrixCap = 729;

/// Primitive idempotents E_0, E_1, E_2 of scheme_from_core, from
/// E_i = sum_j (P^-1)_{ji} A_j.
std::array<QuadMatrix, 3> idempotents_base(const CoreMatrix& core);

struct IdempotentReport {
    bool orthogonal_idempotents = true;  // E_i E_j = delta_ij E_i
    bool resolution_of_identity = true;  // sum E_i = I
    bool first_is_averaging = true;      // E_0 = J / q
    bool eigen_relation = true;          // A_j E_i = P_ij E_i
    [[nodiscard]] bool ok() const noexcept {
        return orthogonal_idempotents && resolution_of_identity && first_is_averaging && eigen_relation;
    }
};

IdempotentReport check_idempotents(const CoreMatrix& core);

/// Index arithmetic for the m-fold tensor scheme on q^m vertices. Vertex
/// indices are base-q numerals with the outermost Kronecker factor as most
/// significant digit; class tuples are coded as base-3 numerals the same way.
class TensorSchemeIndex {
public:
    TensorSchemeIndex(const CoreMatrix& core, unsigned m);

    [[nodiscard]] std::size_t q() const noexcept { return q_; }
    [[nodiscard]] unsigned m() const noexcept { return m_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
    [[nodiscard]] std::size_t class_count() const noexcept { return class_count_; }

    /// Per-coordinate classes: 0 when the digits agree, 1 when Q = +1, 2 when Q = -1.
    [[nodiscard]] std::vector<int> class_of_pair(std::size_t r, std::size_t c) const;
    [[nodiscard]] std::size_t class_code(std::size_t r, std::size_t c) const;
    [[nodiscard]] std::vector<int> decode(std::size_t code) const;
    [[nodiscard]] std::size_t encode(const std::vector<int>& tuple) const;

private:
    std::size_t q_;
    unsigned m_;
    std::size_t vertex_count_;
    std::size_t class_count_;
    std::vector<std::uint8_t> base_class_;  // q x q table
};

template <class T>
struct BoseMesnerResult {
    bool member = false;
    /// coefficients[code] multiplies A_{i_1} (x) ... (x) A_{i_m}.
    std::vector<T> coefficients;
    /// Two same-class coordinates with different entries, on failure.
    std::optional<std::pair<Coord, Coord>> witness;
};

/// Expresses M as sum of c_I A_I over the tensor scheme by scanning every
/// entry; fails unless M is constant on each class.
template <class T>
BoseMesnerResult<T> bose_mesner_coeffs(const Matrix<T>& m, const TensorSchemeIndex& idx) {
    if (!m.is_square() || m.rows() != idx.vertex_count())
        throw ParameterError("bose_mesner_coeffs: matrix order does not match the scheme");
    BoseMesnerResult<T> res;
    res.coefficients.assign(idx.class_count(), T{0});
    std::vector<std::optional<Coord>> first(idx.class_count());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::size_t code = idx.class_code(r, c);
            if (!first[code]) {
                first[code] = Coord{r, c};
                res.coefficients[code] = m(r, c);
            } else if (!(res.coefficients[code] == m(r, c))) {
                res.witness = std::make_pair(*first[code], Coord{r, c});
                return res;
            }
        }
    }
    res.member = true;
    return res;
}

/// Eigenvalue of sqrt(q+1) H on one idempotent of the tensor scheme:
/// w = lambda_A + sqrt(-q) lambda_B, where lambda_X is row `code` of P_m
/// applied to the coefficients of X. H is unit Hadamard in a commutative
/// algebra, so |w|^2 = (q+1) q^m.
struct EigenCertificate {
    std::size_t code = 0;
    QuadComplex value;
    bool ok = false;
};

struct SpectrumResult {
    bool member = false;
    std::vector<EigenCertificate> certificates;
    std::string failure;

    [[nodiscard]] bool all_certified() const;
};

SpectrumResult spectrum_via_scheme(const QuhMatrix& h, const TensorSchemeIndex& idx);

/// Same certificates from coefficient vectors already in hand (length 3^m).
SpectrumResult spectrum_from_coefficients(std::int64_t q, unsigned m, const std::vector<std::int64_t>& real_coeffs,
                                          const std::vector<std::int64_t>& imag_coeffs);

}  // namespace quhm

#endif  // QUHM_SCHEMES_HPP
