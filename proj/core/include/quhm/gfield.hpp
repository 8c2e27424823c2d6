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

#ifndef QUHM_GFIELD_HPP
#define QUHM_GFIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quhm::gf {

/// Polynomial over GF(p), constant term first.
using Poly = std::vector<std::uint32_t>;

/// The finite field GF(p^e) realised as GF(p)[x] / (modulus).
///
/// The modulus is the smallest monic irreducible polynomial of degree e when
/// the coefficient vector (constant term first) is read as a base-p numeral
/// with the constant term as least significant digit. For e = 1 the modulus
/// is the placeholder x and is never consulted.
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint64_t q = 0;
    Poly modulus;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of GF(p^e): e residues in [0, p), coefficient of 1, x, ..., x^(e-1).
struct FieldElement {
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

struct PrimePower {
    std::uint32_t p;
    std::uint32_t e;
};

/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Human-readable factorization, e.g. "12 = 2^2 * 3".
std::string factorization_string(std::uint64_t q);

/// Throws ParameterError (with the factorization) when q is not a prime power.
FieldSpec build_field(std::uint64_t q);

/// Trial division by every monic polynomial of degree 1 .. deg/2.
bool is_irreducible(std::uint32_t p, const Poly& monic);

/// Canonical ordering: element k has the base-p digits of k as coefficients,
/// least significant digit = coefficient of 1.
std::vector<FieldElement> enumerate_elements(const FieldSpec& spec);
FieldElement element_from_index(const FieldSpec& spec, std::uint64_t k);
std::uint64_t index_of(const FieldSpec& spec, const FieldElement& x);

FieldElement zero(const FieldSpec& spec);
FieldElement one(const FieldSpec& spec);

FieldElement add(const FieldSpec& spec, const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldSpec& spec, const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldSpec& spec, const FieldElement& x);
FieldElement mul(const FieldSpec& spec, const FieldElement& x, const FieldElement& y);
FieldElement pow(const FieldSpec& spec, const FieldElement& x, std::uint64_t exponent);

enum class FieldOp { add, sub, mul, neg };

/// Dispatching form; `y` is ignored for neg.
FieldElement field_arith(const FieldSpec& spec, FieldOp op, const FieldElement& x, const FieldElement& y);

/// chi(x) in {-1, 0, 1} computed as x^((q-1)/2). For even q every nonzero
/// element is a square, so chi is 1 off zero.
int quadratic_character(const FieldSpec& spec, const FieldElement& x);

/// chi over all elements in canonical order.
std::vector<int> character_table(const FieldSpec& spec);

std::string to_string(const FieldSpec& spec, const FieldElement& x);

}  // namespace quhm::gf

#endif  // QUHM_GFIELD_HPP
