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

#include "quhm/gfield.hpp"

#include <sstream>

#include "quhm/errors.hpp"

namespace quhm::gf {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = (lead * m[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly monic_from_index(std::uint32_t p, std::uint32_t degree, std::uint64_t k) {
    Poly poly(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        poly[i] = static_cast<std::uint32_t>(k % p);
        k /= p;
    }
    poly[degree] = 1;
    return poly;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= b;
    return r;
}

void check_element(const FieldSpec& spec, const FieldElement& x) {
    if (x.coeffs.size() != spec.e) throw ParameterError("field element has wrong length");
    for (auto c : x.coeffs)
        if (c >= spec.p) throw ParameterError("field element coefficient not reduced");
}

}  // namespace

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{static_cast<std::uint32_t>(q), 1};
    std::uint32_t e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(p), e};
}

std::string factorization_string(std::uint64_t q) {
    std::ostringstream out;
    out << q << " =";
    if (q < 2) {
        out << " (unit)";
        return out.str();
    }
    bool first = true;
    std::uint64_t rest = q;
    for (std::uint64_t d = 2; d * d <= rest; ++d) {
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e == 0) continue;
        out << (first ? " " : " * ") << d;
        if (e > 1) out << '^' << e;
        first = false;
    }
    if (rest > 1) out << (first ? " " : " * ") << rest;
    return out.str();
}

bool is_irreducible(std::uint32_t p, const Poly& monic) {
    const auto degree = static_cast<std::uint32_t>(monic.size() - 1);
    if (degree <= 1) return degree == 1;
    for (std::uint32_t d = 1; d <= degree / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t k = 0; k < count; ++k) {
            if (poly_mod(monic, monic_from_index(p, d, k), p).empty()) return false;
        }
    }
    return true;
}

FieldSpec build_field(std::uint64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw ParameterError("q is not a prime power: " + factorization_string(q));
    if (q > (std::uint64_t{1} << 31)) throw ParameterError("field order too large");
    FieldSpec spec;
    spec.p = pp->p;
    spec.e = pp->e;
    spec.q = q;
    if (spec.e == 1) {
        spec.modulus = {0, 1};
        return spec;
    }
    const std::uint64_t count = ipow(spec.p, spec.e);
    for (std::uint64_t k = 0; k < count; ++k) {
        Poly candidate = monic_from_index(spec.p, spec.e, k);
        if (is_irreducible(spec.p, candidate)) {
            spec.modulus = std::move(candidate);
            return spec;
        }
    }
    throw Error("no irreducible polynomial found");  // unreachable for prime p
}

FieldElement element_from_index(const FieldSpec& spec, std::uint64_t k) {
    if (k >= spec.q) throw ParameterError("field element index out of range");
    FieldElement x;
    x.coeffs.resize(spec.e);
    for (std::uint32_t i = 0; i < spec.e; ++i) {
        x.coeffs[i] = static_cast<std::uint32_t>(k % spec.p);
        k /= spec.p;
    }
    return x;
}

std::uint64_t index_of(const FieldSpec& spec, const FieldElement& x) {
    check_element(spec, x);
    std::uint64_t k = 0;
    for (std::uint32_t i = spec.e; i-- > 0;) k = k * spec.p + x.coeffs[i];
    return k;
}

std::vector<FieldElement> enumerate_elements(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.q);
    for (std::uint64_t k = 0; k < spec.q; ++k) out.push_back(element_from_index(spec, k));
    return out;
}

FieldElement zero(const FieldSpec& spec) { return FieldElement{std::vector<std::uint32_t>(spec.e, 0)}; }

FieldElement one(const FieldSpec& spec) {
    FieldElement x = zero(spec);
    x.coeffs[0] = 1 % spec.p;
    return x;
}

FieldElement add(const FieldSpec& spec, const FieldElement& x, const FieldElement& y) {
    check_element(spec, x);
    check_element(spec, y);
    FieldElement r = x;
    for (std::uint32_t i = 0; i < spec.e; ++i) r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % spec.p;
    return r;
}

FieldElement neg(const FieldSpec& spec, const FieldElement& x) {
    check_element(spec, x);
    FieldElement r = x;
    for (auto& c : r.coeffs) c = (spec.p - c) % spec.p;
    return r;
}

FieldElement sub(const FieldSpec& spec, const FieldElement& x, const FieldElement& y) {
    return add(spec, x, neg(spec, y));
}

FieldElement mul(const FieldSpec& spec, const FieldElement& x, const FieldElement& y) {
    check_element(spec, x);
    check_element(spec, y);
    Poly prod(2 * spec.e - 1, 0);
    for (std::uint32_t i = 0; i < spec.e; ++i) {
        for (std::uint32_t j = 0; j < spec.e; ++j) {
            const std::uint64_t t = static_cast<std::uint64_t>(x.coeffs[i]) * y.coeffs[j];
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + t) % spec.p);
        }
    }
    if (spec.e > 1) prod = poly_mod(std::move(prod), spec.modulus, spec.p);
    prod.resize(spec.e, 0);
    return FieldElement{std::move(prod)};
}

FieldElement pow(const FieldSpec& spec, const FieldElement& x, std::uint64_t exponent) {
    FieldElement result = one(spec);
    FieldElement base = x;
    while (exponent > 0) {
        if (exponent & 1U) result = mul(spec, result, base);
        base = mul(spec, base, base);
        exponent >>= 1U;
    }
    return result;
}

FieldElement field_arith(const FieldSpec& spec, FieldOp op, const FieldElement& x, const FieldElement& y) {
    switch (op) {
        case FieldOp::add: return add(spec, x, y);
        case FieldOp::sub: return sub(spec, x, y);
        case FieldOp::mul: return mul(spec, x, y);
        case FieldOp::neg: return neg(spec, x);
    }
    throw ParameterError("unknown field operation");
}

int quadratic_character(const FieldSpec& spec, const FieldElement& x) {
    check_element(spec, x);
    if (x == zero(spec)) return 0;
    // Squaring is a bijection in characteristic 2.
    if (spec.p == 2) return 1;
    const FieldElement r = pow(spec, x, (spec.q - 1) / 2);
    if (r == one(spec)) return 1;
    if (r == neg(spec, one(spec))) return -1;
    throw Error("Euler criterion produced neither 1 nor -1");
}

std::vector<int> character_table(const FieldSpec& spec) {
    std::vector<int> table(spec.q);
    for (std::uint64_t k = 0; k < spec.q; ++k) table[k] = quadratic_character(spec, element_from_index(spec, k));
    return table;
}

std::string to_string(const FieldSpec& spec, const FieldElement& x) {
    check_element(spec, x);
    std::string out;
    for (std::uint32_t i = spec.e; i-- > 0;) {
        const auto c = x.coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace quhm::gf
