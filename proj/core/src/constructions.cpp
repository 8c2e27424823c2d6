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

#include "quhm/constructions.hpp"

#include <cstdlib>
#include <string>
#include <tuple>

#include "quhm/verify.hpp"

namespace quhm {

namespace {

void require_kind(const CoreMatrix& core, CoreKind kind, const char* what) {
    if (core.kind() != kind)
        throw ParameterError(std::string(what) + " requires a " + to_string(kind) + " core, got a " +
                             to_string(core.kind()) + " core of order " + std::to_string(core.order()));
}

void throw_if_failed(const CheckResult& res, const std::string& what) {
    if (!res) throw VerificationError(what + ": " + res.detail);
}

// One step of the real recursion: (X, Y) -> (J_q (x) Y, I_q (x) X + Q (x) Y).
std::pair<IntMatrix, IntMatrix> step(const IntMatrix& x, const IntMatrix& y, const IntMatrix& core,
                                     const IntMatrix& ones_q, const IntMatrix& eye_q) {
    IntMatrix next_x = kron(ones_q, y);
    IntMatrix next_y = kron(eye_q, x) + kron(core, y);
    return {std::move(next_x), std::move(next_y)};
}

}  // namespace

std::size_t order_cap_from_env() {
    const char* raw = std::getenv("QUHM_ORDER_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultOrderCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) throw ParameterError("QUHM_ORDER_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
}

std::size_t checked_order(std::size_t base, unsigned m, std::size_t factor, std::size_t cap) {
    std::size_t order = factor;
    for (unsigned i = 0; i < m; ++i) {
        if (__builtin_mul_overflow(order, base, &order) || order > cap)
            throw ParameterError("order " + std::to_string(base) + "^" + std::to_string(m) +
                                 (factor != 1 ? " * " + std::to_string(factor) : std::string()) +
                                 " exceeds the order cap " + std::to_string(cap));
    }
    if (order > cap) throw ParameterError("order " + std::to_string(order) + " exceeds the order cap " + std::to_string(cap));
    return order;
}

QuhMatrix::QuhMatrix(SignMatrix a, SignMatrix b, std::int64_t q_param, unsigned depth)
    : real_(std::move(a)), imag_(std::move(b)), q_param_(q_param), depth_(depth) {
    if (real_.order() != imag_.order()) throw ParameterError("QUH patterns must have equal order");
    if (q_param_ < 1) throw ParameterError("QUH parameter must be positive");
}

QuhMatrix QuhMatrix::unchecked(SignMatrix a, SignMatrix b, std::int64_t q_param, unsigned depth) {
    return QuhMatrix(std::move(a), std::move(b), q_param, depth);
}

QuhMatrix QuhMatrix::assemble(SignMatrix a, SignMatrix b, std::int64_t q_param, unsigned depth) {
    QuhMatrix h(std::move(a), std::move(b), q_param, depth);
    throw_if_failed(verify_amicable(h.real_, h.imag_), "QUH patterns are not amicable");
    throw_if_failed(verify_pair_identity(h.real_, h.imag_, q_param), "QUH Gram identity");
    return h;
}

SeedPair SeedPair::make(SignMatrix x, SignMatrix y, std::int64_t q) {
    if (x.order() != y.order()) throw ParameterError("seed matrices must have equal order");
    if (q < 1) throw ParameterError("seed parameter q must be positive");
    throw_if_failed(verify_amicable(x, y), "seed is not amicable");
    throw_if_failed(verify_pair_identity(x, y, q), "seed identity X X^T + q Y Y^T = n(q+1) I");
    return SeedPair(std::move(x), std::move(y), q);
}

SignPair construct_seeded(const SeedPair& seed, const CoreMatrix& core, unsigned m, const ConstructOptions& options) {
    require_kind(core, CoreKind::skew, "the real recursion");
    if (seed.q() != static_cast<std::int64_t>(core.order()))
        throw ParameterError("seed was certified for q = " + std::to_string(seed.q()) + " but the core has order " +
                             std::to_string(core.order()));
    const std::size_t q = core.order();
    checked_order(q, m, seed.order(), options.order_cap);

    const IntMatrix ones_q = ones<std::int64_t>(q);
    const IntMatrix eye_q = identity<std::int64_t>(q);
    IntMatrix x = seed.x().values();
    IntMatrix y = seed.y().values();
    for (unsigned level = 1; level <= m; ++level) std::tie(x, y) = step(x, y, core.values(), ones_q, eye_q);

    SignPair out{SignMatrix(std::move(x)), SignMatrix(std::move(y))};
    if (options.verify) {
        throw_if_failed(verify_amicable(out.first, out.second), "recursion output is not amicable");
        throw_if_failed(verify_pair_identity(out.first, out.second, static_cast<std::int64_t>(q)),
                        "recursion output Gram identity");
    }
    return out;
}

SignPair construct_ja(const CoreMatrix& core, unsigned m, const ConstructOptions& options) {
    require_kind(core, CoreKind::skew, "construct_ja");
    const auto q = static_cast<std::int64_t>(core.order());
    // The base pair ([1], [1]) satisfies 1 + q = 1 * (q + 1) for every q.
    static const IntMatrix kUnit = ones<std::int64_t>(1);
    return construct_seeded(SeedPair::make(SignMatrix(kUnit), SignMatrix(kUnit), q), core, m, options);
}

QuhMatrix assemble_quh(const SignMatrix& real_pattern, const SignMatrix& imag_pattern, std::int64_t q,
                       unsigned depth) {
    if (real_pattern.order() != imag_pattern.order()) throw ParameterError("assemble_quh: order mismatch");
    return QuhMatrix::assemble(real_pattern, imag_pattern, q, depth);
}

QuhMatrix construct_quh(const CoreMatrix& core, unsigned m, const ConstructOptions& options) {
    SignPair ja = construct_ja(core, m, options);
    const auto q = static_cast<std::int64_t>(core.order());
    if (options.verify) return assemble_quh(ja.first, ja.second, q, m);
    return QuhMatrix::unchecked(std::move(ja.first), std::move(ja.second), q, m);
}

GaussPair construct_cd(const CoreMatrix& core, unsigned m, const ConstructOptions& options) {
    require_kind(core, CoreKind::symmetric, "construct_cd");
    const std::size_t q = core.order();
    checked_order(q, m, 1, options.order_cap);

    const GaussMatrix ones_q = ones<Gauss>(q);
    const GaussMatrix eye_q = identity<Gauss>(q);
    const GaussMatrix core_g = to_gauss(core.values());
    GaussMatrix c = ones<Gauss>(1);
    GaussMatrix d = ones<Gauss>(1);
    for (unsigned level = 1; level <= m; ++level) {
        GaussMatrix next_c = kron(ones_q, d);
        GaussMatrix next_d = combine<Gauss>(1, kron(eye_q, c), kImagUnit, kron(core_g, d));
        c = std::move(next_c);
        d = std::move(next_d);
    }
    if (options.verify) {
        if (!is_quaternary(c) || !is_quaternary(d)) throw VerificationError("C_m / D_m entries outside {+-1, +-i}");
        throw_if_failed(verify_amicable(c, d), "C_m and D_m are not amicable");
        throw_if_failed(verify_pair_identity(c, d, static_cast<std::int64_t>(q)), "C C^* + q D D^* identity");
    }
    return {std::move(c), std::move(d)};
}

GaussMatrix assemble_quaternary_hadamard(const CoreMatrix& core, unsigned m, const ConstructOptions& options) {
    require_kind(core, CoreKind::symmetric, "assemble_quaternary_hadamard");
    const std::size_t q = core.order();
    checked_order(q, m, q + 1, options.order_cap);
    ConstructOptions inner = options;
    const GaussPair cd = construct_cd(core, m, inner);

    GaussMatrix bordered(q + 1, q + 1, Gauss{0});
    for (std::size_t k = 1; k <= q; ++k) {
        bordered(0, k) = 1;
        bordered(k, 0) = 1;
        for (std::size_t l = 1; l <= q; ++l) bordered(k, l) = core.values()(k - 1, l - 1);
    }
    GaussMatrix out = combine<Gauss>(1, kron(bordered, cd.second), kImagUnit, kron(identity<Gauss>(q + 1), cd.first));
    if (options.verify) throw_if_failed(verify_unit_hadamard(out), "quaternary Hadamard matrix");
    return out;
}

}  // namespace quhm
