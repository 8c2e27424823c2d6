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

#include <gtest/gtest.h>

#include "quhm/constructions.hpp"
#include "quhm/errors.hpp"
#include "quhm/verify.hpp"
#include "test_support.hpp"

namespace {

using namespace quhm;
using quhm::support::circ;

IntMatrix eye(std::size_t n) { return identity<std::int64_t>(n); }
IntMatrix all_ones(std::size_t n) { return ones<std::int64_t>(n); }

/// A straight transcription of the recursion, used as the reference.
std::pair<IntMatrix, IntMatrix> reference_ja(const IntMatrix& core, unsigned m, IntMatrix x, IntMatrix y) {
    const std::size_t q = core.rows();
    for (unsigned level = 0; level < m; ++level) {
        IntMatrix nx = kron(all_ones(q), y);
        IntMatrix ny = kron(eye(q), x) + kron(core, y);
        x = std::move(nx);
        y = std::move(ny);
    }
    return {x, y};
}

TEST(ConstructJa, DepthZeroAndOne) {
    const CoreMatrix c3 = jacobsthal(3);
    const SignPair p0 = construct_ja(c3, 0);
    EXPECT_EQ(p0.first.values(), all_ones(1));
    EXPECT_EQ(p0.second.values(), all_ones(1));
    const SignPair p1 = construct_ja(c3, 1);
    EXPECT_EQ(p1.first.values(), all_ones(3));
    EXPECT_EQ(p1.second.values(), circ({1, -1, 1}));
}

TEST(ConstructJa, GramIdentityAtDepthOne) {
    const SignPair p1 = construct_ja(jacobsthal(3), 1);
    const IntMatrix jj = support::naive_gram(p1.first.values(), p1.first.values());
    const IntMatrix aa = support::naive_gram(p1.second.values(), p1.second.values());
    EXPECT_EQ(jj, scale<std::int64_t>(3, all_ones(3)));
    EXPECT_EQ(aa, combine<std::int64_t>(4, eye(3), -1, all_ones(3)));
    EXPECT_EQ(combine<std::int64_t>(1, jj, 3, aa), scale<std::int64_t>(12, eye(3)));
}

TEST(ConstructJa, MatchesReferenceAndIdentitiesOnGrid) {
    for (auto [q, m] : support::grid({3, 7, 11, 19, 23, 27}, 400)) {
        const CoreMatrix core = jacobsthal(q);
        const SignPair p = construct_ja(core, m);
        const auto ref = reference_ja(core.values(), m, all_ones(1), all_ones(1));
        EXPECT_EQ(p.first.values(), ref.first);
        EXPECT_EQ(p.second.values(), ref.second);
        const std::size_t n = p.first.order();
        const IntMatrix ab = support::naive_gram(ref.first, ref.second);
        EXPECT_EQ(ab, transpose(ab)) << q << "^" << m;
        const auto qi = static_cast<std::int64_t>(q);
        EXPECT_EQ(combine<std::int64_t>(1, support::naive_gram(ref.first, ref.first), qi,
                                        support::naive_gram(ref.second, ref.second)),
                  scale<std::int64_t>(static_cast<std::int64_t>(n) * (qi + 1), eye(n)));
        if (m >= 1) {
            // J_m = J_q (x) A_{m-1}: all q x q blocks are equal.
            const std::size_t b = n / q;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) ASSERT_EQ(p.first(r, c), p.first(r % b, c % b));
        }
    }
}

TEST(ConstructJa, RejectsSymmetricCoreAndCap) {
    EXPECT_THROW(construct_ja(jacobsthal(5), 1), ParameterError);
    ConstructOptions small;
    small.order_cap = 100;
    EXPECT_THROW(construct_ja(jacobsthal(11), 2, small), ParameterError);
    EXPECT_NO_THROW(construct_ja(jacobsthal(7), 2, small));
}

TEST(ConstructSeeded, TrivialSeedReproducesJa) {
    const CoreMatrix core = jacobsthal(7);
    const SeedPair seed = SeedPair::make(SignMatrix(all_ones(1)), SignMatrix(all_ones(1)), 7);
    for (unsigned m = 0; m <= 3; ++m) {
        const SignPair a = construct_seeded(seed, core, m);
        const SignPair b = construct_ja(core, m);
        EXPECT_EQ(a.first, b.first);
        EXPECT_EQ(a.second, b.second);
    }
}

TEST(ConstructSeeded, LevelOneSeedShiftsDepth) {
    const CoreMatrix core = jacobsthal(3);
    const SignPair one = construct_ja(core, 1);
    const SeedPair seed = SeedPair::make(one.first, one.second, 3);
    const SignPair from_seed = construct_seeded(seed, core, 1);
    const SignPair direct = construct_ja(core, 2);
    EXPECT_EQ(from_seed.first, direct.first);
    EXPECT_EQ(from_seed.second, direct.second);
}

TEST(ConstructSeeded, NontrivialSeedIdentity) {
    // Seed of order 3 from the q = 3 core, used with the q = 3 core for two more levels.
    const CoreMatrix core = jacobsthal(3);
    const SignPair one = construct_ja(core, 1);
    const SeedPair seed = SeedPair::make(one.first, one.second, 3);
    const SignPair out = construct_seeded(seed, core, 2);
    EXPECT_EQ(out.first.order(), 27u);
    EXPECT_TRUE(verify_pair_identity(out.first, out.second, 3).ok);
    EXPECT_TRUE(verify_amicable(out.first, out.second).ok);
}

TEST(ConstructSeeded, RejectsBadSeeds) {
    EXPECT_THROW(SeedPair::make(SignMatrix(all_ones(3)), SignMatrix(all_ones(3)), 3), VerificationError);
    const SeedPair seed = SeedPair::make(SignMatrix(all_ones(1)), SignMatrix(all_ones(1)), 3);
    EXPECT_THROW(construct_seeded(seed, jacobsthal(7), 1), ParameterError);
    // Not amicable: I_2 against [[1,1],[-1,1]] is caught by the amicability check first.
    EXPECT_THROW(SeedPair::make(SignMatrix(IntMatrix{{1, -1}, {-1, 1}}), SignMatrix(IntMatrix{{1, 1}, {-1, 1}}), 1),
                 VerificationError);
}

TEST(AssembleQuh, Examples) {
    const QuhMatrix h = assemble_quh(SignMatrix(all_ones(3)), SignMatrix(circ({1, -1, 1})), 3, 1);
    EXPECT_EQ(h.order(), 3u);
    EXPECT_EQ(h.q_param(), 3);
    for (std::int64_t q : {1, 2, 3, 7, 100}) EXPECT_NO_THROW(assemble_quh(SignMatrix(all_ones(1)), SignMatrix(all_ones(1)), q));
    EXPECT_THROW(assemble_quh(SignMatrix(all_ones(3)), SignMatrix(all_ones(3)), 3), VerificationError);
}

TEST(ConstructCd, DepthOneForFive) {
    const CoreMatrix c5 = jacobsthal(5);
    const GaussPair cd = construct_cd(c5, 1);
    EXPECT_EQ(cd.first, ones<Gauss>(5));
    GaussMatrix expected = identity<Gauss>(5);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            if (r != c) expected(r, c) = Gauss{0, c5.values()(r, c)};
    EXPECT_EQ(cd.second, expected);
    const GaussMatrix dd = support::naive_gram(cd.second, cd.second);
    EXPECT_EQ(dd, combine<Gauss>(6, identity<Gauss>(5), -1, ones<Gauss>(5)));
    const GaussMatrix cc = support::naive_gram(cd.first, cd.first);
    EXPECT_EQ(combine<Gauss>(1, cc, 5, dd), scale<Gauss>(30, identity<Gauss>(5)));
}

TEST(ConstructCd, DepthZeroEntryDomainAndRejection) {
    const GaussPair cd0 = construct_cd(jacobsthal(13), 0);
    EXPECT_EQ(cd0.first, ones<Gauss>(1));
    EXPECT_EQ(cd0.second, ones<Gauss>(1));
    for (std::uint64_t q : {5u, 9u, 13u}) {
        for (unsigned m = 0; m <= 2; ++m) {
            const GaussPair cd = construct_cd(jacobsthal(q), m);
            EXPECT_TRUE(is_quaternary(cd.first));
            EXPECT_TRUE(is_quaternary(cd.second));
        }
    }
    EXPECT_THROW(construct_cd(jacobsthal(7), 1), ParameterError);
}

TEST(QuaternaryHadamard, SmallOrders) {
    for (auto [q, m, n] : {std::tuple{5u, 0u, 6u}, std::tuple{5u, 1u, 30u}, std::tuple{13u, 0u, 14u}, std::tuple{9u, 1u, 90u}}) {
        const GaussMatrix mm = assemble_quaternary_hadamard(jacobsthal(q), m);
        ASSERT_EQ(mm.rows(), n);
        EXPECT_TRUE(is_quaternary(mm));
        EXPECT_EQ(support::naive_gram(mm, mm), scale<Gauss>(static_cast<std::int64_t>(n), identity<Gauss>(n)));
    }
}

TEST(QuaternaryHadamard, OrderSixLayout) {
    const GaussMatrix mm = assemble_quaternary_hadamard(jacobsthal(5), 0);
    for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(mm(k, k), kImagUnit);
    for (std::size_t k = 1; k < 6; ++k) {
        EXPECT_EQ(mm(0, k), Gauss{1});
        EXPECT_EQ(mm(k, 0), Gauss{1});
    }
}

TEST(CheckedOrder, Behaviour) {
    EXPECT_EQ(checked_order(3, 4, 1, 2048), 81u);
    EXPECT_EQ(checked_order(5, 2, 6, 2048), 150u);
    EXPECT_THROW(checked_order(3, 7, 1, 2048), ParameterError);
    EXPECT_THROW(checked_order(2, 200, 1, 2048), ParameterError);
}

TEST(OrderCap, Environment) {
    ::setenv("QUHM_ORDER_CAP", "5000", 1);
    EXPECT_EQ(order_cap_from_env(), 5000u);
    ::setenv("QUHM_ORDER_CAP", "abc", 1);
    EXPECT_THROW(order_cap_from_env(), ParameterError);
    ::unsetenv("QUHM_ORDER_CAP");
    EXPECT_EQ(order_cap_from_env(), kDefaultOrderCap);
}

}  // namespace
