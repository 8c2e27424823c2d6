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

#include <complex>

#include "quhm/constructions.hpp"
#include "quhm/errors.hpp"
#include "quhm/verify.hpp"
#include "test_support.hpp"

namespace {

using namespace quhm;
using quhm::support::circ;
using quhm::support::Rng;

IntMatrix all_ones(std::size_t n) { return ones<std::int64_t>(n); }

QuhMatrix quh(std::uint64_t q, unsigned m) { return construct_quh(jacobsthal(q), m); }

TEST(Amicable, Examples) {
    EXPECT_TRUE(verify_amicable(SignMatrix(all_ones(3)), SignMatrix(circ({1, -1, 1}))).ok);
    Rng rng(31);
    const SignMatrix m(support::random_sign_values(rng, 6));
    EXPECT_TRUE(verify_amicable(m, m).ok);
    const CheckResult bad = verify_amicable(identity<std::int64_t>(2), IntMatrix{{1, 1}, {-1, 1}});
    EXPECT_FALSE(bad.ok);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_EQ(*bad.witness, (Coord{0, 1}));
    EXPECT_THROW(verify_amicable(all_ones(2), all_ones(3)), ParameterError);
}

TEST(PairIdentity, Examples) {
    EXPECT_TRUE(verify_pair_identity(SignMatrix(all_ones(3)), SignMatrix(circ({1, -1, 1})), 3).ok);
    for (std::int64_t q : {1, 3, 8, 27}) EXPECT_TRUE(verify_pair_identity(all_ones(1), all_ones(1), q).ok);
    const CheckResult bad = verify_pair_identity(SignMatrix(all_ones(3)), SignMatrix(all_ones(3)), 3);
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.residual, 12);
    EXPECT_EQ(*bad.witness, (Coord{0, 1}));
}

TEST(UnitHadamard, Examples) {
    EXPECT_TRUE(verify_unit_hadamard(quh(3, 1)).ok);
    EXPECT_TRUE(verify_unit_hadamard(ones<Gauss>(1)).ok);
    EXPECT_FALSE(verify_unit_hadamard(identity<Gauss>(2)).ok);
    GaussMatrix f{{Gauss{1}, Gauss{1}}, {Gauss{1}, Gauss{-1}}};
    EXPECT_TRUE(verify_unit_hadamard(f).ok);
    GaussMatrix g{{Gauss{2}, Gauss{0}}, {Gauss{0}, Gauss{2}}};
    EXPECT_FALSE(verify_unit_hadamard(g).ok);  // entries not unimodular
}

TEST(UnitHadamard, EquivalentToPairIdentitiesOnRandomPairs) {
    Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(support::uniform(rng, 1, 4));
        const auto q = support::uniform(rng, 1, 5);
        const SignMatrix a(support::random_sign_values(rng, n));
        const SignMatrix b(support::random_sign_values(rng, n));
        const QuhMatrix h = QuhMatrix::unchecked(a, b, q);
        const bool pair = verify_amicable(a, b).ok && verify_pair_identity(a, b, q).ok;
        EXPECT_EQ(verify_unit_hadamard(h).ok, pair);
        // Independent floating-point materialization of H.
        const bool numeric = support::unit_hadamard_residual(support::materialize(h)) < 1e-9;
        EXPECT_EQ(numeric, pair) << "n = " << n << " q = " << q;
    }
}

TEST(UnitHadamard, FloatingPointAgreesOnConstructions) {
    for (auto [q, m] : support::grid({3, 7, 11}, 200)) {
        const QuhMatrix h = quh(q, m);
        EXPECT_TRUE(verify_unit_hadamard(h).ok);
        EXPECT_LT(support::unit_hadamard_residual(support::materialize(h)), 1e-9);
    }
}

TEST(Butson, ParameterAdmissible) {
    EXPECT_TRUE(butson_parameter_admissible(3));
    EXPECT_TRUE(butson_parameter_admissible(1));
    for (std::int64_t q = 2; q < 200; ++q)
        if (q != 3) EXPECT_FALSE(butson_parameter_admissible(q)) << q;
    EXPECT_THROW(butson_parameter_admissible(0), ParameterError);
}

TEST(Butson, RootOfUnityOnlyForOneAndThree) {
    // (1 + i sqrt(m)) / sqrt(m + 1) has argument atan(sqrt(m)); it is a root of
    // unity iff that argument is a rational multiple of pi. Check numerically
    // against orders up to 1000.
    for (std::int64_t m = 1; m <= 50; ++m) {
        const double theta = std::atan(std::sqrt(static_cast<double>(m)));
        bool root = false;
        for (int k = 1; k <= 1000 && !root; ++k) {
            const double turns = k * theta / (2 * M_PI);
            root = std::abs(turns - std::round(turns)) < 1e-9;
        }
        EXPECT_EQ(root, butson_parameter_admissible(m)) << "m = " << m;
    }
}

TEST(Butson, QThreeIsUnrealSixth) {
    for (unsigned m = 0; m <= 3; ++m) {
        const ButsonVerdict v = verify_butson(quh(3, m));
        EXPECT_TRUE(v.butson);
        EXPECT_EQ(v.k, 6);
        EXPECT_TRUE(v.unreal);
        EXPECT_TRUE(v.roots_certified);
        EXPECT_TRUE(v.unit_hadamard);
    }
    const ButsonVerdict seven = verify_butson(quh(7, 1));
    EXPECT_FALSE(seven.butson);
    EXPECT_EQ(seven.k, 0);
}

TEST(Butson, ExponentsMatchEntries) {
    const QuhMatrix h = quh(3, 2);
    const IntMatrix e = butson_exponents(h);
    const auto hn = support::materialize(h);
    for (std::size_t r = 0; r < h.order(); ++r)
        for (std::size_t c = 0; c < h.order(); ++c) {
            const std::complex<double> z = std::polar(1.0, 2 * M_PI * static_cast<double>(e(r, c)) / 6.0);
            EXPECT_LT(std::abs(z - hn[r][c]), 1e-12);
        }
}

TEST(Butson, QOneIsEighth) {
    // Smallest nontrivial QUH(n, 1): search all sign pairs of order 2.
    std::optional<QuhMatrix> found;
    for (int mask_a = 0; mask_a < 16 && !found; ++mask_a)
        for (int mask_b = 0; mask_b < 16 && !found; ++mask_b) {
            IntMatrix x(2, 2);
            IntMatrix y(2, 2);
            for (int k = 0; k < 4; ++k) {
                x(k / 2, k % 2) = (mask_a >> k) & 1 ? 1 : -1;
                y(k / 2, k % 2) = (mask_b >> k) & 1 ? 1 : -1;
            }
            if (verify_amicable(x, y).ok && verify_pair_identity(x, y, 1).ok)
                found = QuhMatrix::assemble(SignMatrix(x), SignMatrix(y), 1);
        }
    ASSERT_TRUE(found.has_value());
    const ButsonVerdict v = verify_butson(*found);
    EXPECT_TRUE(v.butson);
    EXPECT_EQ(v.k, 8);
    EXPECT_TRUE(v.roots_certified);
    const QuhMatrix single = QuhMatrix::assemble(SignMatrix(all_ones(1)), SignMatrix(all_ones(1)), 3);
    EXPECT_EQ(verify_butson(single).k, 6);
}

TEST(Excess, DepthOneQThree) {
    const QuhMatrix h = quh(3, 1);
    const ExcessValue ex = excess(h);
    EXPECT_EQ(ex.u, 9);
    EXPECT_EQ(ex.v, 3);
    EXPECT_EQ(ex.magnitude_squared_times_qplus1, 108);
    const RegularityReport reg = regularity(h);
    EXPECT_TRUE(reg.rows_regular);
    EXPECT_TRUE(reg.meets_best_bound);
    for (std::size_t r = 0; r < 3; ++r) {
        const auto ra = row_sums(h.real_pattern().values())[r];
        const auto rb = row_sums(h.imag_pattern().values())[r];
        EXPECT_EQ(ra, 3);
        EXPECT_EQ(rb, 1);
    }
    const QuhMatrix one = quh(3, 0);
    EXPECT_EQ(excess(one).magnitude_squared_times_qplus1, 4);
    EXPECT_TRUE(is_regular(one));
}

TEST(Excess, BestBoundOnNegatedRow) {
    // Negating a row of both patterns keeps H unit Hadamard and every row
    // regular, but the row sums no longer agree, so the bound is strict.
    for (auto [q, m] : support::grid({3, 7, 11}, 200, 1)) {
        const QuhMatrix h = quh(q, m);
        IntMatrix a = h.real_pattern().values();
        IntMatrix b = h.imag_pattern().values();
        for (std::size_t c = 0; c < a.cols(); ++c) {
            a(0, c) = -a(0, c);
            b(0, c) = -b(0, c);
        }
        const QuhMatrix g = QuhMatrix::assemble(SignMatrix(a), SignMatrix(b), h.q_param(), m);
        const RegularityReport reg = regularity(g);
        EXPECT_TRUE(reg.rows_regular);
        EXPECT_TRUE(reg.within_best_bound);
        EXPECT_FALSE(reg.meets_best_bound);
    }
}

TEST(Excess, BoundHoldsOnRandomUnitHadamardAndEqualityImpliesRegular) {
    // Random row negations and column negations of constructed matrices.
    Rng rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint64_t q = trial % 2 ? 3 : 7;
        const QuhMatrix h = quh(q, trial % 3 == 0 ? 2 : 1);
        IntMatrix a = h.real_pattern().values();
        IntMatrix b = h.imag_pattern().values();
        const std::size_t n = a.rows();
        for (std::size_t k = 0; k < n; ++k) {
            if (support::uniform(rng, 0, 3) == 0)
                for (std::size_t t = 0; t < n; ++t) {
                    a(k, t) = -a(k, t);
                    b(k, t) = -b(k, t);
                }
            if (support::uniform(rng, 0, 3) == 0)
                for (std::size_t t = 0; t < n; ++t) {
                    a(t, k) = -a(t, k);
                    b(t, k) = -b(t, k);
                }
        }
        const QuhMatrix g = QuhMatrix::assemble(SignMatrix(a), SignMatrix(b), h.q_param());
        const RegularityReport reg = regularity(g);
        EXPECT_TRUE(reg.within_best_bound);
        if (reg.meets_best_bound) EXPECT_TRUE(reg.rows_regular);
    }
}

TEST(Excess, GridMatchesClosedForm) {
    for (auto [q, m] : support::grid({3, 7, 11, 19, 23, 27}, 800)) {
        const QuhMatrix h = quh(q, m);
        const ExcessValue ex = excess(h);
        const auto qi = static_cast<std::int64_t>(q);
        EXPECT_EQ(ex.magnitude_squared_times_qplus1, (qi + 1) * checked_pow(qi, 3 * m));
        EXPECT_TRUE(is_regular(h));
    }
}

TEST(ExcessLemma, ClosedFormsAndTable) {
    EXPECT_EQ(expected_excess_j(3, 1), 9);
    EXPECT_EQ(expected_excess_a(3, 1), 3);
    EXPECT_EQ(expected_excess_j(3, 2), 27);
    EXPECT_EQ(expected_excess_a(3, 2), 27);
    EXPECT_EQ(expected_excess_j(7, 2), 343);
    const ExcessLemmaReport rep = check_excess_lemma(jacobsthal(3), 5, 2048);
    ASSERT_EQ(rep.rows.size(), 6u);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.rows[1].sum_j, 9);
    EXPECT_EQ(rep.rows[1].sum_a, 3);
    EXPECT_EQ(rep.rows[2].sum_j, 27);
    EXPECT_EQ(rep.rows[2].sum_a, 27);
    const ExcessLemmaReport r7 = check_excess_lemma(jacobsthal(7), 2, 2048);
    EXPECT_EQ(r7.rows[2].sum_j, 343);
    EXPECT_EQ(r7.rows[2].sum_a, 343);
    EXPECT_NE(rep.table().find("pass"), std::string::npos);
    // Stops at the cap.
    EXPECT_EQ(check_excess_lemma(jacobsthal(11), 4, 200).rows.size(), 3u);
}

TEST(NegativeControls, SingleFlipIsCaughtWithWitness) {
    Rng rng(34);
    const QuhMatrix h = quh(7, 2);
    const std::size_t n = h.order();
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a = h.real_pattern().values();
        IntMatrix b = h.imag_pattern().values();
        const auto r = static_cast<std::size_t>(support::uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        const auto c = static_cast<std::size_t>(support::uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        IntMatrix& target = trial % 2 ? a : b;
        target(r, c) = -target(r, c);
        const CheckResult ident = verify_pair_identity(a, b, 7);
        ASSERT_FALSE(ident.ok);
        // Only row r of the Gram sum changes, and its diagonal is fixed: the first
        // deviating coordinate lies in row r (or in column r above it).
        ASSERT_TRUE(ident.witness.has_value());
        EXPECT_TRUE(ident.witness->row == r || ident.witness->col == r) << ident.witness->row << "," << ident.witness->col;
        EXPECT_FALSE(verify_unit_hadamard(QuhMatrix::unchecked(SignMatrix(a), SignMatrix(b), 7)).ok);
    }
}

}  // namespace
