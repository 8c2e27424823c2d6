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

#include "quhm/schemes.hpp"

#include <algorithm>

namespace quhm {

namespace {

QuadMatrix to_quad(const IntMatrix& m) {
    QuadMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = QuadComplex(m(r, c));
    return out;
}

// Gauss-Jordan elimination over Q(sqrt(-q)).
QuadMatrix invert(QuadMatrix a) {
    const std::size_t n = a.order();
    QuadMatrix inv = identity<QuadComplex>(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw VerificationError("eigenmatrix is singular");
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a(pivot, k), a(col, k));
                std::swap(inv(pivot, k), inv(col, k));
            }
        }
        const QuadComplex scale = a(col, col).inverse();
        for (std::size_t k = 0; k < n; ++k) {
            a(col, k) = a(col, k) * scale;
            inv(col, k) = inv(col, k) * scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const QuadComplex f = a(r, col);
            for (std::size_t k = 0; k < n; ++k) {
                a(r, k) = a(r, k) - f * a(col, k);
                inv(r, k) = inv(r, k) - f * inv(col, k);
            }
        }
    }
    return inv;
}

std::size_t ipow(std::size_t base, unsigned e) {
    std::size_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) throw ParameterError("tensor scheme too large");
    }
    return r;
}

}  // namespace

SchemeReport check_scheme_axioms(const std::vector<IntMatrix>& adj, IntersectionNumbers* intersection) {
    SchemeReport rep;
    auto fail = [&rep](bool& flag, std::string why) {
        flag = false;
        if (rep.failure.empty()) rep.failure = std::move(why);
    };
    if (adj.empty() || !adj.front().is_square() || adj.front().rows() == 0) {
        fail(rep.nonzero_01, "no square adjacency matrices");
        rep.identity_first = rep.sums_to_ones = rep.transpose_closed = rep.product_closed = rep.commutative = false;
        return rep;
    }
    const std::size_t n = adj.front().rows();
    const std::size_t count = adj.size();
    for (std::size_t i = 0; i < count; ++i) {
        const IntMatrix& a = adj[i];
        if (a.rows() != n || a.cols() != n) {
            fail(rep.nonzero_01, "A_" + std::to_string(i) + " has the wrong shape");
            rep.identity_first = rep.sums_to_ones = rep.transpose_closed = rep.product_closed = rep.commutative = false;
            return rep;
        }
        const bool binary = std::all_of(a.data().begin(), a.data().end(), [](auto v) { return v == 0 || v == 1; });
        const bool nonzero = std::any_of(a.data().begin(), a.data().end(), [](auto v) { return v != 0; });
        if (!binary || !nonzero) fail(rep.nonzero_01, "A_" + std::to_string(i) + " is not a nonzero (0,1)-matrix");
    }
    if (!rep.nonzero_01) {
        rep.identity_first = rep.sums_to_ones = rep.transpose_closed = rep.product_closed = rep.commutative = false;
        return rep;
    }

    if (!(adj[0] == identity<std::int64_t>(n))) fail(rep.identity_first, "axiom (i): A_0 != I");

    IntMatrix total(n, n, 0);
    for (const auto& a : adj) total = total + a;
    if (!(total == ones<std::int64_t>(n))) {
        fail(rep.sums_to_ones, "axiom (ii): sum of A_i != J");
        rep.product_closed = rep.commutative = false;
        for (std::size_t i = 0; i < count; ++i) {
            const IntMatrix t = transpose(adj[i]);
            if (std::none_of(adj.begin(), adj.end(), [&t](const IntMatrix& a) { return a == t; }))
                fail(rep.transpose_closed, "axiom (iii): A_" + std::to_string(i) + "^T is not a relation");
        }
        return rep;
    }

    // cls(r, c): the unique relation containing (r, c).
    std::vector<std::size_t> cls(n * n);
    std::vector<Coord> representative(count);
    for (std::size_t k = count; k-- > 0;)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (adj[k](r, c) == 1) {
                    cls[r * n + c] = k;
                    representative[k] = Coord{r, c};
                }

    for (std::size_t i = 0; i < count; ++i) {
        const IntMatrix t = transpose(adj[i]);
        if (std::none_of(adj.begin(), adj.end(), [&t](const IntMatrix& a) { return a == t; }))
            fail(rep.transpose_closed, "axiom (iii): A_" + std::to_string(i) + "^T is not a relation");
    }

    if (intersection) {
        intersection->assign(count, std::vector<std::vector<std::int64_t>>(count, std::vector<std::int64_t>(count, 0)));
    }
    std::vector<IntMatrix> products(count * count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) products[i * count + j] = multiply(adj[i], adj[j]);

    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            const IntMatrix& prod = products[i * count + j];
            std::vector<std::int64_t> pk(count);
            for (std::size_t k = 0; k < count; ++k) pk[k] = prod(representative[k].row, representative[k].col);
            bool closed = true;
            for (std::size_t r = 0; r < n && closed; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (prod(r, c) != pk[cls[r * n + c]]) {
                        closed = false;
                        break;
                    }
            if (!closed)
                fail(rep.product_closed,
                     "axiom (iv): A_" + std::to_string(i) + " A_" + std::to_string(j) + " is not in the span");
            if (intersection) (*intersection)[i][j] = pk;
            if (!(prod == products[j * count + i]))
                fail(rep.commutative, "axiom (v): A_" + std::to_string(i) + " and A_" + std::to_string(j) + " do not commute");
        }
    }
    return rep;
}

Scheme Scheme::from_adjacency(std::vector<IntMatrix> adjacency) {
    IntersectionNumbers p;
    const SchemeReport rep = check_scheme_axioms(adjacency, &p);
    if (!rep.ok()) throw VerificationError("not a commutative association scheme: " + rep.failure);
    return Scheme(std::move(adjacency), std::move(p));
}

Scheme scheme_from_core(const CoreMatrix& core) {
    if (core.kind() != CoreKind::skew) throw ParameterError("scheme_from_core requires a skew core");
    const std::size_t q = core.order();
    IntMatrix a1(q, q, 0);
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t c = 0; c < q; ++c) a1(r, c) = core.values()(r, c) == 1 ? 1 : 0;
    IntMatrix a2 = transpose(a1);
    return Scheme::from_adjacency({identity<std::int64_t>(q), std::move(a1), std::move(a2)});
}

bool is_doubly_regular_tournament(const IntMatrix& a) {
    if (!a.is_square()) return false;
    const std::size_t n = a.rows();
    if (n % 4 != 3) return false;
    const IntMatrix t = transpose(a);
    if (!(a + t == ones<std::int64_t>(n) - identity<std::int64_t>(n))) return false;
    const auto deg = static_cast<std::int64_t>((n - 1) / 2);
    const auto common = static_cast<std::int64_t>((n - 3) / 4);
    const IntMatrix g = gram(a, a);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (g(r, c) != (r == c ? deg : common)) return false;
    return true;
}

QuadMatrix eigenmatrix_base(std::int64_t q) {
    if (q < 3 || q % 4 != 3) throw ParameterError("eigenmatrix requires q = 3 (mod 4), got " + std::to_string(q));
    const QuadComplex half = QuadComplex::rational((q - 1) / 2, 1);
    const QuadComplex plus(-1, 1, 2, q);
    const QuadComplex minus(-1, -1, 2, q);
    QuadMatrix p(3, 3);
    p(0, 0) = 1;
    p(0, 1) = half;
    p(0, 2) = half;
    p(1, 0) = 1;
    p(1, 1) = plus;
    p(1, 2) = minus;
    p(2, 0) = 1;
    p(2, 1) = minus;
    p(2, 2) = plus;
    return p;
}

QuadMatrix tensor_eigenmatrix(const QuadMatrix& p, unsigned m) {
    if (ipow(p.order(), m) > kEigenmatrixCap)
        throw ParameterError("tensor eigenmatrix of order " + std::to_string(p.order()) + "^" + std::to_string(m) +
                             " exceeds the cap " + std::to_string(kEigenmatrixCap));
    QuadMatrix out = identity<QuadComplex>(1);
    for (unsigned i = 0; i < m; ++i) out = kron(out, p);
    return out;
}

std::array<QuadMatrix, 3> idempotents_base(const CoreMatrix& core) {
    const Scheme s = scheme_from_core(core);
    const QuadMatrix pinv = invert(eigenmatrix_base(static_cast<std::int64_t>(core.order())));
    std::array<QuadMatrix, 3> e;
    for (std::size_t i = 0; i < 3; ++i) {
        QuadMatrix acc(core.order(), core.order(), QuadComplex(0));
        for (std::size_t j = 0; j < 3; ++j) acc = acc + scale(pinv(j, i), to_quad(s.adjacency()[j]));
        e[i] = std::move(acc);
    }
    return e;
}

IdempotentReport check_idempotents(const CoreMatrix& core) {
    IdempotentReport rep;
    const std::size_t q = core.order();
    const auto e = idempotents_base(core);
    const Scheme s = scheme_from_core(core);
    const QuadMatrix p = eigenmatrix_base(static_cast<std::int64_t>(q));
    const QuadMatrix zero(q, q, QuadComplex(0));
    QuadMatrix total = zero;
    for (std::size_t i = 0; i < 3; ++i) {
        total = total + e[i];
        for (std::size_t j = 0; j < 3; ++j) {
            const QuadMatrix prod = multiply(e[i], e[j]);
            if (!(prod == (i == j ? e[i] : zero))) rep.orthogonal_idempotents = false;
            const QuadMatrix ae = multiply(to_quad(s.adjacency()[j]), e[i]);
            if (!(ae == scale(p(i, j), e[i]))) rep.eigen_relation = false;
        }
    }
    rep.resolution_of_identity = total == identity<QuadComplex>(q);
    rep.first_is_averaging =
        e[0] == QuadMatrix(q, q, QuadComplex::rational(1, static_cast<std::int64_t>(q)));
    return rep;
}

TensorSchemeIndex::TensorSchemeIndex(const CoreMatrix& core, unsigned m)
    : q_(core.order()), m_(m), vertex_count_(ipow(core.order(), m)), class_count_(ipow(3, m)), base_class_(q_ * q_) {
    if (core.kind() != CoreKind::skew) throw ParameterError("tensor scheme requires a skew core");
    for (std::size_t r = 0; r < q_; ++r)
        for (std::size_t c = 0; c < q_; ++c) {
            const auto v = core.values()(r, c);
            base_class_[r * q_ + c] = r == c ? 0 : (v == 1 ? 1 : 2);
        }
}

std::size_t TensorSchemeIndex::class_code(std::size_t r, std::size_t c) const {
    if (r >= vertex_count_ || c >= vertex_count_) throw ParameterError("vertex index out of range");
    std::size_t code = 0;
    std::size_t weight = 1;
    for (unsigned t = 0; t < m_; ++t) {
        code += base_class_[(r % q_) * q_ + (c % q_)] * weight;
        r /= q_;
        c /= q_;
        weight *= 3;
    }
    return code;
}

std::vector<int> TensorSchemeIndex::decode(std::size_t code) const {
    if (code >= class_count_) throw ParameterError("class code out of range");
    std::vector<int> tuple(m_);
    for (unsigned t = m_; t-- > 0;) {
        tuple[t] = static_cast<int>(code % 3);
        code /= 3;
    }
    return tuple;
}

std::size_t TensorSchemeIndex::encode(const std::vector<int>& tuple) const {
    if (tuple.size() != m_) throw ParameterError("class tuple has wrong length");
    std::size_t code = 0;
    for (int v : tuple) {
        if (v < 0 || v > 2) throw ParameterError("class label out of range");
        code = code * 3 + static_cast<std::size_t>(v);
    }
    return code;
}

std::vector<int> TensorSchemeIndex::class_of_pair(std::size_t r, std::size_t c) const {
    return decode(class_code(r, c));
}

bool SpectrumResult::all_certified() const {
    return member && !certificates.empty() &&
           std::all_of(certificates.begin(), certificates.end(), [](const EigenCertificate& e) { return e.ok; });
}

SpectrumResult spectrum_from_coefficients(std::int64_t q, unsigned m, const std::vector<std::int64_t>& real_coeffs,
                                          const std::vector<std::int64_t>& imag_coeffs) {
    SpectrumResult res;
    const QuadMatrix pm = tensor_eigenmatrix(eigenmatrix_base(q), m);
    if (real_coeffs.size() != pm.cols() || imag_coeffs.size() != pm.cols())
        throw ParameterError("coefficient vectors must have 3^m entries");
    res.member = true;
    const std::int64_t target = checked_mul(q + 1, checked_pow(q, m));
    const QuadComplex root = QuadComplex::radical(q);
    for (std::size_t row = 0; row < pm.rows(); ++row) {
        QuadComplex la(0);
        QuadComplex lb(0);
        for (std::size_t col = 0; col < pm.cols(); ++col) {
            if (real_coeffs[col] != 0) la = la + pm(row, col) * QuadComplex(real_coeffs[col]);
            if (imag_coeffs[col] != 0) lb = lb + pm(row, col) * QuadComplex(imag_coeffs[col]);
        }
        EigenCertificate cert;
        cert.code = row;
        cert.value = la + root * lb;
        cert.ok = cert.value.norm_numerator() == checked_mul(target, cert.value.norm_denominator());
        res.certificates.push_back(cert);
    }
    return res;
}

SpectrumResult spectrum_via_scheme(const QuhMatrix& h, const TensorSchemeIndex& idx) {
    SpectrumResult res;
    const auto q = static_cast<std::int64_t>(idx.q());
    if (h.q_param() != q) throw ParameterError("QUH parameter does not match the scheme's core order");
    const auto ca = bose_mesner_coeffs(h.real_pattern().values(), idx);
    const auto cb = bose_mesner_coeffs(h.imag_pattern().values(), idx);
    if (!ca.member || !cb.member) {
        res.failure = !ca.member ? "real pattern is not in the Bose-Mesner algebra"
                                 : "imaginary pattern is not in the Bose-Mesner algebra";
        return res;
    }
    res = spectrum_from_coefficients(q, idx.m(), ca.coefficients, cb.coefficients);
    return res;
}

}  // namespace quhm
