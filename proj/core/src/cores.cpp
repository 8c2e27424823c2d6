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

#include "quhm/cores.hpp"

#include <sstream>

#include "quhm/gfield.hpp"

namespace quhm {

std::string to_string(CoreKind kind) { return kind == CoreKind::skew ? "skew" : "symmetric"; }

std::string to_string(CoreProvenance provenance) {
    switch (provenance) {
        case CoreProvenance::jacobsthal: return "jacobsthal";
        case CoreProvenance::extracted: return "extracted";
        case CoreProvenance::user_supplied: return "user-supplied";
    }
    return "unknown";
}

std::optional<CoreKind> CoreReport::kind() const {
    if (skew) return CoreKind::skew;
    if (symmetric) return CoreKind::symmetric;
    return std::nullopt;
}

bool CoreReport::ok() const {
    return square && zero_diagonal && offdiagonal_signs && zero_line_sums && gram_identity && (symmetric || skew);
}

std::string CoreReport::summary() const {
    std::ostringstream out;
    auto line = [&out](const char* name, bool pass, const std::optional<Coord>& at) {
        out << name << ": " << (pass ? "pass" : "FAIL");
        if (!pass && at) out << " at " << *at;
        out << '\n';
    };
    out << "order: " << order << '\n';
    if (!square) {
        out << "square: FAIL\n";
        return out.str();
    }
    line("zero diagonal", zero_diagonal, zero_diagonal_witness);
    line("off-diagonal +-1", offdiagonal_signs, offdiagonal_witness);
    line("zero row/column sums", zero_line_sums, line_sum_witness);
    line("gram QQ^T = qI - J", gram_identity, gram_witness);
    out << "kind: " << (kind() ? to_string(*kind()) : std::string("neither symmetric nor skew")) << '\n';
    return out.str();
}

CoreReport verify_core(const IntMatrix& qm) {
    CoreReport rep;
    rep.order = qm.rows();
    if (!qm.is_square()) {
        rep.square = rep.zero_diagonal = rep.offdiagonal_signs = rep.zero_line_sums = rep.gram_identity = false;
        rep.symmetric = rep.skew = false;
        return rep;
    }
    const std::size_t n = qm.rows();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const auto v = qm(r, c);
            if (r == c && v != 0 && rep.zero_diagonal) {
                rep.zero_diagonal = false;
                rep.zero_diagonal_witness = Coord{r, c};
            }
            if (r != c && v != 1 && v != -1 && rep.offdiagonal_signs) {
                rep.offdiagonal_signs = false;
                rep.offdiagonal_witness = Coord{r, c};
            }
            if (v != qm(c, r) && rep.symmetric) {
                rep.symmetric = false;
                rep.symmetry_witness = Coord{r, c};
            }
            if (v != -qm(c, r) && rep.skew) {
                rep.skew = false;
                rep.skew_witness = Coord{r, c};
            }
        }
    }
    const auto rows = row_sums(qm);
    const auto cols = row_sums(transpose(qm));
    for (std::size_t i = 0; i < n && rep.zero_line_sums; ++i) {
        if (rows[i] != 0) {
            rep.zero_line_sums = false;
            rep.line_sum_witness = Coord{i, 0};
        } else if (cols[i] != 0) {
            rep.zero_line_sums = false;
            rep.line_sum_witness = Coord{0, i};
        }
    }
    const IntMatrix g = gram(qm, qm);
    const auto q = static_cast<std::int64_t>(n);
    for (std::size_t r = 0; r < n && rep.gram_identity; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::int64_t expected = (r == c ? q : 0) - 1;
            if (g(r, c) != expected) {
                rep.gram_identity = false;
                rep.gram_witness = Coord{r, c};
                break;
            }
        }
    }
    return rep;
}

CoreMatrix CoreMatrix::from_matrix(TernaryMatrix q_matrix, CoreProvenance provenance) {
    const CoreReport rep = verify_core(q_matrix);
    if (!rep.ok()) throw VerificationError("invalid core:\n" + rep.summary());
    return CoreMatrix(std::move(q_matrix), *rep.kind(), provenance);
}

CoreMatrix jacobsthal(std::uint64_t q) {
    const gf::FieldSpec spec = gf::build_field(q);
    if (spec.p == 2) throw ParameterError("Jacobsthal matrix requires odd q, got " + std::to_string(q));
    const auto chi = gf::character_table(spec);
    const auto elems = gf::enumerate_elements(spec);
    IntMatrix m(q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) m(i, j) = chi[gf::index_of(spec, gf::sub(spec, elems[i], elems[j]))];
    return CoreMatrix::from_matrix(TernaryMatrix(std::move(m)), CoreProvenance::jacobsthal);
}

SkewHadamardReport check_skew_hadamard(const SignMatrix& h) {
    SkewHadamardReport rep;
    const std::size_t n = h.order();
    rep.skew_type = true;
    for (std::size_t r = 0; r < n && rep.skew_type; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::int64_t expected = r == c ? 2 : 0;
            if (h(r, c) + h(c, r) != expected) {
                rep.skew_type = false;
                rep.witness = Coord{r, c};
                break;
            }
        }
    }
    const IntMatrix g = gram(h.values(), h.values());
    rep.hadamard = true;
    for (std::size_t r = 0; r < n && rep.hadamard; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::int64_t expected = r == c ? static_cast<std::int64_t>(n) : 0;
            if (g(r, c) != expected) {
                rep.hadamard = false;
                if (!rep.witness) rep.witness = Coord{r, c};
                break;
            }
        }
    }
    return rep;
}

SignMatrix paley_skew_hadamard(std::uint64_t q) {
    if (q % 4 != 3) throw ParameterError("skew Paley matrix requires q = 3 (mod 4), got " + std::to_string(q));
    const CoreMatrix core = jacobsthal(q);
    const std::size_t n = q + 1;
    IntMatrix h(n, n);
    h(0, 0) = 1;
    for (std::size_t k = 1; k < n; ++k) {
        h(0, k) = 1;
        h(k, 0) = -1;
        for (std::size_t l = 1; l < n; ++l) h(k, l) = core.values()(k - 1, l - 1) + (k == l ? 1 : 0);
    }
    SignMatrix out(std::move(h));
    const auto rep = check_skew_hadamard(out);
    if (!rep.hadamard || !rep.skew_type) throw VerificationError("Paley matrix failed skew Hadamard check");
    return out;
}

CoreMatrix extract_core(const SignMatrix& h) {
    const auto rep = check_skew_hadamard(h);
    if (!rep.skew_type) throw VerificationError("input is not skew type (H + H^T != 2I)");
    if (!rep.hadamard) throw VerificationError("input is not a Hadamard matrix (H H^T != nI)");
    const std::size_t n = h.order();
    // D H D with D = diag(1, h(0,1), ..., h(0,n-1)) keeps H = I + W skew type.
    std::vector<std::int64_t> d(n, 1);
    for (std::size_t k = 1; k < n; ++k) d[k] = h(0, k);
    IntMatrix norm(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) norm(r, c) = d[r] * h(r, c) * d[c];
    for (std::size_t k = 1; k < n; ++k) {
        if (norm(0, k) != 1 || norm(k, 0) != -1)
            throw VerificationError("normal form [[1, j], [-j^T, I+Q]] unreachable at index " + std::to_string(k));
    }
    if (norm(0, 0) != 1) throw VerificationError("normal form corner is not 1");
    IntMatrix core(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 1; c < n; ++c) core(r - 1, c - 1) = norm(r, c) - (r == c ? 1 : 0);
    return CoreMatrix::from_matrix(TernaryMatrix(std::move(core)), CoreProvenance::extracted);
}

std::vector<std::size_t> prime_factorization_chain(std::uint64_t q, unsigned m) {
    if (q == 1) return {};
    const auto pp = gf::as_prime_power(q);
    if (!pp) throw ParameterError("no prime chain for " + gf::factorization_string(q));
    return std::vector<std::size_t>(static_cast<std::size_t>(pp->e) * m, pp->p);
}

}  // namespace quhm
