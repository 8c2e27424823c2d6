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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "quhm/cores.hpp"
#include "quhm/errors.hpp"
#include "quhm/gfield.hpp"
#include "quhm/schemes.hpp"
#include "quhm/verify.hpp"

namespace quhm::cli {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MatrixDocument load_document(const std::string& path) {
    if (path.empty()) throw ParameterError("a document path is required");
    return parse_document(read_input(path));
}

void write_output(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f || !(f << text)) throw ParameterError("cannot write '" + opt.out + "'");
}

CoreMatrix load_core(const Options& opt, std::optional<std::int64_t> fallback_q = std::nullopt) {
    if (!opt.core_file.empty()) return core_from_document(load_document(opt.core_file));
    std::int64_t q = opt.q;
    if (!opt.q_given) {
        if (!fallback_q) throw ParameterError("--q or --core-file is required");
        q = *fallback_q;
    }
    if (q < 1) throw ParameterError("--q must be a positive odd prime power");
    return jacobsthal(static_cast<std::uint64_t>(q));
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += sep;
        s += p;
    }
    return s;
}

std::string chain_string(const std::vector<std::size_t>& dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(dims[i]);
    }
    return s + "]";
}

/// --factorization if given, otherwise the prime chain of q^m when q is a
/// prime power and the product matches the order.
std::optional<std::vector<std::size_t>> block_chain(const Options& opt, const MatrixDocument& doc) {
    if (opt.factorization_given) return opt.factorization;
    if (doc.q < 2 || !gf::as_prime_power(static_cast<std::uint64_t>(doc.q))) return std::nullopt;
    auto dims = prime_factorization_chain(static_cast<std::uint64_t>(doc.q), static_cast<unsigned>(doc.m));
    std::size_t prod = 1;
    for (auto d : dims) prod *= d;
    if (prod != doc.order()) return std::nullopt;
    return dims;
}

void print_result(std::ostream& out, const std::string& name, const CheckResult& r) {
    out << name << ": " << (r.ok ? "PASS" : "FAIL");
    if (!r.ok) {
        if (r.witness) out << " at " << *r.witness;
        if (r.residual != 0) out << " residual " << r.residual;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
    }
    out << '\n';
}

CheckResult from_bool(bool ok, std::string detail = {}) {
    CheckResult r;
    r.ok = ok;
    if (!ok) r.detail = std::move(detail);
    return r;
}

CheckResult check_multicirculant(const std::vector<std::pair<std::string, GaussMatrix>>& payload,
                                 const std::vector<std::size_t>& dims) {
    for (const auto& [name, mat] : payload) {
        if (auto w = multicirculant_witness(mat, dims)) {
            CheckResult r;
            r.ok = false;
            r.witness = w;
            r.detail = name + " is not multicirculant for " + chain_string(dims);
            return r;
        }
    }
    return {};
}

CheckResult check_membership(const SignPair& pair, const CoreMatrix& core, unsigned m, std::ostream& out) {
    const TensorSchemeIndex idx(core, m);
    const char* names[] = {"real/first", "imaginary/second"};
    const SignMatrix* mats[] = {&pair.first, &pair.second};
    for (int k = 0; k < 2; ++k) {
        const auto res = bose_mesner_coeffs(mats[k]->values(), idx);
        if (!res.member) {
            CheckResult r;
            r.ok = false;
            r.witness = res.witness->second;
            std::ostringstream d;
            d << names[k] << " pattern differs from " << res.witness->first << " within one class";
            r.detail = d.str();
            return r;
        }
        const bool small = std::all_of(res.coefficients.begin(), res.coefficients.end(),
                                       [](std::int64_t c) { return c >= -1 && c <= 1; });
        out << "  " << names[k] << " coefficients over " << idx.class_count() << " classes"
            << (small ? ", all in {-1,0,1}" : "") << '\n';
    }
    return {};
}

CheckResult check_spectrum(const SpectrumResult& spec) {
    if (!spec.member) return from_bool(false, spec.failure);
    for (const auto& c : spec.certificates) {
        if (!c.ok) {
            return from_bool(false, "eigenvalue for class " + std::to_string(c.code) + " is " + c.value.to_string() +
                                        " with the wrong modulus");
        }
    }
    return {};
}

std::vector<std::string> default_checks(const MatrixDocument& doc) {
    switch (doc.kind) {
        case DocKind::core: return {"core"};
        case DocKind::sign_pair: return {"amicable", "gram"};
        case DocKind::quh: {
            std::vector<std::string> c{"amicable", "gram", "unit-hadamard", "regularity"};
            if (butson_parameter_admissible(doc.q)) c.emplace_back("butson");
            return c;
        }
        case DocKind::gauss:
            if (doc.payload.size() == 1) return {"quaternary", "unit-hadamard"};
            return {"quaternary", "amicable", "gram"};
        case DocKind::scheme_coeffs: return {"spectrum"};
    }
    return {};
}

std::set<std::string> allowed_checks(const MatrixDocument& doc) {
    switch (doc.kind) {
        case DocKind::core: return {"core", "multicirculant"};
        case DocKind::sign_pair: return {"amicable", "gram", "multicirculant", "membership"};
        case DocKind::quh:
            return {"amicable", "gram", "unit-hadamard", "regularity", "butson", "multicirculant", "membership",
                    "spectrum"};
        case DocKind::gauss:
            if (doc.payload.size() == 1) return {"quaternary", "unit-hadamard", "multicirculant"};
            return {"quaternary", "amicable", "gram", "multicirculant"};
        case DocKind::scheme_coeffs: return {"spectrum"};
    }
    return {};
}

CheckResult run_check(const std::string& name, const MatrixDocument& doc, const Options& opt, std::ostream& out) {
    const auto q = doc.q;
    if (name == "multicirculant") {
        const auto dims = block_chain(opt, doc);
        if (!dims) throw ParameterError("multicirculant needs --factorization for this document");
        return check_multicirculant(doc.payload, *dims);
    }
    switch (doc.kind) {
        case DocKind::core: {
            const CoreReport rep = verify_core(doc.int_matrix("Q"));
            return from_bool(rep.ok(), rep.ok() ? "" : rep.summary());
        }
        case DocKind::sign_pair:
        case DocKind::quh: {
            const bool is_quh = doc.kind == DocKind::quh;
            const IntMatrix a = doc.int_matrix(is_quh ? "A" : "X");
            const IntMatrix b = doc.int_matrix(is_quh ? "B" : "Y");
            if (name == "amicable") return verify_amicable(a, b);
            if (name == "gram") return verify_pair_identity(a, b, q);
            if (name == "membership") {
                const CoreMatrix core = load_core(opt, q);
                return check_membership(pair_from_document(doc), core, static_cast<unsigned>(doc.m), out);
            }
            const QuhMatrix h = quh_from_document(doc);
            if (name == "unit-hadamard") return verify_unit_hadamard(h);
            if (name == "regularity") {
                const RegularityReport reg = regularity(h);
                CheckResult r = from_bool(reg.rows_regular && reg.meets_best_bound);
                if (!reg.rows_regular) {
                    r.witness = Coord{*reg.failing_row, 0};
                    r.detail = "row " + std::to_string(*reg.failing_row) + " sum has the wrong modulus";
                } else if (!reg.meets_best_bound) {
                    r.detail = "rows are regular but the excess is below the bound";
                }
                return r;
            }
            if (name == "butson") {
                if (!butson_parameter_admissible(q))
                    return from_bool(false, "q = " + std::to_string(q) + " admits no Butson entries");
                const ButsonVerdict bv = verify_butson(h);
                return from_bool(bv.butson && bv.roots_certified && bv.unreal,
                                 "entries are not certified roots of unity or H is not unit Hadamard");
            }
            if (name == "spectrum") {
                const CoreMatrix core = load_core(opt, q);
                return check_spectrum(spectrum_via_scheme(h, TensorSchemeIndex(core, h.depth())));
            }
            break;
        }
        case DocKind::gauss: {
            if (name == "quaternary") {
                for (const auto& [n, mat] : doc.payload)
                    if (!is_quaternary(mat)) return from_bool(false, n + " has entries outside {+-1, +-i}");
                return {};
            }
            if (doc.payload.size() == 1) {
                if (name == "unit-hadamard") return verify_unit_hadamard(doc.matrix("M"));
                break;
            }
            if (name == "amicable") return verify_amicable(doc.matrix("C"), doc.matrix("D"));
            if (name == "gram") return verify_pair_identity(doc.matrix("C"), doc.matrix("D"), q);
            break;
        }
        case DocKind::scheme_coeffs: {
            if (name == "spectrum") {
                auto vec = [&](const char* n) {
                    const IntMatrix row = doc.int_matrix(n);
                    return std::vector<std::int64_t>(row.data().begin(), row.data().end());
                };
                return check_spectrum(spectrum_from_coefficients(q, static_cast<unsigned>(doc.m), vec("A"), vec("B")));
            }
            break;
        }
    }
    throw ParameterError("check '" + name + "' does not apply to a " + to_string(doc.kind) + " document");
}

std::string excess_summary(const QuhMatrix& h) {
    const ExcessValue ex = excess(h);
    return "excess " + excess_magnitude(ex.u, ex.v, h.q_param());
}

}  // namespace

std::string excess_magnitude(std::int64_t u, std::int64_t v, std::int64_t q) {
    const std::int64_t num = checked_add(checked_mul(u, u), checked_mul(q, checked_mul(v, v)));
    const std::int64_t den = q + 1;
    if (num % den != 0) return "|S|^2=" + std::to_string(num) + "/" + std::to_string(den);
    const std::int64_t value = num / den;
    auto isqrt = [](std::int64_t x) {
        auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
        while (r * r > x) --r;
        while ((r + 1) * (r + 1) <= x) ++r;
        return r;
    };
    const std::int64_t root = isqrt(value);
    if (root * root == value) return "|S|=" + std::to_string(root);
    // value = base^e with e odd: |S| = base^{e/2}.
    for (std::int64_t base = 2; base * base * base <= value; ++base) {
        std::int64_t p = base;
        int e = 1;
        while (p < value && p <= value / base) {
            p *= base;
            ++e;
        }
        if (p == value) return "|S|=" + std::to_string(base) + "^{" + std::to_string(e) + "/2}";
    }
    return "|S|=sqrt(" + std::to_string(value) + ")";
}

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::string& kind = opt.construct_kind;
    // Inputs: any problem here is a usage error.
    const CoreMatrix core = load_core(opt);
    std::optional<SeedPair> seed;
    std::int64_t seed_depth = 0;
    if (kind == "seeded") {
        if (opt.seed_file.empty()) throw ParameterError("construct seeded requires --seed-file");
        const MatrixDocument seed_doc = load_document(opt.seed_file);
        // A seed that is itself a depth-k pair over the same core continues that depth.
        if (seed_doc.q == static_cast<std::int64_t>(core.order())) seed_depth = seed_doc.m;
        SignPair p = pair_from_document(seed_doc);
        seed = SeedPair::make(std::move(p.first), std::move(p.second), static_cast<std::int64_t>(core.order()));
    } else if (!opt.seed_file.empty()) {
        throw ParameterError("--seed-file only applies to construct seeded");
    }

    ConstructOptions co;
    co.verify = !opt.no_verify;
    co.order_cap = opt.order_cap;
    const auto q = static_cast<std::int64_t>(core.order());
    const auto m = static_cast<std::int64_t>(opt.m);
    MatrixDocument doc;
    std::vector<std::string> stamp;
    try {
        if (kind == "core") {
            doc = document_from_core(core);
            stamp = {"core"};
        } else if (kind == "ja") {
            doc = document_from_pair(construct_ja(core, opt.m, co), q, m);
            stamp = {"amicable", "gram"};
        } else if (kind == "seeded") {
            doc = document_from_pair(construct_seeded(*seed, core, opt.m, co), q, seed_depth + m);
            doc.meta["seed_order"] = std::to_string(seed->order());
            stamp = {"amicable", "gram"};
        } else if (kind == "quh") {
            const QuhMatrix h = construct_quh(core, opt.m, co);
            if (co.verify) {
                const RegularityReport reg = regularity(h);
                if (!reg.rows_regular || !reg.meets_best_bound)
                    throw VerificationError("constructed QUH is not regular with maximal excess");
            }
            doc = document_from_quh(h);
            stamp = {"amicable", "gram", "regularity"};
        } else if (kind == "cd") {
            doc = document_from_cd(construct_cd(core, opt.m, co), q, m);
            stamp = {"quaternary", "amicable", "gram"};
        } else if (kind == "qhad") {
            doc = document_from_quaternary(assemble_quaternary_hadamard(core, opt.m, co), q, m);
            stamp = {"quaternary", "unit-hadamard"};
        }
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitConstructionFailed;
    }
    if (kind != "core") {
        doc.meta["provenance"] = to_string(core.provenance());
        if (core.provenance() == CoreProvenance::jacobsthal)
            doc.meta["ordering"] = "base-p digits, constant coefficient least significant";
    }
    doc.meta["verified"] = (co.verify || kind == "core") ? join(stamp, ",") : "none";
    write_output(opt, emit(doc, opt.format), out);
    return kExitPass;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    if (std::find(opt.checks.begin(), opt.checks.end(), "excess-lemma") != opt.checks.end()) {
        if (opt.checks.size() != 1) throw ParameterError("excess-lemma cannot be combined with other checks");
        const CoreMatrix core = load_core(opt);
        const ExcessLemmaReport rep = check_excess_lemma(core, opt.m_max, opt.order_cap);
        out << rep.table();
        out << "excess-lemma: " << (rep.ok() ? "PASS" : "FAIL") << '\n';
        return rep.ok() ? kExitPass : kExitCheckFailed;
    }
    const MatrixDocument doc = load_document(opt.path);
    const auto allowed = allowed_checks(doc);
    const std::vector<std::string> checks = opt.checks.empty() ? default_checks(doc) : opt.checks;
    for (const auto& c : checks)
        if (!allowed.count(c))
            throw ParameterError("check '" + c + "' does not apply to a " + to_string(doc.kind) + " document");

    out << to_string(doc.kind) << " q=" << doc.q << " m=" << doc.m << " order " << doc.order() << '\n';
    bool all = true;
    for (const auto& c : checks) {
        const CheckResult r = run_check(c, doc, opt, out);
        print_result(out, c, r);
        all = all && r.ok;
    }
    if (!all) err << "one or more checks failed\n";
    return all ? kExitPass : kExitCheckFailed;
}

int cmd_report(const Options& opt, std::ostream& out, std::ostream& /*err*/) {
    const MatrixDocument doc = load_document(opt.path);
    const std::size_t n = doc.order();
    std::vector<std::string> parts{"order " + std::to_string(n)};
    auto multicirculant_part = [&]() -> std::optional<std::string> {
        const auto dims = block_chain(opt, doc);
        if (!dims) return std::nullopt;
        const bool ok = check_multicirculant(doc.payload, *dims).ok;
        return std::string(ok ? "multicirculant " : "not multicirculant ") + chain_string(*dims);
    };

    switch (doc.kind) {
        case DocKind::core: {
            const CoreReport rep = verify_core(doc.int_matrix("Q"));
            if (!rep.ok()) {
                parts.emplace_back("invalid core");
                break;
            }
            parts.push_back(to_string(*rep.kind()) + " core");
            if (auto mc = multicirculant_part()) parts.push_back(*mc);
            break;
        }
        case DocKind::sign_pair: {
            const IntMatrix x = doc.int_matrix("X");
            const IntMatrix y = doc.int_matrix("Y");
            parts.emplace_back(verify_amicable(x, y).ok ? "amicable pair" : "not amicable");
            const std::int64_t target = checked_mul(static_cast<std::int64_t>(n), doc.q + 1);
            parts.push_back(std::string(verify_pair_identity(x, y, doc.q).ok ? "" : "not ") + "XX^T+" +
                            std::to_string(doc.q) + "YY^T=" + std::to_string(target) + "I");
            if (auto mc = multicirculant_part()) parts.push_back(*mc);
            break;
        }
        case DocKind::quh: {
            const QuhMatrix h = quh_from_document(doc);
            const CheckResult uh = verify_unit_hadamard(h);
            if (!uh.ok) {
                parts.emplace_back("not unit Hadamard");
                break;
            }
            const std::string ns = std::to_string(n);
            if (butson_parameter_admissible(h.q_param())) {
                const ButsonVerdict bv = verify_butson(h);
                parts.push_back("BH(" + ns + "," + std::to_string(bv.k) + ")");
                if (bv.unreal) parts.emplace_back("unreal");
            } else {
                parts.push_back("QUH(" + ns + "," + std::to_string(h.q_param()) + ")");
                parts.emplace_back("unreal");
            }
            parts.emplace_back(is_regular(h) ? "regular" : "not regular");
            parts.push_back(excess_summary(h));
            if (auto mc = multicirculant_part()) parts.push_back(*mc);
            break;
        }
        case DocKind::gauss: {
            const std::string ns = std::to_string(n);
            if (doc.payload.size() == 1) {
                if (verify_unit_hadamard(doc.matrix("M")).ok) {
                    parts.emplace_back("quaternary Hadamard");
                    parts.push_back("MM*=" + ns + "I");
                } else {
                    parts.emplace_back("not unit Hadamard");
                }
            } else {
                const GaussMatrix& c = doc.matrix("C");
                const GaussMatrix& d = doc.matrix("D");
                parts.emplace_back(is_quaternary(c) && is_quaternary(d) ? "quaternary pair" : "non-quaternary pair");
                parts.emplace_back(verify_amicable(c, d).ok ? "amicable" : "not amicable");
                const std::int64_t target = checked_mul(static_cast<std::int64_t>(n), doc.q + 1);
                parts.push_back(std::string(verify_pair_identity(c, d, doc.q).ok ? "" : "not ") + "CC*+" +
                                std::to_string(doc.q) + "DD*=" + std::to_string(target) + "I");
            }
            if (auto mc = multicirculant_part()) parts.push_back(*mc);
            break;
        }
        case DocKind::scheme_coeffs: {
            parts[0] = "classes " + std::to_string(n);
            auto vec = [&](const char* name) {
                const IntMatrix row = doc.int_matrix(name);
                return std::vector<std::int64_t>(row.data().begin(), row.data().end());
            };
            const SpectrumResult spec =
                spectrum_from_coefficients(doc.q, static_cast<unsigned>(doc.m), vec("A"), vec("B"));
            const auto good = std::count_if(spec.certificates.begin(), spec.certificates.end(),
                                            [](const EigenCertificate& c) { return c.ok; });
            parts.push_back("spectrum " + std::to_string(good) + "/" + std::to_string(spec.certificates.size()) +
                            " certified");
            break;
        }
    }
    out << join(parts, ", ") << '\n';
    return kExitPass;
}

int cmd_scheme(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.scheme_action == "axioms") {
        const CoreMatrix core = load_core(opt);
        if (core.kind() != CoreKind::skew) throw ParameterError("the scheme needs a skew core");
        const TernaryMatrix& qm = core.matrix();
        IntMatrix a1(core.order(), core.order());
        for (std::size_t r = 0; r < core.order(); ++r)
            for (std::size_t c = 0; c < core.order(); ++c) a1(r, c) = qm(r, c) == 1 ? 1 : 0;
        const std::vector<IntMatrix> adjacency{identity<std::int64_t>(core.order()), a1, transpose(a1)};
        IntersectionNumbers p;
        const SchemeReport rep = check_scheme_axioms(adjacency, &p);
        auto line = [&](const char* name, bool ok) { out << name << ": " << (ok ? "PASS" : "FAIL") << '\n'; };
        out << "vertices " << core.order() << ", classes 2\n";
        line("(0,1)-matrices", rep.nonzero_01);
        line("(i) A_0 = I", rep.identity_first);
        line("(ii) sum A_i = J", rep.sums_to_ones);
        line("(iii) transpose closed", rep.transpose_closed);
        line("(iv) product closed", rep.product_closed);
        line("(v) commutative", rep.commutative);
        const bool drt = is_doubly_regular_tournament(a1);
        line("doubly regular tournament", drt);
        if (rep.ok()) {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    out << "p_" << i << j << "^k = (" << p[i][j][0] << ", " << p[i][j][1] << ", " << p[i][j][2]
                        << ")\n";
        } else {
            err << rep.failure << '\n';
        }
        return rep.ok() && drt ? kExitPass : kExitCheckFailed;
    }
    if (opt.scheme_action == "eigenmatrix") {
        const CoreMatrix core = load_core(opt);
        const auto q = static_cast<std::int64_t>(core.order());
        const unsigned m = opt.m_given ? opt.m : 1;
        const QuadMatrix pm = tensor_eigenmatrix(eigenmatrix_base(q), m);
        out << "P_" << m << " for q = " << q << " (order " << pm.rows() << ")\n";
        for (std::size_t r = 0; r < pm.rows(); ++r) {
            std::vector<std::string> row;
            for (const QuadComplex& x : pm.row(r)) row.push_back(x.to_string());
            out << join(row, " ") << '\n';
        }
        const IdempotentReport rep = check_idempotents(core);
        out << "idempotents: " << (rep.ok() ? "PASS" : "FAIL") << '\n';
        return rep.ok() ? kExitPass : kExitCheckFailed;
    }
    // membership
    SignPair pair;
    std::int64_t q = 0;
    unsigned m = 0;
    std::optional<CoreMatrix> core;
    if (!opt.path.empty()) {
        const MatrixDocument doc = load_document(opt.path);
        pair = pair_from_document(doc);
        q = doc.q;
        m = static_cast<unsigned>(doc.m);
        core = load_core(opt, q);
    } else {
        core = load_core(opt);
        q = static_cast<std::int64_t>(core->order());
        m = opt.m;
        pair = construct_ja(*core, m, ConstructOptions{false, opt.order_cap});
    }
    const TensorSchemeIndex idx(*core, m);
    const auto ca = bose_mesner_coeffs(pair.first.values(), idx);
    const auto cb = bose_mesner_coeffs(pair.second.values(), idx);
    out << "tensor scheme q=" << q << " m=" << m << ": " << idx.vertex_count() << " vertices, " << idx.class_count()
        << " classes\n";
    bool ok = true;
    for (const auto* res : {&ca, &cb}) {
        const char* name = res == &ca ? "first" : "second";
        if (res->member) {
            out << name << " pattern: member\n";
        } else {
            ok = false;
            out << name << " pattern: FAIL, " << res->witness->first << " and " << res->witness->second
                << " share a class\n";
        }
    }
    if (!ok) return kExitCheckFailed;
    if (idx.class_count() <= kEigenmatrixCap) {
        const SpectrumResult spec = spectrum_from_coefficients(q, m, ca.coefficients, cb.coefficients);
        const CheckResult r = check_spectrum(spec);
        print_result(out, "spectrum", r);
        ok = r.ok;
    }
    if (!opt.out.empty()) write_output(opt, emit(document_from_coeffs(q, m, ca.coefficients, cb.coefficients), opt.format), out);
    return ok ? kExitPass : kExitCheckFailed;
}

}  // namespace quhm::cli
