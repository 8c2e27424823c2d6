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

#include "quhm/document.hpp"

#include <charconv>
#include <set>
#include <sstream>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

namespace quhm {

namespace {

using nlohmann::json;

std::vector<std::string> expected_names(DocKind kind, std::size_t count) {
    switch (kind) {
        case DocKind::core: return {"Q"};
        case DocKind::sign_pair: return {"X", "Y"};
        case DocKind::quh: return {"A", "B"};
        case DocKind::gauss: return count == 1 ? std::vector<std::string>{"M"} : std::vector<std::string>{"C", "D"};
        case DocKind::scheme_coeffs: return {"A", "B"};
    }
    return {};
}

std::size_t ipow3(std::int64_t m) {
    std::size_t r = 1;
    for (std::int64_t i = 0; i < m; ++i) {
        if (__builtin_mul_overflow(r, std::size_t{3}, &r)) throw ParseError("class count overflows");
    }
    return r;
}

bool is_real(DocKind kind) { return kind != DocKind::gauss; }

char entry_char(Gauss g) {
    if (g.im == 0) {
        if (g.re == 1) return '+';
        if (g.re == -1) return '-';
        if (g.re == 0) return '0';
    } else if (g.re == 0) {
        if (g.im == 1) return 'i';
        if (g.im == -1) return 'j';
    }
    throw ParameterError("entry outside the text alphabet {1, -1, 0, i, -i}");
}

Gauss char_entry(char ch) {
    switch (ch) {
        case '+': return {1, 0};
        case '-': return {-1, 0};
        case '0': return {0, 0};
        case 'i': return {0, 1};
        case 'j': return {0, -1};
        default: break;
    }
    throw ParseError(std::string("invalid matrix character '") + ch + "'");
}

std::int64_t json_int(const json& v, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return v.get<std::int64_t>();
}

Gauss json_entry(const json& v, bool real) {
    if (real) return {json_int(v, "matrix entry"), 0};
    if (!v.is_array() || v.size() != 2) throw ParseError("Gaussian entry must be [re, im]");
    return {json_int(v[0], "real part"), json_int(v[1], "imaginary part")};
}

json entry_json(Gauss g, bool real) {
    if (real) return g.re;
    return json::array({g.re, g.im});
}

}  // namespace

std::string to_string(DocKind kind) {
    switch (kind) {
        case DocKind::core: return "core";
        case DocKind::sign_pair: return "sign-pair";
        case DocKind::quh: return "quh";
        case DocKind::gauss: return "gauss";
        case DocKind::scheme_coeffs: return "scheme-coeffs";
    }
    return "unknown";
}

DocKind doc_kind_from_string(std::string_view s) {
    for (DocKind k : {DocKind::core, DocKind::sign_pair, DocKind::quh, DocKind::gauss, DocKind::scheme_coeffs})
        if (to_string(k) == s) return k;
    throw ParseError("unknown document kind '" + std::string(s) + "'");
}

Format format_from_string(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "txt") return Format::txt;
    throw ParameterError("unknown format '" + std::string(s) + "' (expected json or txt)");
}

const GaussMatrix& MatrixDocument::matrix(std::string_view name) const {
    for (const auto& [n, mat] : payload)
        if (n == name) return mat;
    throw ParseError("document has no matrix named '" + std::string(name) + "'");
}

IntMatrix MatrixDocument::int_matrix(std::string_view name) const {
    const GaussMatrix& g = matrix(name);
    IntMatrix out(g.rows(), g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (g(r, c).im != 0) throw ParseError("matrix '" + std::string(name) + "' has a non-real entry");
            out(r, c) = g(r, c).re;
        }
    return out;
}

std::size_t MatrixDocument::order() const {
    if (payload.empty()) return 0;
    return payload.front().second.cols();
}

void validate(const MatrixDocument& doc) {
    if (doc.q < 1) throw ParseError("q must be positive");
    if (doc.m < 0) throw ParseError("m must be nonnegative");
    const std::size_t count = doc.payload.size();
    const std::size_t wanted = doc.kind == DocKind::core ? 1 : 2;
    if (doc.kind == DocKind::gauss ? (count != 1 && count != 2) : count != wanted)
        throw ParseError(to_string(doc.kind) + " document has " + std::to_string(count) + " matrices");
    const auto names = expected_names(doc.kind, count);
    for (std::size_t i = 0; i < count; ++i)
        if (doc.payload[i].first != names[i])
            throw ParseError("matrix " + std::to_string(i) + " of a " + to_string(doc.kind) + " document must be '" +
                             names[i] + "'");

    const std::size_t n = doc.order();
    for (const auto& [name, mat] : doc.payload) {
        if (doc.kind == DocKind::scheme_coeffs) {
            if (mat.rows() != 1 || mat.cols() != ipow3(doc.m))
                throw ParseError("coefficient vector '" + name + "' must have 3^m entries");
        } else if (!mat.is_square() || mat.rows() != n || n == 0) {
            throw ParseError("matrix '" + name + "' must be square with the document's order");
        }
        for (const Gauss& g : mat.data()) {
            if (is_real(doc.kind) && g.im != 0) throw ParseError("matrix '" + name + "' must be real");
            if ((doc.kind == DocKind::sign_pair || doc.kind == DocKind::quh) && g.re != 1 && g.re != -1)
                throw ParseError("matrix '" + name + "' must have entries +1/-1");
            if (doc.kind == DocKind::core && (g.re < -1 || g.re > 1))
                throw ParseError("core entries must lie in {-1, 0, 1}");
        }
    }
}

std::string emit_json(const MatrixDocument& doc) {
    validate(doc);
    const bool real = is_real(doc.kind);
    json j = json::object();
    j["kind"] = to_string(doc.kind);
    j["q"] = doc.q;
    j["m"] = doc.m;
    for (const auto& [name, mat] : doc.payload) {
        json rows = json::array();
        if (doc.kind == DocKind::scheme_coeffs) {
            for (const Gauss& g : mat.data()) rows.push_back(entry_json(g, real));
        } else {
            for (std::size_t r = 0; r < mat.rows(); ++r) {
                json row = json::array();
                for (const Gauss& g : mat.row(r)) row.push_back(entry_json(g, real));
                rows.push_back(std::move(row));
            }
        }
        j[name] = std::move(rows);
    }
    if (!doc.meta.empty()) j["meta"] = doc.meta;
    return j.dump() + "\n";
}

MatrixDocument parse_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("document needs a string 'kind'");
    MatrixDocument doc;
    doc.kind = doc_kind_from_string(j["kind"].get<std::string>());
    if (!j.contains("q") || !j.contains("m")) throw ParseError("document needs 'q' and 'm'");
    doc.q = json_int(j["q"], "q");
    doc.m = json_int(j["m"], "m");
    const bool real = is_real(doc.kind);

    std::set<std::string> known{"kind", "q", "m", "meta"};
    std::vector<std::string> names;
    if (doc.kind == DocKind::gauss) {
        names = j.contains("M") ? std::vector<std::string>{"M"} : std::vector<std::string>{"C", "D"};
    } else {
        names = expected_names(doc.kind, 2);
    }
    for (const auto& name : names) {
        known.insert(name);
        if (!j.contains(name)) throw ParseError("document is missing matrix '" + name + "'");
        const json& rows = j[name];
        if (!rows.is_array()) throw ParseError("matrix '" + name + "' must be an array");
        GaussMatrix mat;
        if (doc.kind == DocKind::scheme_coeffs) {
            mat = GaussMatrix(1, rows.size());
            for (std::size_t c = 0; c < rows.size(); ++c) mat(0, c) = json_entry(rows[c], real);
        } else {
            const std::size_t n = rows.size();
            mat = GaussMatrix(n, n);
            for (std::size_t r = 0; r < n; ++r) {
                if (!rows[r].is_array() || rows[r].size() != n)
                    throw ParseError("matrix '" + name + "' must be square");
                for (std::size_t c = 0; c < n; ++c) mat(r, c) = json_entry(rows[r][c], real);
            }
        }
        doc.payload.emplace_back(name, std::move(mat));
    }
    if (j.contains("meta")) {
        if (!j["meta"].is_object()) throw ParseError("'meta' must be an object");
        for (const auto& [k, v] : j["meta"].items()) {
            if (!v.is_string()) throw ParseError("meta values must be strings");
            doc.meta[k] = v.get<std::string>();
        }
    }
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw ParseError("unexpected key '" + k + "'");
    validate(doc);
    return doc;
}

std::string emit_text(const MatrixDocument& doc) {
    validate(doc);
    std::string out = to_string(doc.kind) + ' ' + std::to_string(doc.q) + ' ' + std::to_string(doc.m) + ' ' +
                      std::to_string(doc.order()) + '\n';
    bool first = true;
    for (const auto& [name, mat] : doc.payload) {
        if (!first) out += '\n';
        first = false;
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            for (const Gauss& g : mat.row(r)) out += entry_char(g);
            out += '\n';
        }
    }
    return out;
}

MatrixDocument parse_text(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError("empty document");

    std::istringstream header{std::string(lines[0])};
    std::string kind_s;
    std::int64_t q = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::string extra;
    if (!(header >> kind_s >> q >> m >> n) || (header >> extra))
        throw ParseError("text header must be '<kind> <q> <m> <n>'");
    if (n <= 0) throw ParseError("order must be positive");
    MatrixDocument doc;
    doc.kind = doc_kind_from_string(kind_s);
    doc.q = q;
    doc.m = m;
    const auto order = static_cast<std::size_t>(n);
    const std::size_t block_rows = doc.kind == DocKind::scheme_coeffs ? 1 : order;

    std::vector<GaussMatrix> blocks;
    std::size_t i = 1;
    while (i < lines.size()) {
        if (i + block_rows > lines.size()) throw ParseError("truncated matrix block");
        GaussMatrix mat(block_rows, order);
        for (std::size_t r = 0; r < block_rows; ++r) {
            const std::string_view line = lines[i + r];
            if (line.size() != order)
                throw ParseError("line " + std::to_string(i + r + 1) + " must have " + std::to_string(order) +
                                 " characters");
            for (std::size_t c = 0; c < order; ++c) mat(r, c) = char_entry(line[c]);
        }
        blocks.push_back(std::move(mat));
        i += block_rows;
        if (i < lines.size()) {
            if (!lines[i].empty()) throw ParseError("matrices must be separated by one empty line");
            ++i;
            if (i == lines.size()) throw ParseError("trailing empty line");
        }
    }
    const auto names = expected_names(doc.kind, blocks.size());
    if (names.size() != blocks.size())
        throw ParseError(to_string(doc.kind) + " document has " + std::to_string(blocks.size()) + " matrices");
    for (std::size_t b = 0; b < blocks.size(); ++b) doc.payload.emplace_back(names[b], std::move(blocks[b]));
    validate(doc);
    return doc;
}

std::string emit(const MatrixDocument& doc, Format format) {
    return format == Format::json ? emit_json(doc) : emit_text(doc);
}

MatrixDocument parse_document(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
    return parse_text(text);
}

MatrixDocument document_from_core(const CoreMatrix& core) {
    MatrixDocument doc;
    doc.kind = DocKind::core;
    doc.q = static_cast<std::int64_t>(core.order());
    doc.m = 1;
    doc.payload.emplace_back("Q", to_gauss(core.values()));
    doc.meta["core_kind"] = to_string(core.kind());
    doc.meta["provenance"] = to_string(core.provenance());
    if (core.provenance() == CoreProvenance::jacobsthal)
        doc.meta["ordering"] = "base-p digits, constant coefficient least significant";
    return doc;
}

MatrixDocument document_from_pair(const SignPair& pair, std::int64_t q, std::int64_t m) {
    MatrixDocument doc;
    doc.kind = DocKind::sign_pair;
    doc.q = q;
    doc.m = m;
    doc.payload.emplace_back("X", to_gauss(pair.first.values()));
    doc.payload.emplace_back("Y", to_gauss(pair.second.values()));
    return doc;
}

MatrixDocument document_from_quh(const QuhMatrix& h) {
    MatrixDocument doc;
    doc.kind = DocKind::quh;
    doc.q = h.q_param();
    doc.m = h.depth();
    doc.payload.emplace_back("A", to_gauss(h.real_pattern().values()));
    doc.payload.emplace_back("B", to_gauss(h.imag_pattern().values()));
    return doc;
}

MatrixDocument document_from_cd(const GaussPair& cd, std::int64_t q, std::int64_t m) {
    MatrixDocument doc;
    doc.kind = DocKind::gauss;
    doc.q = q;
    doc.m = m;
    doc.payload.emplace_back("C", cd.first);
    doc.payload.emplace_back("D", cd.second);
    return doc;
}

MatrixDocument document_from_quaternary(const GaussMatrix& m, std::int64_t q, std::int64_t depth) {
    MatrixDocument doc;
    doc.kind = DocKind::gauss;
    doc.q = q;
    doc.m = depth;
    doc.payload.emplace_back("M", m);
    return doc;
}

MatrixDocument document_from_coeffs(std::int64_t q, std::int64_t m, const std::vector<std::int64_t>& real_coeffs,
                                    const std::vector<std::int64_t>& imag_coeffs) {
    MatrixDocument doc;
    doc.kind = DocKind::scheme_coeffs;
    doc.q = q;
    doc.m = m;
    auto row = [](const std::vector<std::int64_t>& v) {
        GaussMatrix g(1, v.size());
        for (std::size_t i = 0; i < v.size(); ++i) g(0, i) = Gauss{v[i], 0};
        return g;
    };
    doc.payload.emplace_back("A", row(real_coeffs));
    doc.payload.emplace_back("B", row(imag_coeffs));
    doc.meta["labeling"] = "class 1 = +1 entries of Q, class 2 = -1 entries";
    return doc;
}

CoreMatrix core_from_document(const MatrixDocument& doc) {
    if (doc.kind != DocKind::core) throw ParseError("expected a core document, got " + to_string(doc.kind));
    return CoreMatrix::from_matrix(TernaryMatrix(doc.int_matrix("Q")), CoreProvenance::user_supplied);
}

SignPair pair_from_document(const MatrixDocument& doc) {
    if (doc.kind == DocKind::sign_pair) return {SignMatrix(doc.int_matrix("X")), SignMatrix(doc.int_matrix("Y"))};
    if (doc.kind == DocKind::quh) return {SignMatrix(doc.int_matrix("A")), SignMatrix(doc.int_matrix("B"))};
    throw ParseError("expected a sign-pair or quh document, got " + to_string(doc.kind));
}

QuhMatrix quh_from_document(const MatrixDocument& doc) {
    SignPair p = pair_from_document(doc);
    return QuhMatrix::unchecked(std::move(p.first), std::move(p.second), doc.q, static_cast<unsigned>(doc.m));
}

}  // namespace quhm
