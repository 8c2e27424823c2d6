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

// Serialized form of every object the tool produces.
//
// JSON: one object, keys sorted, no insignificant whitespace, trailing
// newline. Real entries are integers; Gaussian entries are [re, im] pairs.
//
//   {"A":[[1,1],[1,-1]],"B":[[...]],"kind":"quh","m":2,"meta":{...},"q":3}
//
// Text: a header line "<kind> <q> <m> <n>", then each payload matrix as n
// lines of n characters, consecutive matrices separated by one empty line.
// Alphabet: '+' = 1, '-' = -1, '0' = 0, 'i' = i, 'j' = -i. For
// scheme-coeffs, n is the class count 3^m and each payload is one line.
// The text form carries no metadata.
//
// Payload names by kind:
//   core          Q
//   sign-pair     X, Y
//   quh           A, B              (real and imaginary sign patterns)
//   gauss         M  or  C, D
//   scheme-coeffs A, B              (Bose-Mesner coefficients of A and B)

#ifndef QUHM_DOCUMENT_HPP
#define QUHM_DOCUMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quhm/constructions.hpp"
#include "quhm/cores.hpp"
#include "quhm/exactmat.hpp"
#include "quhm/quh.hpp"

namespace quhm {

enum class DocKind { core, sign_pair, quh, gauss, scheme_coeffs };
enum class Format { json, txt };

std::string to_string(DocKind kind);
DocKind doc_kind_from_string(std::string_view s);
Format format_from_string(std::string_view s);

struct MatrixDocument {
    DocKind kind = DocKind::core;
    std::int64_t q = 1;
    std::int64_t m = 0;
    /// Stored as Gaussian matrices regardless of kind; real kinds have im = 0.
    std::vector<std::pair<std::string, GaussMatrix>> payload;
    std::map<std::string, std::string> meta;

    [[nodiscard]] const GaussMatrix& matrix(std::string_view name) const;
    /// Throws ParseError if any entry has a nonzero imaginary part.
    [[nodiscard]] IntMatrix int_matrix(std::string_view name) const;
    /// Order of the square payload (or class count for scheme-coeffs).
    [[nodiscard]] std::size_t order() const;

    friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

/// Payload names, entry domains and shapes for the declared kind.
/// Throws ParseError.
void validate(const MatrixDocument& doc);

std::string emit(const MatrixDocument& doc, Format format);
std::string emit_json(const MatrixDocument& doc);
std::string emit_text(const MatrixDocument& doc);

/// Chooses JSON when the first non-blank character is '{'.
MatrixDocument parse_document(std::string_view text);
MatrixDocument parse_json(std::string_view text);
MatrixDocument parse_text(std::string_view text);

MatrixDocument document_from_core(const CoreMatrix& core);
MatrixDocument document_from_pair(const SignPair& pair, std::int64_t q, std::int64_t m);
MatrixDocument document_from_quh(const QuhMatrix& h);
MatrixDocument document_from_cd(const GaussPair& cd, std::int64_t q, std::int64_t m);
MatrixDocument document_from_quaternary(const GaussMatrix& m, std::int64_t q, std::int64_t depth);
MatrixDocument document_from_coeffs(std::int64_t q, std::int64_t m, const std::vector<std::int64_t>& real_coeffs,
                                    const std::vector<std::int64_t>& imag_coeffs);

/// Runs verify_core; throws VerificationError for an invalid core.
CoreMatrix core_from_document(const MatrixDocument& doc);
/// Sign matrices without verification (sign-pair or quh documents).
SignPair pair_from_document(const MatrixDocument& doc);
/// Unverified; callers run the checks they need.
QuhMatrix quh_from_document(const MatrixDocument& doc);

}  // namespace quhm

#endif  // QUHM_DOCUMENT_HPP
