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
#include "quhm/document.hpp"
#include "quhm/errors.hpp"
#include "quhm/schemes.hpp"
#include "test_support.hpp"

namespace {

using namespace quhm;

std::vector<MatrixDocument> sample_documents() {
    std::vector<MatrixDocument> docs;
    const CoreMatrix c3 = jacobsthal(3);
    docs.push_back(document_from_core(c3));
    docs.push_back(document_from_core(jacobsthal(9)));
    docs.push_back(document_from_pair(construct_ja(c3, 2), 3, 2));
    docs.push_back(document_from_quh(construct_quh(jacobsthal(7), 1)));
    docs.push_back(document_from_quh(construct_quh(c3, 0)));
    docs.push_back(document_from_cd(construct_cd(jacobsthal(5), 1), 5, 1));
    docs.push_back(document_from_quaternary(assemble_quaternary_hadamard(jacobsthal(5), 0), 5, 0));
    const TensorSchemeIndex idx(c3, 2);
    const SignPair p = construct_ja(c3, 2);
    docs.push_back(document_from_coeffs(3, 2, bose_mesner_coeffs(p.first.values(), idx).coefficients,
                                        bose_mesner_coeffs(p.second.values(), idx).coefficients));
    return docs;
}

TEST(Document, JsonShape) {
    const MatrixDocument d = document_from_quh(construct_quh(jacobsthal(3), 1));
    const std::string s = emit_json(d);
    EXPECT_EQ(s.rfind("{\"A\":[[1,1,1],[1,1,1],[1,1,1]],\"B\":[[1,-1,1],[1,1,-1],[-1,1,1]],\"kind\":\"quh\",\"m\":1,", 0), 0u)
        << s;
    EXPECT_EQ(s.back(), '\n');
    EXPECT_EQ(s.find(' ', s.find("\"q\"")), std::string::npos);
}

TEST(Document, TextShape) {
    MatrixDocument d = document_from_quh(construct_quh(jacobsthal(3), 1));
    EXPECT_EQ(emit_text(d), "quh 3 1 3\n+++\n+++\n+++\n\n+-+\n++-\n-++\n");
    const MatrixDocument g = document_from_quaternary(assemble_quaternary_hadamard(jacobsthal(5), 0), 5, 0);
    const std::string t = emit_text(g);
    EXPECT_EQ(t.substr(0, t.find('\n', t.find('\n') + 1) + 1), "gauss 5 0 6\ni+++++\n");
}

TEST(Document, RoundTripBothFormats) {
    for (const MatrixDocument& d : sample_documents()) {
        for (Format f : {Format::json, Format::txt}) {
            const std::string once = emit(d, f);
            const MatrixDocument parsed = parse_document(once);
            EXPECT_EQ(emit(parsed, f), once) << to_string(d.kind);
            EXPECT_EQ(parsed.payload, d.payload);
            if (f == Format::json) EXPECT_EQ(parsed, d);
        }
    }
}

TEST(Document, TextWithoutFinalNewline) {
    const MatrixDocument d = parse_text("sign-pair 1 0 1\n+\n\n+");
    EXPECT_EQ(d.kind, DocKind::sign_pair);
    EXPECT_EQ(d.order(), 1u);
}

TEST(Document, RejectsMalformed) {
    const char* bad_inputs[] = {
        "",
        "quh 3 1",
        "quh 3 1 3\n+++\n+++\n",
        "quh 3 1 2\n++\n+x\n\n++\n++\n",
        "quh 3 1 2\n++\n++\n++\n++\n",
        "quh 3 1 2\n++\n++\n\n++\n++\n\n",
        "core 3 1 3\n0-+\n+0-\n-+i\n",
        "quh 3 1 2\n++\n+0\n\n++\n++\n",
        "mystery 3 1 1\n+\n",
        "{\"kind\":\"quh\",\"q\":3,\"m\":1,\"A\":[[1]]}",
        "{\"kind\":\"quh\",\"q\":3,\"m\":1,\"A\":[[1]],\"B\":[[1]],\"extra\":1}",
        "{\"kind\":\"quh\",\"q\":3.5,\"m\":1,\"A\":[[1]],\"B\":[[1]]}",
        "{\"kind\":\"quh\",\"q\":3,\"m\":1,\"A\":[[1,1]],\"B\":[[1]]}",
        "{\"kind\":\"gauss\",\"q\":5,\"m\":0,\"M\":[[1]]}",
        "{not json",
    };
    for (const char* s : bad_inputs) EXPECT_THROW(parse_document(s), ParseError) << s;
}

TEST(Document, GaussianJsonEntries) {
    const MatrixDocument g = parse_json("{\"M\":[[[0,1]]],\"kind\":\"gauss\",\"m\":0,\"q\":1}");
    EXPECT_EQ(g.matrix("M")(0, 0), kImagUnit);
    EXPECT_THROW(g.int_matrix("M"), ParseError);
}

TEST(Document, Extractors) {
    const CoreMatrix c7 = jacobsthal(7);
    const CoreMatrix back = core_from_document(parse_document(emit_json(document_from_core(c7))));
    EXPECT_EQ(back.values(), c7.values());
    EXPECT_EQ(back.provenance(), CoreProvenance::user_supplied);
    const QuhMatrix h = construct_quh(c7, 1);
    const QuhMatrix h2 = quh_from_document(parse_document(emit_text(document_from_quh(h))));
    EXPECT_EQ(h2, h);
    EXPECT_THROW(core_from_document(document_from_quh(h)), ParseError);
    MatrixDocument bad_core = document_from_core(c7);
    bad_core.payload[0].second(0, 0) = Gauss{1};
    EXPECT_THROW(core_from_document(bad_core), VerificationError);
}

}  // namespace
