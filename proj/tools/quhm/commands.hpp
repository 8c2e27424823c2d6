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

#ifndef QUHM_TOOLS_COMMANDS_HPP
#define QUHM_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "quhm/constructions.hpp"
#include "quhm/document.hpp"

namespace quhm::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConstructionFailed = 3;

struct Options {
    std::string construct_kind;
    std::string scheme_action;
    std::string path;
    std::string out;
    std::string core_file;
    std::string seed_file;
    std::int64_t q = 0;
    unsigned m = 0;
    unsigned m_max = 4;
    bool q_given = false;
    bool m_given = false;
    bool no_verify = false;
    std::vector<std::string> checks;
    std::vector<std::size_t> factorization;
    bool factorization_given = false;
    Format format = Format::json;
    std::size_t order_cap = kDefaultOrderCap;
};

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_report(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_scheme(const Options& opt, std::ostream& out, std::ostream& err);

/// "|S|=27", "|S|=3^{3/2}", "|S|^2=5/4", ... from u^2 + q v^2 = (q+1)|S|^2.
std::string excess_magnitude(std::int64_t u, std::int64_t v, std::int64_t q);

}  // namespace quhm::cli

#endif  // QUHM_TOOLS_COMMANDS_HPP
