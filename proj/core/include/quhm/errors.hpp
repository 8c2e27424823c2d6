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

#ifndef QUHM_ERRORS_HPP
#define QUHM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quhm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected input parameters (not a prime power, wrong residue class, order cap, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A constructed or imported object failed one of its defining identities.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic would have left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized document.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace quhm

#endif  // QUHM_ERRORS_HPP
