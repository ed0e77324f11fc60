// Copyright 2026 The wernerlhv developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wernerlhv {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

/// Hermiticity precondition violated; carries the max-abs-entry deviation
/// between the matrix and its conjugate transpose.
class NotHermitian : public Error {
  public:
    NotHermitian(const std::string& what, double defect)
        : Error(what), defect_(defect) {}
    double defect() const { return defect_; }

  private:
    double defect_;
};

enum class PovmDefect { NotHermitian, NotPsd, NotComplete };

inline const char* to_string(PovmDefect d) {
    switch (d) {
    case PovmDefect::NotHermitian:
        return "not-hermitian";
    case PovmDefect::NotPsd:
        return "not-psd";
    case PovmDefect::NotComplete:
        return "not-complete";
    }
    return "unknown";
}

class InvalidPovm : public Error {
  public:
    InvalidPovm(PovmDefect reason, const std::string& what)
        : Error(std::string(to_string(reason)) + ": " + what), reason_(reason) {}
    PovmDefect reason() const { return reason_; }

  private:
    PovmDefect reason_;
};

class InvalidChannel : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace wernerlhv
