// Copyright 2026 The galois-qudits Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gq {

enum class ErrorKind {
    IrreducibleRequired,
    UnsupportedDegree,
    InvalidPolynomial,
    FieldMismatch,
    DivisionByZero,
    DimensionMismatch,
    SelfDualRequired,
    PureTypeRequired,
    TooLarge,
    FullTableauRequired,
    NonUnitary,
    InvalidGate,
    RankDeficient,
    NotCommuting,
    InvalidScale,
    NotCssPreserving,
    WeightBelowDistance,
    InvalidSupport,
    InvalidNesting,
    DecodeFailure,
    ParseError,
    Internal,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IrreducibleRequired: return "IrreducibleRequired";
        case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SelfDualRequired: return "SelfDualRequired";
        case ErrorKind::PureTypeRequired: return "PureTypeRequired";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::FullTableauRequired: return "FullTableauRequired";
        case ErrorKind::NonUnitary: return "NonUnitary";
        case ErrorKind::InvalidGate: return "InvalidGate";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NotCommuting: return "NotCommuting";
        case ErrorKind::InvalidScale: return "InvalidScale";
        case ErrorKind::NotCssPreserving: return "NotCssPreserving";
        case ErrorKind::WeightBelowDistance: return "WeightBelowDistance";
        case ErrorKind::InvalidSupport: return "InvalidSupport";
        case ErrorKind::InvalidNesting: return "InvalidNesting";
        case ErrorKind::DecodeFailure: return "DecodeFailure";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

}  // namespace gq
