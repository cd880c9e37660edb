// Copyright 2026 The wtype Authors
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

namespace wtype {

enum class ErrorKind {
    InvalidArity,
    ZeroState,
    SingularImage,
    InvalidParty,
    NumericalViolation,
    SingularOperator,
    NoBracket,
    DegenerateState,
    NotExcitationForm,
    NonPositiveDeterminant,
    ArityMismatch,
    DomainError,
    InvalidPivot,
    ToleranceFailure,
    ValidationFailure,
    InvalidCanonical,
    InvalidTargets,
    InvalidInput,
};

/// Stable identifier used in error JSON and Python exceptions.
constexpr std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArity: return "InvalidArity";
        case ErrorKind::ZeroState: return "ZeroState";
        case ErrorKind::SingularImage: return "SingularImage";
        case ErrorKind::InvalidParty: return "InvalidParty";
        case ErrorKind::NumericalViolation: return "NumericalViolation";
        case ErrorKind::SingularOperator: return "SingularOperator";
        case ErrorKind::NoBracket: return "NoBracket";
        case ErrorKind::DegenerateState: return "DegenerateState";
        case ErrorKind::NotExcitationForm: return "NotExcitationForm";
        case ErrorKind::NonPositiveDeterminant: return "NonPositiveDeterminant";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::InvalidPivot: return "InvalidPivot";
        case ErrorKind::ToleranceFailure: return "ToleranceFailure";
        case ErrorKind::ValidationFailure: return "ValidationFailure";
        case ErrorKind::InvalidCanonical: return "InvalidCanonical";
        case ErrorKind::InvalidTargets: return "InvalidTargets";
        case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

  private:
    ErrorKind kind_;
};

}  // namespace wtype
