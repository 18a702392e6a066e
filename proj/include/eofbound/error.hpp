// Copyright 2026 The eofbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EOFBOUND_ERROR_HPP
#define EOFBOUND_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace eofb {

enum class ErrorKind {
  NonSquare,
  NotHermitian,
  NonFinite,
  ConvergenceFailure,
  DimensionMismatch,
  ParameterOutOfRange,
  LambdaExceedsSchmidtRank,
  RankDeficiency,
  ParseError,
  InvariantViolation,
  UnknownFamily,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::LambdaExceedsSchmidtRank: return "LambdaExceedsSchmidtRank";
    case ErrorKind::RankDeficiency: return "RankDeficiency";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
  }
  return "Unknown";
}

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eofb

#endif  // EOFBOUND_ERROR_HPP
