/*
 * Copyright 2026 The princ Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "princ/error.hpp"

namespace princ
{
std::string_view
ErrorName(ErrorCode code) noexcept
{
  switch (code) {
    case ErrorCode::kDuplicateElement:
      return "DuplicateElement";
    case ErrorCode::kUnknownElement:
      return "UnknownElement";
    case ErrorCode::kCycleDetected:
      return "CycleDetected";
    case ErrorCode::kNoZero:
      return "NoZero";
    case ErrorCode::kNoOne:
      return "NoOne";
    case ErrorCode::kNotALattice:
      return "NotALattice";
    case ErrorCode::kNotACongruence:
      return "NotACongruence";
    case ErrorCode::kNotICongruence:
      return "NotICongruence";
    case ErrorCode::kNotADownSet:
      return "NotADownSet";
    case ErrorCode::kTemplateInvalid:
      return "TemplateInvalid";
    case ErrorCode::kAssemblyNotALattice:
      return "AssemblyNotALattice";
    case ErrorCode::kInvalidInput:
      return "InvalidInput";
    case ErrorCode::kCorrespondenceBroken:
      return "CorrespondenceBroken";
    case ErrorCode::kVerificationFailed:
      return "VerificationFailed";
    case ErrorCode::kValuationDiverged:
      return "ValuationDiverged";
  }
  return "Unknown";
}

bool
IsInputError(ErrorCode code) noexcept
{
  switch (code) {
    case ErrorCode::kDuplicateElement:
    case ErrorCode::kUnknownElement:
    case ErrorCode::kCycleDetected:
    case ErrorCode::kNoZero:
    case ErrorCode::kNoOne:
    case ErrorCode::kNotALattice:
    case ErrorCode::kNotADownSet:
    case ErrorCode::kInvalidInput:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(ErrorName(code)) + ": " + what), code_(code)
{
}

}  // namespace princ
