// Copyright 2026 The sinkeq Authors
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

#include "sinkeq/error.h"

namespace sinkeq {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidAction:
      return "invalid-action";
    case ErrorCode::kInvalidGame:
      return "invalid-game";
    case ErrorCode::kInvalidParameters:
      return "invalid-parameters";
    case ErrorCode::kSchema:
      return "schema";
    case ErrorCode::kNoEquilibrium:
      return "no-equilibrium";
    case ErrorCode::kDegenerateWelfare:
      return "degenerate-welfare";
    case ErrorCode::kNotSmooth:
      return "not-smooth";
    case ErrorCode::kNumericalFailure:
      return "numerical-failure";
    case ErrorCode::kWitnessNotFound:
      return "witness-not-found";
  }
  return "unknown";
}

}  // namespace sinkeq
