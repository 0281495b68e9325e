// Copyright 2026 The gsynergy Authors
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

#ifndef GSYNERGY_ERROR_H
#define GSYNERGY_ERROR_H

#include <stdexcept>
#include <string>

namespace gsynergy {

enum class ErrorCode {
    kInvalidShape,
    kInvalidArgument,
    kNumericalDegeneracy,
    kDecompositionFailure,
    kInvalidSpectrum,
    kEmptySummary,
    kParse,
};

const char *error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class GaussianError : public std::runtime_error {
   public:
    GaussianError(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
    }

    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace gsynergy

#endif
