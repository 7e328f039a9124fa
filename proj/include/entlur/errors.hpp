// Copyright 2026 The entlur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace entlur {

enum class ErrorKind {
    NotHermitian,
    DimMismatch,
    InvalidSpin,
    InvalidState,
    InvalidArgument,
    NonConvergence,
    InternalConsistency,
    SchemaError,
    NormalizationError,
    SpectrumMismatch,
    MissingSetting,
};

const char *to_string(ErrorKind kind);

/// Base class for every error raised by the library. The kind is stable and
/// is what the CLI reports alongside the message.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

#define ENTLUR_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string &message)                              \
            : Error(ErrorKind::Name, message) {}                               \
    }

ENTLUR_DEFINE_ERROR(NotHermitian);
ENTLUR_DEFINE_ERROR(DimMismatch);
ENTLUR_DEFINE_ERROR(InvalidSpin);
ENTLUR_DEFINE_ERROR(InvalidState);
ENTLUR_DEFINE_ERROR(InvalidArgument);
ENTLUR_DEFINE_ERROR(NonConvergence);
ENTLUR_DEFINE_ERROR(InternalConsistency);
ENTLUR_DEFINE_ERROR(SchemaError);
ENTLUR_DEFINE_ERROR(NormalizationError);
ENTLUR_DEFINE_ERROR(SpectrumMismatch);
ENTLUR_DEFINE_ERROR(MissingSetting);

#undef ENTLUR_DEFINE_ERROR

} // namespace entlur
