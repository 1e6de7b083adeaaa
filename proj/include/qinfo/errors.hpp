// Copyright 2026 The qinfo authors
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

namespace qinfo {

// Base class for all library errors. what() always starts with the error
// kind name (e.g. "UnsupportedDimension: ...") so callers and scripts can
// match on it.
class Error : public std::runtime_error {
public:
    Error(const std::string& kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(kind) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define QINFO_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}      \
    }

QINFO_DEFINE_ERROR(NotHermitian);
QINFO_DEFINE_ERROR(NoConvergence);
QINFO_DEFINE_ERROR(NotUnitary);
QINFO_DEFINE_ERROR(DimensionMismatch);
QINFO_DEFINE_ERROR(ZeroProbabilityOutcome);
QINFO_DEFINE_ERROR(NotNormalized);
QINFO_DEFINE_ERROR(BadAlpha);
QINFO_DEFINE_ERROR(BadSplit);
QINFO_DEFINE_ERROR(UnsupportedDimension);
QINFO_DEFINE_ERROR(BlockTooLarge);
QINFO_DEFINE_ERROR(Overflow);
QINFO_DEFINE_ERROR(InvalidArgument);

#undef QINFO_DEFINE_ERROR

}  // namespace qinfo
