//
// Copyright 2026 The gip Authors
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
//

#ifndef GIP_ERRORS_HPP
#define GIP_ERRORS_HPP

#include <stdexcept>

namespace gip {

/// Base class for all recoverable input/usage errors (CLI exit code 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violation of a guarantee the library itself is supposed to uphold
/// (CLI exit code 2). Seeing one of these is a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define GIP_DEFINE_ERROR(name)    \
  class name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

GIP_DEFINE_ERROR(InvalidArgument);
GIP_DEFINE_ERROR(DisconnectedGraph);
GIP_DEFINE_ERROR(SelfLoop);
GIP_DEFINE_ERROR(IndexOutOfRange);
GIP_DEFINE_ERROR(DivideByZero);
GIP_DEFINE_ERROR(NotInteriorPosterior);
GIP_DEFINE_ERROR(DegenerateBudget);
GIP_DEFINE_ERROR(NotSpanningTree);
GIP_DEFINE_ERROR(NotMember);
GIP_DEFINE_ERROR(StateSetMismatch);
GIP_DEFINE_ERROR(InvalidSemiChain);
GIP_DEFINE_ERROR(TooFewLevels);
GIP_DEFINE_ERROR(InstanceTooLarge);
GIP_DEFINE_ERROR(LengthMismatch);
GIP_DEFINE_ERROR(NotBayesPlausible);
GIP_DEFINE_ERROR(NotPrivacyPreserving);
GIP_DEFINE_ERROR(InfeasibleDecomposition);

#undef GIP_DEFINE_ERROR

}  // namespace gip

#endif  // GIP_ERRORS_HPP
