// Copyright 2026 The qham Authors
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

#ifndef QHAM_ERRORS_HPP
#define QHAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qham {

// Common base so callers can catch everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EigenFailure : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotProjection : Error {
  using Error::Error;
};
struct NotUnitary : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct DimensionOverflow : Error {
  using Error::Error;
};
struct SizeMismatch : Error {
  using Error::Error;
};
struct InvalidPermutation : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct AllZeroWeights : Error {
  using Error::Error;
};
struct NotClassical : Error {
  using Error::Error;
};
struct InfeasibleMarginals : Error {
  using Error::Error;
};
struct DegenerateCycle : Error {
  using Error::Error;
};
struct SolverFailure : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qham

#endif  // QHAM_ERRORS_HPP
