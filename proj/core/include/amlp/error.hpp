// Copyright 2026 The amlp Authors
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

#ifndef AMLP_ERROR_HPP_
#define AMLP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace amlp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value outside the representable range of a fixed-width format.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A violated precondition (mismatched lengths, stepping a halted FSM, ...).
// The CLI treats these as internal invariant violations.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Malformed external data: IDX containers, model files.
class FormatError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public FormatError {
 public:
  using FormatError::FormatError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Non-finite loss during float training.
class TrainingError : public Error {
 public:
  using Error::Error;
};

// A layer whose weights are all zero has no usable quantization scale.
class DegenerateScaleError : public Error {
 public:
  using Error::Error;
};

enum class LoadErrorKind {
  kTruncated,
  kBadMagic,
  kVersionMismatch,
  kChecksumMismatch,
  kMalformed,
};

const char* to_string(LoadErrorKind kind) noexcept;

class ModelLoadError : public FormatError {
 public:
  ModelLoadError(LoadErrorKind kind, const std::string& detail)
      : FormatError(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  LoadErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  LoadErrorKind kind_;
  std::string detail_;
};

}  // namespace amlp

#endif  // AMLP_ERROR_HPP_
