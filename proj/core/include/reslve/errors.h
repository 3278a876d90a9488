// Copyright 2026 The reslve Authors.
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

#ifndef RESLVE_ERRORS_H_
#define RESLVE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace reslve {

// Process exit codes used by the command-line tool.
enum class ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kServiceError = 2,
  kInternalError = 3,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const { return ExitCode::kInternalError; }
};

// Malformed or inconsistent user-supplied data.
class InputError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInputError; }
};

// Invalid configuration values (alpha out of range, non-positive thresholds).
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

// A user whose filtered activity is below the modelling threshold.
class InactiveUserError : public InputError {
 public:
  using InputError::InputError;
};

// A social account that could not be linked to a knowledge-base account.
class IdentityNotBridgedError : public InputError {
 public:
  using InputError::InputError;
};

// Failure talking to an external service. Always retriable.
class ServiceError : public Error {
 public:
  explicit ServiceError(const std::string& message, bool retriable = true)
      : Error(message), retriable_(retriable) {}
  ExitCode exit_code() const override { return ExitCode::kServiceError; }
  bool retriable() const { return retriable_; }

 private:
  bool retriable_;
};

// Violated internal invariant; indicates a bug rather than bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInternalError; }
};

}  // namespace reslve

#endif  // RESLVE_ERRORS_H_
