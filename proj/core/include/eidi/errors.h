// Copyright 2026 The EIDI Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EIDI_ERRORS_H_
#define EIDI_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eidi {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller passed a value that violates a documented precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Malformed file content. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that breaks a cross-record rule (unknown id, partition
// not exhaustive, stale digest, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The LLM output for a typing request did not have the "X | p | Y" shape.
class TypingParseError : public Error {
 public:
  using Error::Error;
};

// The first answer token normalized to neither "A" nor "B".
class UnparseableAnswerError : public Error {
 public:
  using Error::Error;
};

// Network-level failure talking to a backend. Retryable.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int attempts)
      : Error(what + " (after " + std::to_string(attempts) + " attempt(s))"),
        attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// Non-200 answer from an HTTP backend.
class ApiStatusError : public Error {
 public:
  ApiStatusError(int status, std::string body)
      : Error("API returned status " + std::to_string(status) + ": " + body),
        status_(status),
        body_(std::move(body)) {}
  int status() const { return status_; }
  const std::string& body() const { return body_; }

 private:
  int status_;
  std::string body_;
};

// The backend cannot honor a request feature, e.g. token probabilities.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A curve metric was requested on data where it is undefined.
class MetricUndefinedError : public Error {
 public:
  using Error::Error;
};

}  // namespace eidi

#endif  // EIDI_ERRORS_H_
