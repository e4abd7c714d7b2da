// Copyright 2026 The zxkit Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zxkit {

/// Base class for every error raised by the library.
class ZXError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A diagram violates one of its structural invariants.
class IllFormed : public ZXError {
 public:
  using ZXError::ZXError;
};

/// Evaluation would exceed the leg budget or the contraction width cap.
class TooLarge : public ZXError {
 public:
  using ZXError::ZXError;
};

class ArityMismatch : public ZXError {
 public:
  using ZXError::ZXError;
};

class DimensionMismatch : public ZXError {
 public:
  using ZXError::ZXError;
};

/// The diagram no longer contains the subgraph a Match was taken from.
class StaleMatch : public ZXError {
 public:
  using ZXError::ZXError;
};

class SoundnessViolation : public ZXError {
 public:
  SoundnessViolation(
      const std::string& rule, const std::string& instance, double deviation)
      : ZXError(
            "rule '" + rule + "' unsound on " + instance +
            " (deviation " + std::to_string(deviation) + ")"),
        rule_(rule),
        deviation_(deviation) {}

  const std::string& rule() const { return rule_; }
  double deviation() const { return deviation_; }

 private:
  std::string rule_;
  double deviation_;
};

class FormatError : public ZXError {
 public:
  using ZXError::ZXError;
};

class QasmSyntaxError : public ZXError {
 public:
  QasmSyntaxError(const std::string& msg, std::size_t line, std::size_t col)
      : ZXError(
            "line " + std::to_string(line) + ", column " +
            std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

class UnsupportedGate : public ZXError {
 public:
  explicit UnsupportedGate(const std::string& gate)
      : ZXError("unsupported gate '" + gate + "'"), gate_(gate) {}

  const std::string& gate() const { return gate_; }

 private:
  std::string gate_;
};

/// An optimised circuit failed its equivalence check against the input.
class VerificationFailed : public ZXError {
 public:
  using ZXError::ZXError;
};

}  // namespace zxkit
