/* Copyright (C) 2026 The fusia Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace fusia {

/// Error categories; the numeric values are shared with the C API.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kDivisionByZero = 2,
  kNotApplicable = 3,
  kNotFusion = 4,
  kSingular = 5,
  kInternal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error(ErrorCode::kDivisionByZero, what) {}
};

/// Raised by the determinant shortcut outside its applicability range.
class NotApplicable : public Error {
 public:
  explicit NotApplicable(const std::string& what)
      : Error(ErrorCode::kNotApplicable, what) {}
};

/// A candidate s-matrix whose column products do not expand with
/// non-negative integer coefficients.
class NotFusionMatrix : public Error {
 public:
  NotFusionMatrix(const std::string& what, int i, int j, int k)
      : Error(ErrorCode::kNotFusion, what), i_(i), j_(j), k_(k) {}
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }
  int k() const noexcept { return k_; }

 private:
  int i_, j_, k_;
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what)
      : Error(ErrorCode::kSingular, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCode::kInternal, what) {}
};

}  // namespace fusia
