// Copyright 2026 The graphcumulants Authors
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

#ifndef GRAPHCUMULANTS_BASE_HPP_
#define GRAPHCUMULANTS_BASE_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gc {

using Rational = mpq_class;
using Integer = mpz_class;

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind { kUsage = 1, kData = 2, kInfeasible = 3, kSizeCap = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& w) : Error(ErrorKind::kUsage, w) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& w) : Error(ErrorKind::kData, w) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& w)
      : Error(ErrorKind::kInfeasible, w) {}
};

class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& w)
      : Error(ErrorKind::kSizeCap, w) {}
};

// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer Binomial(int64_t n, int64_t k);

// Falling factorial n (n-1) ... (n-k+1); zero when k > n.
Integer Falling(int64_t n, int64_t k);

Integer Factorial(int64_t n);

// Exact decimal or fraction literal ("2.5", "-1e-3", "3/4") to a rational.
Rational ParseRational(std::string_view text);

// Shortest exact text: terminating decimal when possible, else "p/q".
std::string FormatRational(const Rational& q);

std::string ToString(const Integer& z);

// Integer power with a nonnegative exponent.
Rational Pow(const Rational& base, int exponent);

int Sign(const Rational& q);

}  // namespace gc

#endif  // GRAPHCUMULANTS_BASE_HPP_
