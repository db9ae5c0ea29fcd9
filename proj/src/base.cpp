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

#include "graphcumulants/base.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <thread>

#include "graphcumulants/parallel.hpp"

namespace gc {

Integer Binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Integer Falling(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int64_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
  return r;
}

Integer Factorial(int64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer Pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational {
    throw DataError("not a number: '" + original + "'");
  };
  if (text.empty()) return fail();
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  Rational value;
  const size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!AllDigits(p) || !AllDigits(q)) return fail();
    Integer den(std::string(q), 10);
    if (den == 0) return fail();
    value = Rational(Integer(std::string(p), 10), den);
  } else {
    long exponent = 0;
    const size_t e = text.find_first_of("eE");
    if (e != std::string_view::npos) {
      std::string_view es = text.substr(e + 1);
      bool eneg = false;
      if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
        eneg = es[0] == '-';
        es.remove_prefix(1);
      }
      if (!AllDigits(es) || es.size() > 6) return fail();
      exponent = std::stol(std::string(es));
      if (eneg) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string digits;
    const size_t dot = text.find('.');
    std::string_view ip = text.substr(0, dot);
    std::string_view fp =
        dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
    if (ip.empty() && fp.empty()) return fail();
    if ((!ip.empty() && !AllDigits(ip)) || (!fp.empty() && !AllDigits(fp)))
      return fail();
    digits.append(ip);
    digits.append(fp);
    exponent -= static_cast<long>(fp.size());
    Integer mant(digits, 10);
    if (exponent >= 0) {
      value = Rational(mant * Pow10(static_cast<unsigned long>(exponent)));
    } else {
      value = Rational(mant, Pow10(static_cast<unsigned long>(-exponent)));
    }
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string ToString(const Integer& z) { return z.get_str(10); }

std::string FormatRational(const Rational& q) {
  const Integer& den = q.get_den();
  if (den == 1) return q.get_num().get_str(10);
  Integer d = den;
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    d /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return q.get_num().get_str(10) + "/" + den.get_str(10);
  const unsigned long places = twos > fives ? twos : fives;
  Integer scaled = q.get_num() * Pow10(places) / den;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str(10);
  if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
  s.insert(s.size() - places, ".");
  return negative ? "-" + s : s;
}

Rational Pow(const Rational& base, int exponent) {
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

int Sign(const Rational& q) { return sgn(q); }

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GC_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace gc
