// Copyright 2026 The birvol Authors
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

#ifndef BIRVOL_EXACTNUM_HPP_
#define BIRVOL_EXACTNUM_HPP_

#include <gmpxx.h>

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace birvol {

using BigInt = mpz_class;

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& v);

// Squarefree part of a positive integer: the unique squarefree d with
// n = s^2 * d. Trial division up to n^(1/3), then a perfect-square test on
// the cofactor (which has at most two prime factors at that point).
BigInt squarefree_part(const BigInt& n);
bool is_squarefree(const BigInt& n);

// Arbitrary-precision rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      v_ = static_cast<long>(v);
    } else {
      v_ = static_cast<unsigned long>(v);
    }
  }
  Rational(const BigInt& v) : v_(v) {}         // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // "p" or "p/q", optional leading '-'.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  BigInt floor() const;
  Rational abs() const;
  Rational inverse() const;
  Rational pow(unsigned e) const;

  std::string to_string() const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
std::string_view to_string(Sign s);

// a + b*sqrt(d) in the real quadratic field Q(sqrt(d)).
//
// Every value carries the discriminant d of its field; binary operations
// refuse to mix fields. Purely rational values still carry d so that they can
// be combined with irrational ones from the same model.
class QuadExt {
 public:
  QuadExt() = default;  // 0 in Q(sqrt(1)); only useful as a placeholder
  QuadExt(Rational rat, Rational irr, std::int64_t disc);
  static QuadExt rational(Rational rat, std::int64_t disc) { return {std::move(rat), Rational{}, disc}; }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  std::int64_t disc() const { return disc_; }
  bool is_rational() const { return irr_.is_zero(); }
  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }

  // Exact sign, decided by comparing a^2 with b^2 d.
  Sign sign() const;

  QuadExt conj() const;
  // a^2 - d b^2, the field norm.
  Rational norm() const;
  QuadExt inverse() const;
  QuadExt abs() const;
  QuadExt pow(unsigned e) const;
  BigInt floor() const;

  // Round-to-nearest double, computed through a 128-bit MPFR intermediate.
  // Opposite-sign coordinates go through norm / (a - b sqrt d) so that
  // cancellation never eats the intermediate precision.
  double to_double() const;
  // Natural log of |x| (x != 0), also at 128 bits; never overflows.
  double log_abs() const;

  // "a", "b*sqrt(d)" or "a+b*sqrt(d)" with rational a, b.
  std::string to_string() const;
  // {"a_num","a_den","b_num","b_den"}; the discriminant travels separately.
  std::array<std::string, 4> to_tuple() const;
  static QuadExt from_tuple(const std::array<std::string, 4>& tuple, std::int64_t disc);

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  QuadExt& operator*=(const Rational& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator*(QuadExt a, const Rational& b) { return a *= b; }
  friend QuadExt operator*(const Rational& b, QuadExt a) { return a *= b; }

  // Equality is exact; values from different fields compare equal only when
  // both are rational and equal.
  friend bool operator==(const QuadExt& a, const QuadExt& b);
  // Ordering goes through the exact sign of the difference.
  friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b);

 private:
  struct Unchecked {};
  QuadExt(Rational rat, Rational irr, std::int64_t disc, Unchecked)
      : rat_(std::move(rat)), irr_(std::move(irr)), disc_(disc) {}
  void require_same_field(const QuadExt& o) const;

  Rational rat_;
  Rational irr_;
  std::int64_t disc_ = 1;
};

enum class QuadOp { add, sub, mul, div };
QuadExt quad_arith(const QuadExt& x, const QuadExt& y, QuadOp op);
inline Sign quad_sign(const QuadExt& x) { return x.sign(); }
inline double quad_to_float(const QuadExt& x) { return x.to_double(); }

}  // namespace birvol

#endif  // BIRVOL_EXACTNUM_HPP_
