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

#include "birvol/exactnum.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>

#include "birvol/errors.hpp"

namespace birvol {

namespace {

constexpr mpfr_prec_t kFloatPrecision = 128;

// RAII holder for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = kFloatPrecision) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

bool valid_integer_text(std::string_view t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i) {
    if (t[i] < '0' || t[i] > '9') return false;
  }
  return true;
}

// x <- a + b sqrt(d) at the working precision, exact inputs.
void quad_to_mpfr(mpfr_ptr out, const QuadExt& x) {
  Mpfr root;
  Mpfr tmp;
  const int sa = x.rat().sign();
  const int sb = x.irr().sign();
  mpfr_set_si(root.get(), x.disc(), MPFR_RNDN);
  mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
  if (sa != 0 && sb != 0 && sa != sb) {
    // a + b sqrt d = (a^2 - d b^2) / (a - b sqrt d); the denominator has no
    // cancellation.
    mpfr_mul_q(tmp.get(), root.get(), x.irr().raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sub_q(tmp.get(), tmp.get(), x.rat().raw().get_mpq_t(), MPFR_RNDN);
    mpfr_neg(tmp.get(), tmp.get(), MPFR_RNDN);
    mpfr_set_q(out, x.norm().raw().get_mpq_t(), MPFR_RNDN);
    mpfr_div(out, out, tmp.get(), MPFR_RNDN);
    return;
  }
  mpfr_mul_q(tmp.get(), root.get(), x.irr().raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add_q(out, tmp.get(), x.rat().raw().get_mpq_t(), MPFR_RNDN);
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!valid_integer_text(text)) {
    throw SchemaError("", "not a decimal integer: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt squarefree_part(const BigInt& n) {
  if (sgn(n) <= 0) {
    throw MathError(ErrorCode::invalid_disc, "squarefree part of a non-positive integer");
  }
  BigInt rest = n;
  BigInt result = 1;
  BigInt p = 2;
  BigInt q;
  // Remove all prime factors p <= rest^(1/3).
  while (true) {
    BigInt p3 = p * p * p;
    if (p3 > rest) break;
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e % 2 == 1) result *= p;
    p += (p == 2) ? 1 : 2;
  }
  // rest is 1, a prime, a product of two distinct primes, or a prime square.
  if (mpz_perfect_square_p(rest.get_mpz_t()) == 0) result *= rest;
  return result;
}

bool is_squarefree(const BigInt& n) { return sgn(n) > 0 && squarefree_part(n) == n; }

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw MathError(ErrorCode::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den[0] == '-' || den[0] == '+')) {
    throw SchemaError("", "denominator must be unsigned: '" + std::string(text) + "'");
  }
  BigInt d = parse_bigint(den);
  if (sgn(d) == 0) throw SchemaError("", "zero denominator: '" + std::string(text) + "'");
  return Rational(parse_bigint(text.substr(0, slash)), d);
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw MathError(ErrorCode::division_by_zero, "inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::pow(unsigned e) const {
  Rational out;
  mpz_pow_ui(out.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(out.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return out;  // coprime powers stay coprime; sign lives in the numerator
}

std::string Rational::to_string() const { return v_.get_str(10); }

double Rational::to_double() const {
  Mpfr x;
  mpfr_set_q(x.get(), v_.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(x.get(), MPFR_RNDN);
  if (!std::isfinite(d)) throw MathError(ErrorCode::float_overflow, "rational overflows double: " + to_string());
  return d;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError(ErrorCode::division_by_zero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(Rational rat, Rational irr, std::int64_t disc)
    : rat_(std::move(rat)), irr_(std::move(irr)), disc_(disc) {
  if (disc_ < 1) throw MathError(ErrorCode::invalid_disc, "discriminant must be positive");
  if (!irr_.is_zero() && (disc_ < 2 || !is_squarefree(BigInt(static_cast<long>(disc_))))) {
    throw MathError(ErrorCode::invalid_disc,
                    "discriminant " + std::to_string(disc_) + " is not squarefree and >= 2");
  }
}

void QuadExt::require_same_field(const QuadExt& o) const {
  if (disc_ != o.disc_) {
    throw MathError(ErrorCode::disc_mismatch, "mixed fields: Q(sqrt(" + std::to_string(disc_) +
                                                  ")) and Q(sqrt(" + std::to_string(o.disc_) + "))");
  }
}

Sign QuadExt::sign() const {
  const int sa = rat_.sign();
  const int sb = irr_.sign();
  if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? Sign::zero : Sign::positive;
  if (sa <= 0 && sb <= 0) return Sign::negative;
  // Opposite signs: |a| vs |b| sqrt(d), compare squares.
  const Rational a2 = rat_ * rat_;
  const Rational b2d = irr_ * irr_ * Rational(disc_);
  if (a2 == b2d) return Sign::zero;  // only possible for a = b = 0 since d is squarefree
  const bool a_dominates = a2 > b2d;
  if (sa > 0) return a_dominates ? Sign::positive : Sign::negative;
  return a_dominates ? Sign::negative : Sign::positive;
}

QuadExt QuadExt::conj() const { return {rat_, -irr_, disc_, Unchecked{}}; }

Rational QuadExt::norm() const { return rat_ * rat_ - irr_ * irr_ * Rational(disc_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw MathError(ErrorCode::division_by_zero, "division by zero in Q(sqrt(" + std::to_string(disc_) + "))");
  const Rational n = norm();
  return {rat_ / n, -irr_ / n, disc_, Unchecked{}};
}

QuadExt QuadExt::abs() const { return sign() == Sign::negative ? -*this : *this; }

QuadExt QuadExt::pow(unsigned e) const {
  QuadExt result(Rational(1), Rational(), disc_, Unchecked{});
  QuadExt base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

BigInt QuadExt::floor() const {
  if (is_rational()) return rat_.floor();
  // Estimate at a precision that covers the integer part, then settle exactly.
  const auto bits = static_cast<mpfr_prec_t>(
      64 + mpz_sizeinbase(rat_.num().get_mpz_t(), 2) + mpz_sizeinbase(irr_.num().get_mpz_t(), 2));
  Mpfr x(std::max<mpfr_prec_t>(kFloatPrecision, bits));
  quad_to_mpfr(x.get(), *this);
  BigInt k;
  mpfr_get_z(k.get_mpz_t(), x.get(), MPFR_RNDD);
  auto minus = [&](const BigInt& n) { return *this - QuadExt::rational(Rational(n), disc_); };
  while (minus(k).sign() == Sign::negative) k -= 1;
  while (minus(k + 1).sign() != Sign::negative) k += 1;
  return k;
}

double QuadExt::to_double() const {
  Mpfr x;
  quad_to_mpfr(x.get(), *this);
  const double d = mpfr_get_d(x.get(), MPFR_RNDN);
  if (!std::isfinite(d)) throw MathError(ErrorCode::float_overflow, "value overflows double: " + to_string());
  return d;
}

double QuadExt::log_abs() const {
  if (is_zero()) throw MathError(ErrorCode::division_by_zero, "log of zero");
  Mpfr x;
  quad_to_mpfr(x.get(), *this);
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  mpfr_log(x.get(), x.get(), MPFR_RNDN);
  return mpfr_get_d(x.get(), MPFR_RNDN);
}

std::string QuadExt::to_string() const {
  if (irr_.is_zero()) return rat_.to_string();
  std::string surd = "sqrt(" + std::to_string(disc_) + ")";
  std::string b;
  if (irr_ == Rational(1)) {
    b = surd;
  } else if (irr_ == Rational(-1)) {
    b = "-" + surd;
  } else {
    b = irr_.to_string() + "*" + surd;
  }
  if (rat_.is_zero()) return b;
  return rat_.to_string() + (irr_.sign() > 0 ? "+" : "") + b;
}

std::array<std::string, 4> QuadExt::to_tuple() const {
  return {rat_.num().get_str(), rat_.den().get_str(), irr_.num().get_str(), irr_.den().get_str()};
}

QuadExt QuadExt::from_tuple(const std::array<std::string, 4>& t, std::int64_t disc) {
  auto part = [](const std::string& n, const std::string& d) {
    const BigInt den = parse_bigint(d);
    if (sgn(den) <= 0) throw SchemaError("", "tuple denominator must be positive");
    const BigInt num = parse_bigint(n);
    Rational r(num, den);
    if (r.num() != num || r.den() != den) throw SchemaError("", "tuple entry " + n + "/" + d + " is not in lowest terms");
    return r;
  };
  return QuadExt(part(t[0], t[1]), part(t[2], t[3]), disc);
}

QuadExt QuadExt::operator-() const { return {-rat_, -irr_, disc_, Unchecked{}}; }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  require_same_field(o);
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  require_same_field(o);
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  require_same_field(o);
  Rational a = rat_ * o.rat_ + irr_ * o.irr_ * Rational(disc_);
  Rational b = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(a);
  irr_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

QuadExt& QuadExt::operator*=(const Rational& o) {
  rat_ *= o;
  irr_ *= o;
  return *this;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.rat_ != b.rat_ || a.irr_ != b.irr_) return false;
  return a.irr_.is_zero() || a.disc_ == b.disc_;
}

std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
  switch ((a - b).sign()) {
    case Sign::negative: return std::strong_ordering::less;
    case Sign::zero: return std::strong_ordering::equal;
    case Sign::positive: return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

QuadExt quad_arith(const QuadExt& x, const QuadExt& y, QuadOp op) {
  switch (op) {
    case QuadOp::add: return x + y;
    case QuadOp::sub: return x - y;
    case QuadOp::mul: return x * y;
    case QuadOp::div: return x / y;
  }
  return x;
}

}  // namespace birvol
