// Copyright 2026 The anyon-qpg Authors
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

#include "anyon/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace anyon {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v);
}

u128 uabs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v >= -i128(kMax) && v <= i128(kMax); }

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {
  if (n == std::numeric_limits<std::int64_t>::min()) {
    assign_big(mpq_class(to_mpz(n)));
  }
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (n == std::numeric_limits<std::int64_t>::min() ||
      d == std::numeric_limits<std::int64_t>::min()) {
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    assign_big(std::move(q));
    return;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign_big(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_big(mpq_class q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() &&
      n != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpq_class q;
  try {
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class n(s.substr(0, slash), 10);
      mpz_class d(s.substr(slash + 1), 10);
      if (d == 0) throw std::invalid_argument("zero denominator");
      q = mpq_class(n, d);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  q.canonicalize();
  return Rational(q);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) {
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (!big_ && !b.big_) {
    i128 n;
    i128 d;
    if (den_ == b.den_) {
      n = i128(num_) + b.num_;
      u128 g = gcd128(uabs128(n), u128(den_));
      n /= i128(g);
      d = i128(den_) / i128(g);
    } else {
      std::int64_t g = std::gcd(den_, b.den_);
      if (g == 1) {
        n = i128(num_) * b.den_ + i128(b.num_) * den_;
        d = i128(den_) * b.den_;
      } else {
        i128 t = i128(num_) * (b.den_ / g) + i128(b.num_) * (den_ / g);
        std::uint64_t g2 =
            std::gcd(std::uint64_t(uabs128(t) % u128(g)), std::uint64_t(g));
        if (g2 == 0) g2 = std::uint64_t(g);
        n = t / i128(g2);
        d = i128(den_ / g) * (b.den_ / i128(g2));
      }
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (fits(n) && fits(d)) {
      num_ = std::int64_t(n);
      den_ = std::int64_t(d);
      return *this;
    }
  }
  assign_big(to_mpq() + b.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& b) { return *this += -b; }

Rational& Rational::operator*=(const Rational& b) {
  if (is_zero() || b.is_zero()) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return *this;
  }
  if (!big_ && !b.big_) {
    std::uint64_t g1 = std::gcd(uabs(num_), std::uint64_t(b.den_));
    std::uint64_t g2 = std::gcd(uabs(b.num_), std::uint64_t(den_));
    i128 n = i128(num_ / std::int64_t(g1)) * (b.num_ / std::int64_t(g2));
    i128 d = i128(den_ / std::int64_t(g2)) * (b.den_ / std::int64_t(g1));
    if (fits(n) && fits(d)) {
      num_ = std::int64_t(n);
      den_ = std::int64_t(d);
      return *this;
    }
  }
  assign_big(to_mpq() * b.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  if (!b.big_) {
    Rational inv;
    if (b.num_ < 0) {
      inv.num_ = -b.den_;
      inv.den_ = -b.num_;
    } else {
      inv.num_ = b.den_;
      inv.den_ = b.num_;
    }
    return *this *= inv;
  }
  assign_big(to_mpq() / b.to_mpq());
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  Rational p(a);
  p *= b;
  *this += p;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace anyon
