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

#include "anyon/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <mpfr.h>

namespace anyon {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact quotient of a by a monic b; the remainder must vanish.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Returns (quotient, remainder) of a / b over Q; b nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i].is_zero()) continue;
    Rational c = a[i] / lead;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j].add_product(a[i], b[j]);
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::int64_t mod(std::int64_t k, std::int64_t n) {
  std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  IntPoly p(static_cast<std::size_t>(order) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(order)] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(order, p);
  return p;
}

CyclotomicField::CyclotomicField(int order)
    : order_(order), modulus_(cyclotomic_polynomial(order)) {
  degree_ = static_cast<int>(modulus_.size()) - 1;
  table_size_ = std::max(order_, 2 * degree_ - 1);
  const auto deg = static_cast<std::size_t>(degree_);
  powers_.assign(static_cast<std::size_t>(table_size_) * deg, 0);
  for (int k = 0; k < table_size_; ++k) {
    std::int64_t* row = &powers_[static_cast<std::size_t>(k) * deg];
    if (k < degree_) {
      row[k] = 1;
      continue;
    }
    const std::int64_t* prev = &powers_[static_cast<std::size_t>(k - 1) * deg];
    std::int64_t top = prev[deg - 1];
    for (std::size_t i = deg; i-- > 1;) row[i] = prev[i - 1];
    row[0] = 0;
    // x^deg == -(m_0 + m_1 x + ... + m_{deg-1} x^{deg-1})
    for (std::size_t i = 0; i < deg; ++i) row[i] -= top * modulus_[i];
  }
}

const CyclotomicField& CyclotomicField::get(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mutex);
  auto& slot = fields[order];
  if (!slot) slot.reset(new CyclotomicField(order));
  return *slot;
}

std::span<const std::int64_t> CyclotomicField::power(int k) const {
  if (k < 0 || k >= table_size_) throw std::out_of_range("power table index");
  const auto deg = static_cast<std::size_t>(degree_);
  return {&powers_[static_cast<std::size_t>(k) * deg], deg};
}

CycScalar::CycScalar(int order)
    : field_(&CyclotomicField::get(order)),
      coeffs_(static_cast<std::size_t>(field_->degree()), Rational(0)) {}

CycScalar::CycScalar(int order, const Rational& value) : CycScalar(order) {
  coeffs_[0] = value;
}

CycScalar CycScalar::from_powers(int order, std::span<const Rational> raw) {
  CycScalar r(order);
  const auto& f = *r.field_;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k].is_zero()) continue;
    auto row = f.power(static_cast<int>(mod(static_cast<std::int64_t>(k), order)));
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0) r.coeffs_[i].add_product(raw[k], Rational(row[i]));
    }
  }
  return r;
}

CycScalar CycScalar::omega_power(int order, std::int64_t k) {
  CycScalar r(order);
  auto row = r.field_->power(static_cast<int>(mod(k, order)));
  for (std::size_t i = 0; i < row.size(); ++i) r.coeffs_[i] = Rational(row[i]);
  return r;
}

CycScalar CycScalar::from_coeffs(int order, Coeffs coeffs) {
  const auto& f = CyclotomicField::get(order);
  if (coeffs.size() != static_cast<std::size_t>(f.degree())) {
    throw std::invalid_argument("coefficient count does not match deg Phi_N");
  }
  return CycScalar(&f, std::move(coeffs));
}

bool CycScalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool CycScalar::is_one() const {
  return coeffs_[0].is_one() &&
         std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool CycScalar::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

void CycScalar::check_order(const CycScalar& b) const {
  if (field_ != b.field_) {
    throw std::invalid_argument("cyclotomic scalars of different order");
  }
}

CycScalar CycScalar::operator-() const {
  CycScalar r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& b) {
  check_order(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& b) {
  check_order(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& b) { return *this = *this * b; }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  CycScalar r(a.field_, CycScalar::Coeffs(a.coeffs_.size(), Rational(0)));
  r.add_product(a, b);
  return r;
}

void CycScalar::add_product(const CycScalar& a, const CycScalar& b) {
  check_order(a);
  check_order(b);
  const std::size_t deg = coeffs_.size();
  if (deg == 1) {
    coeffs_[0].add_product(a.coeffs_[0], b.coeffs_[0]);
    return;
  }
  boost::container::small_vector<Rational, 8> prod(2 * deg - 1, Rational(0));
  bool any = false;
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      prod[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
      any = true;
    }
  }
  if (!any) return;
  for (std::size_t i = 0; i < deg; ++i) coeffs_[i] += prod[i];
  for (std::size_t m = deg; m < prod.size(); ++m) {
    if (prod[m].is_zero()) continue;
    auto row = field_->power(static_cast<int>(m));
    for (std::size_t i = 0; i < deg; ++i) {
      if (row[i] != 0) coeffs_[i].add_product(prod[m], Rational(row[i]));
    }
  }
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

CycScalar CycScalar::conj() const {
  const int n = order();
  CycScalar r(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    auto row = field_->power(static_cast<int>(mod(-static_cast<std::int64_t>(k), n)));
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0) r.coeffs_[i].add_product(coeffs_[k], Rational(row[i]));
    }
  }
  return r;
}

CycScalar CycScalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(w_N)");
  if (is_rational()) return CycScalar(order(), Rational(1) / coeffs_[0]);
  // Extended Euclid on (Phi_N, a): track s with s * a == r (mod Phi_N).
  Poly r0;
  for (auto c : field_->modulus()) r0.emplace_back(c);
  Poly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic modulus is not irreducible");
  Rational scale = Rational(1) / r0[0];
  for (auto& c : s0) c *= scale;
  return from_powers(order(), s0);
}

std::complex<double> CycScalar::to_complex() const {
  const int n = order();
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    acc += coeffs_[k].to_double() * std::polar(1.0, angle);
  }
  return acc;
}

std::string CycScalar::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mag = (c.sign() < 0 ? -c : c).to_string();
    if (mag.size() > 2 && mag.ends_with("/1")) mag.resize(mag.size() - 2);
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    if (k == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += k == 1 ? "w" : "w^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

DecimalComplex cyc_to_complex(const CycScalar& a, int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be >= 1 digit");
  // Headroom for coefficient magnitude and the summation.
  double magnitude = 1.0;
  for (const auto& c : a.coeffs()) {
    magnitude = std::max(magnitude, std::abs(c.to_double()));
  }
  auto bits = static_cast<mpfr_prec_t>(
      (digits + 20 + std::log10(magnitude * static_cast<double>(a.coeffs().size()))) *
      3.33);
  mpfr_t re, im, angle, s, c, q;
  for (mpfr_ptr x : {re, im, angle, s, c, q}) mpfr_init2(x, bits);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeffs()[k].is_zero()) continue;
    mpfr_const_pi(angle, MPFR_RNDN);
    mpfr_mul_ui(angle, angle, 2 * k, MPFR_RNDN);
    mpfr_div_ui(angle, angle, static_cast<unsigned long>(a.order()), MPFR_RNDN);
    mpfr_sin_cos(s, c, angle, MPFR_RNDN);
    mpq_class coeff = a.coeffs()[k].to_mpq();
    mpfr_set_q(q, coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(c, c, q, MPFR_RNDN);
    mpfr_mul(s, s, q, MPFR_RNDN);
    mpfr_add(re, re, c, MPFR_RNDN);
    mpfr_add(im, im, s, MPFR_RNDN);
  }
  auto render = [digits](mpfr_t x) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits + 1, x);
    std::string out(buf);
    mpfr_free_str(buf);
    if (out.starts_with("-") && out.find_first_not_of("-0.") == std::string::npos) {
      out.erase(0, 1);
    }
    return out;
  };
  DecimalComplex out{render(re), render(im),
                     {mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN)}};
  for (mpfr_ptr x : {re, im, angle, s, c, q}) mpfr_clear(x);
  return out;
}

}  // namespace anyon
