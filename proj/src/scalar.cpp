// Copyright (c) 2026 the qha authors
// SPDX-License-Identifier: Apache-2.0

#include "qha/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace qha {

namespace {

// ---- integer polynomial helpers (low degree first) ----

std::vector<Int> poly_trim(std::vector<Int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Exact division of integer polynomials; remainder must vanish.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  num = poly_trim(num);
  std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  while (num.size() >= den.size() && !num.empty()) {
    Int lead = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = lead;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
    num = poly_trim(num);
  }
  if (!num.empty()) throw Error(Errc::BadScalar, "inexact polynomial division");
  return q;
}

// x^n - 1 divided by Phi_d for every proper divisor d of n
const std::vector<Int>& cyclo_fill(long n, std::map<long, std::vector<Int>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Int> p(static_cast<size_t>(n) + 1, Int(0));
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclo_fill(d, cache));
  return cache.emplace(n, poly_trim(p)).first->second;
}

const std::vector<Int>& cyclo_cached(long n) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclo_fill(n, cache);
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod_pow(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((static_cast<unsigned long long>(r) * b) % p);
    b = static_cast<long>((static_cast<unsigned long long>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

long mod_inv(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw Error(Errc::BadScalar, "division by zero in F_p");
  return mod_pow(a, p - 2, p);
}

long rat_mod_p(const Rat& q, long p) {
  Int num = q.get_num(), den = q.get_den();
  Int pn(p);
  Int dm = den % pn;
  if (dm == 0) throw Error(Errc::BadScalar, "denominator divisible by p");
  Int nm = num % pn;
  long n = nm.get_si(), d = dm.get_si();
  if (n < 0) n += p;
  long r = static_cast<long>((static_cast<unsigned long long>(n) * mod_inv(d, p)) % p);
  return r;
}

// ---- rational polynomial helpers for the cyclotomic representation ----

using QPoly = std::vector<Rat>;

QPoly qtrim(QPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return qtrim(c);
}

// remainder of a modulo the (monic, integral) minimal polynomial
QPoly qmod(QPoly a, const std::vector<Int>& minpoly) {
  size_t d = minpoly.size() - 1;
  a = qtrim(a);
  while (a.size() > d) {
    Rat lead = a.back();
    size_t shift = a.size() - 1 - d;
    for (size_t i = 0; i < d; ++i) a[shift + i] -= lead * Rat(minpoly[i]);
    a.pop_back();
    a = qtrim(a);
  }
  return a;
}

// polynomial division over Q: (quot, rem)
std::pair<QPoly, QPoly> qdivmod(QPoly a, QPoly b) {
  a = qtrim(a);
  b = qtrim(b);
  if (b.empty()) throw Error(Errc::BadScalar, "polynomial division by zero");
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat lead = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    a = qtrim(a);
  }
  return {qtrim(q), a};
}

// inverse of a modulo minpoly via extended Euclid over Q[x]
QPoly qinv_mod(QPoly a, const std::vector<Int>& minpoly) {
  QPoly r0(minpoly.size());
  for (size_t i = 0; i < minpoly.size(); ++i) r0[i] = Rat(minpoly[i]);
  QPoly r1 = qtrim(std::move(a));
  if (r1.empty()) throw Error(Errc::BadScalar, "division by zero in cyclotomic field");
  QPoly s0 = {}, s1 = {Rat(1)};
  while (!r1.empty()) {
    auto [q, r2] = qdivmod(r0, r1);
    QPoly s2 = s0;
    QPoly qs = qmul(q, s1);
    s2.resize(std::max(s2.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    s2 = qtrim(s2);
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd, a unit since the minimal polynomial is irreducible
  if (r0.size() != 1) throw Error(Errc::BadScalar, "non-invertible element");
  for (auto& c : s0) c /= r0[0];
  return qmod(std::move(s0), minpoly);
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long n) {
  if (n < 1) throw Error(Errc::BadScalar, "conductor must be positive");
  return cyclo_cached(n);
}

Field Field::prime(long p) {
  if (!is_prime(p)) throw Error(Errc::BadScalar, "Fp needs a prime modulus");
  return Field(FieldKind::Prime, p, 0);
}

Field Field::cyclotomic(long n) {
  if (n < 1) throw Error(Errc::BadScalar, "conductor must be positive");
  cyclo_cached(n);
  return Field(FieldKind::Cyclotomic, 0, n);
}

Field Field::parse(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q" || s == "q") return rationals();
  if (s.rfind("Fp(", 0) == 0 && s.back() == ')') return prime(std::stol(s.substr(3, s.size() - 4)));
  if (s.rfind("Q(zeta_", 0) == 0 && s.back() == ')')
    return cyclotomic(std::stol(s.substr(7, s.size() - 8)));
  throw Error(Errc::ParseError, "unknown field spec '" + spec + "' (want Q, Fp(p) or Q(zeta_n))");
}

long Field::degree() const {
  if (kind_ != FieldKind::Cyclotomic) return 1;
  return static_cast<long>(minpoly().size()) - 1;
}

const std::vector<Int>& Field::minpoly() const {
  if (kind_ != FieldKind::Cyclotomic) throw Error(Errc::BadScalar, "minpoly of a prime field");
  return cyclo_cached(n_);
}

std::string Field::describe() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "Fp(" + std::to_string(p_) + ")";
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(n_) + ")";
  }
  return "?";
}

void Scalar::init_zero() {
  if (field_.kind() == FieldKind::Cyclotomic) c_.assign(static_cast<size_t>(field_.degree()), Rat(0));
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw Error(Errc::FieldMismatch, field_.describe() + " vs " + o.field_.describe());
}

Scalar Scalar::from_int(const Field& f, const Int& z) { return from_rat(f, Rat(z)); }

Scalar Scalar::from_rat(const Field& f, const Rat& q) {
  Rat canon = q;
  canon.canonicalize();  // mpq_class(num, den) arrives unreduced
  Scalar s(f);
  switch (f.kind()) {
    case FieldKind::Rationals: s.q_ = canon; break;
    case FieldKind::Prime: s.r_ = rat_mod_p(canon, f.characteristic()); break;
    case FieldKind::Cyclotomic:
      if (!s.c_.empty()) s.c_[0] = canon;
      break;
  }
  return s;
}

Scalar Scalar::zeta(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Rationals: return one(f);
    case FieldKind::Prime: throw Error(Errc::BadScalar, "no distinguished root of unity in F_p");
    case FieldKind::Cyclotomic: {
      Scalar s(f);
      if (s.c_.size() > 1)
        s.c_[1] = 1;
      else
        s.c_[0] = -Rat(f.minpoly()[0]);  // degree-1 case: x = -c0
      return s;
    }
  }
  return one(f);
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return q_ == 0;
    case FieldKind::Prime: return r_ == 0;
    case FieldKind::Cyclotomic:
      return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
  }
  return true;
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Rationals: s.q_ = q_ + o.q_; break;
    case FieldKind::Prime: s.r_ = (r_ + o.r_) % field_.characteristic(); break;
    case FieldKind::Cyclotomic:
      s.c_ = c_;
      for (size_t i = 0; i < c_.size(); ++i) s.c_[i] += o.c_[i];
      break;
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Rationals: s.q_ = -q_; break;
    case FieldKind::Prime: s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_; break;
    case FieldKind::Cyclotomic:
      s.c_ = c_;
      for (auto& x : s.c_) x = -x;
      break;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Rationals: s.q_ = q_ * o.q_; break;
    case FieldKind::Prime:
      s.r_ = static_cast<long>((static_cast<unsigned long long>(r_) * o.r_) %
                               field_.characteristic());
      break;
    case FieldKind::Cyclotomic: {
      QPoly prod = qmod(qmul(c_, o.c_), field_.minpoly());
      s.c_.assign(static_cast<size_t>(field_.degree()), Rat(0));
      for (size_t i = 0; i < prod.size(); ++i) s.c_[i] = prod[i];
      break;
    }
  }
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s(field_);
  switch (field_.kind()) {
    case FieldKind::Rationals:
      if (q_ == 0) throw Error(Errc::BadScalar, "division by zero");
      s.q_ = 1 / q_;
      break;
    case FieldKind::Prime: s.r_ = mod_inv(r_, field_.characteristic()); break;
    case FieldKind::Cyclotomic: {
      QPoly inv = qinv_mod(c_, field_.minpoly());
      s.c_.assign(static_cast<size_t>(field_.degree()), Rat(0));
      for (size_t i = 0; i < inv.size(); ++i) s.c_[i] = inv[i];
      break;
    }
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(field_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  switch (field_.kind()) {
    case FieldKind::Rationals: return q_ == o.q_;
    case FieldKind::Prime: return r_ == o.r_;
    case FieldKind::Cyclotomic: return c_ == o.c_;
  }
  return false;
}

const Rat& Scalar::rat() const {
  if (field_.kind() != FieldKind::Rationals) throw Error(Errc::FieldMismatch, "not a rational");
  return q_;
}

long Scalar::residue() const {
  if (field_.kind() != FieldKind::Prime) throw Error(Errc::FieldMismatch, "not a prime-field element");
  return r_;
}

const std::vector<Rat>& Scalar::coeffs() const {
  if (field_.kind() != FieldKind::Cyclotomic)
    throw Error(Errc::FieldMismatch, "not a cyclotomic element");
  return c_;
}

std::string Scalar::str() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return rat_str(q_);
    case FieldKind::Prime: return std::to_string(r_);
    case FieldKind::Cyclotomic: {
      std::string out;
      for (size_t k = c_.size(); k-- > 0;) {
        const Rat& coef = c_[k];
        if (coef == 0) continue;
        Rat a = coef;
        if (out.empty()) {
          if (a < 0) {
            out += "-";
            a = -a;
          }
        } else {
          out += a < 0 ? " - " : " + ";
          if (a < 0) a = -a;
        }
        if (k == 0) {
          out += rat_str(a);
        } else {
          if (a != 1) out += rat_str(a) + "*";
          out += k == 1 ? "z" : "z^" + std::to_string(k);
        }
      }
      return out.empty() ? "0" : out;
    }
  }
  return "0";
}

// ---- weight-entry parser ----

namespace {

struct EntryParser {
  const std::string& s;
  size_t i = 0;

  explicit EntryParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  Rat number() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw Error(Errc::ParseError, "expected a number in '" + s + "'");
    std::string num = s.substr(start, i - start);
    if (peek() == '/') {
      ++i;
      skip_ws();
      size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == dstart) throw Error(Errc::ParseError, "expected a denominator in '" + s + "'");
      num += "/" + s.substr(dstart, i - dstart);
    }
    Rat q(num);
    q.canonicalize();
    return q;
  }

  // term := [rational ['*']] ['z' ['^' exponent]]
  Scalar term(const Field& f, int sign) {
    Rat coef(sign);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef *= number();
      have_coef = true;
    }
    if (peek() == '*') ++i;
    if (peek() == 'z') {
      ++i;
      long e = 1;
      if (peek() == '^') {
        ++i;
        e = static_cast<long>(number().get_num().get_si());
      }
      if (f.kind() != FieldKind::Cyclotomic)
        throw Error(Errc::ParseError, "'z' only makes sense over a cyclotomic field");
      return Scalar::from_rat(f, coef) * Scalar::zeta(f).pow(e);
    }
    if (!have_coef) throw Error(Errc::ParseError, "dangling sign in '" + s + "'");
    return Scalar::from_rat(f, coef);
  }

  Scalar parse(const Field& f) {
    Scalar acc = Scalar::zero(f);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    acc += term(f, sign);
    while (!eof()) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++i;
        acc += term(f, c == '-' ? -1 : 1);
      } else {
        throw Error(Errc::ParseError, "trailing junk in scalar '" + s + "'");
      }
    }
    return acc;
  }
};

}  // namespace

Scalar Scalar::parse(const Field& f, const std::string& text) {
  EntryParser p(text);
  if (p.eof()) throw Error(Errc::ParseError, "empty scalar");
  return p.parse(f);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qha
