#include "abcat/field.hpp"

namespace abcat {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit with the bases below
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 62)) throw input_error("field modulus too large (need p < 2^62)");
  if (!is_prime_u64(p)) throw input_error("field modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::name() const {
  if (kind == FieldKind::rationals) return "Q";
  return "Fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("bad field spec '" + s + "'");
    return prime(std::stoull(digits));
  }
  throw input_error("bad field spec '" + s + "' (expected Q or Fp:<p>)");
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw input_error("scalar arithmetic across distinct fields");
}

Scalar Scalar::one(FieldSpec f) {
  Scalar s(f);
  if (f.kind == FieldKind::rationals)
    s.q_ = 1;
  else
    s.r_ = 1 % f.p;
  return s;
}

Scalar Scalar::from_int(FieldSpec f, long n) {
  Scalar s(f);
  if (f.kind == FieldKind::rationals) {
    s.q_ = n;
  } else {
    long m = n % static_cast<long>(f.p);
    if (m < 0) m += static_cast<long>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_string(FieldSpec f, const std::string& str) {
  const auto slash = str.find('/');
  mpq_class q;
  try {
    if (slash == std::string::npos)
      q = mpq_class(str);
    else
      q = mpq_class(str);
  } catch (const std::exception&) {
    throw input_error("bad scalar literal '" + str + "'");
  }
  if (q.get_den() == 0) throw input_error("zero denominator in scalar literal '" + str + "'");
  q.canonicalize();
  Scalar s(f);
  if (f.kind == FieldKind::rationals) {
    s.q_ = q;
    return s;
  }
  // reduce num/den modulo p
  const mpz_class pz(static_cast<unsigned long>(f.p));
  mpz_class num = q.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) throw input_error("scalar literal '" + str + "' has denominator divisible by p");
  const std::uint64_t n64 = num.get_ui();
  const std::uint64_t d64 = den.get_ui();
  s.r_ = mulmod(n64, powmod(d64, f.p - 2, f.p), f.p);
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::rationals ? q_ == 1 : r_ == 1 % field_.p;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind == FieldKind::rationals)
    s.q_ = q_ + o.q_;
  else {
    s.r_ = r_ + o.r_;
    if (s.r_ >= field_.p) s.r_ -= field_.p;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind == FieldKind::rationals)
    s.q_ = q_ - o.q_;
  else
    s.r_ = (r_ >= o.r_) ? r_ - o.r_ : r_ + field_.p - o.r_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind == FieldKind::rationals)
    s.q_ = q_ * o.q_;
  else
    s.r_ = mulmod(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw invariant_error("division by zero");
  Scalar s(field_);
  if (field_.kind == FieldKind::rationals)
    s.q_ = 1 / q_;
  else
    s.r_ = powmod(r_, field_.p - 2, field_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind == FieldKind::rationals)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return field_.kind == FieldKind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.kind == FieldKind::rationals) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace abcat
