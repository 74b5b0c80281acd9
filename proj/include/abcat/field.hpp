#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abcat {

// Raised on malformed user input (dimension mismatches, bad spec files, ...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a requested computation is outside the engine's scope.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an internal invariant fails; always a bug, never user error.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

enum class FieldKind : std::uint8_t { rationals, prime };

// The base field of a session: Q, or F_p for a user-chosen prime p.
// Fixed per session and recorded in every derived object.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
  static FieldSpec prime(std::uint64_t p);

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string name() const;
  // parses "Q" or "Fp:<p>"
  static FieldSpec parse(const std::string& s);
};

bool is_prime_u64(std::uint64_t n);

// One exact field element. No floating point anywhere in the engine.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(FieldSpec f) : field_(f) {}

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f);
  static Scalar from_int(FieldSpec f, long n);
  // "num", "num/den"
  static Scalar from_string(FieldSpec f, const std::string& s);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  std::string str() const;

  const mpq_class& rational() const { return q_; }

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_{};
  mpq_class q_{0};       // used when field is Q
  std::uint64_t r_ = 0;  // used when field is F_p
};

}  // namespace abcat
