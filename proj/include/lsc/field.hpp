#ifndef LSC_FIELD_HPP
#define LSC_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace lsc {

// User-facing error (bad input, invalid parameters, budget violations).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant (pipeline produced something it must not).
class ComputeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Rat = mpq_class;

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t p = 0;  // modulus, meaningful iff kind == PrimeField

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// One exact field element. Prime-field values are reduced representatives
// in [0, p); rationals are kept canonical (coprime, positive denominator).
using Scalar = std::variant<std::int64_t, Rat>;

bool is_prime(std::int64_t n);

// Arithmetic context for Scalars. All operations on a Scalar go through the
// Field that created it; values from different fields must never mix.
class Field {
public:
  static Field rationals();
  static Field prime(std::int64_t p);  // p prime, 2 <= p < 2^31
  static Field from_spec(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  FieldKind kind() const { return spec_.kind; }
  std::int64_t modulus() const { return spec_.p; }
  // Field characteristic: 0 for the rationals, p otherwise.
  std::int64_t characteristic() const {
    return spec_.kind == FieldKind::PrimeField ? spec_.p : 0;
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rat(const Rat& r) const;  // reduces mod p for prime fields
  Scalar parse(const std::string& text) const;  // "a" or "a/b"

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  std::string to_string(const Scalar& a) const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(FieldSpec spec) : spec_(spec) {}

  FieldSpec spec_;
};

// Deterministic total order on same-field scalars (used for canonical
// sorting of points and report payloads). Returns <0, 0, >0.
int scalar_compare(const Scalar& a, const Scalar& b);

std::string field_spec_string(const FieldSpec& spec);     // "qq" or "fp:<p>"
FieldSpec parse_field_spec(const std::string& text);

}  // namespace lsc

#endif
