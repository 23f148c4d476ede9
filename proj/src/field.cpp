#include "lsc/field.hpp"

namespace lsc {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = (r * base) % m;
    base = (base * base) % m;
    exp >>= 1;
  }
  return r;
}

// Extended Euclid; returns x with a*x == 1 (mod m). a in [1, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::logic_error("mod_inverse: not invertible");
  return ((old_s % m) + m) % m;
}

const std::int64_t& fp(const Scalar& s) { return *std::get_if<std::int64_t>(&s); }
const Rat& qq(const Scalar& s) { return *std::get_if<Rat>(&s); }

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Deterministic Miller-Rabin; bases {2,3,5,7} decide primality below
  // 3.2e9, and our moduli are < 2^31. Products fit in 64 bits.
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7}) {
    std::int64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::rationals() { return Field(FieldSpec{FieldKind::Rationals, 0}); }

Field Field::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw InputError("field modulus must be a prime in [2, 2^31): got " + std::to_string(p));
  return Field(FieldSpec{FieldKind::PrimeField, p});
}

Field Field::from_spec(const FieldSpec& spec) {
  return spec.kind == FieldKind::Rationals ? rationals() : prime(spec.p);
}

Scalar Field::zero() const {
  if (spec_.kind == FieldKind::PrimeField) return Scalar(std::int64_t{0});
  return Scalar(Rat(0));
}

Scalar Field::one() const {
  if (spec_.kind == FieldKind::PrimeField) return Scalar(std::int64_t{1});
  return Scalar(Rat(1));
}

Scalar Field::from_int(std::int64_t v) const {
  if (spec_.kind == FieldKind::PrimeField) {
    std::int64_t r = v % spec_.p;
    if (r < 0) r += spec_.p;
    return Scalar(r);
  }
  return Scalar(Rat(static_cast<long>(v)));
}

Scalar Field::from_rat(const Rat& r) const {
  if (spec_.kind == FieldKind::Rationals) {
    Rat c = r;
    c.canonicalize();
    return Scalar(c);
  }
  Rat c = r;
  c.canonicalize();
  mpz_class num = c.get_num() % spec_.p;
  mpz_class den = c.get_den() % spec_.p;
  std::int64_t n = num.get_si();
  std::int64_t d = den.get_si();
  if (n < 0) n += spec_.p;
  if (d < 0) d += spec_.p;
  if (d == 0)
    throw InputError("rational value has denominator divisible by " + std::to_string(spec_.p));
  return Scalar((n * mod_inverse(d, spec_.p)) % spec_.p);
}

Scalar Field::parse(const std::string& text) const {
  try {
    Rat r(text, 10);
    return from_rat(r);
  } catch (const std::invalid_argument&) {
    throw InputError("cannot parse exact scalar: '" + text + "'");
  }
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (spec_.kind == FieldKind::PrimeField) {
    std::int64_t r = fp(a) + fp(b);
    if (r >= spec_.p) r -= spec_.p;
    return Scalar(r);
  }
  return Scalar(Rat(qq(a) + qq(b)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (spec_.kind == FieldKind::PrimeField) {
    std::int64_t r = fp(a) - fp(b);
    if (r < 0) r += spec_.p;
    return Scalar(r);
  }
  return Scalar(Rat(qq(a) - qq(b)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (spec_.kind == FieldKind::PrimeField) return Scalar((fp(a) * fp(b)) % spec_.p);
  return Scalar(Rat(qq(a) * qq(b)));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::neg(const Scalar& a) const {
  if (spec_.kind == FieldKind::PrimeField) {
    std::int64_t v = fp(a);
    return Scalar(v == 0 ? std::int64_t{0} : spec_.p - v);
  }
  return Scalar(Rat(-qq(a)));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::logic_error("division by zero");
  if (spec_.kind == FieldKind::PrimeField) return Scalar(mod_inverse(fp(a), spec_.p));
  return Scalar(Rat(1 / qq(a)));
}

bool Field::is_zero(const Scalar& a) const {
  if (spec_.kind == FieldKind::PrimeField) return fp(a) == 0;
  return sgn(qq(a)) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (spec_.kind == FieldKind::PrimeField) return fp(a) == 1;
  return qq(a) == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
  if (spec_.kind == FieldKind::PrimeField) return fp(a) == fp(b);
  return qq(a) == qq(b);
}

std::string Field::to_string(const Scalar& a) const {
  if (spec_.kind == FieldKind::PrimeField) return std::to_string(fp(a));
  return qq(a).get_str();
}

int scalar_compare(const Scalar& a, const Scalar& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (std::holds_alternative<std::int64_t>(a)) {
    std::int64_t x = fp(a), y = fp(b);
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  return cmp(qq(a), qq(b));
}

std::string field_spec_string(const FieldSpec& spec) {
  if (spec.kind == FieldKind::Rationals) return "qq";
  return "fp:" + std::to_string(spec.p);
}

FieldSpec parse_field_spec(const std::string& text) {
  if (text == "qq") return FieldSpec{FieldKind::Rationals, 0};
  if (text.rfind("fp:", 0) == 0) {
    std::int64_t p = 0;
    try {
      std::size_t pos = 0;
      p = std::stoll(text.substr(3), &pos);
      if (pos != text.size() - 3) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError("bad field spec '" + text + "': expected qq or fp:<prime>");
    }
    return Field::prime(p).spec();
  }
  throw InputError("bad field spec '" + text + "': expected qq or fp:<prime>");
}

}  // namespace lsc
