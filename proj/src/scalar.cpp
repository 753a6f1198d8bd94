#include "superstein/scalar.hpp"

#include <stdexcept>

namespace superstein {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint32_t p) {
  std::int64_t result = 1;
  base = mod_reduce(base, p);
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::int64_t mpz_mod_p(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::residue(std::int64_t value, std::uint32_t modulus) {
  Scalar s;
  s.mod_ = modulus;
  s.r_ = mod_reduce(value, modulus);
  return s;
}

const mpq_class& Scalar::rational_value() const {
  if (mod_) throw std::logic_error("rational_value() on an F_p residue");
  return q_;
}

std::int64_t Scalar::residue_value() const {
  if (!mod_) throw std::logic_error("residue_value() on a rational");
  return r_;
}

void Scalar::promote(std::uint32_t modulus) {
  if (mod_ == modulus || modulus == 0) return;
  if (mod_ != 0) throw std::invalid_argument("mixing residues of different moduli");
  const std::int64_t den = mpz_mod_p(q_.get_den(), modulus);
  if (den == 0) throw std::domain_error("denominator not invertible modulo p");
  const std::int64_t num = mpz_mod_p(q_.get_num(), modulus);
  r_ = num * mod_pow(den, modulus - 2, modulus) % modulus;
  mod_ = modulus;
  q_ = 0;
}

Scalar Scalar::in_field(std::uint32_t modulus) const {
  if (modulus == mod_) return *this;
  if (modulus == 0) throw std::invalid_argument("cannot lift an F_p residue to Q");
  Scalar s = *this;
  s.promote(modulus);
  return s;
}

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  if (a.mod_ && b.mod_ && a.mod_ != b.mod_)
    throw std::invalid_argument("mixing residues of different moduli");
  return a.mod_ ? a.mod_ : b.mod_;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.negate();
  return s;
}

void Scalar::negate() {
  if (mod_)
    r_ = r_ ? mod_ - r_ : 0;
  else
    mpq_neg(q_.get_mpq_t(), q_.get_mpq_t());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const auto p = common_modulus(*this, rhs);
  if (p) {
    promote(p);
    r_ = (r_ + rhs.in_field(p).r_) % p;
  } else {
    q_ += rhs.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  const auto p = common_modulus(*this, rhs);
  if (p) {
    promote(p);
    r_ = mod_reduce(r_ - rhs.in_field(p).r_, p);
  } else {
    q_ -= rhs.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  const auto p = common_modulus(*this, rhs);
  if (p) {
    promote(p);
    r_ = r_ * rhs.in_field(p).r_ % p;
  } else {
    q_ *= rhs.q_;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (mod_) return residue(mod_pow(r_, mod_ - 2, mod_), mod_);
  return Scalar(mpq_class(1) / q_);
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  const auto p = common_modulus(*this, rhs);
  return *this *= rhs.in_field(p).inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto p = Scalar::common_modulus(a, b);
  if (p) return a.in_field(p).r_ == b.in_field(p).r_;
  return a.q_ == b.q_;
}

std::string Scalar::to_string() const {
  if (mod_) return std::to_string(r_);
  return q_.get_str();
}

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported (2 must be invertible)");
  if (p < 3 || p > 2147483647ULL) throw std::invalid_argument("modulus must be an odd prime below 2^31");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed field '" + text + "'");
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const { return modulus_ ? "Fp:" + std::to_string(modulus_) : "Q"; }

Scalar parse_scalar(const std::string& text) {
  const auto valid_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed coefficient '" + text + "'");
  mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den));
  if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + text + "'");
  return Scalar(q);
}

}  // namespace superstein
