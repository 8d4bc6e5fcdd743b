#include "cremona/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <vector>

namespace cremona {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // p < 2^31, so the product fits in 64 bits.
  return (a * b) % p;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Deterministic Miller-Rabin; bases 2,3,5,7 decide all n < 3'215'031'751.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) { std::uint64_t t = a % b; a = b; b = t; }
  return a;
}

// Inverse of a mod m (gcd(a, m) = 1), extended Euclid.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
    tmp = r - q * newr; r = newr; newr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      fs.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) fs.push_back(m);
  return fs;
}

// Smallest generator of F_p^*.
std::uint64_t find_generator(std::uint64_t p) {
  std::uint64_t m = p - 1;
  auto fs = prime_factors(m);
  for (std::uint64_t c = 2; c < p; ++c) {
    bool ok = true;
    for (std::uint64_t q : fs) {
      if (powmod(c, m / q, p) == 1) { ok = false; break; }
    }
    if (ok) return c;
  }
  return 1;  // p = 2: trivial group
}

// Baby-step giant-step discrete log: returns L with g^L = a (mod p).
std::uint64_t discrete_log(std::uint64_t g, std::uint64_t a, std::uint64_t p) {
  std::uint64_t m = p - 1;
  std::uint64_t s = 1;
  while (s * s < m) ++s;
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(s * 2);
  std::uint64_t cur = 1;
  for (std::uint64_t j = 0; j < s; ++j) {
    baby.emplace(cur, j);
    cur = mulmod(cur, g, p);
  }
  std::uint64_t giant = powmod(g, m - (s % m), p);  // g^{-s}, since g^m = 1
  std::uint64_t x = a % p;
  for (std::uint64_t i = 0; i <= s; ++i) {
    auto it = baby.find(x);
    if (it != baby.end()) return (i * s + it->second) % m;
    x = mulmod(x, giant, p);
  }
  return 0;  // unreachable for a in the group
}

bool plain_integer(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_u32(p))
    throw ValidationError(ValidationKind::InvalidParameter,
                          "characteristic " + std::to_string(p) + " is not prime");
  return Field(FieldKind::PrimeField, p);
}

Field Field::parse(std::string_view selector) {
  if (selector == "q" || selector == "Q") return rationals();
  if (selector.substr(0, 3) == "fp:") {
    std::string_view rest = selector.substr(3);
    if (!plain_integer(rest, false))
      throw ValidationError(ValidationKind::ParseError,
                            "bad field selector '" + std::string(selector) + "'");
    unsigned long v = std::stoul(std::string(rest));
    if (v >= (1ull << 31))
      throw ValidationError(ValidationKind::InvalidParameter,
                            "prime characteristic must be < 2^31");
    return prime(static_cast<std::uint32_t>(v));
  }
  throw ValidationError(ValidationKind::ParseError,
                        "field selector must be 'q' or 'fp:<p>', got '" +
                            std::string(selector) + "'");
}

std::string Field::str() const {
  if (kind_ == FieldKind::Rationals) return "q";
  return "fp:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long v) {
  Scalar s(f);
  if (f.kind() == FieldKind::Rationals) {
    s.q_ = mpq_class(v);
  } else {
    long p = static_cast<long>(f.characteristic());
    long r = v % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s(Field::rationals());
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::residue(const Field& f, const mpz_class& v) {
  if (f.kind() != FieldKind::PrimeField)
    throw ValidationError(ValidationKind::FieldMismatch, "residue needs a prime field");
  Scalar s(f);
  mpz_class p(static_cast<unsigned long>(f.characteristic()));
  mpz_class r = v % p;
  if (r < 0) r += p;
  s.r_ = r.get_ui();
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);  // GMP rejects '+'
    return mpz_class(std::string(s));
  };
  if (f.kind() == FieldKind::Rationals) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      if (!plain_integer(text, true))
        throw ValidationError(ValidationKind::ParseError,
                              "bad rational literal '" + std::string(text) + "'");
      return rational(mpq_class(to_mpz(text)));
    }
    std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!plain_integer(num, true) || !plain_integer(den, false))
      throw ValidationError(ValidationKind::ParseError,
                            "bad rational literal '" + std::string(text) + "'");
    mpz_class d = to_mpz(den);
    if (d == 0)
      throw ValidationError(ValidationKind::DivisionByZero,
                            "literal denominator is zero");
    return rational(mpq_class(to_mpz(num), d));
  }
  if (!plain_integer(text, true))
    throw ValidationError(ValidationKind::ParseError,
                          "bad residue literal '" + std::string(text) + "'");
  return residue(f, to_mpz(text));
}

bool Scalar::is_zero() const {
  return fld_.kind() == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return fld_.kind() == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

int Scalar::sign() const {
  if (fld_.kind() != FieldKind::Rationals)
    throw ValidationError(ValidationKind::FieldMismatch,
                          "sign is defined over the rationals only");
  return sgn(q_);
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
  if (!(a.fld_ == b.fld_))
    throw ValidationError(ValidationKind::FieldMismatch,
                          a.fld_.str() + " vs " + b.fld_.str());
}

Scalar Scalar::operator-() const {
  Scalar s(fld_);
  if (fld_.kind() == FieldKind::Rationals) {
    s.q_ = -q_;
  } else {
    std::uint64_t p = fld_.characteristic();
    s.r_ = r_ == 0 ? 0 : p - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw ValidationError(ValidationKind::DivisionByZero, "inverse of zero");
  Scalar s(fld_);
  if (fld_.kind() == FieldKind::Rationals) {
    s.q_ = 1 / q_;
  } else {
    std::uint64_t p = fld_.characteristic();
    s.r_ = powmod(r_, p - 2, p);
  }
  return s;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar acc = one(fld_);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar s(a.fld_);
  if (a.fld_.kind() == FieldKind::Rationals) s.q_ = a.q_ + b.q_;
  else s.r_ = (a.r_ + b.r_) % a.fld_.characteristic();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar s(a.fld_);
  if (a.fld_.kind() == FieldKind::Rationals) s.q_ = a.q_ * b.q_;
  else s.r_ = mulmod(a.r_, b.r_, a.fld_.characteristic());
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  return a.fld_.kind() == FieldKind::Rationals ? a.q_ == b.q_ : a.r_ == b.r_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  return a.fld_.kind() == FieldKind::Rationals ? a.q_ < b.q_ : a.r_ < b.r_;
}

std::string Scalar::str() const {
  if (fld_.kind() == FieldKind::Rationals) return q_.get_str();
  return std::to_string(r_);
}

PowerClass nth_power_class(const Scalar& a, std::uint64_t n) {
  if (a.is_zero())
    throw ValidationError(ValidationKind::InvalidParameter,
                          "nth_power_class needs a nonzero element");
  if (n == 0)
    throw ValidationError(ValidationKind::InvalidParameter, "exponent must be positive");
  if (a.is_one()) return {true, Scalar::one(a.field())};

  PowerClass out;
  if (a.field().kind() == FieldKind::Rationals) {
    mpz_class num = a.rat().get_num();
    mpz_class den = a.rat().get_den();
    bool neg = num < 0;
    if (neg && n % 2 == 0) return {false, std::nullopt};
    mpz_class anum = abs(num);
    mpz_class rn, rd;
    bool en = mpz_root(rn.get_mpz_t(), anum.get_mpz_t(), n) != 0;
    bool ed = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) != 0;
    if (!en || !ed) return {false, std::nullopt};
    if (neg) rn = -rn;
    out.is_nth_power = true;
    out.witness = Scalar::rational(mpq_class(rn, rd));
    return out;
  }

  std::uint64_t p = a.field().characteristic();
  std::uint64_t m = p - 1;
  std::uint64_t nm = n % m;
  std::uint64_t g = nm == 0 ? m : gcd_u64(nm, m);
  if (powmod(a.res(), m / g, p) != 1) return {false, std::nullopt};
  // Solve w^n = a in the cyclic group of order m via a discrete log.
  std::uint64_t gamma = find_generator(p);
  std::uint64_t L = m == 1 ? 0 : discrete_log(gamma, a.res(), p);
  std::uint64_t x;
  if (nm == 0) {
    x = 0;  // a must be 1 here (g = m divides L iff L = 0), handled above
  } else {
    std::uint64_t mg = m / g;
    x = ((L / g) % mg) * invmod(nm / g, mg) % mg;
  }
  out.is_nth_power = true;
  out.witness = Scalar::residue(a.field(), mpz_class(static_cast<unsigned long>(powmod(gamma, x, p))));
  return out;
}

}  // namespace cremona
