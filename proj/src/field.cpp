#include "pfaffcubic/field.hpp"

#include <charconv>
#include <functional>

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2 || p == 3) {
    throw DomainError("characteristic " + std::to_string(p) + " is not supported");
  }
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw DomainError(std::to_string(p) + " is not a supported prime (need 5 <= p < 2^31)");
  }
  return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "QQ") return rationals();
  std::string_view digits = text;
  if (digits.starts_with("p:")) {
    digits.remove_prefix(2);
  } else if (digits.starts_with("F_") || digits.starts_with("f_")) {
    digits.remove_prefix(2);
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw DomainError("unrecognised field '" + std::string(text) + "' (expected q or p:<prime>)");
  }
  return prime(p);
}

std::string FieldSpec::name() const {
  return is_rationals() ? std::string("QQ") : "F_" + std::to_string(p_);
}

// ---------------------------------------------------------------------------

namespace {

std::uint32_t mod_pow(std::uint64_t b, unsigned long long e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  if (f.is_rationals()) return Scalar(mpq_class(0));
  return Scalar(Mod{0, static_cast<std::uint32_t>(f.characteristic())});
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  if (f.is_rationals()) return Scalar(mpq_class(static_cast<long>(v)));
  const auto p = static_cast<long long>(f.characteristic());
  long long r = v % p;
  if (r < 0) r += p;
  return Scalar(Mod{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(p)});
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  if (f.is_rationals()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
  }
  const auto p = static_cast<unsigned long>(f.characteristic());
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw DomainError("denominator " + q.get_den().get_str() + " vanishes in " + f.name());
  }
  Scalar n(Mod{static_cast<std::uint32_t>(num.get_ui()), static_cast<std::uint32_t>(p)});
  Scalar d(Mod{static_cast<std::uint32_t>(den.get_ui()), static_cast<std::uint32_t>(p)});
  return n / d;
}

bool Scalar::is_zero() const {
  if (auto m = std::get_if<Mod>(&rep_)) return m->v == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto m = std::get_if<Mod>(&rep_)) return m->p != 0 && m->v == 1;
  return std::get<mpq_class>(rep_) == 1;
}

bool Scalar::is_negative() const {
  if (auto q = std::get_if<mpq_class>(&rep_)) return sgn(*q) < 0;
  return false;
}

std::uint32_t Scalar::modulus() const {
  if (auto m = std::get_if<Mod>(&rep_)) return m->p;
  return 0;
}

std::uint32_t Scalar::residue() const {
  if (auto m = std::get_if<Mod>(&rep_)) return m->v;
  throw DomainError("residue() requested for a rational scalar");
}

mpq_class Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&rep_)) return *q;
  const auto& m = std::get<Mod>(rep_);
  if (m.v == 0) return mpq_class(0);
  throw DomainError("rational() requested for a prime-field scalar");
}

Scalar Scalar::operator-() const {
  if (auto m = std::get_if<Mod>(&rep_)) {
    return Scalar(Mod{m->v == 0 ? 0u : m->p - m->v, m->p});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (auto m = std::get_if<Mod>(&rep_)) {
    return Scalar(Mod{mod_pow(m->v, m->p - 2, m->p), m->p});
  }
  mpq_class r = 1 / std::get<mpq_class>(rep_);
  r.canonicalize();
  return Scalar(std::move(r));
}

Scalar Scalar::pow(unsigned long long e) const {
  if (auto m = std::get_if<Mod>(&rep_)) {
    if (m->p == 0) return *this;
    return Scalar(Mod{mod_pow(m->v, e, m->p), m->p});
  }
  mpq_class r(1);
  mpq_class b = std::get<mpq_class>(rep_);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return Scalar(std::move(r));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto a = std::get_if<Mod>(&rep_)) {
    if (auto b = std::get_if<Mod>(&o.rep_)) {
      const std::uint32_t p = a->p ? a->p : b->p;
      std::uint64_t s = static_cast<std::uint64_t>(a->v) + b->v;
      if (p && s >= p) s -= p;
      a->v = static_cast<std::uint32_t>(s);
      a->p = p;
      return *this;
    }
    // untyped zero plus rational
    rep_ = o.rep_;
    return *this;
  }
  auto& q = std::get<mpq_class>(rep_);
  if (auto b = std::get_if<mpq_class>(&o.rep_)) {
    q += *b;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto a = std::get_if<Mod>(&rep_)) {
    if (auto b = std::get_if<Mod>(&o.rep_)) {
      const std::uint32_t p = a->p ? a->p : b->p;
      a->v = p ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(a->v) * b->v % p) : 0;
      a->p = p;
      return *this;
    }
    rep_ = mpq_class(0);
    return *this;
  }
  auto& q = std::get<mpq_class>(rep_);
  if (auto b = std::get_if<mpq_class>(&o.rep_)) {
    q *= *b;
  } else {
    q = 0;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (auto x = std::get_if<Scalar::Mod>(&a.rep_)) {
    auto y = std::get_if<Scalar::Mod>(&b.rep_);
    return y && x->v == y->v && x->p == y->p;
  }
  auto y = std::get_if<mpq_class>(&b.rep_);
  return y && std::get<mpq_class>(a.rep_) == *y;
}

std::string Scalar::to_string() const {
  if (auto m = std::get_if<Mod>(&rep_)) return std::to_string(m->v);
  return std::get<mpq_class>(rep_).get_str();
}

std::size_t Scalar::hash() const {
  if (auto m = std::get_if<Mod>(&rep_)) return std::hash<std::uint32_t>()(m->v);
  return std::hash<std::string>()(std::get<mpq_class>(rep_).get_str());
}

// ---------------------------------------------------------------------------

bool is_square(const Scalar& a) {
  if (a.is_zero()) return true;
  if (a.is_rational()) {
    const mpq_class q = a.rational();
    return sgn(q) > 0 && mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
  }
  const std::uint32_t p = a.modulus();
  return mod_pow(a.residue(), (p - 1) / 2, p) == 1;
}

Scalar square_root(const Scalar& a) {
  if (!is_square(a)) throw DomainError("square_root of a non-square");
  if (a.is_zero()) return a;
  if (a.is_rational()) {
    const mpq_class q = a.rational();
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return Scalar::from_rational(FieldSpec::rationals(), mpq_class(n, d));
  }
  // Tonelli-Shanks
  const std::uint64_t p = a.modulus();
  const std::uint64_t n = a.residue();
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = mod_pow(z, q, p);
  std::uint64_t t = mod_pow(n, q, p);
  std::uint64_t r = mod_pow(n, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return Scalar::from_int(FieldSpec::prime(p), static_cast<long long>(r));
}

}  // namespace pfaffcubic
