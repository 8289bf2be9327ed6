#include "pfaffcubic/univariate.hpp"

#include <algorithm>

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

UniPoly::UniPoly(FieldSpec field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (c.is_zero()) c = Scalar::zero(field_);
  }
  trim();
}

UniPoly UniPoly::constant(FieldSpec field, const Scalar& c) { return UniPoly(field, {c}); }

UniPoly UniPoly::linear_root(FieldSpec field, const Scalar& a) { return UniPoly(field, {-a, Scalar::one(field)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::evaluate(const Scalar& t) const {
  Scalar v = Scalar::zero(field_);
  for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
  return v;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = leading().inverse();
  std::vector<Scalar> c = c_;
  for (auto& x : c) x *= inv;
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * Scalar::from_int(field_, static_cast<long long>(i)));
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(field_, {});
  std::vector<Scalar> c(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(field_, std::move(c));
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const FieldSpec& f = a.field();
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  const Scalar inv = b.leading().inverse();
  std::vector<Scalar> quo(std::max(0, a.degree() - db + 1), Scalar::zero(f));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    const Scalar c = rem[i] * inv;
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  rem.resize(std::min<std::size_t>(rem.size(), db));
  q = UniPoly(f, std::move(quo));
  r = UniPoly(f, std::move(rem));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& mod) {
  UniPoly q, r;
  UniPoly result = UniPoly::constant(mod.field(), Scalar::one(mod.field()));
  divmod(base, mod, q, r);
  UniPoly b = r;
  while (e) {
    if (e & 1) {
      divmod(result * b, mod, q, r);
      result = r;
    }
    e >>= 1;
    if (e) {
      divmod(b * b, mod, q, r);
      b = r;
    }
  }
  return result;
}

namespace {

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divmod(a, b, q, r);
  return q;
}

// f(t) = g(t^p) = (g(t))^p over F_p; returns g.
UniPoly pth_root(const UniPoly& f) {
  const std::uint32_t p = f.field().characteristic();
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return UniPoly(f.field(), std::move(c));
}

bool less(const Scalar& a, const Scalar& b) {
  if (a.is_rational()) return a.rational() < b.rational();
  return a.residue() < b.residue();
}

void split(const UniPoly& f, std::uint64_t& seed, std::vector<Scalar>& out) {
  // f is monic, squarefree, a product of distinct linear factors
  if (f.degree() <= 0) return;
  const FieldSpec& field = f.field();
  if (f.degree() == 1) {
    out.push_back(-f.coeffs()[0]);
    return;
  }
  const std::uint64_t p = field.characteristic();
  for (;;) {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    const Scalar a = Scalar::from_int(field, static_cast<long long>((seed >> 33) % p));
    const UniPoly shifted(field, {a, Scalar::one(field)});
    UniPoly h = powmod(shifted, (p - 1) / 2, f) - UniPoly::constant(field, Scalar::one(field));
    UniPoly g = gcd(f, h);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split(g, seed, out);
      split(exact_quotient(f, g), seed, out);
      return;
    }
  }
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

UniPoly radical(const UniPoly& f) {
  if (f.degree() <= 0) return UniPoly::constant(f.field(), Scalar::one(f.field()));
  const UniPoly d = f.derivative();
  if (d.is_zero()) return radical(pth_root(f));
  const UniPoly g = gcd(f, d);
  const UniPoly h = exact_quotient(f, g).monic();
  if (g.degree() == 0) return h;
  const UniPoly r = radical(g);
  return exact_quotient(h * r, gcd(h, r)).monic();
}

std::vector<Scalar> roots(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<Scalar> out;
  const FieldSpec& field = f.field();
  const UniPoly r = radical(f);
  if (r.degree() <= 0) return out;
  if (field.is_prime_field()) {
    const UniPoly t(field, {Scalar::zero(field), Scalar::one(field)});
    const UniPoly frob = powmod(t, field.characteristic(), r) - t;
    const UniPoly lin = gcd(r, frob);
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    split(lin, seed, out);
  } else {
    // clear denominators, then the rational root test
    mpz_class lcm = 1;
    for (const auto& c : r.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : r.coeffs()) {
      mpq_class v = c.rational() * lcm;
      ints.push_back(v.get_num());
    }
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) out.push_back(Scalar::zero(field));
    for (const auto& num : divisors(ints[low])) {
      for (const auto& den : divisors(ints.back())) {
        for (int sign : {1, -1}) {
          mpq_class q(sign * num, den);
          q.canonicalize();
          const Scalar cand = Scalar::from_rational(field, q);
          if (r.evaluate(cand).is_zero()) out.push_back(cand);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pfaffcubic
