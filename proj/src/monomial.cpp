#include "pfaffcubic/monomial.hpp"

#include <algorithm>

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
    throw DomainError("too many variables for a monomial");
  }
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw DomainError("exponent out of range");
    m.e[i] = static_cast<std::uint8_t>(exps[i]);
    m.deg = static_cast<std::uint16_t>(m.deg + exps[i]);
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
  }
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.e[i] && b.e[i]) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : e) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::DegRevLex:
      return degrevlex_compare(a, b);
    case Kind::Lex:
      for (int i = 0; i < kMaxVars; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      }
      return 0;
    case Kind::Eliminate: {
      int da = 0, db = 0;
      for (int i = 0; i < kMaxVars; ++i) {
        if (mask_ & (1u << i)) {
          da += a.e[i];
          db += b.e[i];
        }
      }
      if (da != db) return da > db ? 1 : -1;
      return degrevlex_compare(a, b);
    }
  }
  return 0;
}

namespace {

void fill(int n, int var, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur.e[var] = static_cast<std::uint8_t>(left);
    out.push_back(cur);
    cur.e[var] = 0;
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur.e[var] = static_cast<std::uint8_t>(k);
    fill(n, var + 1, left - k, cur, out);
  }
  cur.e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  cur.deg = static_cast<std::uint16_t>(d);
  fill(n, 0, d, cur, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex_compare(a, b) > 0; });
  return out;
}

}  // namespace pfaffcubic
