#include "pfaffcubic/poly.hpp"

#include <algorithm>
#include <cctype>

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

namespace {

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return degrevlex_compare(a.m, b.m) > 0;
}

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars() || !(a.field() == b.field())) {
    throw DomainError("polynomials live in different rings (" + a.field().name() + "[" +
                      std::to_string(a.nvars()) + "] vs " + b.field().name() + "[" +
                      std::to_string(b.nvars()) + "])");
  }
}

}  // namespace

MultiPoly::MultiPoly(FieldSpec field, int nvars) : field_(field), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw DomainError("unsupported number of variables");
}

MultiPoly MultiPoly::constant(FieldSpec field, int nvars, const Scalar& c) {
  return monomial(field, nvars, Monomial{}, c);
}

MultiPoly MultiPoly::variable(FieldSpec field, int nvars, int i) {
  if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
  return monomial(field, nvars, Monomial::variable(i), Scalar::one(field));
}

MultiPoly MultiPoly::monomial(FieldSpec field, int nvars, const Monomial& m, const Scalar& c) {
  MultiPoly p(field, nvars);
  if (!c.is_zero()) p.terms_.push_back({m, c + Scalar::zero(field)});
  return p;
}

MultiPoly MultiPoly::from_terms(FieldSpec field, int nvars, std::vector<Term> terms) {
  MultiPoly p(field, nvars);
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
    } else {
      if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
  for (auto& t : p.terms_) t.c += Scalar::zero(field);
  return p;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.m.deg != terms_.front().m.deg) return false;
  }
  return true;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Scalar()}, term_greater);
  if (it != terms_.end() && it->m == m) return it->c;
  return Scalar::zero(field_);
}

Scalar MultiPoly::constant_term() const { return coefficient(Monomial{}); }

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(field_, nvars_);
  for (const auto& t : terms_) {
    if (t.m.deg == d) r.terms_.push_back(t);
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && nvars_ == 0) {
    *this = o;
    return *this;
  }
  check_compatible(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp;
    if (i == terms_.size()) {
      cmp = -1;
    } else if (j == o.terms_.size()) {
      cmp = 1;
    } else {
      cmp = degrevlex_compare(terms_[i].m, o.terms_[j].m);
    }
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].c + o.terms_[j].c;
      if (!c.is_zero()) out.push_back({terms_[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.m * t.m, s.c * t.c});
  }
  return MultiPoly::from_terms(a.field_, a.nvars_, std::move(prod));
}

MultiPoly operator*(const Scalar& s, const MultiPoly& a) {
  MultiPoly r(a.field_, a.nvars_);
  if (s.is_zero()) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.c *= s;
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Scalar& c) const {
  MultiPoly r(field_, nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(field_, nvars_, Scalar::one(field_));
  MultiPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
  }
  return a.is_zero() || (a.nvars_ == b.nvars_ && a.field_ == b.field_);
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return terms_.front().c.inverse() * *this;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw DomainError("evaluation point has wrong length");
  Scalar sum = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar v = t.c;
    for (int i = 0; i < nvars_; ++i) {
      if (t.m.e[i]) v *= point[i].pow(t.m.e[i]);
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::partial(int i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m.e[i] == 0) continue;
    Monomial m = t.m;
    const int k = m.e[i];
    m.e[i] = static_cast<std::uint8_t>(k - 1);
    m.deg = static_cast<std::uint16_t>(m.deg - 1);
    Scalar c = t.c * Scalar::from_int(field_, k);
    if (!c.is_zero()) out.push_back({m, c});
  }
  return from_terms(field_, nvars_, std::move(out));
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw DomainError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const FieldSpec& f = images.front().field();
  const int n = images.front().nvars();
  // cache powers of each image
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly result(f, n);
  for (const auto& t : terms_) {
    MultiPoly prod = constant(f, n, t.c);
    for (int i = 0; i < nvars_; ++i) {
      const int k = t.m.e[i];
      if (k == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(f, n, Scalar::one(f)));
      while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
      prod = prod * pw[k];
    }
    result += prod;
  }
  return result;
}

MultiPoly MultiPoly::with_nvars(int n) const {
  MultiPoly r(field_, n);
  for (const auto& t : terms_) {
    for (int i = n; i < kMaxVars; ++i) {
      if (t.m.e[i]) throw DomainError("cannot drop a variable that occurs");
    }
  }
  r.terms_ = terms_;
  return r;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& g) const {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  check_compatible(*this, g);
  MultiPoly rem = *this;
  std::vector<Term> q;
  const Scalar inv = g.leading().c.inverse();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!g.leading().m.divides(lt.m)) return std::nullopt;
    Monomial m = g.leading().m.quotient_of(lt.m);
    Scalar c = lt.c * inv;
    q.push_back({m, c});
    rem -= g.mul_term(m, c);
  }
  return from_terms(field_, nvars_, std::move(q));
}

MultiPoly MultiPoly::change_field(const FieldSpec& target) const {
  if (target == field_) return *this;
  if (!field_.is_rationals()) {
    throw DomainError("coefficients can only be moved out of the rationals");
  }
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back({t.m, Scalar::from_rational(target, t.c.rational())});
  return from_terms(target, nvars_, std::move(out));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.c.is_negative();
    Scalar mag = neg ? -t.c : t.c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (t.m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      s += mag.to_string();
    } else if (mag.is_one()) {
      s += mono;
    } else {
      s += mag.to_string() + "*" + mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

HomogeneousForm::HomogeneousForm(MultiPoly p) : poly_(std::move(p)) {
  if (poly_.is_zero()) throw DomainError("zero polynomial has no degree");
  if (!poly_.is_homogeneous()) throw DomainError("polynomial is not homogeneous");
  degree_ = poly_.leading().m.deg;
}

HomogeneousForm::HomogeneousForm(MultiPoly p, int degree) : poly_(std::move(p)), degree_(degree) {
  if (!poly_.is_zero() && (!poly_.is_homogeneous() || poly_.leading().m.deg != degree)) {
    throw DomainError("polynomial is not homogeneous of degree " + std::to_string(degree));
  }
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars, const FieldSpec& field)
      : text_(text), nvars_(nvars), field_(field) {}

  MultiPoly run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty input");
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  MultiPoly expr() {
    MultiPoly acc(field_, nvars_);
    bool first = true;
    for (;;) {
      skip_ws();
      bool neg = false;
      if (peek('+') || peek('-')) {
        neg = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      acc += neg ? -t : t;
      first = false;
      if (!peek('+') && !peek('-')) break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (peek('*')) {
      ++pos_;
      acc = acc * power();
    }
    skip_ws();
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
      throw ParseError(pos_, "missing '*' between factors");
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      unsigned long long e = digits();
      if (pos_ == start) throw ParseError(pos_, "expected exponent");
      if (e > 64) throw ParseError(start, "exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long long digits() {
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > (1ULL << 40)) throw ParseError(pos_, "number too large");
      ++pos_;
    }
    return v;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      const std::size_t start = pos_;
      ++pos_;
      const std::size_t dstart = pos_;
      unsigned long long i = digits();
      if (pos_ == dstart) throw ParseError(start, "expected variable index after 'x'");
      if (i >= static_cast<unsigned long long>(nvars_)) {
        throw ParseError(start, "variable x" + std::to_string(i) + " out of range (nvars = " +
                                    std::to_string(nvars_) + ")");
      }
      return MultiPoly::variable(field_, nvars_, static_cast<int>(i));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class num(std::string(text_.substr(start, pos_ - start)));
      mpz_class den(1);
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == dstart) throw ParseError(pos_, "expected denominator");
        den = mpz_class(std::string(text_.substr(dstart, pos_ - dstart)));
        if (den == 0) throw ParseError(dstart, "zero denominator");
      }
      Scalar s;
      try {
        s = Scalar::from_rational(field_, mpq_class(num, den));
      } catch (const DomainError& e) {
        throw ParseError(start, e.what());
      }
      return MultiPoly::constant(field_, nvars_, s);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int nvars_;
  FieldSpec field_;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, int nvars, const FieldSpec& field) {
  return Parser(text, nvars, field).run();
}

HomogeneousForm parse_form(std::string_view text, int nvars, const FieldSpec& field) {
  MultiPoly p = parse_polynomial(text, nvars, field);
  if (p.is_zero()) throw DomainError("zero polynomial has no degree");
  int lo = p.leading().m.deg, hi = lo;
  for (const auto& t : p.terms()) {
    lo = std::min(lo, static_cast<int>(t.m.deg));
    hi = std::max(hi, static_cast<int>(t.m.deg));
  }
  if (lo != hi) {
    throw DomainError("inhomogeneous input: terms of degree " + std::to_string(hi) + " and " +
                      std::to_string(lo));
  }
  return HomogeneousForm(std::move(p));
}

std::vector<HomogeneousForm> partials(const HomogeneousForm& f) {
  std::vector<HomogeneousForm> out;
  const int d = std::max(f.degree() - 1, 0);
  for (int i = 0; i < f.nvars(); ++i) out.emplace_back(f.poly().partial(i), d);
  return out;
}

MultiPoly linear_form(const FieldSpec& field, const std::vector<Scalar>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i < n; ++i) {
    if (!coeffs[i].is_zero()) terms.push_back({Monomial::variable(i), coeffs[i]});
  }
  return MultiPoly::from_terms(field, n, std::move(terms));
}

std::vector<Scalar> linear_coefficients(const MultiPoly& p) {
  std::vector<Scalar> c(p.nvars(), Scalar::zero(p.field()));
  for (const auto& t : p.terms()) {
    if (t.m.deg != 1) throw DomainError("not a linear form: " + p.to_string());
    for (int i = 0; i < p.nvars(); ++i) {
      if (t.m.e[i]) c[i] = t.c;
    }
  }
  return c;
}

}  // namespace pfaffcubic
