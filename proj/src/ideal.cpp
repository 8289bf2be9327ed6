#include "pfaffcubic/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

namespace {

std::vector<MultiPoly> nonzero(std::vector<MultiPoly> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const MultiPoly& p) { return p.is_zero(); }), gens.end());
  return gens;
}

// Exchanges x_a and x_b.
MultiPoly swap_vars(const MultiPoly& f, int a, int b) {
  if (a == b) return f;
  std::vector<MultiPoly::Term> terms = f.terms();
  for (auto& t : terms) std::swap(t.m.e[a], t.m.e[b]);
  return MultiPoly::from_terms(f.field(), f.nvars(), std::move(terms));
}

// Divides by x_k^min(e, power of x_k dividing f).
MultiPoly strip_variable(const MultiPoly& f, int k, int max_power) {
  int e = max_power;
  for (const auto& t : f.terms()) e = std::min(e, static_cast<int>(t.m.e[k]));
  if (e == 0) return f;
  std::vector<MultiPoly::Term> terms = f.terms();
  for (auto& t : terms) {
    t.m.e[k] = static_cast<std::uint8_t>(t.m.e[k] - e);
    t.m.deg = static_cast<std::uint16_t>(t.m.deg - e);
  }
  return MultiPoly::from_terms(f.field(), f.nvars(), std::move(terms));
}

MultiPoly lift(const MultiPoly& f, int n) { return f.with_nvars(n); }

}  // namespace

GradedIdeal::GradedIdeal(FieldSpec field, int nvars, std::vector<MultiPoly> generators)
    : field_(field), nvars_(nvars), gens_(nonzero(std::move(generators))) {
  for (const auto& g : gens_) {
    if (!(g.field() == field_) || g.nvars() != nvars_) throw DomainError("generator lives in a different ring");
    if (!g.is_homogeneous()) throw DomainError("ideal generators must be homogeneous: " + g.to_string());
  }
}

GradedIdeal GradedIdeal::irrelevant(FieldSpec field, int nvars) {
  std::vector<MultiPoly> v;
  for (int i = 0; i < nvars; ++i) v.push_back(MultiPoly::variable(field, nvars, i));
  GradedIdeal r(field, nvars, std::move(v));
  return r;
}

GradedIdeal GradedIdeal::unit(FieldSpec field, int nvars) {
  return GradedIdeal(field, nvars, {MultiPoly::constant(field, nvars, Scalar::one(field))});
}

const std::vector<MultiPoly>& GradedIdeal::gb() const {
  std::call_once(cache_->once, [this] { cache_->gb = groebner_basis(gens_); });
  return cache_->gb;
}

bool GradedIdeal::is_unit() const {
  const auto& g = gb();
  return g.size() == 1 && g.front().degree() == 0;
}

MultiPoly GradedIdeal::normal_form(const MultiPoly& f) const {
  if (gens_.empty()) return f;
  return reduce(f, gb());
}

bool GradedIdeal::contains(const GradedIdeal& other) const {
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

GradedIdeal GradedIdeal::with_saturation(Saturation s) const {
  GradedIdeal r = *this;
  r.sat_ = s;
  return r;
}

long GradedIdeal::quotient_dimension(int d) const {
  const auto& g = is_zero() ? std::vector<MultiPoly>{} : gb();
  long count = 0;
  for (const auto& m : monomials_of_degree(nvars_, d)) {
    bool in = false;
    for (const auto& p : g) {
      if (p.leading().m.divides(m)) {
        in = true;
        break;
      }
    }
    if (!in) ++count;
  }
  return count;
}

std::vector<MultiPoly> GradedIdeal::degree_piece(int d) const {
  std::vector<MultiPoly> out;
  if (is_zero()) return out;
  const auto& g = gb();
  for (const auto& m : monomials_of_degree(nvars_, d)) {
    bool in = false;
    for (const auto& p : g) {
      if (p.leading().m.divides(m)) {
        in = true;
        break;
      }
    }
    if (!in) continue;
    MultiPoly mono = MultiPoly::monomial(field_, nvars_, m, Scalar::one(field_));
    out.push_back(mono - reduce(mono, g));
  }
  return out;
}

GradedIdeal GradedIdeal::operator+(const GradedIdeal& o) const {
  std::vector<MultiPoly> v = gens_;
  v.insert(v.end(), o.gens_.begin(), o.gens_.end());
  return GradedIdeal(field_, nvars_, std::move(v));
}

GradedIdeal GradedIdeal::operator*(const GradedIdeal& o) const {
  std::vector<MultiPoly> v;
  for (const auto& a : gens_) {
    for (const auto& b : o.gens_) v.push_back(a * b);
  }
  return GradedIdeal(field_, nvars_, std::move(v));
}

GradedIdeal GradedIdeal::add(const std::vector<MultiPoly>& more) const {
  std::vector<MultiPoly> v = gens_;
  v.insert(v.end(), more.begin(), more.end());
  return GradedIdeal(field_, nvars_, std::move(v));
}

std::vector<std::string> GradedIdeal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Scalar> coordinates(const MultiPoly& f, const std::vector<Monomial>& basis) {
  std::vector<Scalar> v(basis.size(), Scalar::zero(f.field()));
  for (const auto& t : f.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t.m,
                               [](const Monomial& a, const Monomial& b) { return degrevlex_compare(a, b) > 0; });
    if (it == basis.end() || !(*it == t.m)) throw DomainError("term outside the monomial basis");
    v[it - basis.begin()] = t.c;
  }
  return v;
}

DivisionResult normal_form_with_quotients(const MultiPoly& f, const GradedIdeal& ideal) {
  const FieldSpec& field = ideal.field();
  const int n = ideal.nvars();
  const auto& gens = ideal.generators();
  DivisionResult res;
  res.remainder = ideal.normal_form(f);
  res.quotients.assign(gens.size(), MultiPoly(field, n));
  const MultiPoly target = f - res.remainder;
  if (target.is_zero()) return res;
  for (int d = 0; d <= target.degree(); ++d) {
    const MultiPoly part = target.homogeneous_part(d);
    if (part.is_zero()) continue;
    const auto rows = monomials_of_degree(n, d);
    // columns: for each generator g_i of degree <= d, the monomials of degree d - deg g_i
    std::vector<std::pair<std::size_t, Monomial>> cols;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int e = d - gens[i].degree();
      if (e < 0) continue;
      for (const auto& m : monomials_of_degree(n, e)) cols.push_back({i, m});
    }
    Matrix a(field, rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const MultiPoly col = gens[cols[c].first].mul_term(cols[c].second, Scalar::one(field));
      const auto v = coordinates(col, rows);
      for (std::size_t r = 0; r < rows.size(); ++r) a(r, c) = v[r];
    }
    auto x = a.solve(coordinates(part, rows));
    if (!x) throw VerificationFailure("normal form claims membership but no combination exists");
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if ((*x)[c].is_zero()) continue;
      res.quotients[cols[c].first] += MultiPoly::monomial(field, n, cols[c].second, (*x)[c]);
    }
  }
  return res;
}

GradedIdeal eliminate(const std::vector<MultiPoly>& gens, std::uint32_t mask, int nvars_kept) {
  if (gens.empty()) throw DomainError("eliminate needs at least one generator");
  const FieldSpec f = gens.front().field();
  const int n = gens.front().nvars();
  auto gb = groebner_basis(gens, MonomialOrder::eliminate(mask));
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    if (!(mask & (1u << i))) keep.push_back(i);
  }
  if (static_cast<int>(keep.size()) != nvars_kept) throw DomainError("eliminate: wrong number of kept variables");
  std::vector<MultiPoly> out;
  for (const auto& g : gb) {
    bool uses = false;
    for (const auto& t : g.terms()) {
      for (int i = 0; i < n; ++i) {
        if ((mask & (1u << i)) && t.m.e[i]) uses = true;
      }
    }
    if (uses) continue;
    std::vector<MultiPoly::Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (std::size_t k = 0; k < keep.size(); ++k) m.e[k] = t.m.e[keep[k]];
      m.deg = t.m.deg;
      terms.push_back({m, t.c});
    }
    out.push_back(MultiPoly::from_terms(f, nvars_kept, std::move(terms)));
  }
  return GradedIdeal(f, nvars_kept, std::move(out));
}

GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.is_zero() || b.is_zero()) return GradedIdeal(a.field(), a.nvars(), {});
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const FieldSpec& f = a.field();
  const int n = a.nvars();
  if (n + 1 > kMaxVars) throw DomainError("too many variables for an intersection");
  const MultiPoly t = MultiPoly::variable(f, n + 1, n);
  const MultiPoly one_minus_t = MultiPoly::constant(f, n + 1, Scalar::one(f)) - t;
  std::vector<MultiPoly> gens;
  for (const auto& g : a.gb()) gens.push_back(t * lift(g, n + 1));
  for (const auto& g : b.gb()) gens.push_back(one_minus_t * lift(g, n + 1));
  return eliminate(gens, 1u << n, n);
}

GradedIdeal colon(const GradedIdeal& i, const MultiPoly& f) {
  if (f.is_zero()) return GradedIdeal::unit(i.field(), i.nvars());
  if (i.contains(f)) return GradedIdeal::unit(i.field(), i.nvars());
  GradedIdeal inter = intersect(i, GradedIdeal(i.field(), i.nvars(), {f}));
  std::vector<MultiPoly> out;
  for (const auto& g : inter.gb()) {
    auto q = g.exact_divide(f);
    if (!q) throw VerificationFailure("intersection element not divisible by the colon element");
    out.push_back(*q);
  }
  return GradedIdeal(i.field(), i.nvars(), std::move(out));
}

GradedIdeal ideal_quotient(const GradedIdeal& i, const GradedIdeal& j) {
  GradedIdeal acc = GradedIdeal::unit(i.field(), i.nvars());
  for (const auto& g : j.generators()) {
    GradedIdeal c = colon(i, g);
    acc = intersect(acc, c);
  }
  return acc;
}

namespace {

GradedIdeal variable_quotient(const GradedIdeal& ideal, int k, int max_power) {
  const int n = ideal.nvars();
  if (ideal.is_zero()) return ideal;
  std::vector<MultiPoly> swapped;
  for (const auto& g : ideal.generators()) swapped.push_back(swap_vars(g, k, n - 1));
  auto gb = groebner_basis(swapped);
  std::vector<MultiPoly> out;
  for (const auto& g : gb) out.push_back(swap_vars(strip_variable(g, n - 1, max_power), k, n - 1));
  return GradedIdeal(ideal.field(), n, std::move(out));
}

}  // namespace

GradedIdeal colon_variable(const GradedIdeal& i, int k) { return variable_quotient(i, k, 1); }

GradedIdeal saturate_variable(const GradedIdeal& i, int k) { return variable_quotient(i, k, 1 << 20); }

GradedIdeal saturate(const GradedIdeal& i) {
  if (i.is_zero()) return i.with_saturation(GradedIdeal::Saturation::Saturated);
  std::vector<GradedIdeal> parts;
  for (int k = 0; k < i.nvars(); ++k) {
    GradedIdeal s = saturate_variable(i, k);
    if (s.is_unit()) continue;
    bool dup = false;
    for (const auto& p : parts) {
      if (p.equals(s)) {
        dup = true;
        break;
      }
    }
    if (!dup) parts.push_back(std::move(s));
  }
  GradedIdeal acc = GradedIdeal::unit(i.field(), i.nvars());
  for (const auto& p : parts) acc = intersect(acc, p);
  GradedIdeal r(i.field(), i.nvars(), acc.gb());
  return r.with_saturation(GradedIdeal::Saturation::Saturated);
}

GradedIdeal saturate(const GradedIdeal& i, const GradedIdeal& j) {
  GradedIdeal cur = i;
  for (int iter = 0; iter < 64; ++iter) {
    GradedIdeal next = ideal_quotient(cur, j);
    if (cur.contains(next)) return GradedIdeal(cur.field(), cur.nvars(), cur.gb());
    cur = GradedIdeal(next.field(), next.nvars(), next.gb());
  }
  throw VerificationFailure("saturation did not stabilize");
}

// ---------------------------------------------------------------------------

int HilbertData::dimension() const { return static_cast<int>(polynomial.size()) - 1; }

long HilbertData::degree() const {
  if (polynomial.empty()) return 0;
  mpq_class lc = polynomial.back();
  for (int k = 2; k <= dimension(); ++k) lc *= k;
  lc.canonicalize();
  if (lc.get_den() != 1) throw VerificationFailure("non-integral degree from Hilbert polynomial");
  return lc.get_num().get_si();
}

mpq_class HilbertData::evaluate(long m) const {
  mpq_class v = 0;
  for (std::size_t k = polynomial.size(); k-- > 0;) v = v * m + polynomial[k];
  return v;
}

long HilbertData::arithmetic_genus() const {
  mpq_class c = polynomial.empty() ? mpq_class(0) : polynomial.front();
  return 1 - c.get_num().get_si();
}

std::string HilbertData::polynomial_string() const {
  if (polynomial.empty()) return "0";
  std::string s;
  for (std::size_t k = polynomial.size(); k-- > 0;) {
    const mpq_class& c = polynomial[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const mpq_class mag = neg ? mpq_class(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string var = k == 0 ? "" : (k == 1 ? "m" : "m^" + std::to_string(k));
    if (var.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += var;
    } else {
      s += mag.get_str() + "*" + var;
    }
  }
  return s;
}

HilbertData hilbert(const GradedIdeal& ideal, int d_max) {
  HilbertData h;
  for (int d = 0; d <= d_max; ++d) h.values.push_back(ideal.quotient_dimension(d));
  const int npts = ideal.is_zero() ? ideal.nvars() : std::max(ideal.nvars() - 1, 1);
  const int first = d_max - 2 - npts;
  if (first < 0) throw DomainError("d_max too small to interpolate the Hilbert polynomial");
  const FieldSpec q = FieldSpec::rationals();
  Matrix v(q, npts, npts);
  std::vector<Scalar> rhs;
  for (int r = 0; r < npts; ++r) {
    const long m = first + r;
    Scalar pw = Scalar::one(q);
    for (int c = 0; c < npts; ++c) {
      v(r, c) = pw;
      pw *= Scalar::from_int(q, m);
    }
    rhs.push_back(Scalar::from_int(q, h.values[m]));
  }
  auto sol = v.solve(rhs);
  for (const auto& s : *sol) h.polynomial.push_back(s.rational());
  while (!h.polynomial.empty() && h.polynomial.back() == 0) h.polynomial.pop_back();
  for (int d = d_max - 2; d <= d_max; ++d) {
    if (h.evaluate(d) != h.values[d]) {
      throw Undetermined("Hilbert function has not stabilized by degree " + std::to_string(d_max) +
                         "; raise d_max");
    }
  }
  h.regularity_bound = d_max;
  while (h.regularity_bound > 0 && h.evaluate(h.regularity_bound - 1) == h.values[h.regularity_bound - 1]) {
    --h.regularity_bound;
  }
  return h;
}

std::vector<std::vector<MultiPoly>> linear_syzygies(const std::vector<MultiPoly>& forms) {
  if (forms.empty()) return {};
  const FieldSpec f = forms.front().field();
  const int n = forms.front().nvars();
  int deg = -1;
  for (const auto& q : forms) {
    if (q.is_zero()) continue;
    if (!q.is_homogeneous() || (deg >= 0 && q.degree() != deg)) {
      throw DomainError("linear_syzygies needs forms of one common degree");
    }
    deg = q.degree();
  }
  const std::size_t k = forms.size();
  if (deg < 0) {
    // all zero: every vector of linear forms is a syzygy
    std::vector<std::vector<MultiPoly>> all;
    for (std::size_t i = 0; i < k; ++i) {
      for (int j = 0; j < n; ++j) {
        std::vector<MultiPoly> v(k, MultiPoly(f, n));
        v[i] = MultiPoly::variable(f, n, j);
        all.push_back(std::move(v));
      }
    }
    return all;
  }
  const auto rows = monomials_of_degree(n, deg + 1);
  Matrix a(f, rows.size(), k * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto v = coordinates(forms[i].mul_term(Monomial::variable(j), Scalar::one(f)), rows);
      for (std::size_t r = 0; r < rows.size(); ++r) a(r, i * n + j) = v[r];
    }
  }
  std::vector<std::vector<MultiPoly>> out;
  for (const auto& kv : a.kernel()) {
    std::vector<MultiPoly> syz;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Scalar> c(kv.begin() + i * n, kv.begin() + (i + 1) * n);
      syz.push_back(linear_form(f, c));
    }
    out.push_back(std::move(syz));
  }
  return out;
}

}  // namespace pfaffcubic
