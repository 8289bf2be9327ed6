#include "pfaffcubic/groebner.hpp"

#include <algorithm>

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

namespace {

struct ModArith {
  using E = std::uint32_t;
  std::uint64_t p;

  E add(E a, E b) const {
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<E>(s >= p ? s - p : s);
  }
  E sub(E a, E b) const { return a >= b ? a - b : static_cast<E>(a + p - b); }
  E mul(E a, E b) const { return static_cast<E>(static_cast<std::uint64_t>(a) * b % p); }
  E neg(E a) const { return a ? static_cast<E>(p - a) : 0; }
  E inv(E a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<E>(r);
  }
  bool is_zero(E a) const { return a == 0; }
  E from(const Scalar& s) const { return s.is_zero() ? 0 : s.residue(); }
  Scalar to(E a, const FieldSpec& f) const { return Scalar::from_int(f, a); }
};

struct RatArith {
  using E = mpq_class;

  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E neg(const E& a) const { return -a; }
  E inv(const E& a) const {
    E r = 1 / a;
    r.canonicalize();
    return r;
  }
  bool is_zero(const E& a) const { return sgn(a) == 0; }
  E from(const Scalar& s) const { return s.rational(); }
  Scalar to(const E& a, const FieldSpec& f) const { return Scalar::from_rational(f, a); }
};

std::uint32_t divmask(const Monomial& m) {
  std::uint32_t k = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (m.e[i]) k |= 1u << i;
  }
  return k;
}

template <class A>
class Engine {
 public:
  using E = typename A::E;

  struct Poly {
    std::vector<Monomial> m;
    std::vector<E> c;
    int sugar = 0;
    bool empty() const { return m.empty(); }
  };

  Engine(A arith, MonomialOrder order, FieldSpec field, int nvars)
      : a_(std::move(arith)), order_(order), field_(field), nvars_(nvars) {}

  Poly from_multi(const MultiPoly& f) const {
    std::vector<std::size_t> idx(f.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const auto& t = f.terms();
    if (order_.kind() != MonomialOrder::Kind::DegRevLex) {
      std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return order_.greater(t[x].m, t[y].m); });
    }
    Poly p;
    p.m.reserve(idx.size());
    p.c.reserve(idx.size());
    for (auto i : idx) {
      p.m.push_back(t[i].m);
      p.c.push_back(a_.from(t[i].c));
      p.sugar = std::max(p.sugar, static_cast<int>(t[i].m.deg));
    }
    return p;
  }

  MultiPoly to_multi(const Poly& p) const {
    std::vector<MultiPoly::Term> terms;
    terms.reserve(p.m.size());
    for (std::size_t i = 0; i < p.m.size(); ++i) terms.push_back({p.m[i], a_.to(p.c[i], field_)});
    return MultiPoly::from_terms(field_, nvars_, std::move(terms));
  }

  void make_monic(Poly& p) const {
    if (p.empty()) return;
    const E s = a_.inv(p.c[0]);
    for (auto& x : p.c) x = a_.mul(x, s);
  }

  // f[start..] - coef * mono * g[1..]: the caller has already cancelled the leading terms.
  Poly sub_mul(const Poly& f, std::size_t start, const E& coef, const Monomial& mono, const Poly& g) const {
    Poly r;
    r.m.reserve(f.m.size() - start + g.m.size());
    r.c.reserve(f.m.size() - start + g.m.size());
    std::size_t i = start, j = 1;
    while (i < f.m.size() || j < g.m.size()) {
      int cmp;
      Monomial gm;
      if (j < g.m.size()) gm = g.m[j] * mono;
      if (i == f.m.size()) {
        cmp = -1;
      } else if (j == g.m.size()) {
        cmp = 1;
      } else {
        cmp = order_.compare(f.m[i], gm);
      }
      if (cmp > 0) {
        r.m.push_back(f.m[i]);
        r.c.push_back(f.c[i]);
        ++i;
      } else if (cmp < 0) {
        r.m.push_back(gm);
        r.c.push_back(a_.neg(a_.mul(coef, g.c[j])));
        ++j;
      } else {
        E v = a_.sub(f.c[i], a_.mul(coef, g.c[j]));
        if (!a_.is_zero(v)) {
          r.m.push_back(f.m[i]);
          r.c.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
    r.sugar = std::max(f.sugar, g.sugar + mono.deg);
    return r;
  }

  int find_reducer(const Monomial& t, std::uint32_t tmask, int skip = -1) const {
    for (int k : active_) {
      if (k == skip) continue;
      if (masks_[k] & ~tmask) continue;
      if (store_[k].m[0].divides(t)) return k;
    }
    return -1;
  }

  // Full reduction by the active basis (optionally ignoring one element).
  Poly reduce(const Poly& f, int skip = -1) const {
    Poly cur = f;
    Poly rem;
    rem.sugar = f.sugar;
    std::size_t start = 0;
    while (start < cur.m.size()) {
      const Monomial lt = cur.m[start];
      const int k = find_reducer(lt, divmask(lt), skip);
      if (k < 0) {
        rem.m.push_back(lt);
        rem.c.push_back(cur.c[start]);
        ++start;
        continue;
      }
      const Poly& g = store_[k];
      const Monomial mono = g.m[0].quotient_of(lt);
      const E coef = cur.c[start];  // reducers are monic
      const int s = std::max(cur.sugar, rem.sugar);
      cur = sub_mul(cur, start + 1, coef, mono, g);
      cur.sugar = std::max(s, cur.sugar);
      rem.sugar = std::max(rem.sugar, cur.sugar);
      start = 0;
    }
    return rem;
  }

  struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
  };

  int pair_sugar(int i, int j, const Monomial& lcm) const {
    const Poly& f = store_[i];
    const Poly& g = store_[j];
    return std::max(f.sugar + (lcm.deg - f.m[0].deg), g.sugar + (lcm.deg - g.m[0].deg));
  }

  void update(int h) {
    const Monomial& lh = store_[h].m[0];
    // new pairs, chain criterion among themselves
    std::vector<Pair> c;
    for (int g : active_) {
      Monomial l = Monomial::lcm(lh, store_[g].m[0]);
      c.push_back({g, h, l, pair_sugar(g, h, l)});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      const bool coprime = Monomial::coprime(lh, store_[p.i].m[0]);
      bool keep = coprime;
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q) {
          if (c[q].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t q = 0; q < d.size() && keep; ++q) {
          if (d[q].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (const auto& p : d) {
      if (!Monomial::coprime(lh, store_[p.i].m[0])) e.push_back(p);
    }
    // old pairs made redundant by h
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + e.size());
    for (const auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && !(Monomial::lcm(store_[p.i].m[0], lh) == p.lcm) &&
                        !(Monomial::lcm(lh, store_[p.j].m[0]) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    for (auto& p : e) kept.push_back(p);
    pairs_ = std::move(kept);
    // basis elements whose leading monomial h divides leave the active set
    std::vector<int> act;
    for (int g : active_) {
      if (!lh.divides(store_[g].m[0])) act.push_back(g);
    }
    act.push_back(h);
    active_ = std::move(act);
  }

  int add_to_store(Poly p) {
    make_monic(p);
    store_.push_back(std::move(p));
    masks_.push_back(divmask(store_.back().m[0]));
    return static_cast<int>(store_.size()) - 1;
  }

  Poly spoly(const Pair& pr) const {
    const Poly& f = store_[pr.i];
    const Poly& g = store_[pr.j];
    const Monomial mf = f.m[0].quotient_of(pr.lcm);
    const Monomial mg = g.m[0].quotient_of(pr.lcm);
    // mf*f - mg*g, both monic
    Poly sf;
    sf.m.reserve(f.m.size());
    sf.c = f.c;
    for (const auto& m : f.m) sf.m.push_back(m * mf);
    sf.sugar = f.sugar + mf.deg;
    Poly r = sub_mul(sf, 1, sf.c[0], mg, g);
    r.sugar = pr.sugar;
    return r;
  }

  std::vector<Poly> run(std::vector<Poly> input) {
    std::sort(input.begin(), input.end(), [&](const Poly& x, const Poly& y) {
      if (x.empty() || y.empty()) return !x.empty() && y.empty();
      return order_.compare(x.m[0], y.m[0]) < 0;
    });
    for (auto& f : input) {
      if (f.empty()) continue;
      Poly h = reduce(f);
      if (h.empty()) continue;
      const int k = add_to_store(std::move(h));
      update(k);
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && order_.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      const Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Poly h = reduce(spoly(pr));
      if (h.empty()) continue;
      const int k = add_to_store(std::move(h));
      update(k);
    }
    // interreduce the (already minimal) active set
    std::vector<Poly> out;
    for (int k : active_) {
      Poly r = reduce(store_[k], k);
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& x, const Poly& y) { return order_.compare(x.m[0], y.m[0]) < 0; });
    return out;
  }

  // Treat `basis` (assumed a Groebner basis) as the active reducers.
  void load_basis(const std::vector<MultiPoly>& basis) {
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      Poly p = from_multi(g);
      const int k = add_to_store(std::move(p));
      active_.push_back(k);
    }
  }

  const MonomialOrder& order() const { return order_; }

 private:
  A a_;
  MonomialOrder order_;
  FieldSpec field_;
  int nvars_;
  std::vector<Poly> store_;
  std::vector<std::uint32_t> masks_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
};

void check_ring(const std::vector<MultiPoly>& polys, const FieldSpec& f, int n) {
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (!(p.field() == f) || p.nvars() != n) throw DomainError("generators live in different rings");
  }
}

template <class A>
std::vector<MultiPoly> run_gb(A arith, const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                              const FieldSpec& f, int n) {
  Engine<A> eng(arith, order, f, n);
  std::vector<typename Engine<A>::Poly> in;
  for (const auto& g : gens) in.push_back(eng.from_multi(g));
  auto res = eng.run(std::move(in));
  std::vector<MultiPoly> out;
  for (const auto& p : res) out.push_back(eng.to_multi(p));
  return out;
}

template <class A>
MultiPoly run_reduce(A arith, const MultiPoly& f, const std::vector<MultiPoly>& basis, const MonomialOrder& order) {
  Engine<A> eng(arith, order, f.field(), f.nvars());
  eng.load_basis(basis);
  return eng.to_multi(eng.reduce(eng.from_multi(f)));
}

}  // namespace

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens, const MonomialOrder& order) {
  const MultiPoly* first = nullptr;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      first = &g;
      break;
    }
  }
  if (!first) return {};
  const FieldSpec f = first->field();
  const int n = first->nvars();
  check_ring(gens, f, n);
  if (f.is_prime_field()) return run_gb(ModArith{f.characteristic()}, gens, order, f, n);
  return run_gb(RatArith{}, gens, order, f, n);
}

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  check_ring(basis, f.field(), f.nvars());
  if (f.field().is_prime_field()) return run_reduce(ModArith{f.field().characteristic()}, f, basis, order);
  return run_reduce(RatArith{}, f, basis, order);
}

Monomial leading_monomial(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("zero polynomial has no leading monomial");
  Monomial best = f.terms().front().m;
  if (order.kind() == MonomialOrder::Kind::DegRevLex) return best;
  for (const auto& t : f.terms()) {
    if (order.greater(t.m, best)) best = t.m;
  }
  return best;
}

bool is_groebner_basis(const std::vector<MultiPoly>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const MultiPoly& f = basis[i];
      const MultiPoly& g = basis[j];
      const Monomial lf = leading_monomial(f, order), lg = leading_monomial(g, order);
      const Monomial l = Monomial::lcm(lf, lg);
      const Scalar cf = f.coefficient(lf), cg = g.coefficient(lg);
      MultiPoly s = f.mul_term(lf.quotient_of(l), cf.inverse()) - g.mul_term(lg.quotient_of(l), cg.inverse());
      if (!reduce(s, basis, order).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace pfaffcubic
