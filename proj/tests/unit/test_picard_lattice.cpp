#include <set>

#include "doctest.h"
#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/lattice.hpp"

using namespace pfaffcubic;

namespace {

LatticeClass L(std::array<int, 7> c) { return LatticeClass{c}; }

// The classical description: e_i, l - e_i - e_j, 2l - (sum of five e's).
std::set<LatticeClass> classical_lines() {
  std::set<LatticeClass> s;
  for (int i = 1; i <= 6; ++i) {
    s.insert(LatticeClass::exceptional(i));
    LatticeClass c = 2 * LatticeClass::line();
    for (int j = 1; j <= 6; ++j) {
      if (j != i) c = c - LatticeClass::exceptional(j);
    }
    s.insert(c);
    for (int j = i + 1; j <= 6; ++j) {
      s.insert(LatticeClass::line() - LatticeClass::exceptional(i) - LatticeClass::exceptional(j));
    }
  }
  return s;
}

// e_i - e_j, +-(l - e_i - e_j - e_k), +-(2l - e_1 - ... - e_6).
std::set<LatticeClass> classical_roots() {
  std::set<LatticeClass> s;
  LatticeClass all = 2 * LatticeClass::line();
  for (int i = 1; i <= 6; ++i) {
    all = all - LatticeClass::exceptional(i);
    for (int j = 1; j <= 6; ++j) {
      if (i != j) s.insert(LatticeClass::exceptional(i) - LatticeClass::exceptional(j));
      for (int k = j + 1; k <= 6; ++k) {
        if (i >= j) continue;
        const LatticeClass r =
            LatticeClass::line() - LatticeClass::exceptional(i) - LatticeClass::exceptional(j) - LatticeClass::exceptional(k);
        s.insert(r);
        s.insert(-r);
      }
    }
  }
  s.insert(all);
  s.insert(-all);
  return s;
}

}  // namespace

TEST_CASE("pairing") {
  const LatticeClass k = LatticeClass::canonical();
  CHECK(pair(k, k) == 3);
  CHECK(pair(LatticeClass::line(), LatticeClass::line()) == 1);
  const LatticeClass r = L({1, -1, -1, -1, 0, 0, 0});
  CHECK(pair(LatticeClass::exceptional(1), r) == 1);
  CHECK(pair(r, LatticeClass::exceptional(1)) == 1);
  CHECK(LatticeClass::parse("(4, 0, -2, -2, -1, -1, -1)") == L({4, 0, -2, -2, -1, -1, -1}));
  CHECK(LatticeClass::parse("1 -1 -1 -1 0 0 0") == r);
  CHECK(L({4, 0, -2, -2, -1, -1, -1}).to_string() == "(4,0,-2,-2,-1,-1,-1)");
  CHECK_THROWS_AS(LatticeClass::parse("(1,2,3)"), ParseError);
  CHECK_THROWS_AS(LatticeClass::parse("(1,2,x,3,4,5,6)"), ParseError);
}

TEST_CASE("(-1)-classes and roots") {
  const auto& lines = minus_one_classes();
  CHECK(lines.size() == 27);
  CHECK(std::set<LatticeClass>(lines.begin(), lines.end()) == classical_lines());
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  for (int i = 1; i <= 6; ++i) {
    CHECK(std::find(lines.begin(), lines.end(), LatticeClass::exceptional(i)) != lines.end());
  }
  CHECK(std::find(lines.begin(), lines.end(), L({1, -1, -1, 0, 0, 0, 0})) != lines.end());

  const auto& rs = roots();
  CHECK(rs.size() == 72);
  CHECK(std::set<LatticeClass>(rs.begin(), rs.end()) == classical_roots());
  CHECK(std::find(rs.begin(), rs.end(), L({1, -1, -1, -1, 0, 0, 0})) != rs.end());
  CHECK(std::find(rs.begin(), rs.end(), L({0, 1, -1, 0, 0, 0, 0})) != rs.end());

  for (const auto& e : lines) {
    for (const auto& r : rs) {
      const int p = pair(e, r);
      CHECK((p >= -1 && p <= 2));
    }
  }
}

TEST_CASE("root configurations") {
  const LatticeClass a = L({1, -1, -1, -1, 0, 0, 0});
  const LatticeClass b = L({0, 0, 0, 0, 1, -1, 0});
  const LatticeClass c = L({0, 0, 0, 0, 0, 1, -1});
  CHECK(RootConfig{{a}}.ade_type() == "A1");
  CHECK(RootConfig{{a, b}}.ade_type() == "2A1");
  CHECK(RootConfig{{b, c}}.ade_type() == "A2");
  CHECK(RootConfig{{a, b, c}}.ade_type() == "A1+A2");
  const LatticeClass d1 = L({0, 1, -1, 0, 0, 0, 0}), d2 = L({0, 0, 1, -1, 0, 0, 0}), d3 = L({0, 0, 0, 1, -1, 0, 0});
  CHECK(RootConfig{{d1, d2, d3, a}}.ade_type() == "A4");
  const LatticeClass d4 = L({0, 0, 0, 0, 1, -1, 0});
  CHECK(RootConfig{{d2, d3, d4, a}}.ade_type() == "D4");
  CHECK_THROWS_AS(RootConfig{{L({1, 0, 0, 0, 0, 0, 0})}}.validate(), DomainError);
  const RootConfig negative{{d1, -d2}};
  CHECK_THROWS_AS(negative.validate(), DomainError);
}

TEST_CASE("disjoint (-1)-classes and quintic classes") {
  const LatticeClass r = L({1, -1, -1, -1, 0, 0, 0});
  const LatticeClass e = find_disjoint_e(RootConfig{{r}});
  CHECK(pair(e, r) == 1);
  CHECK(pair(LatticeClass::exceptional(1), r) == 1);
  const LatticeClass e12 = L({0, 1, -1, 0, 0, 0, 0});
  CHECK(find_disjoint_e(RootConfig{{e12}}) == LatticeClass::exceptional(2));

  const LatticeClass d = quintic_class(r, LatticeClass::exceptional(1));
  CHECK(d == L({4, 0, -2, -2, -1, -1, -1}));
  CHECK(pair(d, d) == 5);
  CHECK(pair(d, LatticeClass::canonical()) == -5);
  // the printed class (4,0,-2,-2,0,0,0) is not a quintic class
  CHECK(pair(L({4, 0, -2, -2, 0, 0, 0}), L({4, 0, -2, -2, 0, 0, 0})) == 8);
  CHECK_THROWS_AS(quintic_class(r, LatticeClass::exceptional(4)), DomainError);
  const RootConfig a2{{L({0, 0, 0, 0, 1, -1, 0}), L({0, 0, 0, 0, 0, 1, -1})}};
  CHECK_THROWS_AS(find_disjoint_e(a2), DomainError);

  // every rA1 configuration (r <= 3) of enumerated roots, each root in first position
  const auto& rs = roots();
  const LatticeClass k = LatticeClass::canonical();
  long configs = 0;
  auto check_config = [&](const std::vector<LatticeClass>& roots_in) {
    ++configs;
    const LatticeClass found = find_disjoint_e(RootConfig{roots_in});
    CHECK(pair(found, roots_in[0]) == 1);
    for (std::size_t i = 1; i < roots_in.size(); ++i) CHECK(pair(found, roots_in[i]) == 0);
    const LatticeClass q = quintic_class(roots_in[0], found);
    CHECK(pair(q, q) == 5);
    CHECK(pair(q, -k) == 5);
    for (const auto& ri : roots_in) CHECK(pair(q, ri) == 0);
    CHECK(pair(q, found) == 0);
  };
  for (std::size_t i = 0; i < rs.size(); ++i) {
    check_config({rs[i]});
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (j == i || pair(rs[i], rs[j]) != 0) continue;
      check_config({rs[i], rs[j]});
      for (std::size_t l = j + 1; l < rs.size(); ++l) {
        if (l == i || pair(rs[i], rs[l]) != 0 || pair(rs[j], rs[l]) != 0) continue;
        check_config({rs[i], rs[j], rs[l]});
      }
    }
  }
  CHECK(configs > 72);
}
