#include "pfaffcubic/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

namespace {

// |d| <= 6 and |m_i| <= 3 contain every solution: on the K-orthogonal
// complement the pairing is negative definite.
constexpr int kMaxDegree = 6;
constexpr int kMaxMultiplicity = 3;

std::vector<LatticeClass> enumerate(int square, int with_k) {
  const LatticeClass k = LatticeClass::canonical();
  std::vector<LatticeClass> out;
  LatticeClass cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == 7) {
      if (pair(cur, cur) == square && pair(cur, k) == with_k) out.push_back(cur);
      return;
    }
    const int bound = i == 0 ? kMaxDegree : kMaxMultiplicity;
    for (int v = -bound; v <= bound; ++v) {
      cur.c[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  for (const auto& d : out) {
    if (std::abs(d.c[0]) == kMaxDegree) throw VerificationFailure("lattice enumeration reached its degree bound");
    for (int i = 1; i < 7; ++i) {
      if (std::abs(d.c[i]) == kMaxMultiplicity) {
        throw VerificationFailure("lattice enumeration reached its multiplicity bound");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_root(const LatticeClass& r) { return pair(r, r) == -2 && pair(r, LatticeClass::canonical()) == 0; }

}  // namespace

LatticeClass LatticeClass::exceptional(int i) {
  if (i < 1 || i > 6) throw DomainError("exceptional classes are e1..e6");
  LatticeClass e;
  e.c[i] = 1;
  return e;
}

LatticeClass LatticeClass::parse(const std::string& text) {
  std::vector<int> v;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t used = 0;
      try {
        v.push_back(std::stoi(text.substr(i), &used));
      } catch (const std::exception&) {
        throw ParseError(i, "expected an integer");
      }
      i += used;
    } else if (ch == '(' || ch == ')' || ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + ch + "'");
    }
  }
  if (v.size() != 7) throw ParseError(0, "a lattice class has 7 coordinates (d; m1..m6)");
  LatticeClass out;
  std::copy(v.begin(), v.end(), out.c.begin());
  return out;
}

std::string LatticeClass::to_string() const {
  std::string s = "(";
  for (int i = 0; i < 7; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

int pair(const LatticeClass& a, const LatticeClass& b) {
  int s = a.c[0] * b.c[0];
  for (int i = 1; i < 7; ++i) s -= a.c[i] * b.c[i];
  return s;
}

const std::vector<LatticeClass>& minus_one_classes() {
  static const std::vector<LatticeClass> v = enumerate(-1, -1);
  return v;
}

const std::vector<LatticeClass>& roots() {
  static const std::vector<LatticeClass> v = enumerate(-2, 0);
  return v;
}

void RootConfig::validate() const {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!is_root(roots[i])) throw DomainError(roots[i].to_string() + " is not a root");
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (pair(roots[i], roots[j]) < 0) throw DomainError("roots in a configuration must pair non-negatively");
    }
  }
}

std::string RootConfig::ade_type() const {
  validate();
  const std::size_t n = roots.size();
  std::vector<int> comp(n, -1);
  std::map<std::string, int> counts;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members = {s};
    comp[s] = static_cast<int>(s);
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] < 0 && pair(roots[members[k]], roots[j]) > 0) {
          comp[j] = static_cast<int>(s);
          members.push_back(j);
        }
      }
    }
    const int size = static_cast<int>(members.size());
    int edges = 0, branch = -1;
    bool simple = true;
    std::vector<int> degree(size, 0);
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) {
        const int p = pair(roots[members[a]], roots[members[b]]);
        if (p > 1) simple = false;
        if (p > 0) {
          ++edges;
          ++degree[a];
          ++degree[b];
        }
      }
    }
    std::string name = "other";
    const int maxdeg = size ? *std::max_element(degree.begin(), degree.end()) : 0;
    if (simple && edges == size - 1) {
      if (maxdeg <= 2) {
        name = "A" + std::to_string(size);
      } else if (maxdeg == 3 && std::count(degree.begin(), degree.end(), 3) == 1) {
        for (int a = 0; a < size; ++a) {
          if (degree[a] == 3) branch = a;
        }
        // arm lengths from the branch node
        std::vector<int> arms;
        for (int b = 0; b < size; ++b) {
          if (b == branch || pair(roots[members[branch]], roots[members[b]]) == 0) continue;
          int len = 1, prev = branch, cur = b;
          for (;;) {
            int next = -1;
            for (int c = 0; c < size; ++c) {
              if (c != prev && c != cur && pair(roots[members[cur]], roots[members[c]]) > 0) next = c;
            }
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) {
          name = "D" + std::to_string(size);
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
          name = "E" + std::to_string(size);
        }
      }
    }
    ++counts[name];
  }
  std::string out;
  for (const auto& [name, k] : counts) {
    if (!out.empty()) out += "+";
    out += (k > 1 ? std::to_string(k) : "") + name;
  }
  return out.empty() ? "empty" : out;
}

LatticeClass find_disjoint_e(const RootConfig& config) {
  config.validate();
  const auto& r = config.roots;
  if (r.empty() || r.size() > 3) throw DomainError("find_disjoint_e needs 1 to 3 roots");
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (pair(r[i], r[j]) != 0) throw DomainError("find_disjoint_e needs pairwise orthogonal roots");
    }
  }
  for (const auto& e : minus_one_classes()) {
    if (pair(e, r[0]) != 1) continue;
    bool ok = true;
    for (std::size_t i = 1; i < r.size(); ++i) ok = ok && pair(e, r[i]) == 0;
    if (ok) return e;
  }
  throw SearchExhausted("no (-1)-class meets the first root once and misses the others");
}

LatticeClass quintic_class(const LatticeClass& root, const LatticeClass& e) {
  if (!is_root(root)) throw DomainError(root.to_string() + " is not a root");
  if (pair(e, e) != -1 || pair(e, LatticeClass::canonical()) != -1) {
    throw DomainError(e.to_string() + " is not a (-1)-class");
  }
  if (pair(root, e) != 1) throw DomainError("quintic_class needs R.E = 1");
  const LatticeClass k = LatticeClass::canonical();
  const LatticeClass d = root - k + 2 * e;
  if (pair(d, d) != 5 || pair(d, -k) != 5 || pair(d, root) != 0 || pair(d, e) != 0) {
    throw VerificationFailure("quintic class pairings are off");
  }
  return d;
}

}  // namespace pfaffcubic
