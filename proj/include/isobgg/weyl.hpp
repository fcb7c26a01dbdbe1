#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace isobgg {

struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  int &operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Weight &, const Weight &) = default;
  friend auto operator<=>(const Weight &, const Weight &) = default;
};

inline Weight operator+(const Weight &a, const Weight &b) {
  if (a.rank() != b.rank()) throw DimensionError("weight rank mismatch");
  Weight r = a;
  for (int i = 0; i < a.rank(); ++i) r[i] += b[i];
  return r;
}

inline Weight operator-(const Weight &a, const Weight &b) {
  if (a.rank() != b.rank()) throw DimensionError("weight rank mismatch");
  Weight r = a;
  for (int i = 0; i < a.rank(); ++i) r[i] -= b[i];
  return r;
}

inline int dot(const Weight &a, const Weight &b) {
  if (a.rank() != b.rank()) throw DimensionError("weight rank mismatch");
  int s = 0;
  for (int i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

inline std::string to_string(const Weight &w) {
  std::string s = "(";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

inline std::ostream &operator<<(std::ostream &os, const Weight &w) { return os << to_string(w); }

inline void check_rank(int n) {
  if (n < 2) throw InvalidArgument("rank must be at least 2, got " + std::to_string(n));
}

inline Weight rho(int n) {
  check_rank(n);
  Weight r;
  for (int i = n; i >= 1; --i) r.coords.push_back(i);
  return r;
}

enum class RootKind { A, B, C };

// indices are 1-based; j is unused for B
struct Root {
  RootKind kind = RootKind::A;
  int i = 1;
  int j = 2;

  static Root a(int i, int j) { return {RootKind::A, i, j}; }
  static Root b(int i) { return {RootKind::B, i, 0}; }
  static Root c(int i, int j) { return {RootKind::C, i, j}; }

  friend bool operator==(const Root &, const Root &) = default;
  friend auto operator<=>(const Root &, const Root &) = default;

  bool valid(int n) const {
    if (kind == RootKind::B) return i >= 1 && i <= n;
    return i >= 1 && i < j && j <= n;
  }

  Weight vector(int n) const {
    if (!valid(n)) throw InvalidArgument("root " + name() + " invalid at rank " + std::to_string(n));
    Weight v(std::vector<int>(static_cast<std::size_t>(n), 0));
    switch (kind) {
    case RootKind::A: v[i - 1] = 1; v[j - 1] = -1; break;
    case RootKind::B: v[i - 1] = 2; break;
    case RootKind::C: v[i - 1] = 1; v[j - 1] = 1; break;
    }
    return v;
  }

  // <lambda, alpha^vee>
  int coroot_pairing(const Weight &l) const {
    switch (kind) {
    case RootKind::A: return l[i - 1] - l[j - 1];
    case RootKind::B: return l[i - 1];
    case RootKind::C: return l[i - 1] + l[j - 1];
    }
    return 0;
  }

  std::string name() const {
    char k = kind == RootKind::A ? 'a' : kind == RootKind::B ? 'b' : 'c';
    if (kind == RootKind::B) return std::string(1, k) + std::to_string(i);
    if (i < 10 && j < 10) return std::string(1, k) + std::to_string(i) + std::to_string(j);
    return std::string(1, k) + std::to_string(i) + "," + std::to_string(j);
  }
};

inline Root parse_root(const std::string &s) {
  if (s.size() < 2) throw ParseError("bad root name: " + s);
  RootKind k;
  switch (s[0]) {
  case 'a': k = RootKind::A; break;
  case 'b': k = RootKind::B; break;
  case 'c': k = RootKind::C; break;
  default: throw ParseError("bad root name: " + s);
  }
  std::string body = s.substr(1);
  try {
    if (k == RootKind::B) return Root::b(std::stoi(body));
    auto comma = body.find(',');
    if (comma != std::string::npos)
      return {k, std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))};
    if (body.size() != 2) throw ParseError("bad root name: " + s);
    return {k, body[0] - '0', body[1] - '0'};
  } catch (const std::logic_error &) {
    throw ParseError("bad root name: " + s);
  }
}

// a_ij (lex), then b_i, then c_ij (lex); n^2 roots
inline std::vector<Root> positive_roots(int n) {
  std::vector<Root> r;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r.push_back(Root::a(i, j));
  for (int i = 1; i <= n; ++i) r.push_back(Root::b(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r.push_back(Root::c(i, j));
  return r;
}

inline Root simple_root(int i, int n) {
  if (i < 1 || i > n) throw InvalidArgument("simple root index out of range");
  return i < n ? Root::a(i, i + 1) : Root::b(n);
}

// coefficients of a positive root in the simple roots alpha_1..alpha_n
inline std::vector<int> simple_coefficients(const Root &r, int n) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  auto add = [&](int from, int to, int v) {
    for (int t = from; t <= to; ++t) c[static_cast<std::size_t>(t - 1)] += v;
  };
  switch (r.kind) {
  case RootKind::A: add(r.i, r.j - 1, 1); break;          // e_i - e_j
  case RootKind::B: add(r.i, n - 1, 2); add(n, n, 1); break; // 2e_i
  case RootKind::C: add(r.i, n - 1, 1); add(r.j, n - 1, 1); add(n, n, 1); break;
  }
  return c;
}

inline bool is_positive_vector(const Weight &v) {
  for (int x : v.coords)
    if (x != 0) return x > 0;
  return false;
}

class WeylElement {
public:
  WeylElement() = default;

  // perm is 0-based: perm[j] is the image of j; signs[i] in {+1,-1}
  WeylElement(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
    validate();
  }

  static WeylElement identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return {p, std::vector<int>(static_cast<std::size_t>(n), 1)};
  }

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int> &perm() const { return perm_; }
  const std::vector<int> &signs() const { return signs_; }

  Weight act(const Weight &l) const {
    if (l.rank() != rank()) throw DimensionError("rank mismatch in Weyl action");
    Weight r(std::vector<int>(perm_.size(), 0));
    for (std::size_t j = 0; j < perm_.size(); ++j) {
      auto t = static_cast<std::size_t>(perm_[j]);
      r.coords[t] = signs_[t] * l.coords[j];
    }
    return r;
  }

  // (*this) o o
  WeylElement compose(const WeylElement &o) const {
    if (o.rank() != rank()) throw DimensionError("rank mismatch in composition");
    std::size_t n = perm_.size();
    std::vector<int> inv(n), p(n), s(n);
    for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
    for (std::size_t j = 0; j < n; ++j) p[j] = perm_[static_cast<std::size_t>(o.perm_[j])];
    for (std::size_t t = 0; t < n; ++t) s[t] = signs_[t] * o.signs_[static_cast<std::size_t>(inv[t])];
    return {p, s};
  }

  WeylElement inverse() const {
    std::size_t n = perm_.size();
    std::vector<int> p(n), s(n);
    for (std::size_t j = 0; j < n; ++j) {
      auto t = static_cast<std::size_t>(perm_[j]);
      p[t] = static_cast<int>(j);
      s[j] = signs_[t];
    }
    return {p, s};
  }

  int length() const {
    int n = rank(), len = 0;
    for (const Root &r : positive_roots(n))
      if (!is_positive_vector(act(r.vector(n)))) ++len;
    return len;
  }

  friend bool operator==(const WeylElement &, const WeylElement &) = default;
  friend auto operator<=>(const WeylElement &, const WeylElement &) = default;

private:
  void validate() const {
    if (perm_.size() != signs_.size()) throw DimensionError("perm and signs differ in length");
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
      if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(p)])
        throw InvalidArgument("perm is not a bijection");
      seen[static_cast<std::size_t>(p)] = true;
    }
    for (int s : signs_)
      if (s != 1 && s != -1) throw InvalidArgument("signs must be +1 or -1");
  }

  std::vector<int> perm_;
  std::vector<int> signs_;
};

inline Weight standard_action(const WeylElement &w, const Weight &l) { return w.act(l); }

inline Weight affine_action(const WeylElement &w, const Weight &l) {
  Weight r = rho(l.rank());
  return w.act(l + r) - r;
}

inline int length(const WeylElement &w) { return w.length(); }

inline WeylElement reflection(const Root &a, int n) {
  if (!a.valid(n)) throw InvalidArgument("root " + a.name() + " invalid at rank " + std::to_string(n));
  WeylElement id = WeylElement::identity(n);
  std::vector<int> p = id.perm(), s = id.signs();
  auto i = static_cast<std::size_t>(a.i - 1);
  if (a.kind == RootKind::B) {
    s[i] = -1;
  } else {
    auto j = static_cast<std::size_t>(a.j - 1);
    std::swap(p[i], p[j]);
    if (a.kind == RootKind::C) s[i] = s[j] = -1;
  }
  return {p, s};
}

inline std::optional<Root> arrow(const WeylElement &w, const WeylElement &w2) {
  if (w.rank() != w2.rank()) throw DimensionError("rank mismatch in arrow");
  if (w2.length() != w.length() + 1) return std::nullopt;
  WeylElement u = w2.compose(w.inverse());
  for (const Root &r : positive_roots(w.rank()))
    if (reflection(r, w.rank()) == u) return r;
  return std::nullopt;
}

// calls f on every element in lexicographic (perm, signs) order; stops when f returns false
template <class F> void for_each_element(int n, F &&f) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s(static_cast<std::size_t>(n));
      // bit set = +1; highest bit is the first coordinate
      for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u ? 1 : -1;
      if (!f(WeylElement(p, s))) return;
    }
  } while (std::next_permutation(p.begin(), p.end()));
}

inline std::vector<WeylElement> all_elements(int n) {
  std::vector<WeylElement> v;
  for_each_element(n, [&](const WeylElement &w) {
    v.push_back(w);
    return true;
  });
  return v;
}

inline long long weyl_group_order(int n) {
  long long r = 1;
  for (int i = 1; i <= n; ++i) r *= 2 * i;
  return r;
}

enum class Regularity { Regular, SemiRegular, Singular };

inline std::string to_string(Regularity r) {
  switch (r) {
  case Regularity::Regular: return "regular";
  case Regularity::SemiRegular: return "semi-regular";
  case Regularity::Singular: return "singular";
  }
  return "";
}

inline Regularity classify(const Weight &l) {
  int pairs = 0, zeros = 0;
  for (int i = 0; i < l.rank(); ++i) {
    if (l[i] == 0) ++zeros;
    for (int j = i + 1; j < l.rank(); ++j)
      if (std::abs(l[i]) == std::abs(l[j])) ++pairs;
  }
  if (pairs == 0 && zeros == 0) return Regularity::Regular;
  if ((pairs == 1 && zeros == 0) || (pairs == 0 && zeros == 1)) return Regularity::SemiRegular;
  return Regularity::Singular;
}

// crossed nodes of the Dynkin diagram, 1-based and sorted
struct Parabolic {
  int n = 2;
  std::vector<int> crossed;

  Parabolic() = default;
  Parabolic(int rank, std::vector<int> nodes) : n(rank), crossed(std::move(nodes)) {
    check_rank(n);
    std::sort(crossed.begin(), crossed.end());
    crossed.erase(std::unique(crossed.begin(), crossed.end()), crossed.end());
    if (crossed.empty()) throw InvalidArgument("parabolic needs at least one crossed node");
    for (int c : crossed)
      if (c < 1 || c > n) throw InvalidArgument("crossed node " + std::to_string(c) + " out of range");
  }

  bool is_crossed(int i) const { return std::binary_search(crossed.begin(), crossed.end(), i); }

  friend bool operator==(const Parabolic &, const Parabolic &) = default;
};

enum class Dominance { ForG, ForLevi, StrictlyForLevi };

inline bool is_dominant(const Weight &l, const Parabolic &p, Dominance mode) {
  int n = l.rank();
  if (mode == Dominance::ForG) {
    for (int i = 0; i + 1 < n; ++i)
      if (l[i] < l[i + 1]) return false;
    return l[n - 1] >= 0;
  }
  if (p.n != n) throw DimensionError("parabolic rank differs from weight rank");
  bool strict = mode == Dominance::StrictlyForLevi;
  for (int i = 1; i < n; ++i) {
    if (p.is_crossed(i)) continue;
    if (strict ? l[i - 1] <= l[i] : l[i - 1] < l[i]) return false;
  }
  if (!p.is_crossed(n)) return strict ? l[n - 1] > 0 : l[n - 1] >= 0;
  return true;
}

} // namespace isobgg
