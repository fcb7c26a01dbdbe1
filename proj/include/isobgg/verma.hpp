#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "orbits.hpp"
#include "parabolic.hpp"
#include "penrose.hpp"
#include "rational.hpp"
#include "weyl.hpp"

namespace isobgg {

// sp(2n) in the defining representation, J = (0, I; -I, 0)

enum class LieKind { Raising, Lowering, Cartan };

struct LieBasisElement {
  LieKind kind = LieKind::Cartan;
  Root root;     // unused for Cartan
  int index = 0; // 1-based, Cartan only
};

struct LieData {
  int n = 3;
  std::vector<LieBasisElement> basis; // e_alpha, then Y_alpha (same root order), then H_1..H_n
  std::vector<std::vector<int>> matrices; // 2n x 2n, row major
  // brackets[a][b] = [x_a, x_b] as sparse integer combination
  std::vector<std::vector<std::vector<std::pair<int, long>>>> brackets;

  int size() const { return static_cast<int>(basis.size()); }
  int roots() const { return n * n; }

  int root_position(const Root &r) const {
    auto pr = positive_roots(n);
    auto it = std::find(pr.begin(), pr.end(), r);
    if (it == pr.end()) throw InvalidArgument("root " + r.name() + " invalid at rank " + std::to_string(n));
    return static_cast<int>(it - pr.begin());
  }
  int e(const Root &r) const { return root_position(r); }
  int y(const Root &r) const { return roots() + root_position(r); }
  int h(int i) const {
    if (i < 1 || i > n) throw InvalidArgument("Cartan index out of range");
    return 2 * roots() + i - 1;
  }

  Weight weight(int a) const {
    const auto &b = basis[static_cast<std::size_t>(a)];
    if (b.kind == LieKind::Cartan) return Weight(std::vector<int>(static_cast<std::size_t>(n), 0));
    Weight w = b.root.vector(n);
    if (b.kind == LieKind::Lowering)
      for (auto &c : w.coords) c = -c;
    return w;
  }

  std::string name(int a) const {
    const auto &b = basis[static_cast<std::size_t>(a)];
    if (b.kind == LieKind::Cartan) return "H_" + std::to_string(b.index);
    return std::string(b.kind == LieKind::Raising ? "e" : "Y") + "_{" + b.root.name() + "}";
  }

  int entry(int a, int r, int c) const {
    return matrices[static_cast<std::size_t>(a)][static_cast<std::size_t>(r * 2 * n + c)];
  }
};

namespace detail {

using IntMatrix = std::vector<int>;

inline IntMatrix root_matrix(int n, const Root &r, bool raising) {
  int N = 2 * n;
  IntMatrix m(static_cast<std::size_t>(N * N), 0);
  auto set = [&](int row, int col, int v) { m[static_cast<std::size_t>(row * N + col)] += v; };
  int i = r.i - 1, j = r.j - 1;
  switch (r.kind) {
  case RootKind::A:
    if (raising) { set(i, j, 1); set(n + j, n + i, -1); }
    else { set(j, i, 1); set(n + i, n + j, -1); }
    break;
  case RootKind::C:
    if (raising) { set(i, n + j, 1); set(j, n + i, 1); }
    else { set(n + j, i, 1); set(n + i, j, 1); }
    break;
  case RootKind::B:
    if (raising) set(i, n + i, 1);
    else set(n + i, i, 1);
    break;
  }
  return m;
}

inline IntMatrix commutator(const IntMatrix &a, const IntMatrix &b, int N) {
  IntMatrix r(static_cast<std::size_t>(N * N), 0);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      int x = a[static_cast<std::size_t>(i * N + k)], y = b[static_cast<std::size_t>(i * N + k)];
      if (x == 0 && y == 0) continue;
      for (int j = 0; j < N; ++j) {
        r[static_cast<std::size_t>(i * N + j)] += x * b[static_cast<std::size_t>(k * N + j)];
        r[static_cast<std::size_t>(i * N + j)] -= y * a[static_cast<std::size_t>(k * N + j)];
      }
    }
  return r;
}

// each basis matrix owns one support entry no other basis matrix touches
inline std::pair<int, int> support(const LieData &L, int a) {
  const auto &b = L.basis[static_cast<std::size_t>(a)];
  int n = L.n;
  if (b.kind == LieKind::Cartan) return {b.index - 1, b.index - 1};
  int i = b.root.i - 1, j = b.root.j - 1;
  bool up = b.kind == LieKind::Raising;
  switch (b.root.kind) {
  case RootKind::A: return up ? std::pair{i, j} : std::pair{j, i};
  case RootKind::C: return up ? std::pair{i, n + j} : std::pair{n + j, i};
  case RootKind::B: return up ? std::pair{i, n + i} : std::pair{n + i, i};
  }
  return {0, 0};
}

inline std::vector<std::pair<int, long>> decompose(const LieData &L, const IntMatrix &m) {
  int N = 2 * L.n;
  std::vector<std::pair<int, long>> out;
  IntMatrix rebuilt(m.size(), 0);
  for (int a = 0; a < L.size(); ++a) {
    auto [r, c] = support(L, a);
    int v = m[static_cast<std::size_t>(r * N + c)];
    if (v == 0) continue;
    out.push_back({a, v});
    const auto &ma = L.matrices[static_cast<std::size_t>(a)];
    for (std::size_t t = 0; t < m.size(); ++t) rebuilt[t] += v * ma[t];
  }
  if (rebuilt != m) throw InternalError("commutator is not in the span of the sp(2n) basis");
  return out;
}

} // namespace detail

inline LieData build_lie(int n) {
  if (n < 3) throw InvalidArgument("Verma computations need n >= 3");
  LieData L;
  L.n = n;
  auto pr = positive_roots(n);
  for (auto &r : pr) L.basis.push_back({LieKind::Raising, r, 0});
  for (auto &r : pr) L.basis.push_back({LieKind::Lowering, r, 0});
  for (int i = 1; i <= n; ++i) L.basis.push_back({LieKind::Cartan, Root{}, i});
  int N = 2 * n;
  for (auto &b : L.basis) {
    if (b.kind == LieKind::Cartan) {
      detail::IntMatrix m(static_cast<std::size_t>(N * N), 0);
      m[static_cast<std::size_t>((b.index - 1) * N + b.index - 1)] = 1;
      m[static_cast<std::size_t>((n + b.index - 1) * N + n + b.index - 1)] = -1;
      L.matrices.push_back(std::move(m));
    } else {
      L.matrices.push_back(detail::root_matrix(n, b.root, b.kind == LieKind::Raising));
    }
  }
  std::size_t D = L.basis.size();
  L.brackets.assign(D, std::vector<std::vector<std::pair<int, long>>>(D));
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b)
      L.brackets[a][b] = detail::decompose(L, detail::commutator(L.matrices[a], L.matrices[b], N));
  return L;
}

// sparse vector in the Lie algebra
using LieVector = std::map<int, long>;

inline LieVector bracket(const LieData &L, const LieVector &x, const LieVector &y) {
  LieVector out;
  for (auto &[a, ca] : x)
    for (auto &[b, cb] : y)
      for (auto &[c, cc] : L.brackets[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        long &slot = out[c];
        slot += ca * cb * cc;
        if (slot == 0) out.erase(c);
      }
  return out;
}

inline bool jacobi_holds(const LieData &L, int a, int b, int c) {
  LieVector x{{a, 1}}, y{{b, 1}}, z{{c, 1}};
  LieVector s;
  auto add = [&](const LieVector &v) {
    for (auto &[k, c2] : v) {
      long &slot = s[k];
      slot += c2;
      if (slot == 0) s.erase(k);
    }
  };
  add(bracket(L, x, bracket(L, y, z)));
  add(bracket(L, y, bracket(L, z, x)));
  add(bracket(L, z, bracket(L, x, y)));
  return s.empty();
}

inline bool antisymmetry_holds(const LieData &L, int a, int b) {
  auto ab = L.brackets[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  auto ba = L.brackets[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  if (ab.size() != ba.size()) return false;
  for (std::size_t t = 0; t < ab.size(); ++t)
    if (ab[t].first != ba[t].first || ab[t].second != -ba[t].second) return false;
  return true;
}

// crossed = {2}
inline bool in_levi(const LieData &L, int a) {
  const auto &b = L.basis[static_cast<std::size_t>(a)];
  return b.kind == LieKind::Cartan || !in_nilradical(b.root, Parabolic(L.n, {2}));
}

// a-type, then c-type, then b1, b2, c12; lexicographic inside each group
inline std::vector<Root> u_minus_order(int n) {
  std::vector<Root> r;
  for (int i = 1; i <= 2; ++i)
    for (int j = 3; j <= n; ++j) r.push_back(Root::a(i, j));
  for (int i = 1; i <= 2; ++i)
    for (int j = 3; j <= n; ++j) r.push_back(Root::c(i, j));
  r.push_back(Root::b(1));
  r.push_back(Root::b(2));
  r.push_back(Root::c(1, 2));
  return r;
}

struct LeviDescriptor {
  int lambda1 = 0;
  int lambda2 = 0;
  bool with_standard = false; // tensor with the defining rep of sp(2n-4)

  friend bool operator==(const LeviDescriptor &, const LeviDescriptor &) = default;
};

inline std::string to_string(const LeviDescriptor &d) {
  std::string s = "W(" + std::to_string(d.lambda1) + "," + std::to_string(d.lambda2) + ")";
  return d.with_standard ? s + "⊗V" : s;
}

using SparseRationalMatrix = std::vector<std::vector<std::pair<int, Rational>>>; // column -> (row, value)

struct LeviModule {
  int n = 3;
  LeviDescriptor desc;
  int w_dim = 1;
  int v_dim = 1;
  // action[a] is empty for generators outside the Levi
  std::vector<SparseRationalMatrix> action;
  std::vector<Weight> weights;

  int dim() const { return w_dim * v_dim; }
  int degree() const { return desc.lambda1 - desc.lambda2; }

  // w_m with m = d, d-2, ..., -d; v = -1 without V, else 0..2(n-2)-1 (e_3..e_n, f_3..f_n)
  int index(int m, int v = -1) const {
    int d = degree();
    if (m > d || m < -d || (d - m) % 2 != 0) throw InvalidArgument("no basis vector w_" + std::to_string(m));
    int t = (d - m) / 2;
    if (desc.with_standard) {
      if (v < 0 || v >= v_dim) throw InvalidArgument("standard basis index out of range");
      return t * v_dim + v;
    }
    if (v != -1) throw InvalidArgument("module has no standard factor");
    return t;
  }

  int e_index(int j) const { return j - 3; }
  int f_index(int j) const { return n - 2 + j - 3; }

  std::string name(int b) const {
    int t = b / v_dim, v = b % v_dim;
    std::string w = w_dim == 1 ? "1" : "w_{" + std::to_string(degree() - 2 * t) + "}";
    if (!desc.with_standard) return w;
    int half = n - 2;
    std::string s = v < half ? "e_" + std::to_string(v + 3) : "f_" + std::to_string(v - half + 3);
    return w + "⊗" + s;
  }
};

// raising coefficients beta_t: e_{a12} w_{d-2t} = beta_t w_{d-2t+2}, from the lowering recursion
// w_{i-2} := 2/(i+d) Y_{a12} w_i
inline std::vector<Rational> gl2_raising(const LieData &L, int l1, int l2) {
  int d = l1 - l2;
  int e = L.e(Root::a(1, 2)), y = L.y(Root::a(1, 2));
  std::vector<Rational> beta(static_cast<std::size_t>(d + 1), 0);
  auto cartan_eigen = [&](int t) {
    Rational s = 0;
    for (auto &[c, v] : L.brackets[static_cast<std::size_t>(e)][static_cast<std::size_t>(y)]) {
      const auto &b = L.basis[static_cast<std::size_t>(c)];
      if (b.kind != LieKind::Cartan) throw InternalError("[e, Y] left the Cartan subalgebra");
      int coord = b.index == 1 ? l1 - t : b.index == 2 ? l2 + t : 0;
      s += v * coord;
    }
    return s;
  };
  // e w_{i-2} = 2/(i+d) (Y e w_i + [e,Y] w_i) with Y w_i = (i+d)/2 w_{i-2}
  for (int t = 1; t <= d; ++t) {
    int i = d - 2 * (t - 1);
    Rational prev = beta[static_cast<std::size_t>(t - 1)];
    Rational lower_prev = fraction(i + 2 + d, 2); // Y w_{i+2} = (i+2+d)/2 w_i
    beta[static_cast<std::size_t>(t)] = fraction(2, i + d) * (prev * lower_prev + cartan_eigen(t - 1));
  }
  return beta;
}

inline LeviModule build_levi_module(const LieData &L, const LeviDescriptor &desc) {
  if (desc.lambda1 < desc.lambda2) throw InvalidArgument("gl(2) highest weight needs lambda1 >= lambda2");
  LeviModule M;
  M.n = L.n;
  M.desc = desc;
  int n = L.n, d = desc.lambda1 - desc.lambda2;
  M.w_dim = d + 1;
  M.v_dim = desc.with_standard ? 2 * (n - 2) : 1;
  auto beta = gl2_raising(L, desc.lambda1, desc.lambda2);
  int ea = L.e(Root::a(1, 2)), ya = L.y(Root::a(1, 2));

  // V coordinates inside C^{2n}
  std::vector<int> vpos;
  for (int j = 3; j <= n; ++j) vpos.push_back(j - 1);
  for (int j = 3; j <= n; ++j) vpos.push_back(n + j - 1);

  for (int b = 0; b < M.dim(); ++b) {
    int t = b / M.v_dim, v = b % M.v_dim;
    Weight w(std::vector<int>(static_cast<std::size_t>(n), 0));
    w[0] = desc.lambda1 - t;
    w[1] = desc.lambda2 + t;
    if (desc.with_standard) {
      int half = n - 2;
      if (v < half) w[v + 2] += 1;
      else w[v - half + 2] -= 1;
    }
    M.weights.push_back(w);
  }

  M.action.resize(static_cast<std::size_t>(L.size()));
  for (int a = 0; a < L.size(); ++a) {
    if (!in_levi(L, a)) continue;
    auto &cols = M.action[static_cast<std::size_t>(a)];
    cols.resize(static_cast<std::size_t>(M.dim()));
    const auto &el = L.basis[static_cast<std::size_t>(a)];
    for (int b = 0; b < M.dim(); ++b) {
      int t = b / M.v_dim, v = b % M.v_dim;
      std::map<int, Rational> out;
      // gl(2) factor
      if (el.kind == LieKind::Cartan && el.index <= 2) {
        out[b] += el.index == 1 ? desc.lambda1 - t : desc.lambda2 + t;
      } else if (a == ea && t > 0) {
        out[(t - 1) * M.v_dim + v] += beta[static_cast<std::size_t>(t)];
      } else if (a == ya && t < d) {
        int i = d - 2 * t;
        out[(t + 1) * M.v_dim + v] += fraction(i + d, 2);
      }
      // sp(2n-4) factor, matrix restricted to V
      if (desc.with_standard) {
        int col = vpos[static_cast<std::size_t>(v)];
        for (int r = 0; r < 2 * n; ++r) {
          int c = L.entry(a, r, col);
          if (c == 0) continue;
          auto it = std::find(vpos.begin(), vpos.end(), r);
          if (it == vpos.end()) {
            // gl(2) generators have no V entries; anything else would break the tensor split
            throw InternalError("Levi generator " + L.name(a) + " leaves V");
          }
          out[t * M.v_dim + static_cast<int>(it - vpos.begin())] += c;
        }
      }
      for (auto &[r, c] : out)
        if (c != 0) cols[static_cast<std::size_t>(b)].push_back({r, c});
    }
  }
  return M;
}

struct PbwKey {
  std::vector<int> monomial; // ranks in u_minus_order, nondecreasing
  int levi = 0;

  friend bool operator==(const PbwKey &, const PbwKey &) = default;
  friend auto operator<=>(const PbwKey &, const PbwKey &) = default;
};

struct PbwVector {
  std::map<PbwKey, Rational> terms;

  bool zero() const { return terms.empty(); }
  void add(const PbwKey &k, const Rational &c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  void add(const PbwVector &v, const Rational &c = 1) {
    for (auto &[k, x] : v.terms) add(k, c * x);
  }
  PbwVector scaled(const Rational &c) const {
    PbwVector r;
    r.add(*this, c);
    return r;
  }
  friend bool operator==(const PbwVector &, const PbwVector &) = default;
};

class VermaModule {
public:
  VermaModule(LieData lie, LeviModule levi, int degree_cap = 4)
      : lie_(std::move(lie)), levi_(std::move(levi)), cap_(degree_cap) {
    if (lie_.n != levi_.n) throw DimensionError("Levi module rank differs from Lie algebra rank");
    order_ = u_minus_order(lie_.n);
    rank_of_.assign(static_cast<std::size_t>(lie_.size()), -1);
    for (std::size_t r = 0; r < order_.size(); ++r) {
      int a = lie_.y(order_[r]);
      rank_of_[static_cast<std::size_t>(a)] = static_cast<int>(r);
      lie_index_.push_back(a);
    }
  }

  const LieData &lie() const { return lie_; }
  const LeviModule &levi() const { return levi_; }
  int degree_cap() const { return cap_; }
  const std::vector<Root> &order() const { return order_; }

  PbwVector highest(int levi_index) const {
    PbwVector v;
    v.add(PbwKey{{}, levi_index}, 1);
    return v;
  }

  // x_a . v for any basis element a
  PbwVector act(int a, const PbwVector &v) const {
    PbwVector out;
    for (auto &[k, c] : v.terms) {
      if (static_cast<int>(k.monomial.size()) > cap_) throw CapError("monomial degree exceeds the cap");
      out.add(apply(a, k.monomial, k.levi), c);
    }
    return out;
  }

  PbwVector act(const Root &positive, const PbwVector &v) const { return act(lie_.e(positive), v); }

  // Y_{f1} Y_{f2} ... Y_{fm} (1 ⊗ b), normal ordered
  PbwVector product(const std::vector<Root> &factors, int levi_index) const {
    PbwVector v = highest(levi_index);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) v = act(lie_.y(*it), v);
    return v;
  }

  Weight weight(const PbwKey &k) const {
    Weight w = levi_.weights[static_cast<std::size_t>(k.levi)];
    for (int r : k.monomial) w = w - order_[static_cast<std::size_t>(r)].vector(lie_.n);
    return w;
  }

  std::string format(const PbwVector &v) const {
    if (v.zero()) return "0";
    std::string s;
    bool first = true;
    for (auto &[k, c] : v.terms) {
      Rational mag = abs(c);
      if (first) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < k.monomial.size();) {
        std::size_t j = i;
        while (j < k.monomial.size() && k.monomial[j] == k.monomial[i]) ++j;
        mono += "Y_{" + order_[static_cast<std::size_t>(k.monomial[i])].name() + "}";
        if (j - i > 1) mono += "^" + std::to_string(j - i);
        i = j;
      }
      if (mono.empty()) mono = "1";
      if (mag != 1) s += mag.get_str() + "·";
      s += mono + " ⊗ " + levi_.name(k.levi);
    }
    return s;
  }

  // PBW basis of the weight space: normal-ordered monomials of degree <= cap times Levi basis vectors
  std::vector<PbwKey> weight_space(const Weight &target) const {
    std::vector<PbwKey> out;
    int n = lie_.n;
    for (int b = 0; b < levi_.dim(); ++b) {
      Weight rem = levi_.weights[static_cast<std::size_t>(b)] - target;
      std::vector<int> mono;
      auto rec = [&](auto &&self, int start, const Weight &r) -> void {
        int grade = r[0] + r[1];
        if (grade < 0) return;
        if (std::all_of(r.coords.begin(), r.coords.end(), [](int x) { return x == 0; })) {
          out.push_back({mono, b});
          return;
        }
        if (static_cast<int>(mono.size()) == cap_) return;
        for (int t = start; t < static_cast<int>(order_.size()); ++t) {
          mono.push_back(t);
          self(self, t, r - order_[static_cast<std::size_t>(t)].vector(n));
          mono.pop_back();
        }
      };
      rec(rec, 0, rem);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  bool in_u_minus(int a) const { return rank_of_[static_cast<std::size_t>(a)] >= 0; }

  // y * (mono ⊗ w) for y in u-
  PbwVector insert(int y, std::span<const int> mono, int w) const {
    int ry = rank_of_[static_cast<std::size_t>(y)];
    PbwVector res;
    if (mono.empty() || ry <= mono[0]) {
      if (static_cast<int>(mono.size()) + 1 > cap_) throw CapError("PBW degree exceeds the cap of " + std::to_string(cap_));
      PbwKey k{{ry}, w};
      k.monomial.insert(k.monomial.end(), mono.begin(), mono.end());
      res.add(k, 1);
      return res;
    }
    // y m0 rest = m0 (y rest) + [y, m0] rest
    int m0 = lie_index_[static_cast<std::size_t>(mono[0])];
    auto rest = mono.subspan(1);
    PbwVector sub = insert(y, rest, w);
    for (auto &[k, c] : sub.terms) res.add(insert(m0, k.monomial, k.levi), c);
    for (auto &[z, c] : lie_.brackets[static_cast<std::size_t>(y)][static_cast<std::size_t>(m0)]) res.add(apply(z, rest, w), c);
    return res;
  }

  PbwVector apply(int z, std::span<const int> mono, int w) const {
    if (in_u_minus(z)) return insert(z, mono, w);
    PbwVector res;
    if (mono.empty()) {
      const auto &act = levi_.action[static_cast<std::size_t>(z)];
      if (act.empty()) return res; // u kills F
      for (auto &[r, c] : act[static_cast<std::size_t>(w)]) res.add(PbwKey{{}, r}, c);
      return res;
    }
    int m0 = lie_index_[static_cast<std::size_t>(mono[0])];
    auto rest = mono.subspan(1);
    PbwVector sub = apply(z, rest, w);
    for (auto &[k, c] : sub.terms) res.add(insert(m0, k.monomial, k.levi), c);
    for (auto &[zz, c] : lie_.brackets[static_cast<std::size_t>(z)][static_cast<std::size_t>(m0)]) res.add(apply(zz, rest, w), c);
    return res;
  }

  LieData lie_;
  LeviModule levi_;
  int cap_;
  std::vector<Root> order_;
  std::vector<int> rank_of_;   // Lie index -> rank in order_, or -1
  std::vector<int> lie_index_; // rank -> Lie index
};

struct MaximalReport {
  bool pass = false;
  bool nonzero = false;
  bool homogeneous = false;
  std::vector<std::pair<int, PbwVector>> residuals; // simple root index, nonzero e_{alpha_i} v
};

inline MaximalReport check_maximal(const VermaModule &M, const PbwVector &v, const Weight &expected) {
  MaximalReport r;
  r.nonzero = !v.zero();
  r.homogeneous = r.nonzero;
  for (auto &[k, c] : v.terms)
    if (M.weight(k) != expected) r.homogeneous = false;
  int n = M.lie().n;
  for (int i = 1; i <= n; ++i) {
    PbwVector x = M.act(simple_root(i, n), v);
    if (!x.zero()) r.residuals.push_back({i, std::move(x)});
  }
  r.pass = r.nonzero && r.homogeneous && r.residuals.empty();
  return r;
}

inline std::string format(const VermaModule &M, const MaximalReport &r) {
  std::string s = r.pass ? "PASS" : "FAIL";
  if (!r.nonzero) s += "; vector is zero";
  else if (!r.homogeneous) s += "; vector is not homogeneous of the expected weight";
  for (auto &[i, x] : r.residuals) s += "; e_{α" + std::to_string(i) + "} v = " + M.format(x);
  return s;
}

// maximal vectors of a given weight, as coordinates in weight_space(target)
inline std::vector<PbwVector> maximal_vectors(const VermaModule &M, const Weight &target) {
  auto basis = M.weight_space(target);
  int n = M.lie().n;
  std::map<std::pair<int, PbwKey>, int> row_of;
  std::vector<std::vector<std::pair<int, Rational>>> cols;
  for (auto &k : basis) {
    PbwVector v;
    v.add(k, 1);
    std::vector<std::pair<int, Rational>> col;
    for (int i = 1; i <= n; ++i) {
      PbwVector x = M.act(simple_root(i, n), v);
      for (auto &[kk, c] : x.terms) {
        auto [it, fresh] = row_of.try_emplace({i, kk}, static_cast<int>(row_of.size()));
        (void)fresh;
        col.push_back({it->second, c});
      }
    }
    cols.push_back(std::move(col));
  }
  int ncols = static_cast<int>(basis.size());
  RationalMatrix a(row_of.size(), std::vector<Rational>(static_cast<std::size_t>(ncols), 0));
  for (int c = 0; c < ncols; ++c)
    for (auto &[r, x] : cols[static_cast<std::size_t>(c)]) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += x;
  std::vector<PbwVector> out;
  for (auto &x : nullspace(a, ncols)) {
    PbwVector v;
    for (int c = 0; c < ncols; ++c) v.add(basis[static_cast<std::size_t>(c)], x[static_cast<std::size_t>(c)]);
    out.push_back(std::move(v));
  }
  return out;
}

inline bool in_span(const std::vector<PbwVector> &span, const PbwVector &v) {
  std::map<PbwKey, int> col;
  for (auto &[k, c] : v.terms) col.try_emplace(k, static_cast<int>(col.size()));
  for (auto &s : span) for (auto &[k, c] : s.terms) col.try_emplace(k, static_cast<int>(col.size()));
  int cols = static_cast<int>(col.size());
  auto row = [&](const PbwVector &x) {
    std::vector<Rational> r(static_cast<std::size_t>(cols), 0);
    for (auto &[k, c] : x.terms) r[static_cast<std::size_t>(col[k])] = c;
    return r;
  };
  RationalMatrix a;
  for (auto &s : span) a.push_back(row(s));
  int r0 = rank(a, cols);
  a.push_back(row(v));
  return rank(a, cols) == r0;
}

// Table 1 rows

struct CandidateTerm {
  Rational coeff;
  std::vector<Root> factors; // left to right
  int w = 0;                 // w_m
  int v = -1;                // standard basis index, -1 without V
};

struct Table1Case {
  std::string row;
  int n = 3;
  int k = 1;
  Sign sign = Sign::Plus;
  LeviDescriptor printed_module;
  LeviDescriptor module; // from the source of d1
  Weight expected;       // target of d1 minus rho
  std::vector<CandidateTerm> terms;
  std::vector<std::string> notes;
};

struct Table1Report {
  Table1Case input;
  std::string candidate;
  MaximalReport check;
  std::string check_text;
  int maximal_dimension = 0;
  std::vector<std::string> maximal_basis;
  bool candidate_in_maximal_space = false;

  bool pass() const { return check.pass; }
};

inline std::optional<LeviDescriptor> levi_from_weight(const Weight &w) {
  int n = w.rank();
  LeviDescriptor d{w[0], w[1], false};
  bool all_zero = true, standard = w[2] == 1;
  for (int i = 2; i < n; ++i) {
    if (w[i] != 0) all_zero = false;
    if (i > 2 && w[i] != 0) standard = false;
  }
  if (all_zero) return d;
  if (standard) {
    d.with_standard = true;
    return d;
  }
  return std::nullopt;
}

inline std::vector<Table1Case> table1_cases(int n) {
  if (n < 3) throw InvalidArgument("Table 1 rows need n >= 3");
  std::vector<Table1Case> out;
  auto A = [](int i, int j) { return Root::a(i, j); };
  auto C = [](int i, int j) { return Root::c(i, j); };
  auto B = [](int i) { return Root::b(i); };
  Weight r = rho(n);
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (int k = 1; k <= n - 1; ++k) {
      BggComplex cx = assemble_singular_bgg(n, k, s);
      Table1Case c;
      c.n = n;
      c.k = k;
      c.sign = s;
      auto src = levi_from_weight(cx.terms[0] - r);
      if (!src) throw InternalError("source of d1 is not a Table 1 Levi module");
      c.module = *src;
      c.expected = cx.terms[1] - r;
      int e3 = 0, f3 = n - 2; // standard basis indices of e_3, f_3
      if (s == Sign::Minus) {
        int d = n + k - 2;
        c.row = "negative";
        c.printed_module = {-1, -n - k - 1, false};
        c.terms = {{1, {A(1, 3)}, d, -1}, {1, {A(2, 3)}, d - 2, -1}};
        c.notes.push_back("printed module W(-1,-n-k-1) cannot carry w_{n+k-2}; W(-1,-n-k+1) used");
      } else if (n == 3 && k == 2) {
        c.row = "n=3,k=2";
        c.printed_module = {-1, -1, true};
        c.terms = {{1, {C(2, 3), A(2, 3)}, 0, e3}, {-4, {B(2)}, 0, e3}, {-1, {A(2, 3), A(2, 3)}, 0, f3}};
        c.notes.push_back("e_4 does not exist at n=3; read as f_3");
      } else if (n == 3 && k == 1) {
        c.row = "n=3,k=1";
        c.printed_module = {-1, -1, false};
        c.terms = {{1, {A(2, 3), A(2, 3), C(1, 3)}, 0, -1},
                   {-1, {C(2, 3), A(2, 3), A(1, 3)}, 0, -1},
                   {-4, {A(1, 3), B(2)}, 0, -1}};
      } else if (k == n - 1) {
        c.row = "n>3,k=n-1";
        c.printed_module = {-1, -1, true};
        c.terms = {{1, {A(2, 4)}, 0, e3}, {-1, {A(2, 3)}, 0, e3 + 1}};
      } else if (k == n - 2) {
        c.row = "n>3,k=n-2";
        c.printed_module = {-1, -1, false};
        c.terms = {{1, {A(1, 3), A(2, 4)}, 0, -1}, {-1, {A(1, 4), A(2, 3)}, 0, -1}};
      } else {
        int d = n - k - 2;
        c.row = "0<k<n-2";
        c.printed_module = {-1, k - n + 1, false};
        c.terms = {{1, {A(1, 3)}, d, -1}, {-1, {A(2, 3)}, d - 2, -1}};
      }
      if (c.printed_module != c.module && c.row != "negative")
        c.notes.push_back("printed module " + to_string(c.printed_module) + " differs from d1 source " + to_string(c.module));
      out.push_back(std::move(c));
    }
  return out;
}

inline PbwVector build_candidate(const VermaModule &M, const std::vector<CandidateTerm> &terms) {
  PbwVector v;
  for (auto &t : terms) v.add(M.product(t.factors, M.levi().index(t.w, t.v)), t.coeff);
  return v;
}

inline Table1Report evaluate_table1_case(const Table1Case &c, const LieData &L, int degree_cap = 4) {
  VermaModule M(L, build_levi_module(L, c.module), degree_cap);
  Table1Report r;
  r.input = c;
  PbwVector v = build_candidate(M, c.terms);
  r.candidate = M.format(v);
  r.check = check_maximal(M, v, c.expected);
  r.check_text = format(M, r.check);
  auto mv = maximal_vectors(M, c.expected);
  r.maximal_dimension = static_cast<int>(mv.size());
  for (auto &x : mv) r.maximal_basis.push_back(M.format(x));
  r.candidate_in_maximal_space = !v.zero() && in_span(mv, v);
  return r;
}

inline std::vector<Table1Report> verify_table1(int n, int degree_cap = 4) {
  LieData L = build_lie(n);
  std::vector<Table1Report> out;
  for (auto &c : table1_cases(n)) out.push_back(evaluate_table1_case(c, L, degree_cap));
  return out;
}

} // namespace isobgg
