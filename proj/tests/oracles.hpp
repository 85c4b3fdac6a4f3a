#pragma once

// Brute-force reference computations used to cross-check the library. They
// deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Images = std::vector<std::uint32_t>;

// p∘q on plain image vectors.
inline Images compose(const Images& p, const Images& q) {
  Images r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Images identity(std::size_t n) {
  Images r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

inline std::vector<Images> symmetric_group(std::size_t m) {
  std::vector<Images> out;
  Images p = identity(m);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Size of the group generated by `gens`, by closing under right multiplication.
inline std::size_t closure_size(const std::vector<Images>& gens, std::size_t points,
                                std::size_t cap = 5'000'000) {
  std::set<Images> seen{identity(points)};
  std::vector<Images> frontier{identity(points)};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Images y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    if (seen.size() > cap) return 0;
    frontier = std::move(next);
  }
  return seen.size();
}

// All Z/m combinations of the given vectors.
inline std::set<std::vector<std::int64_t>> span(const std::vector<std::vector<std::int64_t>>& vecs,
                                               std::size_t dim, std::int64_t m) {
  std::set<std::vector<std::int64_t>> out{std::vector<std::int64_t>(dim, 0)};
  for (const auto& v : vecs) {
    std::set<std::vector<std::int64_t>> grown;
    for (const auto& w : out) {
      for (std::int64_t k = 0; k < m; ++k) {
        auto x = w;
        for (std::size_t i = 0; i < dim; ++i) x[i] = ((x[i] + k * v[i]) % m + m) % m;
        grown.insert(std::move(x));
      }
    }
    out = std::move(grown);
  }
  return out;
}

inline std::vector<std::int64_t> unit_list(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t u = 1; u < m; ++u) {
    if (std::gcd(u, m) == 1) out.push_back(u);
  }
  if (m == 1) out.push_back(0);
  return out;
}

// Orbits of GGS defining vectors (indexed by x = 1..m-1) under
// e ↦ λ·(e_{u·x})_x for units λ, u.
inline std::vector<std::set<std::vector<std::int64_t>>> ggs_orbits(
    const std::vector<std::vector<std::int64_t>>& vectors, std::int64_t m) {
  std::vector<std::set<std::vector<std::int64_t>>> out;
  std::set<std::vector<std::int64_t>> placed;
  for (const auto& e : vectors) {
    if (placed.count(e)) continue;
    std::set<std::vector<std::int64_t>> orbit;
    for (auto lambda : unit_list(m)) {
      for (auto u : unit_list(m)) {
        std::vector<std::int64_t> f(e.size());
        for (std::int64_t x = 1; x < m; ++x) f[x - 1] = lambda * e[(u * x) % m - 1] % m;
        orbit.insert(f);
      }
    }
    placed.insert(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

// A finite automaton over X: state s has a root label and a child state per
// letter. Words are products of states and inverse states, rightmost acting
// first.
struct Automaton {
  std::size_t m = 0;
  std::vector<Images> label;
  std::vector<std::vector<std::size_t>> next;
  std::map<std::string, std::size_t> names;

  struct Factor {
    std::size_t state;
    bool inverse;
  };
  using Word = std::vector<Factor>;

  std::vector<std::uint32_t> apply_state(Factor f, std::vector<std::uint32_t> v) const {
    std::size_t s = f.state;
    for (auto& x : v) {
      std::uint32_t y = x;
      if (f.inverse) {
        y = static_cast<std::uint32_t>(std::find(label[s].begin(), label[s].end(), x) -
                                       label[s].begin());
        s = next[s][y];
      } else {
        y = label[s][x];
        s = next[s][x];
      }
      x = y;
    }
    return v;
  }

  std::vector<std::uint32_t> apply(const Word& w, std::vector<std::uint32_t> v) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_state(*it, std::move(v));
    return v;
  }

  Images state_label(Factor f, const std::vector<std::uint32_t>& u) const {
    if (!f.inverse) {
      std::size_t s = f.state;
      for (auto x : u) s = next[s][x];
      return label[s];
    }
    // (f⁻¹)|^u = (f|^{f⁻¹(u)})⁻¹
    const auto pre = apply_state(f, u);
    std::size_t s = f.state;
    for (auto x : pre) s = next[s][x];
    Images inv(m);
    for (std::size_t i = 0; i < m; ++i) inv[label[s][i]] = static_cast<std::uint32_t>(i);
    return inv;
  }

  Images word_label(const Word& w, std::vector<std::uint32_t> u) const {
    Images total = identity(m);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      total = compose(state_label(*it, u), total);
      u = apply_state(*it, std::move(u));
    }
    return total;
  }

  std::string to_word(const Word& w) const {
    std::string out;
    for (const auto& f : w) {
      if (!out.empty()) out += '*';
      for (const auto& [name, id] : names) {
        if (id == f.state) out += name;
      }
      if (f.inverse) out += "^-1";
    }
    return out.empty() ? "1" : out;
  }
};

inline Automaton grigorchuk_automaton() {
  Automaton A;
  A.m = 2;
  // e, a, b, c, d
  A.label = {{0, 1}, {1, 0}, {0, 1}, {0, 1}, {0, 1}};
  A.next = {{0, 0}, {0, 0}, {1, 3}, {1, 4}, {0, 2}};
  A.names = {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}};
  return A;
}

// b = (b, a, a²) along the ray 0.
inline Automaton gupta_sidki_automaton() {
  Automaton A;
  A.m = 3;
  // e, a, a², b
  A.label = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  A.next = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {3, 1, 2}};
  A.names = {{"a", 1}, {"b", 3}};
  return A;
}

// b = (b, a, a²), c = (a², c, a).
inline Automaton pervova_automaton() {
  Automaton A;
  A.m = 3;
  // e, a, a², b, c
  A.label = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 1, 2}, {0, 1, 2}};
  A.next = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {3, 1, 2}, {2, 4, 1}};
  A.names = {{"a", 1}, {"b", 3}, {"c", 4}};
  return A;
}

}  // namespace oracle
