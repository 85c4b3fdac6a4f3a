#include "madic/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "madic/error.hpp"

namespace madic {

using boost::multiprecision::cpp_int;

namespace {

std::size_t level_points(std::size_t m, std::size_t n, std::size_t max_points) {
  std::size_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= m;
    if (points > max_points) {
      throw CapExceeded("level " + std::to_string(n) + " has more than " +
                        std::to_string(max_points) + " vertices");
    }
  }
  return points;
}

using Points = std::vector<std::uint32_t>;

Points identity_points(std::size_t n) {
  Points p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

Points compose_points(const Points& p, const Points& q) {
  Points r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Points invert_points(const Points& p) {
  Points r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool is_identity_points(const Points& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

// Stabilizer chain with Schreier vectors. Base points are chosen as the least
// point moved by the element that needs a new level.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t points) : n_(points) {}

  void build(const std::vector<Points>& gens) {
    for (const auto& g : gens) {
      if (is_identity_points(g)) continue;
      if (levels_.empty()) new_level(g);
      levels_[0].gens.push_back(g);
    }
    if (levels_.empty()) return;
    recompute_orbit(0);
    std::size_t i = levels_.size();
    while (i-- > 0) {
      // Restart from the deepest level touched after each new strong generator.
      const std::size_t touched = check_level(i);
      if (touched != kDone) i = touched + 1;
    }
  }

  cpp_int order() const {
    cpp_int result = 1;
    for (const auto& l : levels_) result *= static_cast<unsigned long>(l.orbit.size());
    return result;
  }

 private:
  static constexpr std::size_t kDone = static_cast<std::size_t>(-1);

  struct Level {
    std::uint32_t base = 0;
    std::vector<Points> gens;
    std::vector<std::uint32_t> orbit;
    std::vector<int> via;  // generator index reaching each point, -1 root, -2 outside
  };

  void new_level(const Points& moved) {
    Level l;
    for (std::size_t x = 0; x < n_; ++x) {
      if (moved[x] != x) {
        l.base = static_cast<std::uint32_t>(x);
        break;
      }
    }
    levels_.push_back(std::move(l));
  }

  void recompute_orbit(std::size_t i) {
    Level& l = levels_[i];
    l.via.assign(n_, -2);
    l.orbit.assign(1, l.base);
    l.via[l.base] = -1;
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      const std::uint32_t x = l.orbit[k];
      for (std::size_t j = 0; j < l.gens.size(); ++j) {
        const std::uint32_t y = l.gens[j][x];
        if (l.via[y] == -2) {
          l.via[y] = static_cast<int>(j);
          l.orbit.push_back(y);
        }
      }
    }
  }

  // u with u(base) = x.
  Points transversal(std::size_t i, std::uint32_t x) const {
    const Level& l = levels_[i];
    Points u = identity_points(n_);
    while (l.via[x] != -1) {
      const Points& g = l.gens[static_cast<std::size_t>(l.via[x])];
      u = compose_points(u, g);
      x = invert_points(g)[x];
    }
    return u;
  }

  // Strips g through levels from `start`; returns the residue and the level
  // where it dropped out (levels_.size() when it passed all of them).
  std::pair<Points, std::size_t> sift(Points g, std::size_t start) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const std::uint32_t beta = g[levels_[i].base];
      if (levels_[i].via[beta] == -2) return {std::move(g), i};
      g = compose_points(invert_points(transversal(i, beta)), g);
    }
    return {std::move(g), levels_.size()};
  }

  // Checks all Schreier generators of level i; on failure adds a strong
  // generator and returns the deepest level it was added to.
  std::size_t check_level(std::size_t i) {
    const Level& l = levels_[i];
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      const std::uint32_t beta = levels_[i].orbit[k];
      const Points u_beta = transversal(i, beta);
      for (std::size_t j = 0; j < levels_[i].gens.size(); ++j) {
        const Points& s = levels_[i].gens[j];
        const Points su = compose_points(s, u_beta);
        const Points h = compose_points(invert_points(transversal(i, su[levels_[i].base])), su);
        auto [residue, level] = sift(h, i + 1);
        if (is_identity_points(residue)) continue;
        if (level == levels_.size()) new_level(residue);
        for (std::size_t t = i + 1; t <= level; ++t) {
          levels_[t].gens.push_back(residue);
          recompute_orbit(t);
        }
        return level;
      }
    }
    return kDone;
  }

  std::size_t n_;
  std::vector<Level> levels_;
};

}  // namespace

bool LevelPerm::is_identity() const noexcept { return is_identity_points(images); }

LevelPerm LevelPerm::inverse() const { return LevelPerm{m, level, invert_points(images)}; }

LevelPerm LevelPerm::restrict_to(std::size_t k) const {
  if (k > level) throw Error("cannot restrict to a deeper level");
  std::size_t drop = 1;
  for (std::size_t i = k; i < level; ++i) drop *= m;
  Points out(images.size() / drop);
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = static_cast<std::uint32_t>(images[r * drop] / drop);
  return LevelPerm{m, k, std::move(out)};
}

LevelPerm compose(const LevelPerm& p, const LevelPerm& q) {
  if (p.m != q.m || p.level != q.level) throw DegreeMismatch("level permutations do not match");
  return LevelPerm{p.m, p.level, compose_points(p.images, q.images)};
}

LevelPerm level_permutation(const Element& g, std::size_t n, std::size_t max_points) {
  const std::size_t m = g.degree();
  level_points(m, n, max_points);
  SectionCache cache;
  std::map<std::pair<std::size_t, std::size_t>, Points> memo;
  // Images of the words of length k under the state id.
  auto build = [&](auto&& self, std::size_t id, std::size_t k) -> const Points& {
    auto it = memo.find({id, k});
    if (it != memo.end()) return it->second;
    Points out;
    if (k == 0) {
      out = {0};
    } else {
      std::size_t width = 1;
      for (std::size_t i = 1; i < k; ++i) width *= m;
      out.resize(width * m);
      const Perm label = cache.label(id);
      for (Letter x = 0; x < m; ++x) {
        const Points sub = self(self, cache.child(id, x), k - 1);
        for (std::size_t r = 0; r < width; ++r) {
          out[x * width + r] = static_cast<std::uint32_t>(label(x) * width + sub[r]);
        }
      }
    }
    return memo.emplace(std::pair{id, k}, std::move(out)).first->second;
  };
  Points images = build(build, cache.intern(g), n);
  return LevelPerm{m, n, std::move(images)};
}

std::vector<LevelPerm> level_generators(const PolyspinalData& data, std::size_t n,
                                        std::size_t max_points) {
  level_points(data.m, n, max_points);
  const auto group = SpinalGroup::create(data);
  std::vector<LevelPerm> out;
  for (const auto& g : group->generators()) {
    LevelPerm p = level_permutation(g, n, max_points);
    if (p.is_identity() || std::find(out.begin(), out.end(), p) != out.end()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

cpp_int group_order(std::span<const LevelPerm> gens) {
  if (gens.empty()) return 1;
  StabilizerChain chain(gens.front().points());
  std::vector<Points> raw;
  for (const auto& g : gens) raw.push_back(g.images);
  chain.build(raw);
  return chain.order();
}

cpp_int group_order_level(const PolyspinalData& data, std::size_t n, std::size_t max_points) {
  const auto gens = level_generators(data, n, max_points);
  return group_order(gens);
}

std::vector<std::vector<std::uint32_t>> orbits(std::span<const LevelPerm> gens, std::size_t points) {
  std::vector<bool> seen(points, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t start = 0; start < points; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : gens) {
        const std::uint32_t y = g.images[orbit[k]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::size_t> orbits_level(const PolyspinalData& data, std::size_t n,
                                      std::size_t max_points) {
  const std::size_t points = level_points(data.m, n, max_points);
  const auto gens = level_generators(data, n, max_points);
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits(gens, points)) sizes.push_back(o.size());
  return sizes;
}

bool spherically_transitive(const PolyspinalData& data, std::size_t n, std::size_t max_points) {
  const std::size_t points = level_points(data.m, n, max_points);
  const auto gens = level_generators(data, n, max_points);
  std::size_t width = points;
  for (std::size_t k = n; k >= 1; --k) {
    std::vector<LevelPerm> restricted;
    for (const auto& g : gens) restricted.push_back(g.restrict_to(k));
    if (orbits(restricted, width).size() != 1) return false;
    width /= data.m;
  }
  return true;
}

}  // namespace madic
