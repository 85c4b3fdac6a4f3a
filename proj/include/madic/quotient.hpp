#pragma once

// Level quotients G/St_G(n) as permutation groups on the m^n words of length n.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "madic/spinal.hpp"
#include "madic/tree_core.hpp"

namespace madic {

inline constexpr std::size_t kDefaultLevelPoints = 4096;

/// Action on the words of length `level` in rank order: images[rank(v)] = rank(g(v)).
struct LevelPerm {
  std::size_t m = 0;
  std::size_t level = 0;
  std::vector<std::uint32_t> images;

  std::size_t points() const noexcept { return images.size(); }
  bool is_identity() const noexcept;
  LevelPerm inverse() const;
  /// Restriction to a shallower level.
  LevelPerm restrict_to(std::size_t k) const;

  friend bool operator==(const LevelPerm&, const LevelPerm&) = default;
};

/// (p∘q)(v) = p(q(v)).
LevelPerm compose(const LevelPerm& p, const LevelPerm& q);

/// Throws CapExceeded when m^n exceeds `max_points`.
LevelPerm level_permutation(const Element& g, std::size_t n,
                            std::size_t max_points = kDefaultLevelPoints);

/// Images of the group generators at level n, identities and repeats dropped.
std::vector<LevelPerm> level_generators(const PolyspinalData& data, std::size_t n,
                                        std::size_t max_points = kDefaultLevelPoints);

/// Order of ⟨gens⟩ by a deterministic Schreier–Sims stabilizer chain.
boost::multiprecision::cpp_int group_order(std::span<const LevelPerm> gens);

boost::multiprecision::cpp_int group_order_level(const PolyspinalData& data, std::size_t n,
                                                 std::size_t max_points = kDefaultLevelPoints);

/// Transitive on every level k ≤ n.
bool spherically_transitive(const PolyspinalData& data, std::size_t n,
                            std::size_t max_points = kDefaultLevelPoints);

/// Orbits on level n, each sorted, listed by least point.
std::vector<std::vector<std::uint32_t>> orbits(std::span<const LevelPerm> gens, std::size_t points);
std::vector<std::size_t> orbits_level(const PolyspinalData& data, std::size_t n,
                                      std::size_t max_points = kDefaultLevelPoints);

}  // namespace madic
