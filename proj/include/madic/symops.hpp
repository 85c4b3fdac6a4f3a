#pragma once

// Arithmetic in Sym(X) for the alphabet X = [0, m), the cyclic group A_m
// generated by (0 1 ... m-1), its normalizer, and units of Z/m.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace madic {

using Letter = std::uint32_t;

/// A bijection of [0, m) in one-line notation: images()[x] is the image of x.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Letter> images);
  Perm(std::initializer_list<Letter> images)
      : Perm(std::vector<Letter>(images)) {}

  static Perm identity(std::size_t m);

  std::size_t degree() const noexcept { return images_.size(); }
  Letter operator()(Letter x) const { return images_[x]; }
  std::span<const std::uint8_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  Perm pow(long long k) const;
  std::size_t order() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const noexcept;

 private:
  std::vector<std::uint8_t> images_;
};

/// (p∘q)(x) = p(q(x)). Throws DegreeMismatch when the degrees differ.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// c⁻¹∘p∘c, the right conjugate p^c.
Perm conjugate(const Perm& p, const Perm& c);

/// The standard m-cycle x ↦ x+1 mod m generating A_m.
Perm standard_cycle(std::size_t m);

/// If p is a power of the standard m-cycle, the exponent in [0, m).
std::optional<std::size_t> cycle_exponent(const Perm& p);

/// Parses "(0 1 2)(3 4)" or "[1,2,0]". Cycle notation needs m; "()" is the identity.
Perm parse_perm(std::string_view text, std::size_t m);
std::string to_one_line(const Perm& p);
/// Canonical cycle notation: cycles start at their least point, ordered by it.
std::string to_cycles(const Perm& p);

/// True iff ⟨gens⟩ has a single orbit on [0, m).
bool is_transitive(std::span<const Perm> gens, std::size_t m);

/// Orbit of x under ⟨gens⟩, in discovery order.
std::vector<Letter> orbit(std::span<const Perm> gens, std::size_t m, Letter x);

/// All elements of ⟨gens⟩, sorted. Throws CapExceeded beyond `cap` elements.
std::vector<Perm> generate_group(std::span<const Perm> gens, std::size_t m,
                                 std::size_t cap = 100000);

/// All permutations of [0, m) fixing x, sorted. Factorial growth; callers cap m.
std::vector<Perm> point_stabilizer(std::size_t m, Letter x);

/// A residue u in [0, m) with gcd(u, m) = 1.
class UnitResidue {
 public:
  UnitResidue(std::int64_t u, std::size_t m);

  std::size_t value() const noexcept { return u_; }
  std::size_t modulus() const noexcept { return m_; }
  UnitResidue inverse() const;

  friend bool operator==(const UnitResidue&, const UnitResidue&) = default;

 private:
  std::size_t u_;
  std::size_t m_;
};

std::vector<UnitResidue> units(std::size_t m);
std::size_t euler_phi(std::size_t m);

/// x ↦ u·x mod m.
Perm unit_perm(const UnitResidue& u);

/// Norm_Sym(X)(A_m) ∩ St(x): the maps y ↦ u·(y − x) + x for units u.
std::vector<Perm> normalizer_Am_fixing(std::size_t m, Letter x);

}  // namespace madic

template <>
struct std::hash<madic::Perm> {
  std::size_t operator()(const madic::Perm& p) const noexcept { return p.hash(); }
};
