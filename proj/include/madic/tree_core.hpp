#pragma once

// Automorphisms of the m-adic rooted tree as formal generator words.
//
// The action is on the left: f(ux) = f(u) f|^u(x), and a word f_1 f_2 ... f_k
// acts by applying f_k first, so (fg)|_u = f|_{g(u)} g|_u.

#include <cstddef>
#include <deque>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "madic/symops.hpp"

namespace madic {

class SpinalGroup;

/// A vertex of the tree: a word over X, the empty word being the root.
using Vertex = std::vector<Letter>;

/// Digits ("021"), or comma separated letters for m > 10. "" and "-" are the root.
Vertex parse_vertex(std::string_view text, std::size_t m);
std::string to_string(const Vertex& v, std::size_t m);

/// Rank of v among the words of its length (first letter most significant).
std::size_t vertex_rank(const Vertex& v, std::size_t m);
Vertex vertex_from_rank(std::size_t rank, std::size_t length, std::size_t m);

/// Label at the root only.
struct Rooted {
  Perm perm;
  friend bool operator==(const Rooted&, const Rooted&) = default;
};

/// The directed automorphism of element `element` of directed group `datum`
/// with defining sequence shifted `shift` times. Its section on the path is the
/// same element shifted once more; off the path its sections are rooted.
struct Directed {
  std::shared_ptr<const SpinalGroup> group;
  std::size_t datum = 0;
  std::size_t element = 0;
  std::size_t shift = 0;
  friend bool operator==(const Directed& a, const Directed& b) {
    return a.group == b.group && a.datum == b.datum && a.element == b.element &&
           a.shift == b.shift;
  }
};

/// κ(σ): every label equals σ.
struct ConstantPortrait {
  Perm perm;
  friend bool operator==(const ConstantPortrait&, const ConstantPortrait&) = default;
};

using Generator = std::variant<Rooted, Directed, ConstantPortrait>;

std::size_t degree_of(const Generator& g);
Generator inverse(const Generator& g);
bool is_trivial(const Generator& g);

/// A product of generators, applied right to left. Generators are closed under
/// inversion, so a factor with exponent −1 is stored as the inverse generator.
/// Words are kept as written; only sections are tidied (identity factors dropped,
/// adjacent rooted factors multiplied out).
class Element {
 public:
  explicit Element(std::size_t m) : m_(m) {}
  Element(std::size_t m, std::vector<Generator> factors);

  static Element identity(std::size_t m) { return Element(m); }
  static Element rooted(const Perm& p);
  static Element constant_portrait(const Perm& p);
  static Element directed(std::shared_ptr<const SpinalGroup> group, std::size_t datum,
                          std::size_t element, std::size_t shift = 0);

  std::size_t degree() const noexcept { return m_; }
  const std::vector<Generator>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  Element inverse() const;
  Element pow(long long k) const;

  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element&, const Element&) = default;

  std::size_t hash() const noexcept;

 private:
  std::size_t m_;
  std::vector<Generator> factors_;
};

/// f⁻¹·g·f.
Element conjugate(const Element& g, const Element& f);

/// Generic textual form; rooted factors in cycle notation, directed factors by
/// their group's generator names, constant portraits as k(σ).
std::string to_string(const Element& g);

Perm root_label(const Element& g);
Perm label(const Element& g, const Vertex& u);
Element section(const Element& g, Letter x);
Element section(const Element& g, const Vertex& u);
Vertex apply(const Element& g, const Vertex& v);

/// κ(σ); κ(id) is the empty word.
Element kappa(const Perm& sigma);

struct ElementHash {
  std::size_t operator()(const Element& g) const noexcept { return g.hash(); }
};

/// Interned section states with lazily computed first-level sections. One per
/// computation; not shared across threads.
class SectionCache {
 public:
  std::size_t intern(const Element& g);
  const Element& element(std::size_t id) const { return states_[id].element; }
  const Perm& label(std::size_t id) const { return states_[id].label; }
  std::size_t child(std::size_t id, Letter x);
  std::size_t size() const noexcept { return states_.size(); }

 private:
  struct State {
    Element element;
    Perm label;
    std::vector<std::size_t> children;  // empty until expanded
  };
  std::deque<State> states_;
  std::unordered_map<Element, std::size_t, ElementHash> ids_;
};

inline constexpr std::size_t kDefaultMaxPortraitLabels = 1'000'000;

/// Labels of every vertex of length < depth, in level order and rank order
/// within a level.
class Portrait {
 public:
  Portrait(std::size_t m, std::size_t depth, std::vector<Perm> labels);

  std::size_t degree() const noexcept { return m_; }
  std::size_t depth() const noexcept { return depth_; }
  const std::vector<Perm>& labels() const noexcept { return labels_; }
  const Perm& at(const Vertex& u) const;
  /// Action on a word of length ≤ depth.
  Vertex apply(const Vertex& v) const;

  friend bool operator==(const Portrait&, const Portrait&) = default;

 private:
  std::size_t m_;
  std::size_t depth_;
  std::vector<Perm> labels_;
};

/// Number of vertices of length < depth; throws CapExceeded above `cap`.
std::size_t portrait_size(std::size_t m, std::size_t depth, std::size_t cap);

Portrait portrait(const Element& g, std::size_t depth,
                  std::size_t max_labels = kDefaultMaxPortraitLabels);
bool equal_to_depth(const Element& g, const Element& h, std::size_t depth);

/// "m=3 depth=2" header, then one "<vertex> <one-line label>" line per vertex
/// in level order; the root is written as "-".
std::string to_text(const Portrait& p);
/// digraph with one node per vertex (name = word) labelled by its permutation.
std::string to_dot(const Portrait& p);

}  // namespace madic

template <>
struct std::hash<madic::Element> {
  std::size_t operator()(const madic::Element& g) const noexcept { return g.hash(); }
};
