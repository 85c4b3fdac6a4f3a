#pragma once

// Syllable normal forms of polyspinal words, the word problem and nuclei.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "madic/spinal.hpp"
#include "madic/tree_core.hpp"

namespace madic {

/// r·d·r⁻¹ for the directed element (element, shift) of datum `datum`.
struct Syllable {
  std::size_t datum = 0;
  std::size_t element = 0;
  std::size_t shift = 0;
  Perm conjugator;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// g = (∏ r_j d_j r_j⁻¹)·tail. Adjacent syllables never share both datum and
/// conjugator, and no syllable is trivial.
struct SyllableForm {
  std::shared_ptr<const SpinalGroup> group;  // null when there are no syllables
  std::size_t m = 0;
  std::vector<Syllable> syllables;
  Perm tail;

  std::size_t length() const noexcept { return syllables.size(); }
  bool is_rooted() const noexcept { return syllables.empty(); }

  friend bool operator==(const SyllableForm& a, const SyllableForm& b) {
    return a.m == b.m && a.syllables == b.syllables && a.tail == b.tail;
  }
  std::size_t hash() const noexcept;
};

struct SyllableFormHash {
  std::size_t operator()(const SyllableForm& f) const noexcept { return f.hash(); }
};

/// Throws Error on constant-portrait factors or directed factors from two groups.
SyllableForm to_syllable_form(const Element& g);
Element to_element(const SyllableForm& f);
/// "[(b, a), (c, 1)] tail 1", using the group's generator names.
std::string to_string(const SyllableForm& f);

SyllableForm syllable_section(const SyllableForm& f, Letter y);
SyllableForm syllable_sections(const SyllableForm& f, const Vertex& u);

enum class Truth { False, True, Inconclusive };
std::string to_string(Truth t);

inline constexpr std::size_t kDefaultWordProblemStates = 100'000;

struct WordProblemResult {
  Truth truth = Truth::Inconclusive;
  std::size_t states = 0;  // distinct section states explored
  std::size_t depth = 0;   // deepest level reached
  std::vector<std::string> trace;
};

/// Exact: explores every distinct syllable-form section of g. The state space
/// is finite, so the cap only guards resources.
WordProblemResult solve_word_problem(const Element& g,
                                     std::size_t max_states = kDefaultWordProblemStates,
                                     bool trace = false);
Truth is_identity(const Element& g, std::size_t max_states = kDefaultWordProblemStates);
Truth equal(const Element& g, const Element& h,
            std::size_t max_states = kDefaultWordProblemStates);

struct NucleusResult {
  std::vector<Element> elements;
  bool exceeded = false;
  bool inconclusive = false;  // some equality test hit the word-problem cap
};

/// Closure of generators, inverses and 1 under first-level sections of
/// pairwise products. Elements are in discovery order.
NucleusResult nucleus(const PolyspinalData& data, std::size_t cap);

struct SelftestReport {
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::size_t deepest = 0;  // largest level needed
  std::vector<std::string> failures;
};

/// For random words, looks for a level n ≤ depth at which every section is
/// portrait-equal (to depth 3) to an element of σⁿR or of some σⁿD.
SelftestReport reducing_selftest(const PolyspinalData& data, std::size_t samples,
                                 std::size_t depth, std::uint64_t seed);

}  // namespace madic
