#pragma once

// Defining data of polyspinal groups: a rooted group R and r directed groups,
// each given along a constant path x by an eventually periodic sequence of
// homomorphisms ω_n : D → Sym(X)^{X∖{x}}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "madic/symops.hpp"
#include "madic/tree_core.hpp"
#include "madic/zmod_linalg.hpp"

namespace madic {

/// Value of ω_n on each generator symbol: m−1 permutations, one per position
/// of X∖{path} in ascending order.
using GenMap = std::map<std::string, std::vector<Perm>>;

struct DirectedDatum {
  Letter path = 0;
  std::vector<std::string> generators;
  std::vector<GenMap> preperiod;
  std::vector<GenMap> period;

  std::size_t cycle_length() const noexcept { return preperiod.size() + period.size(); }
  /// Sequence index of ω_{n+1} reduced into [0, cycle_length()).
  std::size_t normalize(std::size_t n) const;
  /// ω_{index+1} for a reduced index.
  const GenMap& at(std::size_t index) const;

  friend bool operator==(const DirectedDatum&, const DirectedDatum&) = default;
};

struct PolyspinalData {
  std::size_t m = 0;
  std::vector<Perm> rooted;
  std::vector<DirectedDatum> directed;

  friend bool operator==(const PolyspinalData&, const PolyspinalData&) = default;
};

/// Structural checks only (degrees, tuple lengths, distinct paths, nonempty
/// periods). Throws Error. Group-theoretic validity is `validate`.
void check_syntax(const PolyspinalData& data);

/// Same rooted group (as generated subgroups) and identical directed data.
bool equivalent(const PolyspinalData& a, const PolyspinalData& b);

/// Exponent matrix of a multi-GGS group: E(x−1, j) is the exponent of the
/// standard cycle labelling generator j at position x ∈ X∖{0}.
struct MultiGGSData {
  ZmodMatrix E;

  std::size_t degree() const noexcept { return E.modulus(); }
  std::size_t rank() const noexcept { return E.cols(); }
};

/// Reasons E is not a valid multi-GGS matrix; empty when valid.
std::vector<std::string> multi_ggs_problems(const ZmodMatrix& E);

inline constexpr std::size_t kDefaultDirectedCap = 10'000;

/// A directed group realized as its faithful tuple embedding over one
/// preperiod+period cycle. Element 0 is the identity.
class DirectedGroup {
 public:
  DirectedGroup(const DirectedDatum& datum, std::size_t m, std::size_t cap);

  std::size_t order() const noexcept { return tuples_.size(); }
  Letter path() const noexcept { return path_; }
  std::size_t preperiod() const noexcept { return preperiod_; }
  std::size_t period() const noexcept { return period_; }
  std::size_t cycle_length() const noexcept { return preperiod_ + period_; }
  std::size_t normalize_shift(std::size_t n) const;

  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }

  /// ω_{index+1}(e) at position y ≠ path, index already reduced.
  const Perm& label(std::size_t e, std::size_t index, Letter y) const;
  /// All m−1 entries of ω_{index+1}(e).
  std::span<const Perm> tuple_at(std::size_t e, std::size_t index) const;

  /// Least (shift, element) defining the same automorphism as (shift, e).
  std::pair<std::size_t, std::size_t> canonical(std::size_t e, std::size_t shift) const;
  /// True iff every coordinate from `shift` on is trivial.
  bool acts_trivially(std::size_t e, std::size_t shift) const;

  /// Element with the given full tuple, if present.
  std::optional<std::size_t> find(std::span<const Perm> tuple) const;
  /// Shortest word in the generators (indices into generators()).
  const std::vector<std::size_t>& word(std::size_t e) const { return words_[e]; }

 private:
  std::string key(std::span<const Perm> perms) const;

  std::size_t m_;
  Letter path_;
  std::size_t preperiod_;
  std::size_t period_;
  std::vector<std::string> names_;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<Perm>> tuples_;  // cycle_length × (m−1), flattened
  std::vector<std::size_t> inverses_;
  std::vector<std::vector<std::size_t>> words_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> canonical_;  // [shift][e]
  std::vector<std::uint32_t> table_;  // order × order, small groups only
};

/// A polyspinal group with its directed groups enumerated. Directed generators
/// of Elements keep the group alive.
class SpinalGroup : public std::enable_shared_from_this<SpinalGroup> {
  struct Passkey {};

 public:
  SpinalGroup(Passkey, PolyspinalData data, std::size_t cap);

  /// Throws CapExceeded when a directed group exceeds `cap` elements.
  static std::shared_ptr<const SpinalGroup> create(PolyspinalData data,
                                                   std::size_t cap = kDefaultDirectedCap);

  const PolyspinalData& data() const noexcept { return data_; }
  std::size_t degree() const noexcept { return data_.m; }
  std::size_t directed_count() const noexcept { return groups_.size(); }
  const DirectedGroup& directed_group(std::size_t i) const { return groups_.at(i); }

  Element directed(std::size_t datum, std::size_t element, std::size_t shift = 0) const;

  /// Rooted generators first, then the directed generators datum by datum.
  std::vector<Element> generators() const;
  std::vector<std::string> generator_names() const;
  std::size_t rooted_generator_count() const noexcept { return data_.rooted.size(); }

  /// Words like "a*b^-1*c" or "a b c^2"; "1" is the identity.
  Element parse_word(std::string_view text) const;
  /// Names from this group where possible, cycle notation otherwise.
  std::string format(const Element& g) const;
  std::string format_directed(std::size_t datum, std::size_t element, std::size_t shift) const;

  /// First-level label of a directed factor at y (identity on the path).
  Perm directed_label(std::size_t datum, std::size_t element, std::size_t shift, Letter y) const;
  /// Canonical (element, shift) after moving one step down the path.
  std::pair<std::size_t, std::size_t> advance(std::size_t datum, std::size_t element,
                                              std::size_t shift) const;
  /// Canonical (element, shift) for the given one.
  std::pair<std::size_t, std::size_t> canonical(std::size_t datum, std::size_t element,
                                                std::size_t shift) const;

  /// Elements of σⁿR: R itself for n = 0, the group generated by the level-n
  /// labels of all directed groups otherwise.
  const std::vector<Perm>& rooted_companion(std::size_t n) const;

 private:
  PolyspinalData data_;
  std::vector<DirectedGroup> groups_;
  std::vector<std::string> rooted_names_;
  mutable std::map<std::size_t, std::vector<Perm>> companions_;
};

// ---------------------------------------------------------------------------
// Validation, shifting and recognition.

enum class Validity { Valid, Invalid, Inconclusive };

struct DatumReport {
  Letter path = 0;
  std::optional<std::size_t> order;  // |D|, when enumerated within the cap
  bool transitive = false;           // every ω_n's labels act transitively
  bool faithful = false;             // every tail projection injective
  std::vector<std::string> problems;
};

struct ValidityReport {
  Validity status = Validity::Valid;
  std::vector<DatumReport> data;
  std::vector<std::string> problems;
  std::vector<std::string> warnings;

  bool valid() const noexcept { return status == Validity::Valid; }
  /// "valid, r=2, |D0|=3, |D1|=3" or "invalid: ..." / "inconclusive: ...".
  std::string summary() const;
};

ValidityReport validate(const PolyspinalData& data, std::size_t cap = kDefaultDirectedCap);

/// The n-th shifted companion σⁿG.
PolyspinalData shift(const PolyspinalData& data, std::size_t n);

struct NotMultiGGS {
  std::string reason;
};

/// Exponent matrix in path-relative coordinates (path moved to 0 by a
/// translation), or the reason the data is not multi-GGS.
std::variant<MultiGGSData, NotMultiGGS> as_multi_ggs(const PolyspinalData& data);

/// Exponent matrix of one directed datum of multi-EGS data, rows indexed by
/// offsets t = 1..m−1 from the path. nullopt when some label is not in A_m or
/// ω is not constant.
std::optional<ZmodMatrix> relative_exponents(const PolyspinalData& data, std::size_t datum);

/// Data of κ(τ)⁻¹ G κ(τ).
PolyspinalData conjugate_by_constant(const PolyspinalData& data, const Perm& tau);

// ---------------------------------------------------------------------------
// Fixtures.

PolyspinalData grigorchuk();
PolyspinalData gupta_sidki();
PolyspinalData pervova();
/// GGS group with defining vector e of length m−1.
PolyspinalData ggs(const std::vector<Residue>& e);
PolyspinalData ggs(const std::vector<Residue>& e, std::size_t m);
PolyspinalData multi_ggs(const ZmodMatrix& E);
PolyspinalData multi_ggs(const MultiGGSData& data);

/// grigorchuk, gupta_sidki, pervova.
std::optional<PolyspinalData> fixture(std::string_view name);

// ---------------------------------------------------------------------------
// JSON group specs.

using GroupSpec = std::variant<PolyspinalData, MultiGGSData>;

/// Strict: unknown keys are rejected. Throws ParseError.
GroupSpec parse_group_spec(const nlohmann::json& j);
GroupSpec parse_group_spec(std::string_view text);
PolyspinalData to_polyspinal(const GroupSpec& spec);
nlohmann::json to_json(const PolyspinalData& data);
nlohmann::json to_json(const MultiGGSData& data);

// ---------------------------------------------------------------------------
// Random words.

/// Uniform word of the given length over generators and their inverses.
Element random_word(const SpinalGroup& group, std::mt19937_64& rng, std::size_t length);

/// Random word whose syllable form has exactly `syllables` syllables.
Element random_syllable_word(const SpinalGroup& group, std::mt19937_64& rng,
                             std::size_t syllables);

}  // namespace madic
