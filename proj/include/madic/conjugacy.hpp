#pragma once

// Conjugacy of multi-GGS groups inside Aut T, with explicit witnesses, and
// finite searches refuting the necessary conditions for spinal and multi-EGS
// pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "madic/spinal.hpp"
#include "madic/symops.hpp"
#include "madic/tree_core.hpp"
#include "madic/zmod_linalg.hpp"

namespace madic {

struct ConjugateWitness {
  UnitResidue u;
  /// M with E_A = P_u·E_B·M, P_u the row relabelling x ↦ u·x.
  ZmodMatrix iota;
  /// κ with κ⁻¹·G_A·κ = G_B.
  Element kappa;
  std::size_t verified_depth = 0;  // 0 when verification was skipped
};

/// Column spans of E_A and P_u·E_B for one unit; they differ.
struct UnitFailure {
  UnitResidue u;
  CanonicalSubmodule span_a;
  CanonicalSubmodule span_b;
};

struct Conjugate {
  ConjugateWitness witness;
};
struct NotConjugate {
  std::string reason;
  std::vector<UnitFailure> units;
};
struct Refuted {
  std::optional<std::size_t> level;
  std::string detail;
};
struct Consistent {
  /// (level or datum index, number of solutions found there).
  std::vector<std::pair<std::size_t, std::size_t>> solutions;
  std::string detail;
};
struct Inconclusive {
  std::string reason;
};

using Verdict = std::variant<Conjugate, NotConjugate, Refuted, Consistent, Inconclusive>;

/// "Conjugate", "NotConjugate", "Refuted", "Consistent" or "Inconclusive".
std::string outcome_name(const Verdict& v);
/// 0 for Conjugate/Consistent, 1 for NotConjugate/Refuted, 2 otherwise.
int exit_code(const Verdict& v);

inline constexpr std::size_t kMaxDeciderDegree = 64;

/// Conjugate iff some unit u makes the column spans
/// of E_A and P_u·E_B equal. Conjugate witnesses are verified to
/// `verify_depth` unless it is 0. Throws on degree mismatch or invalid data.
Verdict decide_multi_ggs(const MultiGGSData& a, const MultiGGSData& b, std::size_t verify_depth);

/// κ(unit_perm(u)).
Element build_kappa_witness(const UnitResidue& u);

/// Images in B of the generators of multi_ggs(A) (rooted first) under the
/// correspondence g ↦ κ⁻¹gκ for κ = build_kappa_witness(u⁻¹).
std::vector<Element> multi_ggs_correspondence(const SpinalGroup& b, const UnitResidue& u,
                                              const ZmodMatrix& iota);

/// equal_to_depth(f⁻¹·g·f, iota[i], depth) for every generator g = A.generators()[i].
bool verify_witness(const SpinalGroup& a, const SpinalGroup& b, const Element& f,
                    const std::vector<Element>& iota, std::size_t depth);

struct RefuterCaps {
  std::size_t max_degree = 6;
  std::size_t max_directed_order = 81;
  std::size_t max_isomorphism_candidates = 1'000'000;
};

/// Searches, for each isomorphism ι: D → D̃ and each level n in [first, last]
/// past both preperiods, for a factorization ω_n = φ_n ∘ ρ_n ∘ α_n ∘ ω̃_n ∘ ι.
/// Refuted when every ι fails at some such level.
Verdict refute_spinal_necessary(const PolyspinalData& a, const PolyspinalData& b,
                                std::size_t first, std::size_t last, RefuterCaps caps = {});

/// Every directed datum of A needs one of B with the same rank whose defining
/// matrix has the same column span after a unit relabelling.
Verdict refute_multi_egs_necessary(const PolyspinalData& a, const PolyspinalData& b);

/// All level-n labels of f lie in one right coset of σⁿR. Needs depth ≥ n+1.
bool coset_congruence_check(const Portrait& f, const PolyspinalData& data, std::size_t n);

}  // namespace madic
