#include "madic/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "madic/error.hpp"

namespace madic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

Perm transposition(std::size_t m, Letter x, Letter y) {
  std::vector<Letter> images(m);
  for (Letter z = 0; z < m; ++z) images[z] = z;
  std::swap(images[x], images[y]);
  return Perm(std::move(images));
}

std::size_t element_order(const DirectedGroup& g, std::size_t e) {
  std::size_t k = 1;
  for (std::size_t p = e; p != 0; p = g.multiply(p, e)) ++k;
  return e == 0 ? 1 : k - 1;
}

// Isomorphisms D → D̃ as element maps; nullopt when the candidate count
// exceeds the cap.
std::optional<std::vector<std::vector<std::size_t>>> isomorphisms(const DirectedGroup& d,
                                                                  const DirectedGroup& t,
                                                                  std::size_t cap) {
  std::vector<std::vector<std::size_t>> result;
  if (d.order() != t.order()) return result;
  const auto& gens = d.generators();
  std::vector<std::size_t> t_orders(t.order());
  for (std::size_t e = 0; e < t.order(); ++e) t_orders[e] = element_order(t, e);
  std::vector<std::vector<std::size_t>> candidates;
  std::size_t total = 1;
  for (std::size_t g : gens) {
    const std::size_t order = element_order(d, g);
    std::vector<std::size_t> c;
    for (std::size_t e = 0; e < t.order(); ++e) {
      if (t_orders[e] == order) c.push_back(e);
    }
    if (c.empty()) return result;
    if (total > cap / c.size()) return std::nullopt;
    total *= c.size();
    candidates.push_back(std::move(c));
  }

  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<std::size_t> images(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][choice[i]];
    std::vector<std::size_t> phi(d.order());
    for (std::size_t e = 0; e < d.order(); ++e) {
      std::size_t x = 0;
      for (std::size_t g : d.word(e)) x = t.multiply(x, images[g]);
      phi[e] = x;
    }
    bool ok = std::set<std::size_t>(phi.begin(), phi.end()).size() == phi.size();
    for (std::size_t e = 0; e < d.order() && ok; ++e) {
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        ok = phi[d.multiply(e, gens[i])] == t.multiply(phi[e], images[i]);
      }
    }
    if (ok) result.push_back(std::move(phi));
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == candidates[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return result;
}

// Perfect matching in the bipartite graph allowed[x][y].
bool has_perfect_matching(const std::vector<std::vector<bool>>& allowed) {
  const std::size_t n = allowed.size();
  std::vector<int> match(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t v) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!allowed[v][y] || used[y]) continue;
        used[y] = true;
        if (match[y] < 0 || augment(static_cast<std::size_t>(match[y]))) {
          match[y] = static_cast<int>(v);
          return true;
        }
      }
      return false;
    };
    if (!augment(x)) return false;
  }
  return true;
}

}  // namespace

std::string outcome_name(const Verdict& v) {
  return std::visit(Overloaded{
                        [](const Conjugate&) { return std::string("Conjugate"); },
                        [](const NotConjugate&) { return std::string("NotConjugate"); },
                        [](const Refuted&) { return std::string("Refuted"); },
                        [](const Consistent&) { return std::string("Consistent"); },
                        [](const Inconclusive&) { return std::string("Inconclusive"); },
                    },
                    v);
}

int exit_code(const Verdict& v) {
  if (std::holds_alternative<Conjugate>(v) || std::holds_alternative<Consistent>(v)) return 0;
  if (std::holds_alternative<NotConjugate>(v) || std::holds_alternative<Refuted>(v)) return 1;
  return 2;
}

Element build_kappa_witness(const UnitResidue& u) { return kappa(unit_perm(u)); }

std::vector<Element> multi_ggs_correspondence(const SpinalGroup& b, const UnitResidue& u,
                                              const ZmodMatrix& iota) {
  const std::size_t m = b.degree();
  const auto& dg = b.directed_group(0);
  std::vector<Element> images;
  images.push_back(Element::rooted(standard_cycle(m).pow(static_cast<long long>(u.value()))));
  const ZmodMatrix scaled = iota.scaled(static_cast<Residue>(u.value()));
  if (scaled.rows() != dg.generators().size()) throw DegreeMismatch("iota does not fit B");
  for (std::size_t j = 0; j < scaled.cols(); ++j) {
    std::size_t e = 0;
    for (std::size_t k = 0; k < scaled.rows(); ++k) {
      for (Residue p = 0; p < scaled(k, j); ++p) e = dg.multiply(e, dg.generators()[k]);
    }
    images.push_back(b.directed(0, e));
  }
  return images;
}

bool verify_witness(const SpinalGroup& a, const SpinalGroup& b, const Element& f,
                    const std::vector<Element>& iota, std::size_t depth) {
  if (a.degree() != b.degree() || f.degree() != a.degree()) {
    throw DegreeMismatch("witness on a different tree");
  }
  const auto gens = a.generators();
  if (gens.size() != iota.size()) throw Error("iota must give one image per generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!equal_to_depth(conjugate(gens[i], f), iota[i], depth)) return false;
  }
  return true;
}

Verdict decide_multi_ggs(const MultiGGSData& a, const MultiGGSData& b, std::size_t verify_depth) {
  const std::size_t m = a.degree();
  if (m != b.degree()) throw DegreeMismatch("multi-GGS groups on different trees");
  if (m > kMaxDeciderDegree) {
    return Inconclusive{"m=" + std::to_string(m) + " exceeds " + std::to_string(kMaxDeciderDegree)};
  }
  for (const auto* d : {&a, &b}) {
    const auto problems = multi_ggs_problems(d->E);
    if (!problems.empty()) throw Error("invalid multi-GGS data: " + join(problems, "; "));
  }
  const auto span_a = howell(a.E.transpose());
  NotConjugate failure;
  // A pure relabelling (M = 1) is preferred; otherwise the least unit.
  std::optional<std::pair<UnitResidue, ZmodMatrix>> chosen;
  for (const auto& u : units(m)) {
    const ZmodMatrix pb = permute_coords(b.E, unit_perm(u));
    auto span_b = howell(pb.transpose());
    if (a.rank() != b.rank() || !(span_a == span_b)) {
      failure.units.push_back(UnitFailure{u, span_a, std::move(span_b)});
      continue;
    }
    const auto M = solve_right(a.E, pb);
    if (!M || !is_invertible(*M)) throw Error("equal spans without an invertible solution");
    if (!chosen) chosen.emplace(u, *M);
    if (*M == ZmodMatrix::identity(m, a.rank())) {
      chosen.emplace(u, *M);
      break;
    }
  }
  if (chosen) {
    const auto& [u, M] = *chosen;
    ConjugateWitness w{u, M, build_kappa_witness(u.inverse()), 0};
    if (verify_depth > 0) {
      const auto ga = SpinalGroup::create(multi_ggs(a));
      const auto gb = SpinalGroup::create(multi_ggs(b));
      const auto images = multi_ggs_correspondence(*gb, u, M);
      if (!verify_witness(*ga, *gb, w.kappa, images, verify_depth)) {
        return Inconclusive{"witness for u=" + std::to_string(u.value()) +
                            " failed verification at depth " + std::to_string(verify_depth)};
      }
      w.verified_depth = verify_depth;
    }
    return Conjugate{std::move(w)};
  }
  failure.reason = a.rank() != b.rank()
                       ? "ranks differ (" + std::to_string(a.rank()) + " vs " +
                             std::to_string(b.rank()) + ")"
                       : "no unit relabelling matches the column spans";
  return failure;
}

Verdict refute_spinal_necessary(const PolyspinalData& a, const PolyspinalData& b,
                                std::size_t first, std::size_t last, RefuterCaps caps) {
  const std::size_t m = a.m;
  if (m != b.m) throw DegreeMismatch("groups on different trees");
  if (a.directed.size() != 1 || b.directed.size() != 1) {
    return Inconclusive{"both groups must be spinal (one directed group)"};
  }
  if (m > caps.max_degree) {
    return Inconclusive{"m=" + std::to_string(m) + " exceeds the search cap " +
                        std::to_string(caps.max_degree)};
  }
  if (first == 0 || first > last) throw Error("window must be a range of levels n >= 1");

  // Move both paths to 0.
  auto normalized = [&](const PolyspinalData& d) {
    const Letter x = d.directed[0].path;
    return x == 0 ? d : conjugate_by_constant(d, transposition(m, 0, x));
  };
  std::shared_ptr<const SpinalGroup> ga, gb;
  try {
    ga = SpinalGroup::create(normalized(a), caps.max_directed_order);
    gb = SpinalGroup::create(normalized(b), caps.max_directed_order);
  } catch (const CapExceeded& e) {
    return Inconclusive{std::string("directed group beyond the search cap: ") + e.what()};
  }
  const auto& da = ga->directed_group(0);
  const auto& db = gb->directed_group(0);
  if (da.order() != db.order()) {
    return Refuted{std::nullopt, "directed groups have different orders (" +
                                     std::to_string(da.order()) + " vs " +
                                     std::to_string(db.order()) + ")"};
  }
  const auto isos = isomorphisms(da, db, caps.max_isomorphism_candidates);
  if (!isos) return Inconclusive{"too many candidate isomorphisms"};
  if (isos->empty()) return Refuted{std::nullopt, "directed groups are not isomorphic"};

  const std::size_t start = std::max(first, std::max(da.preperiod(), db.preperiod()) + 1);
  if (start > last) return Inconclusive{"window lies inside a preperiod"};

  const auto stabilizer = point_stabilizer(m, 0);
  std::vector<std::size_t> survivors(isos->size());
  for (std::size_t i = 0; i < survivors.size(); ++i) survivors[i] = i;
  Consistent table;

  for (std::size_t n = start; n <= last; ++n) {
    const auto& ra = ga->rooted_companion(n);
    const auto& rb = gb->rooted_companion(n);
    std::vector<Perm> hs;
    for (const auto& h : stabilizer) {
      std::vector<Perm> conj;
      for (const auto& r : rb) conj.push_back(conjugate(r, h));
      std::sort(conj.begin(), conj.end());
      if (conj == ra) hs.push_back(h);
    }
    const std::size_t ia = da.normalize_shift(n - 1);
    const std::size_t ib = db.normalize_shift(n - 1);

    std::vector<std::size_t> kept;
    for (std::size_t s : survivors) {
      const auto& phi = (*isos)[s];
      bool solved = false;
      for (const auto& h : hs) {
        // allowed[x-1][y-1]: some r ∈ σⁿR̃ makes coordinate x of ω_n match
        // coordinate y of ω̃_n ∘ ι for every generator.
        std::vector<std::vector<bool>> allowed(m - 1, std::vector<bool>(m - 1, false));
        for (std::size_t x = 0; x + 1 < m; ++x) {
          for (std::size_t y = 0; y + 1 < m; ++y) {
            for (const auto& r : rb) {
              const Perm c = compose(r, h);
              bool all = true;
              for (std::size_t g : da.generators()) {
                if (da.tuple_at(g, ia)[x] != conjugate(db.tuple_at(phi[g], ib)[y], c)) {
                  all = false;
                  break;
                }
              }
              if (all) {
                allowed[x][y] = true;
                break;
              }
            }
          }
        }
        if (has_perfect_matching(allowed)) {
          solved = true;
          break;
        }
      }
      if (solved) kept.push_back(s);
    }
    table.solutions.emplace_back(n, kept.size());
    if (kept.empty()) {
      return Refuted{n, "no isomorphism of the directed groups admits a factorization at level " +
                            std::to_string(n) + " (" + std::to_string(isos->size()) +
                            " isomorphisms tried)"};
    }
    survivors = std::move(kept);
  }
  table.detail = std::to_string(survivors.size()) + " of " + std::to_string(isos->size()) +
                 " isomorphisms admit factorizations at every level of the window";
  return table;
}

Verdict refute_multi_egs_necessary(const PolyspinalData& a, const PolyspinalData& b) {
  const std::size_t m = a.m;
  if (m != b.m) throw DegreeMismatch("groups on different trees");
  const std::vector<Perm> cycle{standard_cycle(m)};
  const auto am = generate_group(cycle, m);

  struct Datum {
    CanonicalSubmodule span;
    std::size_t rank;
    ZmodMatrix E;
  };
  std::vector<std::vector<Datum>> data(2);
  const PolyspinalData* inputs[] = {&a, &b};
  for (int side = 0; side < 2; ++side) {
    const auto& d = *inputs[side];
    const std::string name = side == 0 ? "first" : "second";
    if (generate_group(d.rooted, m) != am) {
      return Inconclusive{name + " group: rooted group is not generated by the standard cycle"};
    }
    for (std::size_t i = 0; i < d.directed.size(); ++i) {
      auto E = relative_exponents(d, i);
      if (!E) {
        return Inconclusive{name + " group: directed datum " + std::to_string(i) +
                            " is not constant with labels in A_m"};
      }
      auto span = howell(E->transpose());
      const auto rank = span.free_rank();
      if (!rank) {
        return Inconclusive{name + " group: directed datum " + std::to_string(i) +
                            " is not a power of C_m"};
      }
      data[side].push_back(Datum{std::move(span), *rank, std::move(*E)});
    }
  }

  Consistent result;
  for (std::size_t i = 0; i < data[0].size(); ++i) {
    const auto& di = data[0][i];
    std::size_t matches = 0;
    bool rank_found = false;
    for (const auto& dj : data[1]) {
      if (dj.rank != di.rank) continue;
      rank_found = true;
      for (const auto& u : units(m)) {
        if (howell(permute_coords(dj.E, unit_perm(u)).transpose()) == di.span) ++matches;
      }
    }
    if (matches == 0) {
      const std::string why =
          rank_found ? "no directed datum of the second group of rank " + std::to_string(di.rank) +
                           " has the same image up to a unit relabelling"
                     : "no directed datum of the second group has rank " + std::to_string(di.rank);
      return Refuted{std::nullopt, "datum " + std::to_string(i) + ": " + why};
    }
    result.solutions.emplace_back(i, matches);
  }
  result.detail = "every directed datum has a counterpart";
  return result;
}

bool coset_congruence_check(const Portrait& f, const PolyspinalData& data, std::size_t n) {
  if (f.degree() != data.m) throw DegreeMismatch("portrait on a different tree");
  if (f.depth() < n + 1) {
    throw Error("portrait of depth " + std::to_string(f.depth()) + " does not reach level " +
                std::to_string(n));
  }
  const auto group = SpinalGroup::create(data);
  const auto& companion = group->rooted_companion(n);
  std::size_t width = 1;
  for (std::size_t i = 0; i < n; ++i) width *= data.m;
  const Perm first_inv = f.at(vertex_from_rank(0, n, data.m)).inverse();
  for (std::size_t r = 1; r < width; ++r) {
    const Perm q = compose(f.at(vertex_from_rank(r, n, data.m)), first_inv);
    if (!std::binary_search(companion.begin(), companion.end(), q)) return false;
  }
  return true;
}

}  // namespace madic
