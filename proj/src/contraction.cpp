#include "madic/contraction.hpp"

#include <deque>
#include <set>
#include <unordered_set>

#include "madic/error.hpp"

namespace madic {

namespace {

constexpr std::size_t kTraceLines = 200;
constexpr std::size_t kSelftestPortraitDepth = 3;

// Some element at shift `target` equal to (e, shift) as an automorphism.
std::optional<std::size_t> realize(const DirectedGroup& dg, std::size_t e, std::size_t shift,
                                   std::size_t target) {
  if (shift == target) return e;
  const auto want = dg.canonical(e, shift);
  for (std::size_t c = 0; c < dg.order(); ++c) {
    if (dg.canonical(c, target) == want) return c;
  }
  return std::nullopt;
}

void push(SyllableForm& f, Syllable s) {
  const auto& dg = f.group->directed_group(s.datum);
  s.shift = dg.normalize_shift(s.shift);
  if (dg.acts_trivially(s.element, s.shift)) return;
  if (!f.syllables.empty()) {
    Syllable& top = f.syllables.back();
    if (top.datum == s.datum && top.conjugator == s.conjugator) {
      bool merged = false;
      if (auto e = realize(dg, s.element, s.shift, top.shift)) {
        top.element = dg.multiply(top.element, *e);
        merged = true;
      } else if (auto t = realize(dg, top.element, top.shift, s.shift)) {
        top.element = dg.multiply(*t, s.element);
        top.shift = s.shift;
        merged = true;
      }
      if (merged) {
        if (dg.acts_trivially(top.element, top.shift)) f.syllables.pop_back();
        return;
      }
    }
  }
  f.syllables.push_back(std::move(s));
}

}  // namespace

std::size_t SyllableForm::hash() const noexcept {
  std::size_t h = tail.hash();
  for (const auto& s : syllables) {
    h = h * 1000003ULL ^ (s.datum * 7919 + s.element * 31 + s.shift);
    h = h * 1000003ULL ^ s.conjugator.hash();
  }
  return h;
}

SyllableForm to_syllable_form(const Element& g) {
  const std::size_t m = g.degree();
  SyllableForm f;
  f.m = m;
  Perm prefix = Perm::identity(m);
  for (const auto& factor : g.factors()) {
    if (const auto* r = std::get_if<Rooted>(&factor)) {
      prefix = compose(prefix, r->perm);
    } else if (const auto* d = std::get_if<Directed>(&factor)) {
      if (!f.group) {
        f.group = d->group;
      } else if (f.group != d->group) {
        throw Error("word mixes generators of different groups");
      }
      push(f, Syllable{d->datum, d->element, d->shift, prefix});
    } else {
      throw Error("constant portraits have no syllable form");
    }
  }
  f.tail = prefix;
  return f;
}

Element to_element(const SyllableForm& f) {
  // r_1 d_1 (r_1⁻¹ r_2) d_2 ... (r_k⁻¹ tail)
  std::vector<Generator> factors;
  Perm current = Perm::identity(f.m);
  auto move_to = [&](const Perm& target) {
    const Perm step = compose(current.inverse(), target);
    if (!step.is_identity()) factors.emplace_back(Rooted{step});
    current = target;
  };
  for (const auto& s : f.syllables) {
    move_to(s.conjugator);
    factors.emplace_back(Directed{f.group, s.datum, s.element, s.shift});
  }
  move_to(f.tail);
  return Element(f.m, std::move(factors));
}

std::string to_string(const SyllableForm& f) {
  auto rooted = [&](const Perm& p) {
    if (p.is_identity()) return std::string("1");
    if (f.group) return f.group->format(Element::rooted(p));
    return to_cycles(p);
  };
  std::string out = "[";
  for (std::size_t i = 0; i < f.syllables.size(); ++i) {
    const auto& s = f.syllables[i];
    if (i > 0) out += ", ";
    out += "(" + f.group->format_directed(s.datum, s.element, s.shift) + ", " +
           rooted(s.conjugator) + ")";
  }
  return out + "] tail " + rooted(f.tail);
}

SyllableForm syllable_section(const SyllableForm& f, Letter y) {
  if (y >= f.m) throw Error("letter out of range");
  SyllableForm out;
  out.group = f.group;
  out.m = f.m;
  const Letter z = f.tail(y);
  Perm prefix = Perm::identity(f.m);
  for (const auto& s : f.syllables) {
    const auto& dg = f.group->directed_group(s.datum);
    const Letter v = s.conjugator.inverse()(z);
    if (v == dg.path()) {
      push(out, Syllable{s.datum, s.element, s.shift + 1, prefix});
    } else {
      prefix = compose(prefix, dg.label(s.element, dg.normalize_shift(s.shift), v));
    }
  }
  out.tail = prefix;
  return out;
}

SyllableForm syllable_sections(const SyllableForm& f, const Vertex& u) {
  SyllableForm cur = f;
  for (Letter x : u) cur = syllable_section(cur, x);
  return cur;
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True:
      return "true";
    case Truth::False:
      return "false";
    default:
      return "inconclusive";
  }
}

WordProblemResult solve_word_problem(const Element& g, std::size_t max_states, bool trace) {
  WordProblemResult result;
  struct Item {
    SyllableForm form;
    Vertex vertex;
  };
  const std::size_t m = g.degree();
  std::unordered_set<SyllableForm, SyllableFormHash> seen;
  std::deque<Item> queue;
  SyllableForm root = to_syllable_form(g);
  seen.insert(root);
  queue.push_back({std::move(root), {}});
  auto note = [&](const Item& item, std::string_view what) {
    if (!trace || result.trace.size() >= kTraceLines) return;
    const std::string where = item.vertex.empty() ? "-" : to_string(item.vertex, m);
    result.trace.push_back("level " + std::to_string(item.vertex.size()) + " vertex " + where +
                           ": " + to_string(item.form) + std::string(what));
  };
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    result.depth = std::max(result.depth, item.vertex.size());
    if (!item.form.tail.is_identity()) {
      note(item, " -> nontrivial label");
      result.truth = Truth::False;
      result.states = seen.size();
      return result;
    }
    if (item.form.length() == 1) {
      note(item, " -> single syllable, nontrivial");
      result.truth = Truth::False;
      result.states = seen.size();
      return result;
    }
    note(item, "");
    if (item.form.is_rooted()) continue;
    for (Letter y = 0; y < m; ++y) {
      SyllableForm child = syllable_section(item.form, y);
      if (!seen.insert(child).second) continue;
      if (seen.size() > max_states) {
        result.truth = Truth::Inconclusive;
        result.states = seen.size();
        if (trace) result.trace.push_back("state cap " + std::to_string(max_states) + " reached");
        return result;
      }
      Vertex v = item.vertex;
      v.push_back(y);
      queue.push_back({std::move(child), std::move(v)});
    }
  }
  result.truth = Truth::True;
  result.states = seen.size();
  return result;
}

Truth is_identity(const Element& g, std::size_t max_states) {
  return solve_word_problem(g, max_states).truth;
}

Truth equal(const Element& g, const Element& h, std::size_t max_states) {
  return is_identity(g * h.inverse(), max_states);
}

NucleusResult nucleus(const PolyspinalData& data, std::size_t cap) {
  const auto group = SpinalGroup::create(data);
  const std::size_t m = data.m;
  NucleusResult result;
  std::vector<Portrait> portraits;

  auto add = [&](const Element& e) {
    Element c = to_element(to_syllable_form(e));
    Portrait p = portrait(c, kSelftestPortraitDepth);
    for (std::size_t i = 0; i < result.elements.size(); ++i) {
      if (portraits[i] != p) continue;
      const Truth t = equal(c, result.elements[i]);
      if (t == Truth::True) return;
      if (t == Truth::Inconclusive) result.inconclusive = true;
    }
    result.elements.push_back(std::move(c));
    portraits.push_back(std::move(p));
  };

  add(Element::identity(m));
  for (const auto& g : group->generators()) {
    add(g);
    add(g.inverse());
  }
  for (std::size_t k = 0; k < result.elements.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (int order = 0; order < (j == k ? 1 : 2); ++order) {
        const Element product = order == 0 ? result.elements[k] * result.elements[j]
                                           : result.elements[j] * result.elements[k];
        for (Letter y = 0; y < m; ++y) {
          add(section(product, y));
          if (result.elements.size() > cap) {
            result.exceeded = true;
            return result;
          }
        }
      }
    }
  }
  return result;
}

SelftestReport reducing_selftest(const PolyspinalData& data, std::size_t samples,
                                 std::size_t depth, std::uint64_t seed) {
  const auto group = SpinalGroup::create(data);
  const std::size_t m = data.m;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, 16);

  // Depth-3 portraits of σⁿR ∪ ⋃ σⁿD, level by level.
  std::vector<std::set<std::vector<Perm>>> members(depth + 1);
  for (std::size_t n = 0; n <= depth; ++n) {
    for (const auto& r : group->rooted_companion(n)) {
      members[n].insert(portrait(Element::rooted(r), kSelftestPortraitDepth).labels());
    }
    for (std::size_t i = 0; i < group->directed_count(); ++i) {
      for (std::size_t e = 0; e < group->directed_group(i).order(); ++e) {
        members[n].insert(portrait(group->directed(i, e, n), kSelftestPortraitDepth).labels());
      }
    }
  }

  SelftestReport report;
  report.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const Element w = random_word(*group, rng, length(rng));
    std::unordered_set<SyllableForm, SyllableFormHash> states{to_syllable_form(w)};
    bool ok = false;
    for (std::size_t n = 0; n <= depth; ++n) {
      bool all = true;
      for (const auto& f : states) {
        if (!members[n].count(portrait(to_element(f), kSelftestPortraitDepth).labels())) {
          all = false;
          break;
        }
      }
      if (all) {
        ok = true;
        report.deepest = std::max(report.deepest, n);
        break;
      }
      std::unordered_set<SyllableForm, SyllableFormHash> next;
      for (const auto& f : states) {
        for (Letter y = 0; y < m; ++y) next.insert(syllable_section(f, y));
      }
      states = std::move(next);
    }
    if (ok) {
      ++report.passed;
    } else {
      report.failures.push_back("sections of " + group->format(w) +
                                " leave the nuclear sequence up to level " +
                                std::to_string(depth));
    }
  }
  return report;
}

}  // namespace madic
