#include "madic/spinal.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "madic/error.hpp"

namespace madic {

namespace {

constexpr std::size_t kTableLimit = 512;
constexpr std::size_t kRootedCap = 1'000'000;

std::size_t position(Letter y, Letter path) { return y < path ? y : y - 1; }

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> rooted_names(std::size_t count) {
  if (count == 1) return {"a"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

std::size_t DirectedDatum::normalize(std::size_t n) const {
  const std::size_t p = preperiod.size();
  if (n < p) return n;
  return p + (n - p) % period.size();
}

const GenMap& DirectedDatum::at(std::size_t index) const {
  return index < preperiod.size() ? preperiod[index] : period.at(index - preperiod.size());
}

void check_syntax(const PolyspinalData& data) {
  const std::size_t m = data.m;
  if (m < 2 || m > 255) throw Error("degree m=" + std::to_string(m) + " out of range");
  for (const auto& p : data.rooted) {
    if (p.degree() != m) throw DegreeMismatch("rooted generator of wrong degree");
  }
  if (data.directed.size() > m) throw Error("more directed groups than letters");
  std::set<Letter> paths;
  std::set<std::string> names;
  for (const auto& n : rooted_names(data.rooted.size())) names.insert(n);
  for (const auto& d : data.directed) {
    if (d.path >= m) throw Error("path letter " + std::to_string(d.path) + " out of range");
    if (!paths.insert(d.path).second) throw Error("path letters are not distinct");
    if (d.generators.empty()) throw Error("directed group without generators");
    if (d.period.empty()) throw Error("empty period");
    for (const auto& g : d.generators) {
      if (!is_identifier(g)) throw Error("bad generator name '" + g + "'");
      if (!names.insert(g).second) throw Error("generator name '" + g + "' used twice");
    }
    auto check_map = [&](const GenMap& map) {
      if (map.size() != d.generators.size()) throw Error("generator map has the wrong symbols");
      for (const auto& g : d.generators) {
        auto it = map.find(g);
        if (it == map.end()) throw Error("generator map misses '" + g + "'");
        if (it->second.size() != m - 1) {
          throw Error("tuple for '" + g + "' must have " + std::to_string(m - 1) + " entries");
        }
        for (const auto& p : it->second) {
          if (p.degree() != m) throw DegreeMismatch("label of wrong degree");
        }
      }
    };
    for (const auto& map : d.preperiod) check_map(map);
    for (const auto& map : d.period) check_map(map);
  }
}

bool equivalent(const PolyspinalData& a, const PolyspinalData& b) {
  if (a.m != b.m || a.directed != b.directed) return false;
  return generate_group(a.rooted, a.m, kRootedCap) == generate_group(b.rooted, b.m, kRootedCap);
}

std::vector<std::string> multi_ggs_problems(const ZmodMatrix& E) {
  std::vector<std::string> problems;
  const std::size_t m = E.modulus();
  if (E.rows() != m - 1) {
    problems.push_back("E must have m-1 = " + std::to_string(m - 1) + " rows");
    return problems;
  }
  if (E.cols() == 0) {
    problems.push_back("E has no columns");
    return problems;
  }
  const auto span = howell(E.transpose());
  if (span.free_rank() != E.cols()) problems.push_back("E has a nontrivial kernel");
  Residue g = static_cast<Residue>(m);
  for (std::size_t r = 0; r < E.rows(); ++r) {
    for (std::size_t c = 0; c < E.cols(); ++c) g = std::gcd(g, E(r, c));
  }
  if (g != 1) problems.push_back("entries of E share the factor " + std::to_string(g) + " with m");
  return problems;
}

// ---------------------------------------------------------------------------

DirectedGroup::DirectedGroup(const DirectedDatum& datum, std::size_t m, std::size_t cap)
    : m_(m),
      path_(datum.path),
      preperiod_(datum.preperiod.size()),
      period_(datum.period.size()),
      names_(datum.generators) {
  const std::size_t len = cycle_length();
  const std::size_t width = m - 1;
  std::vector<std::vector<Perm>> gen_tuples;
  for (const auto& name : names_) {
    std::vector<Perm> t;
    t.reserve(len * width);
    for (std::size_t i = 0; i < len; ++i) {
      const auto& entries = datum.at(i).at(name);
      t.insert(t.end(), entries.begin(), entries.end());
    }
    gen_tuples.push_back(std::move(t));
  }

  tuples_.push_back(std::vector<Perm>(len * width, Perm::identity(m)));
  words_.push_back({});
  index_.emplace(key(tuples_[0]), 0);
  for (std::size_t head = 0; head < tuples_.size(); ++head) {
    for (std::size_t g = 0; g < gen_tuples.size(); ++g) {
      std::vector<Perm> t(len * width);
      for (std::size_t k = 0; k < t.size(); ++k) t[k] = compose(tuples_[head][k], gen_tuples[g][k]);
      auto [it, inserted] = index_.try_emplace(key(t), tuples_.size());
      if (!inserted) continue;
      if (tuples_.size() >= cap) {
        throw CapExceeded("directed group exceeds " + std::to_string(cap) + " elements");
      }
      auto w = words_[head];
      w.push_back(g);
      tuples_.push_back(std::move(t));
      words_.push_back(std::move(w));
    }
  }
  for (const auto& t : gen_tuples) generators_.push_back(index_.at(key(t)));

  inverses_.resize(order());
  for (std::size_t e = 0; e < order(); ++e) {
    std::vector<Perm> inv;
    inv.reserve(tuples_[e].size());
    for (const auto& p : tuples_[e]) inv.push_back(p.inverse());
    inverses_[e] = index_.at(key(inv));
  }

  if (order() <= kTableLimit) {
    std::vector<std::uint32_t> table(order() * order());
    for (std::size_t a = 0; a < order(); ++a) {
      for (std::size_t b = 0; b < order(); ++b) table[a * order() + b] = static_cast<std::uint32_t>(multiply(a, b));
    }
    table_ = std::move(table);
  }

  // Two (shift, element) pairs agree as automorphisms iff they agree on the
  // next len coordinates.
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> least;
  canonical_.assign(len, std::vector<std::pair<std::size_t, std::size_t>>(order()));
  for (std::size_t s = 0; s < len; ++s) {
    for (std::size_t e = 0; e < order(); ++e) {
      std::string k;
      for (std::size_t j = 0; j < len; ++j) k += key(tuple_at(e, normalize_shift(s + j)));
      auto [it, inserted] = least.try_emplace(std::move(k), std::pair{s, e});
      canonical_[s][e] = it->second;
    }
  }
}

std::string DirectedGroup::key(std::span<const Perm> perms) const {
  std::string k;
  k.reserve(perms.size() * m_);
  for (const auto& p : perms) {
    for (auto y : p.images()) k.push_back(static_cast<char>(y));
  }
  return k;
}

std::size_t DirectedGroup::normalize_shift(std::size_t n) const {
  if (n < preperiod_) return n;
  return preperiod_ + (n - preperiod_) % period_;
}

std::size_t DirectedGroup::multiply(std::size_t a, std::size_t b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  if (!table_.empty()) return table_[a * order() + b];
  std::vector<Perm> t(tuples_[a].size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = compose(tuples_[a][k], tuples_[b][k]);
  return index_.at(key(t));
}

const Perm& DirectedGroup::label(std::size_t e, std::size_t index, Letter y) const {
  return tuples_[e][index * (m_ - 1) + position(y, path_)];
}

std::span<const Perm> DirectedGroup::tuple_at(std::size_t e, std::size_t index) const {
  return std::span<const Perm>(tuples_[e]).subspan(index * (m_ - 1), m_ - 1);
}

std::pair<std::size_t, std::size_t> DirectedGroup::canonical(std::size_t e, std::size_t shift) const {
  return canonical_[normalize_shift(shift)][e];
}

bool DirectedGroup::acts_trivially(std::size_t e, std::size_t shift) const {
  return canonical(e, shift).second == 0;
}

std::optional<std::size_t> DirectedGroup::find(std::span<const Perm> tuple) const {
  auto it = index_.find(key(tuple));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

SpinalGroup::SpinalGroup(Passkey, PolyspinalData data, std::size_t cap) : data_(std::move(data)) {
  check_syntax(data_);
  for (const auto& d : data_.directed) groups_.emplace_back(d, data_.m, cap);
  rooted_names_ = rooted_names(data_.rooted.size());
}

std::shared_ptr<const SpinalGroup> SpinalGroup::create(PolyspinalData data, std::size_t cap) {
  return std::make_shared<const SpinalGroup>(Passkey{}, std::move(data), cap);
}

Element SpinalGroup::directed(std::size_t datum, std::size_t element, std::size_t shift) const {
  return Element::directed(shared_from_this(), datum, element, shift);
}

std::vector<Element> SpinalGroup::generators() const {
  std::vector<Element> out;
  for (const auto& p : data_.rooted) out.push_back(Element::rooted(p));
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    for (std::size_t g : groups_[i].generators()) out.push_back(directed(i, g));
  }
  return out;
}

std::vector<std::string> SpinalGroup::generator_names() const {
  std::vector<std::string> out = rooted_names_;
  for (const auto& g : groups_) {
    out.insert(out.end(), g.generator_names().begin(), g.generator_names().end());
  }
  return out;
}

Element SpinalGroup::parse_word(std::string_view text) const {
  const std::size_t m = degree();
  std::vector<Generator> factors;
  std::size_t i = 0;
  auto read_exponent = [&]() -> long long {
    if (i >= text.size() || text[i] != '^') return 1;
    ++i;
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    const std::string digits(text.substr(start, i - start));
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad exponent in word");
    return std::stoll(digits);
  };
  bool have_factor = false, pending = false;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '*') {
      if (!have_factor || pending) throw ParseError("'*' without a factor in word");
      pending = true;
      ++i;
      continue;
    }
    have_factor = true;
    pending = false;
    if (ch == '(') {
      std::size_t inner = i + 1;
      while (inner < text.size() && std::isspace(static_cast<unsigned char>(text[inner]))) ++inner;
      if (inner < text.size() && !std::isdigit(static_cast<unsigned char>(text[inner])) &&
          text[inner] != ')') {
        // Parenthesized subword.
        std::size_t depth = 0, close = i;
        for (; close < text.size(); ++close) {
          if (text[close] == '(') ++depth;
          if (text[close] == ')' && --depth == 0) break;
        }
        if (close >= text.size()) throw ParseError("unbalanced parenthesis in word");
        const Element sub = parse_word(text.substr(i + 1, close - i - 1));
        i = close + 1;
        const Element power = sub.pow(read_exponent());
        factors.insert(factors.end(), power.factors().begin(), power.factors().end());
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] == '(') {
        auto close = text.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis in word");
        i = close + 1;
      }
      const Perm p = parse_perm(text.substr(start, i - start), m);
      factors.emplace_back(Rooted{p.pow(read_exponent())});
      continue;
    }
    if (ch == '1' && (i + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      read_exponent();
      continue;
    }
    if (!(std::isalpha(static_cast<unsigned char>(ch)) || ch == '_')) {
      throw ParseError(std::string("unexpected '") + ch + "' in word");
    }
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    const std::string name(text.substr(start, i - start));
    const long long k = read_exponent();
    bool found = false;
    for (std::size_t r = 0; r < rooted_names_.size() && !found; ++r) {
      if (rooted_names_[r] == name) {
        factors.emplace_back(Rooted{data_.rooted[r].pow(k)});
        found = true;
      }
    }
    for (std::size_t d = 0; d < groups_.size() && !found; ++d) {
      const auto& names = groups_[d].generator_names();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) continue;
      const std::size_t g = groups_[d].generators()[static_cast<std::size_t>(it - names.begin())];
      const std::size_t base = k < 0 ? groups_[d].inverse(g) : g;
      std::size_t e = 0;
      for (long long j = 0; j < (k < 0 ? -k : k); ++j) e = groups_[d].multiply(e, base);
      factors.emplace_back(Directed{shared_from_this(), d, e, 0});
      found = true;
    }
    if (!found) throw ParseError("unknown generator '" + name + "'");
  }
  if (pending) throw ParseError("word ends with '*'");
  return Element(m, std::move(factors));
}

std::string SpinalGroup::format_directed(std::size_t datum, std::size_t element,
                                         std::size_t shift) const {
  const auto& g = groups_.at(datum);
  if (element == 0) return "1";
  const auto& word = g.word(element);
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    std::string part = g.generator_names()[word[i]];
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(std::move(part));
    i = j;
  }
  std::string out = join(parts, "*");
  if (shift == 0) return out;
  if (parts.size() > 1) out = "(" + out + ")";
  return out + "@" + std::to_string(shift);
}

std::string SpinalGroup::format(const Element& g) const {
  if (g.empty()) return "1";
  std::vector<std::string> parts;
  for (const auto& f : g.factors()) {
    if (const auto* r = std::get_if<Rooted>(&f)) {
      std::string name;
      for (std::size_t i = 0; i < data_.rooted.size() && name.empty(); ++i) {
        if (data_.rooted[i] == r->perm) name = rooted_names_[i];
      }
      if (name.empty() && data_.rooted.size() == 1) {
        const Perm& a = data_.rooted[0];
        Perm p = a;
        for (std::size_t k = 2; k < a.order(); ++k) {
          p = compose(p, a);
          if (p == r->perm) {
            name = rooted_names_[0] + "^" + std::to_string(k);
            break;
          }
        }
      }
      parts.push_back(name.empty() ? to_cycles(r->perm) : name);
    } else if (const auto* c = std::get_if<ConstantPortrait>(&f)) {
      parts.push_back("k" + to_cycles(c->perm));
    } else {
      const auto& d = std::get<Directed>(f);
      parts.push_back(format_directed(d.datum, d.element, d.shift));
    }
  }
  return join(parts, "*");
}

Perm SpinalGroup::directed_label(std::size_t datum, std::size_t element, std::size_t shift,
                                 Letter y) const {
  const auto& g = groups_.at(datum);
  if (y == g.path()) return Perm::identity(degree());
  return g.label(element, g.normalize_shift(shift), y);
}

std::pair<std::size_t, std::size_t> SpinalGroup::advance(std::size_t datum, std::size_t element,
                                                         std::size_t shift) const {
  return canonical(datum, element, shift + 1);
}

std::pair<std::size_t, std::size_t> SpinalGroup::canonical(std::size_t datum, std::size_t element,
                                                           std::size_t shift) const {
  auto [s, e] = groups_.at(datum).canonical(element, shift);
  return {e, s};
}

namespace {

// Entries of ω_n over all data and generators, n ≥ 1.
std::vector<Perm> level_labels(const PolyspinalData& data, std::size_t n) {
  std::vector<Perm> out;
  for (const auto& d : data.directed) {
    const GenMap& map = d.at(d.normalize(n - 1));
    for (const auto& g : d.generators) {
      for (const auto& p : map.at(g)) out.push_back(p);
    }
  }
  return out;
}

}  // namespace

const std::vector<Perm>& SpinalGroup::rooted_companion(std::size_t n) const {
  std::size_t key = n;
  if (n > 0) {
    // σⁿR depends on n only through the reduced index of every datum.
    std::size_t lcm_period = 1, max_pre = 0;
    for (const auto& d : data_.directed) {
      lcm_period = std::lcm(lcm_period, d.period.size());
      max_pre = std::max(max_pre, d.preperiod.size());
    }
    if (n - 1 >= max_pre) key = 1 + max_pre + (n - 1 - max_pre) % lcm_period;
  }
  auto it = companions_.find(key);
  if (it != companions_.end()) return it->second;
  const auto gens = key == 0 ? data_.rooted : level_labels(data_, key);
  return companions_.emplace(key, generate_group(gens, degree(), kRootedCap)).first->second;
}

// ---------------------------------------------------------------------------

std::string ValidityReport::summary() const {
  if (status == Validity::Valid) {
    std::string out = "valid, r=" + std::to_string(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
      out += ", |D" + std::to_string(i) + "|=" + std::to_string(data[i].order.value_or(0));
    }
    return out;
  }
  return std::string(status == Validity::Invalid ? "invalid: " : "inconclusive: ") +
         join(problems, "; ");
}

ValidityReport validate(const PolyspinalData& data, std::size_t cap) {
  ValidityReport report;
  try {
    check_syntax(data);
  } catch (const Error& e) {
    report.status = Validity::Invalid;
    report.problems.push_back(e.what());
    return report;
  }
  const std::size_t m = data.m;
  if (!is_transitive(data.rooted, m)) report.warnings.push_back("rooted group alone is intransitive");
  if (data.directed.empty()) report.problems.push_back("no directed group");

  bool capped = false;
  std::vector<std::string> capped_notes;
  for (std::size_t i = 0; i < data.directed.size(); ++i) {
    const auto& d = data.directed[i];
    DatumReport dr;
    dr.path = d.path;
    const std::string tag = "D" + std::to_string(i) + ": ";

    dr.transitive = true;
    for (std::size_t idx = 0; idx < d.cycle_length(); ++idx) {
      std::vector<Perm> gens;
      for (const auto& g : d.generators) {
        for (const auto& p : d.at(idx).at(g)) gens.push_back(p);
      }
      if (!is_transitive(gens, m)) {
        dr.transitive = false;
        dr.problems.push_back("labels of level " + std::to_string(idx + 1) +
                              " do not act transitively");
      }
    }

    try {
      DirectedGroup group(d, m, cap);
      dr.order = group.order();
      dr.faithful = true;
      for (std::size_t e = 1; e < group.order(); ++e) {
        if (group.acts_trivially(e, group.preperiod())) {
          dr.faithful = false;
          dr.problems.push_back("tail projection of the directed group is not injective");
          break;
        }
      }
    } catch (const CapExceeded& e) {
      capped = true;
      capped_notes.push_back(tag + e.what());
    }
    for (const auto& p : dr.problems) report.problems.push_back(tag + p);
    report.data.push_back(std::move(dr));
  }

  if (!report.problems.empty()) {
    report.status = Validity::Invalid;
  } else if (capped) {
    report.status = Validity::Inconclusive;
    report.problems = std::move(capped_notes);
  }
  return report;
}

PolyspinalData shift(const PolyspinalData& data, std::size_t n) {
  if (n == 0) return data;
  PolyspinalData out;
  out.m = data.m;
  // Greedy generating set of σⁿR from the level-n labels.
  std::vector<Perm> current;
  std::set<Perm> generated{Perm::identity(data.m)};
  for (const auto& p : level_labels(data, n)) {
    if (generated.count(p)) continue;
    current.push_back(p);
    const auto group = generate_group(current, data.m, kRootedCap);
    generated = std::set<Perm>(group.begin(), group.end());
  }
  out.rooted = std::move(current);
  for (const auto& d : data.directed) {
    DirectedDatum s;
    s.path = d.path;
    s.generators = d.generators;
    const std::size_t p = d.preperiod.size();
    if (n < p) {
      s.preperiod.assign(d.preperiod.begin() + static_cast<std::ptrdiff_t>(n), d.preperiod.end());
      s.period = d.period;
    } else {
      const std::size_t q = d.period.size();
      const std::size_t r = (n - p) % q;
      for (std::size_t k = 0; k < q; ++k) s.period.push_back(d.period[(r + k) % q]);
    }
    out.directed.push_back(std::move(s));
  }
  return out;
}

namespace {

std::optional<GenMap> constant_map(const DirectedDatum& d) {
  const GenMap& first = d.period.front();
  for (const auto& map : d.preperiod) {
    if (map != first) return std::nullopt;
  }
  for (const auto& map : d.period) {
    if (map != first) return std::nullopt;
  }
  return first;
}

}  // namespace

std::optional<ZmodMatrix> relative_exponents(const PolyspinalData& data, std::size_t datum) {
  const auto& d = data.directed.at(datum);
  const auto map = constant_map(d);
  if (!map) return std::nullopt;
  const std::size_t m = data.m;
  ZmodMatrix E(m, m - 1, d.generators.size());
  for (std::size_t j = 0; j < d.generators.size(); ++j) {
    const auto& tuple = map->at(d.generators[j]);
    for (std::size_t t = 1; t < m; ++t) {
      const Letter y = static_cast<Letter>((d.path + t) % m);
      const auto k = cycle_exponent(tuple[position(y, d.path)]);
      if (!k) return std::nullopt;
      E.set(t - 1, j, static_cast<Residue>(*k));
    }
  }
  return E;
}

std::variant<MultiGGSData, NotMultiGGS> as_multi_ggs(const PolyspinalData& data) {
  if (data.directed.size() != 1) {
    return NotMultiGGS{"r = " + std::to_string(data.directed.size()) + ", not 1"};
  }
  const std::size_t m = data.m;
  const std::vector<Perm> cycle{standard_cycle(m)};
  if (generate_group(data.rooted, m, kRootedCap) != generate_group(cycle, m)) {
    return NotMultiGGS{"rooted group is not generated by the standard cycle"};
  }
  if (!constant_map(data.directed[0])) return NotMultiGGS{"defining sequence is not constant"};
  auto E = relative_exponents(data, 0);
  if (!E) return NotMultiGGS{"some label is not a power of the standard cycle"};
  const auto problems = multi_ggs_problems(*E);
  if (!problems.empty()) return NotMultiGGS{join(problems, "; ")};
  return MultiGGSData{*E};
}

PolyspinalData conjugate_by_constant(const PolyspinalData& data, const Perm& tau) {
  if (tau.degree() != data.m) throw DegreeMismatch("conjugating permutation of wrong degree");
  const Perm tau_inv = tau.inverse();
  PolyspinalData out;
  out.m = data.m;
  for (const auto& r : data.rooted) out.rooted.push_back(conjugate(r, tau));
  auto convert = [&](const GenMap& map, Letter old_path, Letter new_path) {
    GenMap result;
    for (const auto& [name, tuple] : map) {
      std::vector<Perm> t(data.m - 1);
      for (Letter y = 0; y < data.m; ++y) {
        if (y == new_path) continue;
        t[position(y, new_path)] = conjugate(tuple[position(tau(y), old_path)], tau);
      }
      result.emplace(name, std::move(t));
    }
    return result;
  };
  for (const auto& d : data.directed) {
    DirectedDatum c;
    c.path = tau_inv(d.path);
    c.generators = d.generators;
    for (const auto& map : d.preperiod) c.preperiod.push_back(convert(map, d.path, c.path));
    for (const auto& map : d.period) c.period.push_back(convert(map, d.path, c.path));
    out.directed.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------

PolyspinalData grigorchuk() {
  const Perm a{1, 0};
  const Perm e = Perm::identity(2);
  DirectedDatum d;
  d.path = 1;
  d.generators = {"b", "c", "d"};
  d.period = {
      GenMap{{"b", {a}}, {"c", {a}}, {"d", {e}}},
      GenMap{{"b", {a}}, {"c", {e}}, {"d", {a}}},
      GenMap{{"b", {e}}, {"c", {a}}, {"d", {a}}},
  };
  return PolyspinalData{2, {a}, {d}};
}

PolyspinalData gupta_sidki() { return ggs({1, 2}); }

PolyspinalData pervova() {
  const Perm a = standard_cycle(3);
  const Perm a2 = a.pow(2);
  DirectedDatum b;
  b.path = 0;
  b.generators = {"b"};
  b.period = {GenMap{{"b", {a, a2}}}};
  DirectedDatum c;
  c.path = 1;
  c.generators = {"c"};
  c.period = {GenMap{{"c", {a2, a}}}};
  return PolyspinalData{3, {a}, {b, c}};
}

namespace {

PolyspinalData multi_ggs_unchecked(const ZmodMatrix& E) {
  const std::size_t m = E.modulus();
  if (E.rows() != m - 1) throw Error("E must have m-1 rows");
  const Perm a = standard_cycle(m);
  DirectedDatum d;
  d.path = 0;
  GenMap map;
  for (std::size_t j = 0; j < E.cols(); ++j) {
    const std::string name = E.cols() == 1 ? "b" : "b" + std::to_string(j);
    d.generators.push_back(name);
    std::vector<Perm> tuple;
    for (std::size_t r = 0; r < m - 1; ++r) tuple.push_back(a.pow(E(r, j)));
    map.emplace(name, std::move(tuple));
  }
  d.period = {map};
  return PolyspinalData{m, {a}, {d}};
}

}  // namespace

PolyspinalData multi_ggs(const ZmodMatrix& E) {
  const auto problems = multi_ggs_problems(E);
  if (!problems.empty()) throw Error("invalid multi-GGS matrix: " + join(problems, "; "));
  return multi_ggs_unchecked(E);
}

PolyspinalData multi_ggs(const MultiGGSData& data) { return multi_ggs(data.E); }

PolyspinalData ggs(const std::vector<Residue>& e) { return ggs(e, e.size() + 1); }

PolyspinalData ggs(const std::vector<Residue>& e, std::size_t m) {
  if (e.size() + 1 != m) throw Error("defining vector must have m-1 entries");
  ZmodMatrix E(m, m - 1, 1);
  for (std::size_t i = 0; i < e.size(); ++i) E.set(i, 0, e[i]);
  return multi_ggs(E);
}

std::optional<PolyspinalData> fixture(std::string_view name) {
  if (name == "grigorchuk") return grigorchuk();
  if (name == "gupta_sidki") return gupta_sidki();
  if (name == "pervova") return pervova();
  return std::nullopt;
}

PolyspinalData to_polyspinal(const GroupSpec& spec) {
  if (const auto* d = std::get_if<PolyspinalData>(&spec)) return *d;
  return multi_ggs_unchecked(std::get<MultiGGSData>(spec).E);
}

// ---------------------------------------------------------------------------

Element random_word(const SpinalGroup& group, std::mt19937_64& rng, std::size_t length) {
  const auto gens = group.generators();
  std::vector<Element> choices = gens;
  for (const auto& g : gens) choices.push_back(g.inverse());
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  Element out(group.degree());
  for (std::size_t i = 0; i < length; ++i) out = out * choices[pick(rng)];
  return out;
}

Element random_syllable_word(const SpinalGroup& group, std::mt19937_64& rng,
                             std::size_t syllables) {
  const auto& rooted = group.rooted_companion(0);
  const std::size_t m = group.degree();
  std::uniform_int_distribution<std::size_t> any_rooted(0, rooted.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_datum(0, group.directed_count() - 1);
  // Elements are sorted, so index 0 is the identity.
  auto draw_rooted = [&](bool nontrivial) {
    if (!nontrivial) return rooted[any_rooted(rng)];
    if (rooted.size() < 2) throw Error("rooted group is trivial");
    std::uniform_int_distribution<std::size_t> pick(1, rooted.size() - 1);
    return rooted[pick(rng)];
  };
  std::vector<Generator> factors;
  factors.emplace_back(Rooted{draw_rooted(false)});
  std::optional<std::size_t> previous;
  for (std::size_t k = 0; k < syllables; ++k) {
    const std::size_t datum = pick_datum(rng);
    if (previous) factors.emplace_back(Rooted{draw_rooted(*previous == datum)});
    const auto& dg = group.directed_group(datum);
    if (dg.order() < 2) throw Error("directed group is trivial");
    std::uniform_int_distribution<std::size_t> pick(1, dg.order() - 1);
    factors.emplace_back(Directed{group.shared_from_this(), datum, pick(rng), 0});
    previous = datum;
  }
  factors.emplace_back(Rooted{draw_rooted(false)});
  return Element(m, std::move(factors));
}

}  // namespace madic
