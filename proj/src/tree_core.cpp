#include "madic/tree_core.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "madic/error.hpp"
#include "madic/spinal.hpp"

namespace madic {

namespace {

struct GeneratorHash {
  std::size_t operator()(const Generator& g) const noexcept {
    return std::visit(
        [](const auto& x) -> std::size_t {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Rooted>) {
            return x.perm.hash() * 3;
          } else if constexpr (std::is_same_v<T, ConstantPortrait>) {
            return x.perm.hash() * 3 + 2;
          } else {
            std::size_t h = std::hash<const void*>{}(x.group.get());
            h = h * 31 + x.datum;
            h = h * 131 + x.element;
            h = h * 31 + x.shift;
            return h * 3 + 1;
          }
        },
        g);
  }
};

Perm generator_root_label(const Generator& g, std::size_t m) {
  if (const auto* r = std::get_if<Rooted>(&g)) return r->perm;
  if (const auto* c = std::get_if<ConstantPortrait>(&g)) return c->perm;
  return Perm::identity(m);
}

// Section of a single generator at letter x; nullopt for the identity.
std::optional<Generator> generator_section(const Generator& g, Letter x) {
  if (std::holds_alternative<Rooted>(g)) return std::nullopt;
  if (std::holds_alternative<ConstantPortrait>(g)) return g;
  const auto& d = std::get<Directed>(g);
  const SpinalGroup& group = *d.group;
  if (group.directed_group(d.datum).path() == x) {
    auto [e, s] = group.advance(d.datum, d.element, d.shift);
    return Directed{d.group, d.datum, e, s};
  }
  return Rooted{group.directed_label(d.datum, d.element, d.shift, x)};
}

// Drops identity factors and multiplies out adjacent rooted factors.
std::vector<Generator> tidy(std::vector<Generator> factors) {
  std::vector<Generator> out;
  out.reserve(factors.size());
  for (auto& g : factors) {
    if (is_trivial(g)) continue;
    if (!out.empty()) {
      auto* prev = std::get_if<Rooted>(&out.back());
      const auto* cur = std::get_if<Rooted>(&g);
      if (prev != nullptr && cur != nullptr) {
        prev->perm = compose(prev->perm, cur->perm);
        if (prev->perm.is_identity()) out.pop_back();
        continue;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

Vertex parse_vertex(std::string_view text, std::size_t m) {
  Vertex v;
  if (text.empty() || text == "-") return v;
  if (text.find(',') != std::string_view::npos) {
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      if (token.empty()) throw ParseError("empty letter in vertex");
      v.push_back(static_cast<Letter>(std::stoul(token)));
    }
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError(std::string("bad vertex letter '") + ch + "'");
      }
      v.push_back(static_cast<Letter>(ch - '0'));
    }
  }
  for (Letter x : v) {
    if (x >= m) throw ParseError("vertex letter " + std::to_string(x) + " out of range");
  }
  return v;
}

std::string to_string(const Vertex& v, std::size_t m) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (m > 10 && i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::size_t vertex_rank(const Vertex& v, std::size_t m) {
  std::size_t r = 0;
  for (Letter x : v) r = r * m + x;
  return r;
}

Vertex vertex_from_rank(std::size_t rank, std::size_t length, std::size_t m) {
  Vertex v(length);
  for (std::size_t i = length; i-- > 0;) {
    v[i] = static_cast<Letter>(rank % m);
    rank /= m;
  }
  return v;
}

std::size_t degree_of(const Generator& g) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Directed>) {
          return x.group->degree();
        } else {
          return x.perm.degree();
        }
      },
      g);
}

Generator inverse(const Generator& g) {
  if (const auto* r = std::get_if<Rooted>(&g)) return Rooted{r->perm.inverse()};
  if (const auto* c = std::get_if<ConstantPortrait>(&g)) return ConstantPortrait{c->perm.inverse()};
  const auto& d = std::get<Directed>(g);
  const auto inv = d.group->directed_group(d.datum).inverse(d.element);
  auto [e, s] = d.group->canonical(d.datum, inv, d.shift);
  return Directed{d.group, d.datum, e, s};
}

bool is_trivial(const Generator& g) {
  if (const auto* r = std::get_if<Rooted>(&g)) return r->perm.is_identity();
  if (const auto* c = std::get_if<ConstantPortrait>(&g)) return c->perm.is_identity();
  const auto& d = std::get<Directed>(g);
  return d.group->directed_group(d.datum).acts_trivially(d.element, d.shift);
}

Element::Element(std::size_t m, std::vector<Generator> factors)
    : m_(m), factors_(std::move(factors)) {
  for (auto& g : factors_) {
    if (degree_of(g) != m_) {
      throw DegreeMismatch("generator of degree " + std::to_string(degree_of(g)) +
                           " in a word over degree " + std::to_string(m_));
    }
    if (auto* d = std::get_if<Directed>(&g)) {
      if (!d->group) throw Error("directed generator without a group");
      std::tie(d->element, d->shift) = d->group->canonical(d->datum, d->element, d->shift);
    }
  }
}

Element Element::rooted(const Perm& p) { return Element(p.degree(), {Rooted{p}}); }

Element Element::constant_portrait(const Perm& p) {
  return Element(p.degree(), {ConstantPortrait{p}});
}

Element Element::directed(std::shared_ptr<const SpinalGroup> group, std::size_t datum,
                          std::size_t element, std::size_t shift) {
  const std::size_t m = group->degree();
  return Element(m, {Directed{std::move(group), datum, element, shift}});
}

Element Element::inverse() const {
  std::vector<Generator> out;
  out.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) out.push_back(madic::inverse(*it));
  return Element(m_, std::move(out));
}

Element Element::pow(long long k) const {
  const Element base = k < 0 ? inverse() : *this;
  Element result(m_);
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) result = result * base;
  return result;
}

Element operator*(const Element& a, const Element& b) {
  if (a.m_ != b.m_) throw DegreeMismatch("product of elements on different trees");
  Element out = a;
  out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
  return out;
}

std::size_t Element::hash() const noexcept {
  std::size_t h = m_;
  GeneratorHash gh;
  for (const auto& g : factors_) h = h * 1000003ULL ^ gh(g);
  return h;
}

Element conjugate(const Element& g, const Element& f) { return f.inverse() * g * f; }

std::string to_string(const Element& g) {
  if (g.empty()) return "1";
  std::string out;
  for (const auto& f : g.factors()) {
    if (!out.empty()) out += '*';
    if (const auto* r = std::get_if<Rooted>(&f)) {
      out += to_cycles(r->perm);
    } else if (const auto* c = std::get_if<ConstantPortrait>(&f)) {
      out += "k" + to_cycles(c->perm);
    } else {
      const auto& d = std::get<Directed>(f);
      out += d.group->format_directed(d.datum, d.element, d.shift);
    }
  }
  return out;
}

Perm root_label(const Element& g) {
  Perm result = Perm::identity(g.degree());
  for (const auto& f : g.factors()) {
    if (!std::holds_alternative<Directed>(f)) result = compose(result, generator_root_label(f, g.degree()));
  }
  return result;
}

Element section(const Element& g, Letter x) {
  if (x >= g.degree()) throw Error("letter out of range");
  const auto& factors = g.factors();
  std::vector<Generator> out(factors.size(), Rooted{Perm::identity(g.degree())});
  Letter cur = x;
  for (std::size_t i = factors.size(); i-- > 0;) {
    if (auto s = generator_section(factors[i], cur)) out[i] = std::move(*s);
    cur = generator_root_label(factors[i], g.degree())(cur);
  }
  return Element(g.degree(), tidy(std::move(out)));
}

Element section(const Element& g, const Vertex& u) {
  Element cur = g;
  for (Letter x : u) cur = section(cur, x);
  return cur;
}

Perm label(const Element& g, const Vertex& u) { return root_label(section(g, u)); }

Vertex apply(const Element& g, const Vertex& v) {
  Vertex out;
  out.reserve(v.size());
  Element cur = g;
  for (Letter x : v) {
    if (x >= g.degree()) throw Error("letter out of range");
    out.push_back(root_label(cur)(x));
    cur = section(cur, x);
  }
  return out;
}

Element kappa(const Perm& sigma) {
  if (sigma.is_identity()) return Element(sigma.degree());
  return Element::constant_portrait(sigma);
}

std::size_t SectionCache::intern(const Element& g) {
  auto it = ids_.find(g);
  if (it != ids_.end()) return it->second;
  const std::size_t id = states_.size();
  states_.push_back(State{g, root_label(g), {}});
  ids_.emplace(g, id);
  return id;
}

std::size_t SectionCache::child(std::size_t id, Letter x) {
  if (states_[id].children.empty()) {
    const std::size_t m = states_[id].element.degree();
    std::vector<std::size_t> kids(m);
    for (Letter y = 0; y < m; ++y) kids[y] = intern(section(states_[id].element, y));
    states_[id].children = std::move(kids);
  }
  return states_[id].children[x];
}

Portrait::Portrait(std::size_t m, std::size_t depth, std::vector<Perm> labels)
    : m_(m), depth_(depth), labels_(std::move(labels)) {
  if (labels_.size() != portrait_size(m, depth, labels_.size() + 1)) {
    throw Error("portrait label count does not match its depth");
  }
  for (const auto& p : labels_) {
    if (p.degree() != m) throw DegreeMismatch("portrait label of wrong degree");
  }
}

namespace {

std::size_t level_offset(std::size_t m, std::size_t length) {
  std::size_t offset = 0, width = 1;
  for (std::size_t i = 0; i < length; ++i) {
    offset += width;
    width *= m;
  }
  return offset;
}

}  // namespace

const Perm& Portrait::at(const Vertex& u) const {
  if (u.size() >= depth_) throw Error("vertex below the portrait depth");
  return labels_[level_offset(m_, u.size()) + vertex_rank(u, m_)];
}

Vertex Portrait::apply(const Vertex& v) const {
  if (v.size() > depth_) throw Error("word longer than the portrait depth");
  Vertex out;
  Vertex prefix;
  for (Letter x : v) {
    out.push_back(at(prefix)(x));
    prefix.push_back(x);
  }
  return out;
}

std::size_t portrait_size(std::size_t m, std::size_t depth, std::size_t cap) {
  std::size_t total = 0, width = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    total += width;
    if (total > cap) {
      throw CapExceeded("portrait of depth " + std::to_string(depth) + " exceeds " +
                        std::to_string(cap) + " labels");
    }
    if (i + 1 < depth) width *= m;
  }
  return total;
}

Portrait portrait(const Element& g, std::size_t depth, std::size_t max_labels) {
  const std::size_t m = g.degree();
  const std::size_t total = portrait_size(m, depth, max_labels);
  std::vector<Perm> labels;
  labels.reserve(total);
  SectionCache cache;
  std::vector<std::size_t> level{cache.intern(g)};
  for (std::size_t n = 0; n < depth; ++n) {
    std::vector<std::size_t> next;
    if (n + 1 < depth) next.reserve(level.size() * m);
    for (std::size_t id : level) {
      labels.push_back(cache.label(id));
      if (n + 1 < depth) {
        for (Letter x = 0; x < m; ++x) next.push_back(cache.child(id, x));
      }
    }
    level = std::move(next);
  }
  return Portrait(m, depth, std::move(labels));
}

bool equal_to_depth(const Element& g, const Element& h, std::size_t depth) {
  if (g.degree() != h.degree()) throw DegreeMismatch("elements on different trees");
  const std::size_t m = g.degree();
  SectionCache cache;
  // Deepest remaining depth already verified for each state pair.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> checked;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> stack{
      {cache.intern(g), cache.intern(h), depth}};
  while (!stack.empty()) {
    auto [a, b, remaining] = stack.back();
    stack.pop_back();
    if (remaining == 0) continue;
    auto [it, inserted] = checked.try_emplace({a, b}, remaining);
    if (!inserted) {
      if (it->second >= remaining) continue;
      it->second = remaining;
    }
    if (cache.label(a) != cache.label(b)) return false;
    if (remaining == 1) continue;
    for (Letter x = 0; x < m; ++x) {
      stack.emplace_back(cache.child(a, x), cache.child(b, x), remaining - 1);
    }
  }
  return true;
}

std::string to_text(const Portrait& p) {
  std::ostringstream out;
  out << "m=" << p.degree() << " depth=" << p.depth() << '\n';
  std::size_t index = 0;
  std::size_t width = 1;
  for (std::size_t n = 0; n < p.depth(); ++n) {
    for (std::size_t r = 0; r < width; ++r) {
      const Vertex v = vertex_from_rank(r, n, p.degree());
      out << (n == 0 ? std::string("-") : to_string(v, p.degree())) << ' '
          << to_one_line(p.labels()[index++]) << '\n';
    }
    width *= p.degree();
  }
  return out.str();
}

std::string to_dot(const Portrait& p) {
  std::ostringstream out;
  out << "digraph portrait {\n";
  std::size_t index = 0;
  std::size_t width = 1;
  for (std::size_t n = 0; n < p.depth(); ++n) {
    for (std::size_t r = 0; r < width; ++r) {
      const Vertex v = vertex_from_rank(r, n, p.degree());
      const std::string name = to_string(v, p.degree());
      out << "  \"" << name << "\" [label=\"" << to_one_line(p.labels()[index++]) << "\"];\n";
      if (n > 0) {
        const Vertex parent(v.begin(), v.end() - 1);
        out << "  \"" << to_string(parent, p.degree()) << "\" -> \"" << name << "\";\n";
      }
    }
    width *= p.degree();
  }
  out << "}\n";
  return out.str();
}

}  // namespace madic
