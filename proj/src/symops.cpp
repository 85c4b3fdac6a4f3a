#include "madic/symops.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "madic/error.hpp"

namespace madic {

namespace {

constexpr std::size_t kMaxDegree = 255;

void check_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  }
}

}  // namespace

Perm::Perm(std::vector<Letter> images) {
  if (images.size() > kMaxDegree) {
    throw Error("permutation degree " + std::to_string(images.size()) +
                " exceeds " + std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(images.size(), false);
  images_.reserve(images.size());
  for (Letter y : images) {
    if (y >= images.size() || seen[y]) {
      throw Error("not a bijection of [0," + std::to_string(images.size()) + ")");
    }
    seen[y] = true;
    images_.push_back(static_cast<std::uint8_t>(y));
  }
}

Perm Perm::identity(std::size_t m) {
  std::vector<Letter> images(m);
  std::iota(images.begin(), images.end(), Letter{0});
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm result = *this;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    result.images_[images_[x]] = static_cast<std::uint8_t>(x);
  }
  return result;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  e %= order();
  Perm result = identity(degree());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Perm::hash() const noexcept {
  std::size_t h = images_.size();
  for (auto y : images_) h = h * 1099511628211ULL + y + 1;
  return h;
}

Perm compose(const Perm& p, const Perm& q) {
  check_same_degree(p, q);
  std::vector<Letter> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = p(q(static_cast<Letter>(x)));
  return Perm(std::move(images));
}

Perm conjugate(const Perm& p, const Perm& c) { return compose(c.inverse(), compose(p, c)); }

Perm standard_cycle(std::size_t m) {
  std::vector<Letter> images(m);
  for (std::size_t x = 0; x < m; ++x) images[x] = static_cast<Letter>((x + 1) % m);
  return Perm(std::move(images));
}

std::optional<std::size_t> cycle_exponent(const Perm& p) {
  const std::size_t m = p.degree();
  if (m == 0) return std::nullopt;
  const std::size_t k = p(0);
  for (std::size_t x = 0; x < m; ++x) {
    if (p(static_cast<Letter>(x)) != (x + k) % m) return std::nullopt;
  }
  return k;
}

Perm parse_perm(std::string_view text, std::size_t m) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw ParseError("empty permutation");

  auto read_numbers = [](std::string_view body, char sep) {
    std::vector<Letter> values;
    std::string token;
    auto flush = [&]() {
      if (token.empty()) return;
      for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          throw ParseError("bad permutation entry '" + token + "'");
        }
      }
      values.push_back(static_cast<Letter>(std::stoul(token)));
      token.clear();
    };
    for (char ch : body) {
      if (ch == sep || std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else {
        token.push_back(ch);
      }
    }
    flush();
    return values;
  };

  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated one-line permutation");
    auto images = read_numbers(text.substr(1, text.size() - 2), ',');
    if (m != 0 && images.size() != m) {
      throw DegreeMismatch("one-line permutation has " + std::to_string(images.size()) +
                           " entries, expected " + std::to_string(m));
    }
    try {
      return Perm(std::move(images));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }

  if (text.front() != '(') throw ParseError("permutation must start with '(' or '['");
  if (m == 0) throw ParseError("cycle notation needs the degree");
  std::vector<Letter> images(m);
  std::iota(images.begin(), images.end(), Letter{0});
  std::vector<bool> used(m, false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle");
    auto cycle = read_numbers(text.substr(pos + 1, close - pos - 1), ',');
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Letter x = cycle[i];
      if (x >= m) throw ParseError("cycle entry " + std::to_string(x) + " out of range");
      if (used[x]) throw ParseError("letter " + std::to_string(x) + " repeated in cycles");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return Perm(std::move(images));
}

std::string to_one_line(const Perm& p) {
  std::string out = "[";
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (x > 0) out += ',';
    out += std::to_string(p(static_cast<Letter>(x)));
  }
  out += ']';
  return out;
}

std::string to_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (seen[x] || p(static_cast<Letter>(x)) == x) continue;
    out += '(';
    for (Letter y = static_cast<Letter>(x); !seen[y]; y = p(y)) {
      if (y != x) out += ' ';
      out += std::to_string(y);
      seen[y] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Letter> orbit(std::span<const Perm> gens, std::size_t m, Letter x) {
  for (const auto& g : gens) {
    if (g.degree() != m) throw DegreeMismatch("generator degree differs from m");
  }
  std::vector<Letter> result{x};
  std::vector<bool> seen(m, false);
  seen[x] = true;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (const auto& g : gens) {
      const Letter y = g(result[i]);
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  return result;
}

bool is_transitive(std::span<const Perm> gens, std::size_t m) {
  if (m <= 1) return true;
  return orbit(gens, m, 0).size() == m;
}

std::vector<Perm> generate_group(std::span<const Perm> gens, std::size_t m, std::size_t cap) {
  std::vector<Perm> elements{Perm::identity(m)};
  std::unordered_set<Perm> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = compose(elements[i], g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("permutation group exceeds cap");
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<Perm> point_stabilizer(std::size_t m, Letter x) {
  std::vector<Letter> rest;
  for (Letter y = 0; y < m; ++y) {
    if (y != x) rest.push_back(y);
  }
  std::vector<Perm> result;
  do {
    std::vector<Letter> images(m);
    images[x] = x;
    std::size_t k = 0;
    for (Letter y = 0; y < m; ++y) {
      if (y != x) images[y] = rest[k++];
    }
    result.emplace_back(std::move(images));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(result.begin(), result.end());
  return result;
}

UnitResidue::UnitResidue(std::int64_t u, std::size_t m) : m_(m) {
  if (m == 0) throw Error("modulus must be positive");
  const auto mm = static_cast<std::int64_t>(m);
  u_ = static_cast<std::size_t>(((u % mm) + mm) % mm);
  if (std::gcd(u_, m_) != 1) {
    throw Error(std::to_string(u) + " is not a unit modulo " + std::to_string(m));
  }
}

UnitResidue UnitResidue::inverse() const {
  for (std::size_t v = 1; v <= m_; ++v) {
    if ((u_ * v) % m_ == 1 % m_) return UnitResidue(static_cast<std::int64_t>(v % m_), m_);
  }
  return *this;  // m = 1
}

std::vector<UnitResidue> units(std::size_t m) {
  std::vector<UnitResidue> result;
  for (std::size_t u = 0; u < m; ++u) {
    if (std::gcd(u, m) == 1) result.emplace_back(static_cast<std::int64_t>(u), m);
  }
  return result;
}

std::size_t euler_phi(std::size_t m) { return units(m).size(); }

Perm unit_perm(const UnitResidue& u) {
  const std::size_t m = u.modulus();
  std::vector<Letter> images(m);
  for (std::size_t x = 0; x < m; ++x) images[x] = static_cast<Letter>((u.value() * x) % m);
  return Perm(std::move(images));
}

std::vector<Perm> normalizer_Am_fixing(std::size_t m, Letter x) {
  if (m < 2) throw Error("normalizer needs m >= 2");
  if (x >= m) throw Error("letter out of range");
  std::vector<Perm> result;
  for (const auto& u : units(m)) {
    std::vector<Letter> images(m);
    for (std::size_t y = 0; y < m; ++y) {
      images[y] = static_cast<Letter>((u.value() * ((y + m - x) % m) + x) % m);
    }
    result.emplace_back(std::move(images));
  }
  return result;
}

}  // namespace madic
