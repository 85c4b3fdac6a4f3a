#include "madic/zmod_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "madic/error.hpp"

namespace madic {

namespace {

Residue reduce(Residue v, std::size_t m) {
  const auto mm = static_cast<Residue>(m);
  return ((v % mm) + mm) % mm;
}

// g = gcd(a, b) = s·a + t·b
std::tuple<Residue, Residue, Residue> ext_gcd(Residue a, Residue b) {
  Residue old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Residue q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// A unit w with w·a ≡ gcd(a, m) (mod m).
Residue normalizing_unit(Residue a, std::size_t m) {
  const auto mm = static_cast<Residue>(m);
  const Residue g = std::gcd(a, mm);
  const Residue quotient = mm / g;
  auto [h, s, t] = ext_gcd(a / g, quotient);
  (void)h;
  (void)t;
  Residue w = reduce(s, static_cast<std::size_t>(quotient));
  while (std::gcd(w, mm) != 1) w += quotient;
  return reduce(w, m);
}

// Augmented rows: the left `width` entries are reduced, the rest is carried.
struct Row {
  ZmodVector entries;
};

void axpy(ZmodVector& y, Residue k, const ZmodVector& x, std::size_t m) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = reduce(y[i] + k * x[i], m);
}

bool left_zero(const ZmodVector& v, std::size_t width) {
  return std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(width),
                     [](Residue e) { return e == 0; });
}

struct Reduced {
  std::vector<ZmodVector> rows;  // full augmented rows
  std::vector<std::size_t> pivots;
};

// Howell reduction of the left `width` columns; trailing columns are carried.
Reduced howell_rows(std::vector<ZmodVector> pending, std::size_t width, std::size_t m) {
  Reduced out;
  const auto mm = static_cast<Residue>(m);
  for (std::size_t c = 0; c < width; ++c) {
    std::optional<ZmodVector> pivot;
    std::vector<ZmodVector> next;
    for (auto& v : pending) {
      if (left_zero(v, width)) continue;
      if (v[c] == 0) {
        next.push_back(std::move(v));
        continue;
      }
      if (!pivot) {
        pivot = std::move(v);
        continue;
      }
      const Residue p = (*pivot)[c];
      const Residue q = v[c];
      auto [g, s, t] = ext_gcd(p, q);
      ZmodVector combined(pivot->size());
      ZmodVector eliminated(pivot->size());
      for (std::size_t i = 0; i < combined.size(); ++i) {
        combined[i] = reduce(s * (*pivot)[i] + t * v[i], m);
        eliminated[i] = reduce((q / g) * (*pivot)[i] - (p / g) * v[i], m);
      }
      pivot = std::move(combined);
      next.push_back(std::move(eliminated));
    }
    if (pivot) {
      const Residue w = normalizing_unit((*pivot)[c], m);
      for (auto& e : *pivot) e = reduce(e * w, m);
      const Residue g = (*pivot)[c];
      ZmodVector annihilated(pivot->size());
      for (std::size_t i = 0; i < annihilated.size(); ++i) {
        annihilated[i] = reduce((mm / g) * (*pivot)[i], m);
      }
      next.push_back(std::move(annihilated));
      out.rows.push_back(std::move(*pivot));
      out.pivots.push_back(c);
    }
    pending = std::move(next);
  }
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const std::size_t c = out.pivots[i];
    const Residue g = out.rows[i][c];
    for (std::size_t j = 0; j < i; ++j) {
      const Residue q = out.rows[j][c] / g;
      if (q != 0) axpy(out.rows[j], -q, out.rows[i], m);
    }
  }
  return out;
}

void require_modulus(std::size_t m) {
  if (m < 2) throw Error("modulus must be at least 2");
}

}  // namespace

ZmodMatrix::ZmodMatrix(std::size_t modulus, std::size_t rows, std::size_t cols)
    : m_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_modulus(modulus);
}

ZmodMatrix::ZmodMatrix(std::size_t modulus, const std::vector<std::vector<Residue>>& rows)
    : ZmodMatrix(modulus, rows.empty() ? 0 : rows.front().size(), rows) {}

ZmodMatrix::ZmodMatrix(std::size_t modulus, std::size_t cols, const std::vector<ZmodVector>& rows)
    : ZmodMatrix(modulus, rows.size(), cols) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DegreeMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) set(r, c, rows[r][c]);
  }
}

ZmodMatrix ZmodMatrix::identity(std::size_t modulus, std::size_t n) {
  ZmodMatrix result(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) result.set(i, i, 1);
  return result;
}

void ZmodMatrix::set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = reduce(v, m_); }

ZmodVector ZmodMatrix::row(std::size_t r) const {
  return ZmodVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ZmodVector ZmodMatrix::column(std::size_t c) const {
  ZmodVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<ZmodVector> ZmodMatrix::row_list() const {
  std::vector<ZmodVector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<ZmodVector> ZmodMatrix::column_list() const {
  std::vector<ZmodVector> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

ZmodMatrix ZmodMatrix::transpose() const {
  ZmodMatrix t(m_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  }
  return t;
}

ZmodMatrix ZmodMatrix::scaled(Residue k) const {
  ZmodMatrix out = *this;
  for (auto& e : out.data_) e = reduce(e * k, m_);
  return out;
}

ZmodMatrix operator*(const ZmodMatrix& a, const ZmodMatrix& b) {
  if (a.m_ != b.m_ || a.cols_ != b.rows_) throw DegreeMismatch("matrix shapes do not compose");
  ZmodMatrix out(a.m_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Residue acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc = reduce(acc + a(i, k) * b(k, j), a.m_);
      out.set(i, j, acc);
    }
  }
  return out;
}

std::string ZmodMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ',';
      out += std::to_string((*this)(r, c));
    }
    out += ']';
  }
  return out + "]";
}

CanonicalSubmodule::CanonicalSubmodule(std::size_t modulus, std::size_t dimension,
                                       std::vector<ZmodVector> basis,
                                       std::vector<std::size_t> pivots)
    : m_(modulus), dim_(dimension), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

bool CanonicalSubmodule::contains(ZmodVector v) const {
  if (v.size() != dim_) throw DegreeMismatch("vector length differs from ambient dimension");
  for (auto& e : v) e = reduce(e, m_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    for (std::size_t k = 0; k < c; ++k) {
      if (v[k] != 0) return false;
    }
    const Residue g = basis_[i][c];
    if (v[c] % g != 0) return false;
    axpy(v, -(v[c] / g), basis_[i], m_);
  }
  return std::all_of(v.begin(), v.end(), [](Residue e) { return e == 0; });
}

boost::multiprecision::cpp_int CanonicalSubmodule::size() const {
  boost::multiprecision::cpp_int n = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    n *= static_cast<Residue>(m_) / basis_[i][pivots_[i]];
  }
  return n;
}

std::optional<std::size_t> CanonicalSubmodule::free_rank() const {
  boost::multiprecision::cpp_int n = size();
  std::size_t k = 0;
  while (n > 1) {
    if (n % m_ != 0) return std::nullopt;
    n /= m_;
    ++k;
  }
  return k;
}

ZmodMatrix CanonicalSubmodule::as_matrix() const { return ZmodMatrix(m_, dim_, basis_); }

CanonicalSubmodule howell(const ZmodMatrix& m) {
  auto reduced = howell_rows(m.row_list(), m.cols(), m.modulus());
  return CanonicalSubmodule(m.modulus(), m.cols(), std::move(reduced.rows),
                            std::move(reduced.pivots));
}

bool span_equal(const ZmodMatrix& a, const ZmodMatrix& b) {
  if (a.modulus() != b.modulus()) throw DegreeMismatch("different moduli");
  if (a.cols() != b.cols()) throw DegreeMismatch("different ambient dimensions");
  return howell(a) == howell(b);
}

std::optional<ZmodMatrix> solve_right(const ZmodMatrix& a, const ZmodMatrix& b) {
  if (a.modulus() != b.modulus()) throw DegreeMismatch("different moduli");
  if (a.rows() != b.rows()) throw DegreeMismatch("row counts differ");
  const std::size_t m = a.modulus();
  const std::size_t width = b.rows();  // ambient dimension of the column spaces
  const std::size_t k = b.cols();
  // Rows [col_j(B) | e_j]; the carried part records the combination.
  std::vector<ZmodVector> rows;
  for (std::size_t j = 0; j < k; ++j) {
    ZmodVector v = b.column(j);
    v.resize(width + k, 0);
    v[width + j] = 1;
    rows.push_back(std::move(v));
  }
  const auto reduced = howell_rows(std::move(rows), width, m);

  ZmodMatrix result(m, k, a.cols());
  for (std::size_t col = 0; col < a.cols(); ++col) {
    ZmodVector target = a.column(col);
    ZmodVector coeffs(k, 0);
    for (std::size_t i = 0; i < reduced.rows.size(); ++i) {
      const std::size_t c = reduced.pivots[i];
      const Residue g = reduced.rows[i][c];
      if (target[c] % g != 0) return std::nullopt;
      const Residue q = target[c] / g;
      for (std::size_t t = 0; t < width; ++t) target[t] = reduce(target[t] - q * reduced.rows[i][t], m);
      for (std::size_t t = 0; t < k; ++t) coeffs[t] = reduce(coeffs[t] + q * reduced.rows[i][width + t], m);
    }
    if (!std::all_of(target.begin(), target.end(), [](Residue e) { return e == 0; })) {
      return std::nullopt;
    }
    for (std::size_t t = 0; t < k; ++t) result.set(t, col, coeffs[t]);
  }
  return result;
}

bool is_invertible(const ZmodMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return howell(a).free_rank() == a.rows() &&
         howell(a).size() == boost::multiprecision::pow(boost::multiprecision::cpp_int(a.modulus()),
                                                        static_cast<unsigned>(a.rows()));
}

ZmodMatrix permute_coords(const ZmodMatrix& m, const Perm& p) {
  const std::size_t n = p.degree();
  if (p(0) != 0) throw Error("coordinate permutation must fix 0");
  if (m.rows() + 1 != n) throw DegreeMismatch("rows must be indexed by X∖{0}");
  ZmodMatrix out(m.modulus(), m.rows(), m.cols());
  for (std::size_t x = 1; x < n; ++x) {
    const std::size_t src = p(static_cast<Letter>(x));
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(x - 1, c, m(src - 1, c));
  }
  return out;
}

}  // namespace madic
