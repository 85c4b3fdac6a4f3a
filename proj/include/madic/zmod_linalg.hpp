#pragma once

// Submodules of (Z/m)^n: Howell canonical form, span comparison and linear
// solving over a possibly composite modulus.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "madic/symops.hpp"

namespace madic {

using Residue = std::int64_t;
using ZmodVector = std::vector<Residue>;

/// Dense rows × cols matrix over Z/m, entries kept reduced in [0, m).
class ZmodMatrix {
 public:
  ZmodMatrix(std::size_t modulus, std::size_t rows, std::size_t cols);
  ZmodMatrix(std::size_t modulus, const std::vector<std::vector<Residue>>& rows);
  /// `rows` × `cols` shape given explicitly so that empty row lists keep their width.
  ZmodMatrix(std::size_t modulus, std::size_t cols, const std::vector<ZmodVector>& rows);

  static ZmodMatrix identity(std::size_t modulus, std::size_t n);

  std::size_t modulus() const noexcept { return m_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v);

  ZmodVector row(std::size_t r) const;
  ZmodVector column(std::size_t c) const;
  std::vector<ZmodVector> row_list() const;
  std::vector<ZmodVector> column_list() const;

  ZmodMatrix transpose() const;
  ZmodMatrix scaled(Residue k) const;
  friend ZmodMatrix operator*(const ZmodMatrix& a, const ZmodMatrix& b);
  friend bool operator==(const ZmodMatrix&, const ZmodMatrix&) = default;

  /// Row list form "[[1,2],[3,4]]".
  std::string to_string() const;

 private:
  std::size_t m_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Howell form of a row span: rows ordered by pivot column, every pivot divides
/// m, entries above a pivot reduced modulo it, and for each column c the rows
/// with pivot ≥ c span all span vectors vanishing before c.
class CanonicalSubmodule {
 public:
  CanonicalSubmodule(std::size_t modulus, std::size_t dimension,
                     std::vector<ZmodVector> basis, std::vector<std::size_t> pivots);

  std::size_t modulus() const noexcept { return m_; }
  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<ZmodVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(ZmodVector v) const;
  /// Number of elements of the span.
  boost::multiprecision::cpp_int size() const;
  /// k when the span has exactly m^k elements.
  std::optional<std::size_t> free_rank() const;
  ZmodMatrix as_matrix() const;

  friend bool operator==(const CanonicalSubmodule&, const CanonicalSubmodule&) = default;

 private:
  std::size_t m_;
  std::size_t dim_;
  std::vector<ZmodVector> basis_;
  std::vector<std::size_t> pivots_;
};

CanonicalSubmodule howell(const ZmodMatrix& m);

/// Row spans coincide. Throws DegreeMismatch on modulus or width mismatch.
bool span_equal(const ZmodMatrix& a, const ZmodMatrix& b);

/// Some M with B·M = A, or nullopt when none exists.
std::optional<ZmodMatrix> solve_right(const ZmodMatrix& a, const ZmodMatrix& b);

/// Square matrix with trivial kernel (equivalently, invertible).
bool is_invertible(const ZmodMatrix& a);

/// Rows indexed by X∖{0} = 1..m-1 (row i ↔ letter i+1); row x of the result is
/// row p(x) of M. p must fix 0.
ZmodMatrix permute_coords(const ZmodMatrix& m, const Perm& p);

}  // namespace madic
