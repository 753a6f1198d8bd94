#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "superstein/scalar.hpp"

namespace superstein {

/// Sparse coordinate vector: sorted (index, value) pairs with no stored zeros.
class SparseVec {
public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  static SparseVec unit(std::size_t index, Scalar value = Scalar(1));
  static SparseVec from_dense(std::span<const Scalar> dense);

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Leading (smallest) index; requires !empty().
  std::size_t leading() const { return entries_.front().first; }
  Scalar at(std::size_t index) const;
  std::vector<Scalar> to_dense(std::size_t size) const;

  /// this += c * x
  void axpy(const Scalar& c, const SparseVec& x);
  void add_term(std::size_t index, const Scalar& value);
  void scale(const Scalar& c);
  SparseVec scaled(const Scalar& c) const;
  /// Re-index every entry through `map` (entries mapped to the same index accumulate).
  template <class F>
  SparseVec remapped(F&& map) const {
    SparseVec out;
    for (const auto& [i, v] : entries_) out.add_term(map(i), v);
    return out;
  }

  SparseVec& operator+=(const SparseVec& x) { axpy(Scalar(1), x); return *this; }
  SparseVec& operator-=(const SparseVec& x) { axpy(Scalar(-1), x); return *this; }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

private:
  std::vector<Entry> entries_;
};

/// Row-major sparse matrix. `apply` treats the matrix as acting on column vectors.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static Matrix from_rows(std::size_t cols, std::vector<SparseVec> rows);
  /// Matrix whose columns are the given vectors (each of length `rows`).
  static Matrix from_columns(std::size_t rows, std::span<const SparseVec> columns);
  static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseVec& row(std::size_t r) const { return rows_[r]; }
  SparseVec& row(std::size_t r) { return rows_[r]; }
  const std::vector<SparseVec>& row_list() const { return rows_; }

  SparseVec apply(const SparseVec& x) const;
  Matrix transposed() const;
  /// this * rhs
  Matrix multiply(const Matrix& rhs) const;
  bool is_zero() const;

private:
  std::size_t cols_ = 0;
  std::vector<SparseVec> rows_;
};

/// Canonical basis of a subspace of K^n in reduced row echelon form.
///
/// Two subspaces are equal iff their SubspaceBasis values compare equal.
class SubspaceBasis {
public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}
  static SubspaceBasis span(std::size_t ambient_dim, std::span<const SparseVec> vectors);
  static SubspaceBasis whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVec>& vectors() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the spanning set; returns true when the dimension grew.
  bool insert(SparseVec v);
  /// v minus its component along the pivots: zero iff v is in the span.
  SparseVec remainder(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return remainder(v).empty(); }
  bool contains(const SubspaceBasis& other) const;
  /// Coordinates of v w.r.t. vectors(); nullopt when v is outside the span.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

private:
  std::optional<std::size_t> row_of_pivot(std::size_t column) const;

  std::size_t ambient_;
  std::vector<SparseVec> rows_;     // sorted by pivot
  std::vector<std::size_t> pivots_;  // ascending
};

struct Reduction {
  std::size_t rank = 0;
  SubspaceBasis rowspace;
  SubspaceBasis kernel;
};

/// Row-reduces `m`: rank, canonical row space, and null space (m x = 0).
/// Throws std::invalid_argument for a zero-width matrix with rows.
Reduction reduce(const Matrix& m);
/// Rank only; skips back substitution. Maps with a zero-dimensional domain have rank 0.
std::size_t rank(const Matrix& m);
SubspaceBasis kernel(const Matrix& m);
SubspaceBasis image(const Matrix& m);

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);

struct QuotientResult {
  std::size_t dim = 0;
  /// Vectors of `a` whose classes form a basis of a/b.
  std::vector<SparseVec> section;
};
/// a/b; throws std::invalid_argument when b is not contained in a.
QuotientResult subspace_quotient(const SubspaceBasis& a, const SubspaceBasis& b);

/// K^n / U with canonical coordinates on the non-pivot columns of U.
///
/// The class of e_c for a free column c is the c-th quotient basis vector, so
/// project(lift(q)) == q and project kills exactly U.
class QuotientSpace {
public:
  QuotientSpace() = default;
  explicit QuotientSpace(SubspaceBasis relations);

  std::size_t ambient_dim() const { return relations_.ambient_dim(); }
  std::size_t dim() const { return free_.size(); }
  const SubspaceBasis& relations() const { return relations_; }
  /// Ambient column represented by quotient coordinate q.
  std::size_t free_column(std::size_t q) const { return free_[q]; }
  const std::vector<std::size_t>& free_columns() const { return free_; }

  SparseVec project(const SparseVec& v) const;
  SparseVec lift(const SparseVec& q) const;

private:
  SubspaceBasis relations_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> coordinate_of_;  // ambient column -> quotient index, or npos
};

}  // namespace superstein
