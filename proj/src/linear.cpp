#include "superstein/linear.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace superstein {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

Scalar dot(const SparseVec& a, const SparseVec& b) {
  Scalar acc;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      acc += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

// Structured Gaussian elimination: columns left to right, and within a column
// the shortest candidate row becomes the pivot. Returns echelon rows with
// leading entry 1, pivots ascending. With `back_substitute` the result is RREF.
std::vector<SparseVec> echelonize(std::vector<SparseVec> rows, std::size_t cols, bool back_substitute) {
  std::vector<std::vector<std::size_t>> bucket(cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) bucket[rows[r].leading()].push_back(r);
  }
  std::vector<SparseVec> echelon;
  for (std::size_t c = 0; c < cols; ++c) {
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    auto best = std::min_element(cand.begin(), cand.end(), [&](std::size_t x, std::size_t y) {
      return rows[x].nnz() < rows[y].nnz();
    });
    SparseVec pivot = std::move(rows[*best]);
    cand.erase(best);
    pivot.scale(pivot.entries().front().second.inverse());
    for (std::size_t r : cand) {
      SparseVec& row = rows[r];
      row.axpy(-row.entries().front().second, pivot);
      if (!row.empty()) bucket[row.leading()].push_back(r);
    }
    cand.clear();
    cand.shrink_to_fit();
    echelon.push_back(std::move(pivot));
  }
  if (back_substitute) {
    for (std::size_t k = echelon.size(); k-- > 0;) {
      const std::size_t col = echelon[k].leading();
      for (std::size_t i = 0; i < k; ++i) {
        const Scalar v = echelon[i].at(col);
        if (!v.is_zero()) echelon[i].axpy(-v, echelon[k]);
      }
    }
  }
  return echelon;
}

void check_width(const Matrix& m) {
  if (m.cols() == 0 && m.rows() > 0) throw std::invalid_argument("zero-width matrix with nonempty rows");
}

}  // namespace

// ---------------------------------------------------------------- SparseVec

SparseVec SparseVec::unit(std::size_t index, Scalar value) {
  SparseVec v;
  if (!value.is_zero()) v.entries_.emplace_back(index, std::move(value));
  return v;
}

SparseVec SparseVec::from_dense(std::span<const Scalar> dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) v.entries_.emplace_back(i, dense[i]);
  return v;
}

Scalar SparseVec::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Scalar();
}

std::vector<Scalar> SparseVec::to_dense(std::size_t size) const {
  std::vector<Scalar> out(size);
  for (const auto& [i, v] : entries_) {
    if (i >= size) throw std::out_of_range("sparse index exceeds dense size");
    out[i] = v;
  }
  return out;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& x) {
  if (c.is_zero() || x.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + x.entries_.size());
  auto ia = entries_.begin();
  auto ib = x.entries_.begin();
  while (ia != entries_.end() || ib != x.entries_.end()) {
    if (ib == x.entries_.end() || (ia != entries_.end() && ia->first < ib->first)) {
      merged.push_back(std::move(*ia++));
    } else if (ia == entries_.end() || ib->first < ia->first) {
      merged.emplace_back(ib->first, c * ib->second);
      ++ib;
    } else {
      Scalar v = std::move(ia->second);
      v += c * ib->second;
      if (!v.is_zero()) merged.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  entries_ = std::move(merged);
}

void SparseVec::add_term(std::size_t index, const Scalar& value) {
  if (value.is_zero()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, Entry(index, value));
  }
}

void SparseVec::scale(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec v = *this;
  v.scale(c);
  return v;
}

// ------------------------------------------------------------------- Matrix

Matrix Matrix::from_rows(std::size_t cols, std::vector<SparseVec> rows) {
  Matrix m;
  m.cols_ = cols;
  for (const auto& r : rows)
    if (!r.empty() && r.entries().back().first >= cols) throw std::out_of_range("row entry beyond column count");
  m.rows_ = std::move(rows);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const SparseVec> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) {
      if (r >= rows) throw std::out_of_range("column entry beyond row count");
      m.rows_[r].add_term(c, v);
    }
  }
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<SparseVec> sparse;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("rows of unequal length");
    sparse.push_back(SparseVec::from_dense(r));
  }
  return from_rows(cols, std::move(sparse));
}

SparseVec Matrix::apply(const SparseVec& x) const {
  SparseVec out;
  for (std::size_t r = 0; r < rows_.size(); ++r) out.add_term(r, dot(rows_[r], x));
  return out;
}

Matrix Matrix::transposed() const { return from_columns(cols_, rows_); }

Matrix Matrix::multiply(const Matrix& rhs) const {
  if (cols_ != rhs.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [k, v] : rows_[r]) out.rows_[r].axpy(v, rhs.row(k));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVec& r) { return r.empty(); });
}

// ------------------------------------------------------------ SubspaceBasis

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, std::span<const SparseVec> vectors) {
  for (const auto& v : vectors)
    if (!v.empty() && v.entries().back().first >= ambient_dim)
      throw std::out_of_range("vector entry beyond ambient dimension");
  SubspaceBasis s(ambient_dim);
  s.rows_ = echelonize(std::vector<SparseVec>(vectors.begin(), vectors.end()), ambient_dim, true);
  for (const auto& r : s.rows_) s.pivots_.push_back(r.leading());
  return s;
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim) {
  SubspaceBasis s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(SparseVec::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<std::size_t> SubspaceBasis::row_of_pivot(std::size_t column) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), column);
  if (it != pivots_.end() && *it == column) return static_cast<std::size_t>(it - pivots_.begin());
  return std::nullopt;
}

SparseVec SubspaceBasis::remainder(const SparseVec& v) const {
  SparseVec r = v;
  for (const auto& [col, val] : v) {
    if (auto k = row_of_pivot(col)) r.axpy(-val, rows_[*k]);
  }
  return r;
}

bool SubspaceBasis::insert(SparseVec v) {
  if (!v.empty() && v.entries().back().first >= ambient_)
    throw std::out_of_range("vector entry beyond ambient dimension");
  SparseVec r = remainder(v);
  if (r.empty()) return false;
  r.scale(r.entries().front().second.inverse());
  const std::size_t lead = r.leading();
  for (auto& row : rows_) {
    const Scalar c = row.at(lead);
    if (!c.is_zero()) row.axpy(-c, r);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const SparseVec& v) { return contains(v); });
}

std::optional<SparseVec> SubspaceBasis::coordinates(const SparseVec& v) const {
  if (!contains(v)) return std::nullopt;
  SparseVec coords;
  for (const auto& [col, val] : v)
    if (auto k = row_of_pivot(col)) coords.add_term(*k, val);
  return coords;
}

// -------------------------------------------------------- reduce / kernels

Reduction reduce(const Matrix& m) {
  check_width(m);
  Reduction out;
  out.rowspace = SubspaceBasis::span(m.cols(), m.row_list());
  out.rank = out.rowspace.dim();

  const auto& rref = out.rowspace.vectors();
  const auto& pivots = out.rowspace.pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  // Column f of the RREF, gathered once.
  std::vector<SparseVec> column(m.cols());
  for (std::size_t k = 0; k < rref.size(); ++k)
    for (const auto& [c, v] : rref[k])
      if (!is_pivot[c]) column[c].add_term(pivots[k], -v);
  std::vector<SparseVec> null_vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v = std::move(column[f]);
    v.add_term(f, Scalar(1));
    null_vectors.push_back(std::move(v));
  }
  out.kernel = SubspaceBasis::span(m.cols(), null_vectors);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.cols() == 0) return 0;
  return echelonize(m.row_list(), m.cols(), false).size();
}

SubspaceBasis kernel(const Matrix& m) { return m.cols() == 0 ? SubspaceBasis(0) : reduce(m).kernel; }

SubspaceBasis image(const Matrix& m) { return SubspaceBasis::span(m.rows(), m.transposed().row_list()); }

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<SparseVec> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis::span(a.ambient_dim(), all);
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  // Zassenhaus: rows (u | u) and (v | 0); rows with vanishing left half span a ∩ b.
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  std::vector<SparseVec> rows;
  for (const auto& u : a.vectors()) {
    SparseVec r = u;
    for (const auto& [i, v] : u) r.add_term(n + i, v);
    rows.push_back(std::move(r));
  }
  for (const auto& v : b.vectors()) rows.push_back(v);
  const auto echelon = echelonize(std::move(rows), 2 * n, true);
  std::vector<SparseVec> meet;
  for (const auto& r : echelon) {
    if (r.leading() < n) continue;
    meet.push_back(r.remapped([n](std::size_t i) { return i - n; }));
  }
  return SubspaceBasis::span(n, meet);
}

QuotientResult subspace_quotient(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  if (!a.contains(b)) throw std::invalid_argument("quotient requires the divisor to be a subspace of the dividend");
  QuotientResult out;
  SubspaceBasis acc = b;
  for (const auto& v : a.vectors())
    if (acc.insert(v)) out.section.push_back(v);
  out.dim = out.section.size();
  return out;
}

// ------------------------------------------------------------ QuotientSpace

QuotientSpace::QuotientSpace(SubspaceBasis relations)
    : relations_(std::move(relations)), coordinate_of_(relations_.ambient_dim(), kNone) {
  std::vector<bool> pivot(relations_.ambient_dim(), false);
  for (auto p : relations_.pivots()) pivot[p] = true;
  for (std::size_t c = 0; c < pivot.size(); ++c) {
    if (pivot[c]) continue;
    coordinate_of_[c] = free_.size();
    free_.push_back(c);
  }
}

SparseVec QuotientSpace::project(const SparseVec& v) const {
  return relations_.remainder(v).remapped([this](std::size_t c) { return coordinate_of_[c]; });
}

SparseVec QuotientSpace::lift(const SparseVec& q) const {
  return q.remapped([this](std::size_t i) { return free_.at(i); });
}

}  // namespace superstein
