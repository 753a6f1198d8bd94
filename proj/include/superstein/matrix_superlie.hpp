#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "superstein/lie_superalgebra.hpp"
#include "superstein/linear.hpp"
#include "superstein/superalgebra.hpp"

namespace superstein {

/// Index set {0, ..., m+n-1}: the first m indices are even, the rest odd.
/// Indices are 0-based throughout the API; names and reports print them 1-based.
struct MatrixShape {
  int m = 0;
  int n = 0;

  std::size_t size() const { return static_cast<std::size_t>(m + n); }
  int parity(std::size_t i) const { return static_cast<int>(i) < m ? 0 : 1; }
  /// "m|n"
  std::string to_string() const;
  /// Parses "m|n" or "mxn". Throws std::invalid_argument.
  static MatrixShape parse(std::string_view text);

  friend bool operator==(const MatrixShape&, const MatrixShape&) = default;
};

/// Throws std::invalid_argument unless m + n >= 3.
void require_sl_shape(const MatrixShape& shape);

/// gl_{m|n}(A) coordinates: E_ij(e_a) sits at (i * N + j) * dim(A) + a.
class GlLayout {
public:
  GlLayout(const SuperAlgebra& a, MatrixShape shape) : algebra_(&a), shape_(shape) {}

  const SuperAlgebra& algebra() const { return *algebra_; }
  const MatrixShape& shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }
  std::size_t dim() const { return size() * size() * algebra_->dim(); }
  std::size_t index(std::size_t i, std::size_t j, std::size_t a) const { return (i * size() + j) * algebra_->dim() + a; }
  /// Parity |i| + |j| + |a| of the basis vector at `index`.
  int parity(std::size_t index) const;
  /// E_ij(v) for a vector v of A.
  SparseVec cell(std::size_t i, std::size_t j, const SparseVec& v) const;
  std::string basis_name(std::size_t index) const;

private:
  const SuperAlgebra* algebra_;
  MatrixShape shape_;
};

/// A matrix over A in gl coordinates.
struct GlElement {
  MatrixShape shape;
  SparseVec coords;
};

/// [E_ij(e_a), E_kl(e_b)] = δ_jk E_il(ab) − (−1)^{|E_ij(a)||E_kl(b)|} δ_li E_kj(ba).
SparseVec gl_unit_bracket(const GlLayout& g, std::size_t x, std::size_t y);
/// Bilinear extension over basis vectors (each basis vector is homogeneous).
SparseVec gl_bracket(const GlLayout& g, const SparseVec& x, const SparseVec& y);
/// Throws std::invalid_argument on shape mismatch.
GlElement gl_bracket(const SuperAlgebra& a, const GlElement& x, const GlElement& y);

/// str(E_ij(a)) = δ_ij (−1)^{|i|(|i|+|a|)} a, extended linearly; result in A.
SparseVec supertrace(const GlLayout& g, const SparseVec& x);
/// Matrix of str (rows: coordinates of A, columns: gl coordinates).
Matrix supertrace_matrix(const GlLayout& g);

struct SlSpaces {
  SubspaceBasis derived;          // [gl, gl]
  SubspaceBasis trace_criterion;  // {X : str X ∈ [A,A]}
  bool equal = false;
  /// derived ⊆ trace_criterion; the only claim made when m = 0.
  bool contained = false;
  bool equality_claimed = false;  // m >= 1
};

SlSpaces sl_space(const SuperAlgebra& a, const MatrixShape& shape);

struct PerfectnessReport {
  bool perfect = false;
  std::size_t derived_dim = 0;
  SubspaceBasis center;
};

/// perfect ⇔ [L,L] = L; center = joint kernel of all ad maps.
PerfectnessReport perfectness_and_center(const FinLieSuper& l);
/// [L,L] as a subspace.
SubspaceBasis derived_subalgebra(const FinLieSuper& l);

enum class LieSource { gl, sl, st, st_sharp };
/// Parses "gl", "sl", "st", "stsharp" / "st_sharp".
LieSource parse_lie_source(std::string_view text);
std::string to_string(LieSource s);

/// Structure-constant form of the named construction, with Lie axioms verified
/// exhaustively (throws ConstructionError with the witness). gl and sl carry
/// the root weights ε_i − ε_j. st_sharp ignores `shape` beyond requiring 2|2.
FinLieSuper concretize(LieSource source, const SuperAlgebra& a, const MatrixShape& shape);
FinLieSuper concretize_gl(const SuperAlgebra& a, const MatrixShape& shape);
FinLieSuper concretize_sl(const SuperAlgebra& a, const MatrixShape& shape);

/// Weight ε_i − ε_j in Z^N.
std::vector<int> root_weight(std::size_t size, std::size_t i, std::size_t j);

}  // namespace superstein
