#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superstein/cyclic.hpp"
#include "superstein/lie_superalgebra.hpp"
#include "superstein/matrix_superlie.hpp"
#include "superstein/superalgebra.hpp"

namespace superstein {

/// Concrete model of st_{m|n}(A) with coordinates
///   F-part: F_ij(e_a) for i ≠ j (cells in lexicographic order), dim(A) each;
///   h-part: h(a,b), indexed by the basis of <<A,A>>;
///   D-part: D_j(e_c) := H_1j(1, e_c) for j = 2..N.
/// Indices are 0-based (names print them 1-based). Brackets follow the
/// relations of st, the H-identities for [H, F], and the Jacobi
/// expansion through the F-part for [H, H]. The full table is assembled once.
class StModel {
public:
  enum class Part { f, h, d };
  struct Coord {
    Part part;
    std::size_t i = 0, j = 0;  // F: (i, j); D: j; h: unused
    std::size_t index = 0;     // A basis index (F, D) or pairing basis index (h)
  };

  /// m == 0 shapes are swapped to n|0 (the Lie superalgebra is unchanged since
  /// only |i| + |j| enters the parities and signs); swapped() reports it.
  /// `expansion_index` is the 0-based j* used to expand h(a,b) = H_{1 j*}(...).
  /// With `verify`, the st relations and Lie axioms are checked exhaustively
  /// and a failure throws ConstructionError naming the witness.
  StModel(const SuperAlgebra& a, MatrixShape shape, std::size_t expansion_index = 1, bool verify = true);

  const SuperAlgebra& algebra() const { return algebra_; }
  const MatrixShape& shape() const { return shape_; }
  bool swapped() const { return swapped_; }
  std::size_t expansion_index() const { return j_star_; }
  std::size_t size() const { return shape_.size(); }
  const PairingModule& pairing() const { return pairing_; }

  std::size_t dim() const { return d_offset_ + (size() - 1) * algebra_.dim(); }
  std::size_t f_dim() const { return h_offset_; }
  std::size_t h_offset() const { return h_offset_; }
  std::size_t h_dim() const { return pairing_.dim(); }
  std::size_t d_offset() const { return d_offset_; }
  std::size_t d_dim() const { return (size() - 1) * algebra_.dim(); }

  std::size_t f_index(std::size_t i, std::size_t j, std::size_t a) const;
  std::size_t h_index(std::size_t q) const { return h_offset_ + q; }
  std::size_t d_index(std::size_t j, std::size_t c) const { return d_offset_ + (j - 1) * algebra_.dim() + c; }
  Coord decode(std::size_t x) const;
  int parity(std::size_t x) const { return parity_[x]; }
  const std::vector<int>& parities() const { return parity_; }
  std::string basis_name(std::size_t x) const;

  /// F_ij(v), h(e_a, e_b), D_j(v) as coordinate vectors.
  SparseVec F(std::size_t i, std::size_t j, const SparseVec& v) const;
  SparseVec h(std::size_t a, std::size_t b) const;
  SparseVec D(std::size_t j, const SparseVec& v) const;

  /// Canonical (h + D) coordinates of H_ij(e_a, e_b) = [F_ij(e_a), F_ji(e_b)].
  SparseVec normalize_H(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const;
  /// Bilinear extension to vectors of A.
  SparseVec normalize_H(std::size_t i, std::size_t j, const SparseVec& a, const SparseVec& b) const;

  const SparseVec& bracket(std::size_t x, std::size_t y) const { return table_[x * dim() + y]; }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

  /// Structure-constant form with weights ε_i − ε_j on F_ij and 0 on h, D.
  /// Lie axioms are checked when the model is built.
  const FinLieSuper& lie() const { return lie_; }
  bool verified() const { return verified_; }

private:
  SparseVec compute_bracket(std::size_t x, std::size_t y) const;
  // [H_ij(a,b), F_kl(c)] for basis elements
  SparseVec h_on_f(std::size_t i, std::size_t j, std::size_t a, std::size_t b, std::size_t k, std::size_t l,
                   std::size_t c) const;
  // An h- or D-basis vector as Σ coeff · H_{1j}(a, b)
  struct HTerm {
    std::size_t j, a, b;
    Scalar coeff;
  };
  std::vector<HTerm> expand(std::size_t x) const;
  SparseVec f_bracket(std::size_t x, std::size_t y) const;
  SparseVec hf_bracket(std::size_t x, std::size_t y) const;

  SuperAlgebra algebra_;
  MatrixShape shape_;
  bool swapped_ = false;
  bool verified_ = false;
  std::size_t j_star_ = 1;
  PairingModule pairing_;
  std::vector<std::size_t> cell_of_;  // i * N + j -> F cell number, or npos on the diagonal
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::size_t h_offset_ = 0, d_offset_ = 0;
  std::vector<int> parity_;
  std::vector<SparseVec> table_;
  FinLieSuper lie_;
};

/// φ: st -> gl: F_ij(a) ↦ E_ij(a), h(a,b) ↦ E_11([a,b]),
/// D_j(c) ↦ E_11(c) − (−1)^{|j|(|j|+|c|)} E_jj(c). Result in gl coordinates.
SparseVec phi(const StModel& model, std::size_t x);
/// Rows: gl coordinates; columns: model coordinates.
Matrix phi_matrix(const StModel& model);

/// ν: reads the h-part, giving coordinates in <<A,A>>.
SparseVec nu(const StModel& model, const SparseVec& x);

struct KernelPhiReport {
  SubspaceBasis kernel;
  /// μ(HC_1(A)) placed in the h-part.
  SubspaceBasis hc1_image;
  std::size_t hc1_dim = 0;
  bool hc1_match = false;  // kernel == μ(HC_1) and dims agree
  bool central = false;    // kernel ⊆ center
};

KernelPhiReport kernel_phi(const StModel& model);

struct Check {
  bool pass = true;
  std::string witness;  // empty on pass
};

/// d∘ν = str∘φ on every basis vector.
Check diagram_check(const StModel& model);

struct StVerification {
  Check relations;     // [F_ij(a), F_jk(b)] = F_ik(ab); [F_ij(a), F_kl(b)] = 0 for j≠k, l≠i
  Check axioms;        // grading, skew, Jacobi
  Check expansion;     // same table for j* = 2 and j* = N
  Check homomorphism;  // φ[x,y] = [φx, φy]
  Check nu_section;    // ν(h_q) = e_q
  bool pass() const {
    return relations.pass && axioms.pass && expansion.pass && homomorphism.pass && nu_section.pass;
  }
};

StVerification verify_st(const StModel& model);

}  // namespace superstein
