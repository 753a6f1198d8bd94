#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superstein/lie_superalgebra.hpp"
#include "superstein/steinberg.hpp"
#include "superstein/superalgebra.hpp"

namespace superstein {

/// W = two copies of A_0 = A / I, where I is the graded ideal generated by all
/// supercommutators. Block 0 holds ε_ijkl for (i,j,k,l) in
///   P1 = {(3,1,4,2), (3,2,4,1), (4,1,3,2), (4,2,3,1)},
/// block 1 for
///   P2 = {(1,3,2,4), (1,4,2,3), (2,3,1,4), (2,4,1,3)}.
/// Tuples within a block are identified with sign +1.
struct CocycleTarget {
  IdealQuotient a0;

  std::size_t block_dim() const { return a0.quotient.dim(); }
  std::size_t dim() const { return 2 * block_dim(); }
  /// Block of a 1-based tuple, or nullopt when it lies outside P1 ⊔ P2.
  static std::optional<std::size_t> block_of(const std::array<int, 4>& tuple);
  /// Tuples of P1 (block 0) and P2 (block 1), 1-based.
  static const std::array<std::array<std::array<int, 4>, 4>, 2>& classes();
};

CocycleTarget build_W(const SuperAlgebra& a);

/// ψ(F_ij(a), F_kl(b)) = (−1)^{j+k+|b|} ε_ijkl(ab) (1-based j, k), zero on all
/// other pairs of basis vectors. `drop_b_parity` uses (−1)^{j+k} instead; it
/// exists to show that the verification detects a wrong sign.
SparseVec psi(const StModel& st, const CocycleTarget& w, std::size_t x, std::size_t y, bool drop_b_parity = false);

struct CocycleVerdict {
  bool skew = true;
  bool jacobi = true;
  std::vector<std::size_t> witness;  // failing basis pair or triple
  std::string message;
  bool pass() const { return skew && jacobi; }
};

/// Checks ψ(x,y) + (−1)^{|x||y|} ψ(y,x) = 0 on basis pairs and
/// J(x,y,z) = (−1)^{|x||z|} ψ([x,y],z) + (−1)^{|x||y|} ψ([y,z],x) + (−1)^{|y||z|} ψ([z,x],y) = 0
/// on basis triples. Throws std::invalid_argument unless the shape is 2|2.
CocycleVerdict verify_cocycle(const StModel& st, const CocycleTarget& w, bool drop_b_parity = false);
CocycleVerdict verify_cocycle(const SuperAlgebra& a, bool drop_b_parity = false);

/// st_{2|2}(A) ⊕ W with [(x,c),(y,c')] = ([x,y], ψ(x,y)). W-block parity is the
/// A_0 parity; W-block weights are ±(ε3 + ε4 − ε1 − ε2). Throws
/// ConstructionError when the cocycle check or the Lie axioms fail.
FinLieSuper build_st_sharp(const SuperAlgebra& a);
FinLieSuper build_st_sharp(const StModel& st, const CocycleTarget& w);

}  // namespace superstein
