#pragma once

#include <cstddef>
#include <utility>

#include "superstein/linear.hpp"
#include "superstein/superalgebra.hpp"

namespace superstein {

/// <<A,A>> = (A ⊗ A) / I, where I is spanned over homogeneous basis tuples by
///   a⊗b + (-1)^{|a||b|} b⊗a
///   (-1)^{|a||c|} a⊗bc + (-1)^{|b||a|} b⊗ca + (-1)^{|c||b|} c⊗ab
/// together with the induced commutator map d: <<a,b>> -> [a,b].
///
/// Tensor coordinates: e_a ⊗ e_b sits at index a * dim(A) + b.
class PairingModule {
public:
  explicit PairingModule(const SuperAlgebra& a);

  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t dim() const { return quotient_.dim(); }
  const SubspaceBasis& relations() const { return quotient_.relations(); }

  /// Class of a tensor in A ⊗ A.
  SparseVec project(const SparseVec& tensor) const { return quotient_.project(tensor); }
  /// <<e_a, e_b>>
  SparseVec pair(std::size_t a, std::size_t b) const { return project(SparseVec::unit(a * algebra_dim_ + b)); }
  /// Basis pair (a, b) whose class is quotient basis vector q.
  std::pair<std::size_t, std::size_t> representative(std::size_t q) const;
  SparseVec section(std::size_t q) const { return quotient_.lift(SparseVec::unit(q)); }

  /// Matrix of d (rows: coordinates of A, columns: quotient basis).
  const Matrix& commutator_map() const { return commutator_; }
  SparseVec commutator(const SparseVec& pairing_coords) const { return commutator_.apply(pairing_coords); }

private:
  std::size_t algebra_dim_ = 0;
  QuotientSpace quotient_;
  Matrix commutator_;
};

struct HC1Result {
  std::size_t dim = 0;
  /// Basis of ker d in PairingModule coordinates.
  SubspaceBasis basis;
};

/// HC_1(A) = ker(d: <<A,A>> -> A).
HC1Result hc1(const PairingModule& pairing);
HC1Result hc1(const SuperAlgebra& a);

inline constexpr std::size_t kDefaultMaxChain = 20000;

/// One level of the cyclic complex: C_n(A) = A^{⊗(n+1)} / I_n with
/// I_n spanned by a_0⊗…⊗a_n − (−1)^{n+|a_n|Σ|a_i|} a_n⊗a_0⊗…⊗a_{n−1},
/// and the induced boundary d_n: C_n -> C_{n-1} (zero for n = 0).
struct ChainLevel {
  std::size_t degree = 0;
  QuotientSpace space;
  /// rows: C_{n-1} coordinates; columns: C_n coordinates. Empty for n = 0.
  Matrix boundary;
  /// The unreduced boundary maps every I_n generator into I_{n-1}.
  bool well_defined = true;

  std::size_t dim() const { return space.dim(); }
};

/// Throws SizeGuardError when dim(A)^(n+1) exceeds max_chain.
ChainLevel chain_level(const SuperAlgebra& a, std::size_t n, std::size_t max_chain = kDefaultMaxChain);

/// The unreduced boundary on a basis tuple (encoded base dim(A), most
/// significant slot first), as a vector in A^{⊗n}.
SparseVec cyclic_boundary_on_tuple(const SuperAlgebra& a, std::size_t n, std::size_t tuple_index);

/// dim HC_n(A) = dim ker d_n − rank d_{n+1}.
std::size_t hc_n(const SuperAlgebra& a, std::size_t n, std::size_t max_chain = kDefaultMaxChain);

struct HC1CrossCheck {
  std::size_t pairing_route = 0;
  std::size_t complex_route = 0;
  bool pass() const { return pairing_route == complex_route; }
};

HC1CrossCheck hc1_crosscheck(const SuperAlgebra& a, std::size_t max_chain = kDefaultMaxChain);

}  // namespace superstein
