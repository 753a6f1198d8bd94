#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superstein/linear.hpp"
#include "superstein/scalar.hpp"

namespace superstein {

/// Finite-dimensional Lie superalgebra in structure-constant form.
///
/// bracket(i, j) is the coordinate vector of [e_i, e_j]. An optional integer
/// weight per basis vector records a grading the bracket respects (weights add);
/// homology uses it to split the Chevalley-Eilenberg complex into blocks.
class FinLieSuper {
public:
  using Weight = std::vector<int>;

  FinLieSuper() = default;
  /// Throws std::invalid_argument on size mismatches or bad parities.
  FinLieSuper(std::string label, Field field, std::vector<std::string> basis_names, std::vector<int> parity,
              std::vector<SparseVec> table, std::vector<Weight> weights = {});

  const std::string& label() const { return label_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return parity_.size(); }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  const std::string& basis_name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const SparseVec& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

  bool has_weights() const { return !weights_.empty(); }
  const Weight& weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Weight>& weights() const { return weights_; }

  /// Same algebra with basis vector perm[i] of this becoming basis vector i.
  FinLieSuper permuted(const std::vector<std::size_t>& perm) const;
  FinLieSuper without_weights() const;
  FinLieSuper relabeled(std::string label) const;

private:
  std::string label_;
  Field field_ = Field::rationals();
  std::vector<std::string> names_;
  std::vector<int> parity_;
  std::vector<SparseVec> table_;
  std::vector<Weight> weights_;
};

struct LieAxiomIssue {
  enum class Kind { skew, grading, weight, jacobi };
  Kind kind;
  std::vector<std::size_t> witness;
  std::string message;
};

/// First violation found among grading, weights, super skew-symmetry
/// [x,y] = -(-1)^{|x||y|}[y,x] and super Jacobi
/// [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]], checked exhaustively on
/// basis pairs and triples. The witness is the lexicographically first failure.
std::optional<LieAxiomIssue> check_lie_axioms(const FinLieSuper& l);

/// Throws ConstructionError naming the witness unless check_lie_axioms passes.
void require_lie_axioms(const FinLieSuper& l);

/// Restriction of the bracket to a subspace closed under it; basis = s.vectors().
/// Throws ConstructionError when a bracket leaves the subspace or a basis
/// vector is not homogeneous. Weights carry over when every basis vector is
/// weight-homogeneous.
FinLieSuper restrict_to(const FinLieSuper& l, const SubspaceBasis& s, std::string label,
                        std::vector<std::string> names = {});

/// Abelian Lie superalgebra with the given parities.
FinLieSuper abelian(const std::vector<int>& parity, const Field& field = Field::rationals());

/// "3*e1 - 1/2*e4", or "0".
std::string format_vector(const SparseVec& v, const std::vector<std::string>& names);

}  // namespace superstein
