#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superstein/linear.hpp"
#include "superstein/scalar.hpp"

namespace superstein {

/// Finite-dimensional associative unital Z/2-graded algebra given by basis
/// parities and a multiplication table.
///
/// The table is dense over basis pairs: product(i, j) is the coordinate
/// vector of e_i * e_j. The unit must be a basis element. The zero algebra
/// (dim 0) is allowed and has no unit index.
class SuperAlgebra {
public:
  static constexpr std::size_t kNoUnit = static_cast<std::size_t>(-1);

  SuperAlgebra() = default;
  /// Stores the data as given; call validate() to check the axioms.
  /// Throws std::invalid_argument for structurally malformed input
  /// (size mismatches, parities other than 0/1, out-of-range indices).
  SuperAlgebra(std::string name, Field field, std::vector<std::string> basis_names, std::vector<int> parity,
               std::size_t unit, std::vector<SparseVec> table);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return parity_.size(); }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  std::size_t unit() const { return unit_; }
  const std::string& basis_name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec unit_vector() const;
  /// Parity of a nonzero homogeneous vector; nullopt for zero or mixed vectors.
  std::optional<int> parity_of(const SparseVec& v) const;
  /// (even part, odd part)
  std::pair<SparseVec, SparseVec> split(const SparseVec& v) const;
  /// e_i e_j - (-1)^{|i||j|} e_j e_i
  SparseVec supercommutator(std::size_t i, std::size_t j) const;

  SuperAlgebra renamed(std::string name) const;

private:
  std::string name_;
  Field field_ = Field::rationals();
  std::vector<std::string> names_;
  std::vector<int> parity_;
  std::size_t unit_ = kNoUnit;
  std::vector<SparseVec> table_;
};

struct ValidationIssue {
  enum class Kind { associativity, unit, grading };
  Kind kind;
  std::vector<std::size_t> witness;  // (i,j,k) for associativity, (i) for unit, (i,j,k) for grading
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

/// Checks associativity on all basis triples, the unit law, and that products
/// respect parity. An empty report means the algebra is valid.
ValidationReport validate(const SuperAlgebra& a);

/// Builtin test algebras. Accepted spellings: field, dual, trunc(n) / truncN,
/// grassmann(k) / grassmannK (k <= 4), mat(r) / matR, mat(p|q) / matP|Q,
/// group_z(n) / group_zN. Throws std::invalid_argument for unknown names.
SuperAlgebra builtin(std::string_view label, const Field& field = Field::rationals());

/// The acceptance corpus: field, dual, trunc(3), grassmann(1), grassmann(2),
/// mat(2), mat(1|1), group_z(3).
std::vector<std::string> corpus_names();

/// [A,A] as a subspace of A.
SubspaceBasis supercommutator_span(const SuperAlgebra& a);

struct IdealQuotient {
  SubspaceBasis ideal;
  SuperAlgebra quotient;
  /// Rows = quotient coordinates, columns = coordinates of A.
  Matrix projection;
  /// Set when the unit lies in the ideal, so the quotient is the zero algebra.
  bool collapsed = false;

  SparseVec project(const SparseVec& v) const { return projection.apply(v); }
};

/// Smallest two-sided graded ideal containing `generators` (split into
/// homogeneous parts first), and the induced quotient algebra.
IdealQuotient graded_ideal_quotient(const SuperAlgebra& a, const std::vector<SparseVec>& generators);

/// The ideal generated by all supercommutators, giving the supercommutative quotient.
IdealQuotient supercommutative_quotient(const SuperAlgebra& a);

enum class CompositionKind { direct_product, super_tensor };

/// direct_product has basis {(1,1)} ∪ (basis of A minus 1) ∪ (basis of B);
/// super_tensor has basis e_i ⊗ f_j at index i * dim B + j, with
/// (a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa' ⊗ bb'. Throws on mixed fields.
SuperAlgebra compose(const SuperAlgebra& a, const SuperAlgebra& b, CompositionKind kind);

}  // namespace superstein
