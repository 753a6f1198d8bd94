#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superstein/lie_superalgebra.hpp"
#include "superstein/linear.hpp"
#include "superstein/matrix_superlie.hpp"

namespace superstein {

inline constexpr std::size_t kDefaultMaxWedge = 50000;

/// Sorts a tuple of basis indices into its canonical multiset using
/// x∧y = −(−1)^{|x||y|} y∧x. Returns the sorted tuple and the sign, or nullopt
/// when the tuple repeats an even index (and so vanishes).
std::optional<std::pair<std::vector<std::size_t>, Scalar>> koszul_normalize(const std::vector<int>& parity,
                                                                             std::vector<std::size_t> tuple);

/// Basis of Λ^p of a Lie superalgebra: nondecreasing index tuples in which
/// only odd indices may repeat.
class SuperWedgeBasis {
public:
  SuperWedgeBasis(const std::vector<int>& parity, std::size_t degree);
  /// Only the tuples for which keep(tuple) is true.
  template <class Keep>
  SuperWedgeBasis(const std::vector<int>& parity, std::size_t degree, Keep&& keep);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::size_t>& element(std::size_t k) const { return elements_[k]; }
  const std::vector<std::vector<std::size_t>>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const std::vector<std::size_t>& sorted) const;

private:
  void add(const std::vector<std::size_t>& t) {
    index_.emplace(t, elements_.size());
    elements_.push_back(t);
  }

  std::size_t degree_;
  std::vector<std::vector<std::size_t>> elements_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

/// |Λ^p| without enumerating it.
std::size_t wedge_count(const std::vector<int>& parity, std::size_t degree);

/// Matrix of d_p: Λ^p -> Λ^{p-1} for p ∈ {2, 3} (Λ^1 = L), with
///   d2(x∧y) = [x,y],
///   d3(x∧y∧z) = [x,y]∧z − (−1)^{|y||z|}[x,z]∧y + (−1)^{|x|(|y|+|z|)}[y,z]∧x.
/// Throws SizeGuardError when |Λ^p| exceeds max_wedge.
Matrix ce_boundary(const FinLieSuper& l, std::size_t degree, std::size_t max_wedge = kDefaultMaxWedge);

struct HomologyReport {
  std::size_t dim = 0;
  std::size_t wedge2 = 0, wedge3 = 0;
  std::size_t rank_d2 = 0, rank_d3 = 0;
  std::size_t h1 = 0, h2 = 0;
  std::size_t blocks = 0;  // graded pieces the complex was split into
  bool boundary_squares_to_zero = false;
};

/// H1 = dim L − rank d2, H2 = dim ker d2 − rank d3, computed blockwise over
/// the (weight, parity) grading. d2∘d3 = 0 is checked on every block.
HomologyReport homology(const FinLieSuper& l, std::size_t max_wedge = kDefaultMaxWedge);

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct ClaimRow {
  std::string claim;
  std::optional<std::size_t> expected;
  std::optional<std::size_t> computed;
  Verdict verdict = Verdict::skipped;
  std::string note;
};

struct UceVerdict {
  std::string target;
  std::size_t dim = 0;
  std::optional<HomologyReport> report;
  std::vector<ClaimRow> rows;
  /// The bridge used to read H2 as a universal central extension kernel.
  std::string assumption;
  bool failed() const;
};

/// Builds the target and emits the claim matrix:
///   st with m+n >= 5 or shape 2|1, 3|1: H2 = 0;  st 2|2: H2 = dim W;
///   sl with m+n >= 5: H2 = dim HC_1(A);  st_sharp: H2 = 0;
/// plus H1 = 0 (perfectness) and d2∘d3 = 0. Size-guard overruns become
/// skipped rows.
UceVerdict uce_verdict(LieSource source, const SuperAlgebra& a, const MatrixShape& shape,
                       std::size_t max_wedge = kDefaultMaxWedge);

extern const char* const kUceAssumption;

template <class Keep>
SuperWedgeBasis::SuperWedgeBasis(const std::vector<int>& parity, std::size_t degree, Keep&& keep) : degree_(degree) {
  const std::size_t d = parity.size();
  std::vector<std::size_t> t(degree);
  // Depth-first over nondecreasing tuples; equal neighbours only for odd indices.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == degree) {
      if (keep(t)) add(t);
      return;
    }
    for (std::size_t i = start; i < d; ++i) {
      if (pos > 0 && t[pos - 1] == i && parity[i] == 0) continue;
      t[pos] = i;
      self(self, pos + 1, i);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace superstein
