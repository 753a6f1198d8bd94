#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "superstein/lie_superalgebra.hpp"
#include "superstein/superalgebra.hpp"

namespace superstein {

/// Problem with an algebra or Lie document. line/column are 1-based; 0 when
/// the problem is not tied to a position (missing declarations, validation).
class AlgFileError : public std::runtime_error {
public:
  enum class Kind { syntax, duplicate, unknown_name, field, missing, validation };
  AlgFileError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  Kind kind_;
  std::size_t line_, column_;
};

/// Algebra documents, one declaration per line, `#` starts a comment:
///   name <ident>
///   field Q | field Fp:<odd prime>
///   basis <ident>:<even|odd> [<ident>:<even|odd> ...]
///   unit <ident>
///   mul <ident> <ident> = <coeff>*<ident> [+ <coeff>*<ident> ...]
/// Omitted products are zero; products with the unit may be omitted and are
/// filled in. The result must pass validate() unless `check` is false.
SuperAlgebra parse_algebra(std::string_view text, bool check = true);
/// Reads a file, or resolves "builtin:NAME".
SuperAlgebra load_algebra(const std::string& source, bool check = true);

/// Canonical text: every nonzero product, basis order preserved.
std::string serialize_algebra(const SuperAlgebra& a);

/// Lie documents:
///   lie <ident>
///   field Q | field Fp:<p>
///   basis <ident>:<even|odd>        (one line per basis element)
///   weight <ident> <int> ...        (optional, one per basis element)
///   [<ident>, <ident>] = <coeff>*<ident> + ...
/// Brackets are listed for i <= j; the rest follow from super skew-symmetry.
/// Original basis names are kept in `# bK = name` comments.
std::string export_lie(const FinLieSuper& l);
FinLieSuper parse_lie(std::string_view text);

}  // namespace superstein
