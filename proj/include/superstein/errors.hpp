#pragma once

#include <stdexcept>
#include <string>

namespace superstein {

/// A computation would exceed a configured size guard.
class SizeGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A constructed structure failed one of its defining identities. The message
/// names the witness (basis pair or triple).
class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace superstein
