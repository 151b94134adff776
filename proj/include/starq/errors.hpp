#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starq {

/// Base class for all engine errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `position` is a byte offset into the
/// input when one is known, npos otherwise.
struct ParseError : Error {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what, std::size_t pos = npos)
      : Error(pos == npos ? what : what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}

  std::size_t position;
};

/// The requested operation is only admissible for Hilbert-Schmidt kernels.
struct NonHSKernelError : Error {
  using Error::Error;
};

/// A cochain was applied to the wrong number of arguments.
struct ArityError : Error {
  using Error::Error;
};

/// The requested computation has no exact rational answer
/// (e.g. applying a power-law diagonal with a fractional exponent).
struct InexactOperationError : Error {
  using Error::Error;
};

}  // namespace starq
