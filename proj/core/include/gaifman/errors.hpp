#pragma once

#include <stdexcept>

namespace gaifman {

/// Malformed or unprocessable input data (parse failures, empty tables,
/// universes too small or too large for the requested operation).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad scheme parameters or flag combinations.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A condition the underlying theory rules out. Seeing one of these means
/// an implementation bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gaifman
