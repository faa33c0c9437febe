#pragma once

#include <stdexcept>
#include <string>

namespace cricci {

/// Base class for all library errors. The CLI maps subtypes onto its
/// exit-code contract: contract/usage violations -> 1, numeric or
/// degenerate-data conditions -> 2, I/O failures -> 3.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape, alignment, or file-format contract violations.
class schema_error : public error {
 public:
  using error::error;
};

/// Malformed textual input; message carries the offending location.
class parse_error : public schema_error {
 public:
  using schema_error::schema_error;
};

/// Invalid argument values: non-positive scale, alpha out of range,
/// non-tangent geodesic directions, off-manifold points, bad offsets.
class invalid_argument_error : public error {
 public:
  using error::error;
};

/// Requested combination is not implemented (no analytic oracle, no
/// quadrature rule, custom density where a closed form is required).
class unsupported_error : public error {
 public:
  using error::error;
};

/// Too few rows/points to perform the requested fit or stencil.
class insufficient_data_error : public error {
 public:
  using error::error;
};

/// Degenerate measure or geometry: all-zero weights, clouds with fewer
/// than two points, kernel mass underflowing to zero, coincident base
/// points under unit normalization.
class degenerate_error : public error {
 public:
  using error::error;
};

/// Non-finite intermediate values.
class numeric_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

}  // namespace cricci
