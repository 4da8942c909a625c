#pragma once

#include <stdexcept>
#include <string>

namespace kkr {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in crystals of different rank (or alphabet restriction).
class rank_mismatch : public error {
 public:
  using error::error;
};

/// A Kashiwara index outside the classical range of the crystal.
class index_out_of_range : public error {
 public:
  using error::error;
};

/// Malformed text or JSON input.
class parse_error : public error {
 public:
  using error::error;
};

/// Lengths of tableaux do not match the shape they are paired with.
class shape_mismatch : public error {
 public:
  using error::error;
};

/// A rigged configuration failed validation.
class invalid_rc : public error {
 public:
  using error::error;
};

/// A path required to be highest is not.
class not_highest : public error {
 public:
  using error::error;
};

/// Any other violated precondition (negative modes, missing vacuum, ...).
class precondition_error : public error {
 public:
  using error::error;
};

/// An enumeration request exceeds the configured size bound.
class capacity_exceeded : public error {
 public:
  using error::error;
};

}  // namespace kkr
