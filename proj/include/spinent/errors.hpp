#pragma once

#include <stdexcept>
#include <string>

namespace spinent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration input. Messages carry the field path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The linearized dynamics has an eigenvalue with non-negative real part.
class UnstableDynamicsError : public Error {
 public:
  explicit UnstableDynamicsError(double margin)
      : Error("unstable dynamics: max Re(eig(A)) = " + std::to_string(margin)),
        margin_(margin) {}
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

/// A numerical routine failed (eigen solver, singular system, non-physical state...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinent
