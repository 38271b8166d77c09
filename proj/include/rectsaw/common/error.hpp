#pragma once

#include <stdexcept>
#include <string>

namespace rectsaw {

/// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad geometry, bad option values, too few data points.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A state or ensemble that does not fit the stage it is handed to.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// A transfer stage applied out of schedule.
class IllegalStageOrder : public Error {
 public:
  using Error::Error;
};

/// The ensemble outgrew the configured state cap.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Residues that do not reconstruct consistently.
class InconsistentResidues : public Error {
 public:
  using Error::Error;
};

/// Quadrature, root finding or extrapolation that could not reach its target.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace rectsaw
