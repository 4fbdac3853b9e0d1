#pragma once

#include <stdexcept>
#include <string>

namespace dnls {

// Base class for all toolkit errors; what follows narrows the failure class
// so callers (and the CLI) can report the offending module.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Word fails the Dyck admissibility condition.
class AdmissibilityError : public Error {
  public:
    using Error::Error;
};

// Potential does not decay below tolerance at the grid boundary.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Spectral point outside the admissible region Im(lambda^2) >= 0.
class RegionError : public Error {
  public:
    using Error::Error;
};

// Grid too coarse to resolve the oscillatory phase, or step-size underflow.
class ResolutionError : public Error {
  public:
    using Error::Error;
};

// Fourier multiplier denominator too close to zero on the sampled grid.
class SingularityError : public Error {
  public:
    using Error::Error;
};

// Spectral tail not decayed at the frequency-grid edge.
class AliasingError : public Error {
  public:
    using Error::Error;
};

// Least-squares fit ill-conditioned.
class FitError : public Error {
  public:
    using Error::Error;
};

// Time stepper left the validity regime (blow-up guard, conservation check).
class InstabilityError : public Error {
  public:
    using Error::Error;
};

// Evolved field no longer decayed at the box edge.
class BoundaryError : public Error {
  public:
    using Error::Error;
};

// Combinatorial guard exceeded (exact V^p enumeration).
class SizeError : public Error {
  public:
    using Error::Error;
};

}  // namespace dnls
