#ifndef SPECRANGE_ERRORS_HPP
#define SPECRANGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specrange {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// Eigensolver exceeded its sweep budget; carries the sweep count so callers
// can tell a hard hang from a near miss.
class NonConvergence : public Error {
public:
  NonConvergence(const std::string& what, std::size_t sweeps)
      : Error(what + " (after " + std::to_string(sweeps) + " sweeps)"),
        sweeps_(sweeps) {}
  std::size_t sweeps() const { return sweeps_; }

private:
  std::size_t sweeps_;
};

class InvalidSpec : public Error {
public:
  using Error::Error;
};

class GridMismatch : public Error {
public:
  using Error::Error;
};

class DegenerateRange : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace specrange

#endif
