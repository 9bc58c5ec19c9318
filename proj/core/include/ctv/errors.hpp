#ifndef CTV_ERRORS_HPP
#define CTV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctv {

/** Base class for all errors raised by the library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** An input violates an operation's precondition. */
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/** An enumeration or evaluation would exceed its configured budget. */
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

/** A computation was rejected because the object is too large. */
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error(what) {}
};

/**
 * An exact intersection test hit a degenerate configuration (a barycentric
 * coordinate vanished, or the system was underdetermined).  The test map of
 * the reference configuration is in general position, so this indicates a
 * convention bug or an input outside the supported regime; it is never
 * silently mapped to zero.
 */
class GeneralPositionError : public Error {
 public:
  explicit GeneralPositionError(const std::string& what) : Error(what) {}
};

/** A configuration file failed to parse or validate; names the field. */
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace ctv

#endif  // CTV_ERRORS_HPP
