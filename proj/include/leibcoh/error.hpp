#ifndef LEIBCOH_ERROR_HPP
#define LEIBCOH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace leibcoh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotASubspace : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct UnsupportedDegree : Error {
  using Error::Error;
};
struct UnknownName : Error {
  using Error::Error;
};
struct MissingParameter : Error {
  using Error::Error;
};

}  // namespace leibcoh

#endif
