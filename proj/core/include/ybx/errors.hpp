#ifndef YBX_ERRORS_HPP
#define YBX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ybx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic on scalars from different ground fields.
struct FieldMismatch : Error {
  using Error::Error;
};

// Modulus of a prime field failed the primality check.
struct NonPrimeModulus : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// invert() on a rank-deficient map.
struct SingularMap : Error {
  using Error::Error;
};

// An operation requiring a non-degenerate pair received a degenerate one.
struct DegenerateInput : Error {
  using Error::Error;
};

// A tensor power would exceed the configured total-dimension cap.
struct CapExceeded : Error {
  using Error::Error;
};

struct RackAxiomFailure : Error {
  using Error::Error;
};

struct InvalidGroupTable : Error {
  using Error::Error;
};

struct BraceInvalid : Error {
  using Error::Error;
};

struct OperatorInvalid : Error {
  using Error::Error;
};

struct CocycleInvalid : Error {
  using Error::Error;
};

struct SingularG : Error {
  using Error::Error;
};

struct SingularH : Error {
  using Error::Error;
};

struct LeibnizIdentityFailure : Error {
  using Error::Error;
};

struct AssociativityFailure : Error {
  using Error::Error;
};

// emit_presentation() on a pair that is not set-theoretic.
struct NotSetTheoretic : Error {
  using Error::Error;
};

// Malformed or schema-violating JSON input; `where` is a JSON pointer path.
struct JsonError : Error {
  std::string where;
  JsonError(const std::string& pointer, const std::string& what)
      : Error(what + " (at " + (pointer.empty() ? std::string("/") : pointer) + ")"),
        where(pointer) {}
};

}  // namespace ybx

#endif
