#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pwl {

// Exact arbitrary-precision rational scalar. mpq_class keeps values canonical
// (reduced, positive denominator), which the geometry layer relies on for
// equality comparisons.
using Rational = mpq_class;
using Integer = mpz_class;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using CodeMat = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using CodeVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

enum class Errc {
  Unbounded,
  Empty,
  EmptyModel,
  EmptyDomain,
  DimensionMismatch,
  DegeneratePoint,
  DegenerateDirections,
  ROutOfRange,
  DTooLarge,
  DTooSmall,
  GroundSetMismatch,
  ScaleLimit,
  Unsupported,
  InvalidTriangleCover,
  UnknownMethod,
  DomainMismatch,
  NameTooLong,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_int(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

inline Integer ceil_int(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

// Parses "p/q", plain integers, or decimal strings ("2.125", "1.5e-3").
// Decimal strings are read as exact fractions; binary floating point is never
// involved.
Rational parse_rational(const std::string& text);

struct DecimalString {
  std::string text;
  bool exact = true;
};

// Renders q as a terminating decimal when the reduced denominator is of the
// form 2^a*5^b with at most 18 fractional digits; otherwise rounds to 17
// significant digits and flags the result as inexact.
DecimalString decimal_string(const Rational& q);

// "p/q" (or "p" when integral).
std::string rational_string(const Rational& q);

// Lexicographic comparison helpers for deterministic ordering.
int compare(const RatVec& a, const RatVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

}  // namespace pwl

namespace Eigen {

template <>
struct NumTraits<pwl::Rational> : GenericNumTraits<pwl::Rational> {
  typedef pwl::Rational Real;
  typedef pwl::Rational NonInteger;
  typedef pwl::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen
