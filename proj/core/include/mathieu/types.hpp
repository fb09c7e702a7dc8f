#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mathieu {

using Complex = std::complex<double>;

/// Whether an error bound is a proven tail/remainder inequality or a
/// first-omitted-term style estimate.
enum class BoundKind { certified, heuristic };

/// Which evaluation route produced a result.
enum class Method {
  direct_sum,
  series,
  neg_int_closed_form,
  jonquiere,
  lindelof,
  multisection,
  euler_maclaurin,
  asymptotic,
  quadrature,
  zastavnyi,
  moment_sum,
  exact_rational,
  limit_value,
};

const char* to_string(Method m);
const char* to_string(BoundKind k);

/// Universal return contract: a value, an error bound (certified or
/// heuristic), the work done, and the route taken.
struct EvalOutcome {
  Complex value{0.0, 0.0};
  double error_bound = 0.0;
  BoundKind bound_kind = BoundKind::heuristic;
  long terms_used = 0;
  Method method = Method::direct_sum;

  double real() const { return value.real(); }
  double imag() const { return value.imag(); }
};

enum class ErrorKind {
  domain,
  pole,
  order,
  singular,
  tolerance,
  convergence,
  parameter,
  range,
  no_method,
  degenerate,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

/// Throws unless both components of v are finite. Library operations call
/// this before returning so that no NaN/Inf escapes without an error.
void require_finite(const Complex& v, const char* where);
void require_finite(double v, const char* where);

}  // namespace mathieu
