#include "mathieu/types.hpp"

#include <cmath>

namespace mathieu {

const char* to_string(Method m) {
  switch (m) {
    case Method::direct_sum: return "direct";
    case Method::series: return "series";
    case Method::neg_int_closed_form: return "neg_int";
    case Method::jonquiere: return "jonquiere";
    case Method::lindelof: return "lindelof";
    case Method::multisection: return "multisection";
    case Method::euler_maclaurin: return "euler_maclaurin";
    case Method::asymptotic: return "asymptotic";
    case Method::quadrature: return "quadrature";
    case Method::zastavnyi: return "zastavnyi";
    case Method::moment_sum: return "moment_sum";
    case Method::exact_rational: return "exact_rational";
    case Method::limit_value: return "limit";
  }
  return "unknown";
}

const char* to_string(BoundKind k) {
  return k == BoundKind::certified ? "certified" : "heuristic";
}

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::order: return "order";
    case ErrorKind::singular: return "singular";
    case ErrorKind::tolerance: return "tolerance";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::range: return "range";
    case ErrorKind::no_method: return "no_method";
    case ErrorKind::degenerate: return "degenerate";
  }
  return "unknown";
}

void require_finite(const Complex& v, const char* where) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    fail(ErrorKind::domain, std::string(where) + ": non-finite result");
  }
}

void require_finite(double v, const char* where) {
  if (!std::isfinite(v)) {
    fail(ErrorKind::domain, std::string(where) + ": non-finite result");
  }
}

}  // namespace mathieu
