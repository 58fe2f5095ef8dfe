#pragma once

#include <string>

namespace mevcost {

// Absolute tolerance used when deciding whether a bound is satisfied.
inline constexpr double kBoundTol = 1e-9;

// Uniform envelope for an inequality lhs <= rhs.
struct BoundCertificate {
  std::string bound_name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double slack = 0.0;  // rhs - lhs
  std::string note;
};

inline BoundCertificate make_certificate(std::string name, double lhs,
                                         double rhs, std::string note = {},
                                         double tol = kBoundTol) {
  BoundCertificate c;
  c.bound_name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.satisfied = lhs <= rhs + tol;
  c.note = std::move(note);
  return c;
}

}  // namespace mevcost
