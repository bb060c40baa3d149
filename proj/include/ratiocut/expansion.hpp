// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "ratiocut/derivatives.hpp"
#include "ratiocut/domain.hpp"
#include "ratiocut/ratio_cut.hpp"

namespace ratiocut {

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return double(num) / double(den); }
};

// Quadratic polynomial in (q - 1/2, p - 1/2, theta) with exact rational
// coefficients; the storage format of every series table entry.
struct QuadPoly {
  Rational c0, cq, cp, ct, cqq, cqp, cqt, cpp, cpt, ctt;
  bool listed = true;  // false: placeholder zero for an index the table omits

  double eval(double Q, double P, double T) const {
    return c0.value() + cq.value() * Q + cp.value() * P + ct.value() * T +
           cqq.value() * Q * Q + cqp.value() * Q * P + cqt.value() * Q * T +
           cpp.value() * P * P + cpt.value() * P * T + ctt.value() * T * T;
  }
  std::array<Rational, 10> coeffs() const {
    return {c0, cq, cp, ct, cqq, cqp, cqt, cpp, cpt, ctt};
  }
  // gradient in (Q,P,T) at the base point and the constant Hessian
  Vec3 linear_part() const { return {cq.value(), cp.value(), ct.value()}; }
  Mat3 hessian() const {
    return {{{2 * cqq.value(), cqp.value(), cqt.value()},
             {cqp.value(), 2 * cpp.value(), cpt.value()},
             {cqt.value(), cpt.value(), 2 * ctt.value()}}};
  }
};

inline const char* kCoeffNames[10] = {"c0",  "cq",  "cp",  "ct",  "cqq",
                                      "cqp", "cqt", "cpp", "cpt", "ctt"};

// Multi-index over the 7 domain parameters: i alone (|alpha| = 1) or the
// unordered pair (i,j) (|alpha| = 2). Pair entries hold the raw mixed
// partial d^2 RC / d sigma_i d sigma_j (so diagonal entries are twice the
// Taylor coefficient).
struct ParamIndex {
  int i = -1;
  int j = -1;  // -1: first order
  bool second_order() const { return j >= 0; }
  std::string name() const;
};

class ExpansionTable {
 public:
  static const ExpansionTable& instance();

  const QuadPoly& base() const { return base_; }
  const QuadPoly& first(int i) const;
  const QuadPoly& second(int i, int j) const;  // unordered
  QuadPoly coefficient(const ParamIndex& idx) const;

  std::vector<ParamIndex> all_indices() const;  // 7 + 28 entries

 private:
  friend ExpansionTable make_builtin_table();
  QuadPoly base_;
  std::array<QuadPoly, 7> first_;
  std::array<std::array<QuadPoly, 7>, 7> second_;  // filled for i <= j
};

// Truncated series value: base + sum sigma_a p_a + cross terms + squares/2.
double rc_quadratic_approx(const DomainParams& s, const CutParams& cut);

Mat3 jacobian_base();
// sigma-linear part of the Hessian correction.
Mat3 jacobian_sigma(const DomainParams& s);
// Right-hand side of the critical-point system (J + J_sigma) v = L(sigma),
// through quadratic parameter terms.
Vec3 rhs_L(const DomainParams& s);

enum class PredictOrder { first, full };

// Implicit-function-theorem cut predictor. First order solves J v = L1;
// full order solves (J + J_sigma) v = L with the quadratic L terms.
CutParams predict_cut(const DomainParams& s, PredictOrder order,
                      double gate = DomainParams::kDefaultGate);

// ---------------------------------------------------------------------------
// Audit: every stored coefficient against a quad-precision finite-difference
// mixed partial of the implemented ratio cut at ((1/2,1/2,0); sigma=0).
struct CoefficientCheck {
  std::string index;   // "base", "a1", "a1*A_WL", ...
  std::string coeff;   // "c0".."ctt"
  double table_value = 0;
  double fd_value = 0;
  bool ok = false;
};

std::vector<CoefficientCheck> audit_coefficients(double rel_tol = 1e-3,
                                                 double abs_tol = 1e-4);

// coefficients.json: canonical machine-readable dump of the table.
std::string coefficients_json();
void write_coefficients_json(const std::string& path);
// Names of indices whose file entries differ from the built-in table
// (missing/extra entries included). Empty = identical.
std::vector<std::string> compare_coefficients_json(const std::string& path);

}  // namespace ratiocut
