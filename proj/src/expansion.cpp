// SPDX-License-Identifier: Apache-2.0
#include "ratiocut/expansion.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace ratiocut {

ExpansionTable make_builtin_table();  // expansion_table.cpp

std::string ParamIndex::name() const {
  if (i < 0) return "base";
  std::string n = kSigmaNames[i];
  if (second_order()) {
    n += "*";
    n += kSigmaNames[j];
  }
  return n;
}

const ExpansionTable& ExpansionTable::instance() {
  static const ExpansionTable table = make_builtin_table();
  return table;
}

const QuadPoly& ExpansionTable::first(int i) const {
  if (i < 0 || i >= 7) throw DomainError("expansion: parameter index out of range");
  return first_[i];
}

const QuadPoly& ExpansionTable::second(int i, int j) const {
  if (i < 0 || i >= 7 || j < 0 || j >= 7)
    throw DomainError("expansion: parameter index out of range");
  if (i > j) std::swap(i, j);
  return second_[i][j];
}

QuadPoly ExpansionTable::coefficient(const ParamIndex& idx) const {
  if (idx.i < 0) return base_;
  if (!idx.second_order()) return first(idx.i);
  return second(idx.i, idx.j);
}

std::vector<ParamIndex> ExpansionTable::all_indices() const {
  std::vector<ParamIndex> out;
  for (int i = 0; i < 7; ++i) out.push_back({i, -1});
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) out.push_back({i, j});
  return out;
}

double rc_quadratic_approx(const DomainParams& s, const CutParams& cut) {
  const ExpansionTable& t = ExpansionTable::instance();
  const double Q = cut.q - 0.5, P = cut.p - 0.5, T = cut.theta;
  const auto sig = s.as_array();
  double v = t.base().eval(Q, P, T);
  for (int i = 0; i < 7; ++i) {
    if (sig[i] == 0) continue;
    v += sig[i] * t.first(i).eval(Q, P, T);
  }
  // table pair entries are raw mixed partials: diagonal terms enter with 1/2
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      if (sig[i] == 0 || sig[j] == 0) continue;
      const double f = (i == j) ? 0.5 : 1.0;
      v += f * sig[i] * sig[j] * t.second(i, j).eval(Q, P, T);
    }
  return v;
}

Mat3 jacobian_base() { return ExpansionTable::instance().base().hessian(); }

Mat3 jacobian_sigma(const DomainParams& s) {
  const ExpansionTable& t = ExpansionTable::instance();
  const auto sig = s.as_array();
  Mat3 m{};
  for (int i = 0; i < 7; ++i) {
    if (sig[i] == 0) continue;
    const Mat3 h = t.first(i).hessian();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] += sig[i] * h[r][c];
  }
  return m;
}

namespace {

Vec3 rhs_linear(const DomainParams& s) {
  const ExpansionTable& t = ExpansionTable::instance();
  const auto sig = s.as_array();
  Vec3 L{0, 0, 0};
  for (int i = 0; i < 7; ++i) {
    if (sig[i] == 0) continue;
    const Vec3 l = t.first(i).linear_part();
    for (int k = 0; k < 3; ++k) L[k] -= sig[i] * l[k];
  }
  return L;
}

}  // namespace

Vec3 rhs_L(const DomainParams& s) {
  const ExpansionTable& t = ExpansionTable::instance();
  const auto sig = s.as_array();
  Vec3 L = rhs_linear(s);
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      if (sig[i] == 0 || sig[j] == 0) continue;
      const double f = (i == j) ? 0.5 : 1.0;
      const Vec3 l = t.second(i, j).linear_part();
      for (int k = 0; k < 3; ++k) L[k] -= f * sig[i] * sig[j] * l[k];
    }
  return L;
}

namespace {

double det3(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

CutParams predict_cut(const DomainParams& s, PredictOrder order, double gate) {
  s.require_gate(gate);
  Mat3 A = jacobian_base();
  Vec3 b;
  if (order == PredictOrder::first) {
    b = rhs_linear(s);
  } else {
    const Mat3 js = jacobian_sigma(s);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) A[r][c] += js[r][c];
    b = rhs_L(s);
  }
  if (std::fabs(det3(A)) < 1e-6)
    throw NumericsError("predict_cut: near-singular critical-point system");
  const Vec3 v = solve3(A, b);
  return {0.5 + v[0], 0.5 + v[1], v[2]};
}

// ---------------------------------------------------------------------------

std::vector<CoefficientCheck> audit_coefficients(double rel_tol, double abs_tol) {
  const ExpansionTable& t = ExpansionTable::instance();
  const DomainParams sigma0{};
  const CutParams base_cut{0.5, 0.5, 0};

  // v-direction part of each of the 10 coefficients: directions (7=q,8=p,9=t),
  // orders, and the division undoing the square terms' Taylor factor.
  struct VPart {
    int nd;
    int dir[2];
    int ord[2];
    double div;
  };
  static const VPart vparts[10] = {
      {0, {0, 0}, {0, 0}, 1},  // c0
      {1, {7, 0}, {1, 0}, 1},  // cq
      {1, {8, 0}, {1, 0}, 1},  // cp
      {1, {9, 0}, {1, 0}, 1},  // ct
      {1, {7, 0}, {2, 0}, 2},  // cqq
      {2, {7, 8}, {1, 1}, 1},  // cqp
      {2, {7, 9}, {1, 1}, 1},  // cqt
      {1, {8, 0}, {2, 0}, 2},  // cpp
      {2, {8, 9}, {1, 1}, 1},  // cpt
      {1, {9, 0}, {2, 0}, 2},  // ctt
  };

  std::vector<CoefficientCheck> out;
  std::vector<ParamIndex> indices;
  indices.push_back({-1, -1});
  for (const ParamIndex& idx : t.all_indices()) indices.push_back(idx);

  for (const ParamIndex& idx : indices) {
    const QuadPoly poly = t.coefficient(idx);
    const auto coeffs = poly.coeffs();
    for (int c = 0; c < 10; ++c) {
      PartialSpec spec;
      spec.ndirs = 0;
      if (idx.i >= 0) {
        if (idx.second_order() && idx.i == idx.j) {
          spec.dir[spec.ndirs] = idx.i;
          spec.order[spec.ndirs++] = 2;
        } else {
          spec.dir[spec.ndirs] = idx.i;
          spec.order[spec.ndirs++] = 1;
          if (idx.second_order()) {
            spec.dir[spec.ndirs] = idx.j;
            spec.order[spec.ndirs++] = 1;
          }
        }
      }
      const VPart& vp = vparts[c];
      for (int d = 0; d < vp.nd; ++d) {
        spec.dir[spec.ndirs] = vp.dir[d];
        spec.order[spec.ndirs++] = vp.ord[d];
      }

      double fd;
      if (spec.ndirs == 0) {
        fd = double(rc_value_raw<double>(sigma0, 0.5, 0.5, 0.0));
      } else {
        fd = mixed_partial_rc(sigma0, base_cut, spec) / vp.div;
      }

      CoefficientCheck chk;
      chk.index = idx.name();
      chk.coeff = kCoeffNames[c];
      chk.table_value = coeffs[c].value();
      chk.fd_value = fd;
      chk.ok = (coeffs[c].num == 0)
                   ? std::fabs(fd) <= abs_tol
                   : std::fabs(fd - chk.table_value) <= rel_tol * std::fabs(chk.table_value);
      out.push_back(chk);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json poly_json(const QuadPoly& p) {
  json arr = json::array();
  for (const Rational& r : p.coeffs()) arr.push_back({r.num, r.den});
  return arr;
}

bool poly_equal(const json& arr, const QuadPoly& p) {
  if (!arr.is_array() || arr.size() != 10) return false;
  const auto coeffs = p.coeffs();
  for (int k = 0; k < 10; ++k) {
    if (!arr[k].is_array() || arr[k].size() != 2) return false;
    const long long n = arr[k][0].get<long long>();
    const long long d = arr[k][1].get<long long>();
    if (d == 0) return false;
    // compare as exact fractions
    if (n * coeffs[k].den != coeffs[k].num * d) return false;
  }
  return true;
}

}  // namespace

std::string coefficients_json() {
  const ExpansionTable& t = ExpansionTable::instance();
  json doc;
  doc["format"] = "ratiocut-coefficients-v1";
  doc["variables"] = {"q-1/2", "p-1/2", "theta"};
  doc["coefficient_order"] = json::array();
  for (const char* n : kCoeffNames) doc["coefficient_order"].push_back(n);
  doc["base"] = poly_json(t.base());
  json first = json::object();
  for (int i = 0; i < 7; ++i) first[kSigmaNames[i]] = poly_json(t.first(i));
  doc["first_order"] = first;
  json second = json::object();
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      std::string key = std::string(kSigmaNames[i]) + "*" + kSigmaNames[j];
      second[key] = poly_json(t.second(i, j));
    }
  doc["second_order"] = second;
  return doc.dump(2) + "\n";
}

void write_coefficients_json(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << coefficients_json();
}

std::vector<std::string> compare_coefficients_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  json doc = json::parse(f);
  const ExpansionTable& t = ExpansionTable::instance();
  std::vector<std::string> bad;

  if (!doc.contains("base") || !poly_equal(doc["base"], t.base()))
    bad.push_back("base");
  for (int i = 0; i < 7; ++i) {
    const std::string key = kSigmaNames[i];
    if (!doc.contains("first_order") || !doc["first_order"].contains(key) ||
        !poly_equal(doc["first_order"][key], t.first(i)))
      bad.push_back(key);
  }
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      const std::string key = std::string(kSigmaNames[i]) + "*" + kSigmaNames[j];
      if (!doc.contains("second_order") || !doc["second_order"].contains(key) ||
          !poly_equal(doc["second_order"][key], t.second(i, j)))
        bad.push_back(key);
    }
  return bad;
}

}  // namespace ratiocut
