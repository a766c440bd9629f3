#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace bianchi {

// Chart point: four coordinate values in the order declared by each metric.
using Chart = std::array<double, 4>;

using Mat4 = Eigen::Matrix4d;
using Mat3 = Eigen::Matrix3d;
using Vec4 = Eigen::Vector4d;
using Vec3 = Eigen::Vector3d;

// First metric derivatives, indexed dg[mu](a,b) = d_mu g_ab.
using MetricD1 = std::array<Mat4, 4>;
// Second metric derivatives, ddg[mu][nu](a,b) = d_mu d_nu g_ab (symmetric in mu,nu).
using MetricD2 = std::array<std::array<Mat4, 4>, 4>;

inline bool chart_finite(const Chart& x) {
  return std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]) &&
         std::isfinite(x[3]);
}

// Signature-aware metric evaluator.  `eps` follows the sign convention on the
// alpha^2 dt^2 term: +1 Euclidean, -1 Minkowskian (+,+,+,-).
//
// Exact derivative callbacks are optional.  When only d1 is present, second
// derivatives are finite-differenced from d1; when neither is present the
// geometry layer falls back to Richardson-extrapolated differences of the
// components themselves.
struct MetricField {
  std::string name;
  int eps = +1;
  double lambda = 0.0;  // Einstein constant for catalog metrics

  std::function<Mat4(const Chart&)> components;
  std::function<MetricD1(const Chart&)> d1;  // may be null
  std::function<MetricD2(const Chart&)> d2;  // may be null
  std::function<bool(const Chart&)> domain;  // may be null (= everywhere)

  // Orthonormal coframe rows e^A_mu, A = 0..3 with A=0 along the "time"
  // (fourth/profile) direction; eta = diag(eps,1,1,1).  May be null.
  std::function<Mat4(const Chart&)> coframe;

  // Frame index (1..3) paired with e^0 when building a complex null tetrad.
  // The remaining two frame directions form the complex m leg.
  int np_axis = 1;

  // Per-coordinate sampling box used by verification drivers.
  std::array<std::array<double, 2>, 4> sample_box{
      {{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};

  bool in_domain(const Chart& x) const {
    return chart_finite(x) && (!domain || domain(x));
  }
};

inline Mat4 symmetrize(const Mat4& m) { return 0.5 * (m + m.transpose()); }

}  // namespace bianchi
