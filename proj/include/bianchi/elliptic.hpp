#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace bianchi::elliptic {

// Jacobi elliptic functions, complete elliptic integrals, Jacobi theta
// functions in the older H/H1/Theta/Theta1 notation, and the quartic
// change-of-variable machinery used by the Bianchi V Minkowskian metrics.
//
// All routines take the squared modulus k2 = k^2 with 0 <= k2 < 1.

struct JacobiTriple {
  double sn, cn, dn;
};

// sn, cn, dn at (v, k2) via the descending Landen / AGM iteration.
JacobiTriple jacobi_sncn_dn(double v, double k2);

// Complete elliptic integral of the first kind, K(k2), by AGM.
double complete_K(double k2);

// Modulus data shared by the theta evaluators: quarter-periods and the nome
// q = exp(-pi K'/K).
struct EllipticContext {
  double k2 = 0.0;
  double K = 0.0;
  double Kprime = 0.0;
  double nome_q = 0.0;

  static EllipticContext make(double k2);
};

// Older Jacobi notation: H(v)=theta1(w), H1(v)=theta2(w), Theta1(v)=theta3(w),
// Theta(v)=theta4(w) with w = pi v / (2K).
enum class ThetaKind { H, H1, Theta, Theta1 };

double theta(ThetaKind kind, double v, const EllipticContext& ctx);

// d/dv log theta_kind(v); throws when theta vanishes at v.
double theta_logderivative(ThetaKind kind, double v, const EllipticContext& ctx);

// Monic quartic rho^4 + c3 rho^3 + c2 rho^2 + c1 rho + c0.
struct Quartic {
  double c3 = 0.0, c2 = 0.0, c1 = 0.0, c0 = 0.0;

  double eval(double rho) const {
    return (((rho + c3) * rho + c2) * rho + c1) * rho + c0;
  }
  double deriv(double rho) const {
    return ((4.0 * rho + 3.0 * c3) * rho + 2.0 * c2) * rho + c1;
  }
};

// Root structure a > b real, b1 +- i a1 complex pair (a1 > 0).
struct QuarticRoots {
  double a = 0.0, b = 0.0, b1 = 0.0, a1 = 0.0;
};

// Extracts the two-real-plus-complex-pair root structure; throws
// std::domain_error when the quartic has four real roots or a (near) double
// root.
QuarticRoots quartic_roots_two_real(const Quartic& p);

// Change of variable rho -> v mapping [a, +inf) onto [0, v0) with
// d rho / sqrt(P(rho)) = (2/sqrt(AB)) dv.
struct ChangeOfVariable {
  Quartic quartic;
  QuarticRoots roots;
  double A = 0.0, B = 0.0;
  EllipticContext ctx;
  double sn_v0 = 0.0;
  double v0 = 0.0;
  double xi = 0.0;  // drift coefficient of the gamma^2 closed form
};

ChangeOfVariable build_change_of_variable(const Quartic& p);

struct RhoValue {
  double value = 0.0;
  bool diverged = false;  // set when v is within the pole guard band of v0
};

// rho(v) on [0, v0); monotone increasing with rho(0) = a.
RhoValue rho_of_v(double v, const ChangeOfVariable& cov);

// d rho / dv from the differentiated closed form.
double drho_dv(double v, const ChangeOfVariable& cov);

// Selects which printed form of the drift coefficient xi is used; both reduce
// to the same unified expression, `negative` additionally requires b = 0.
enum class LambdaBranch { negative, positive };

// gamma^2(v) > 0 with gamma^2(0) = 1.
double gamma_squared_of_v(double v, const ChangeOfVariable& cov,
                          LambdaBranch branch);

// d/dv log gamma^2(v); gamma^2' = gamma^2 * this.
double dlog_gamma_squared_dv(double v, const ChangeOfVariable& cov);

}  // namespace bianchi::elliptic
