#pragma once

#include <string>
#include <string_view>

#include "mockeis/bernoulli.hpp"
#include "mockeis/mock_eisenstein.hpp"
#include "mockeis/qfunctions.hpp"
#include "mockeis/wjet.hpp"

// Level-5 Appell series A_5 and the operators acting on it, all written in
// w = 2 pi i z. In these coordinates
//   1/(2 pi i)^2 d^2/dz^2  ->  d^2/dw^2
//   (5/(pi i)) d/dtau      ->  10 q d/dq
//   2 i sin(pi z)          ->  e^{w/2} - e^{-w/2}
//   zeta = e^{2 pi i z}    ->  e^w
// so every coefficient is an exact rational q-series.

namespace mockeis {

/// 2 i sin(pi z) = e^{w/2} - e^{-w/2} = sum_{i odd} w^i / (2^{i-1} i!).
inline WJet two_i_sine_jet(int max_deg, int q_order) {
  WJet s(1, std::max(1, max_deg), q_order);
  for (int i = 1; i <= s.max_deg(); i += 2)
    s[i] = QSeries::constant(make_rational(Integer(1), pow2(i - 1).get_num() * factorial(i)),
                             q_order);
  return s;
}

/// sum_n B_n(x) w^{n-1}/n! = e^{x w}/(e^w - 1), through w^max_deg.
inline WJet bernoulli_pole_jet(const Rational& x, int max_deg, int q_order) {
  WJet out(-1, max_deg, q_order);
  for (int n = 0; n <= max_deg + 1; ++n)
    out[n - 1] = QSeries::constant(bernoulli_poly(n, x) / Rational(factorial(n)), q_order);
  return out;
}

/// The four summands of
///   A_5 = -(1/w) exp(2 sum f_{3,j} w^j/j!) + theta_{1,5}/(2i sin pi z)
///         - zeta theta_{1,5}/(2i sin pi z) - zeta^{3/2} theta_{3,5}.
struct A5Terms {
  WJet exponential;    // -(1/w) exp(2 sum f_{3,j} w^j/j!)
  WJet sine_pole;      // theta_{1,5} / (e^{w/2} - e^{-w/2})
  WJet zeta_sine_pole; // -e^w theta_{1,5} / (e^{w/2} - e^{-w/2})
  WJet zeta_theta;     // -e^{3w/2} theta_{3,5}

  WJet total() const { return exponential + sine_pole + zeta_sine_pole + zeta_theta; }
};

enum class SineExpansion { inversion, bernoulli };

/// A_5 expanded through w^max_deg. The 1/sin factors come either from
/// inverting the sine jet or from Bernoulli polynomials at 1/2 and 3/2.
inline A5Terms assemble_A5_terms(int max_deg, int q_order,
                                 SineExpansion how = SineExpansion::inversion) {
  if (max_deg < 1 || q_order < 1) throw InvalidArgument("assemble_A5 needs Nw >= 1 and Nq >= 1");
  const int top = max_deg + 1;
  const int max_j = top % 2 == 0 ? top : top + 1;
  const MockFamily f3 = f_family(3, max_j, q_order, FamilyRoute::recursionA);
  const QSeries th15 = theta(1, 5, q_order);
  const QSeries th35 = theta(3, 5, q_order);

  WJet exp_term = (-family_exponential(f3.members, 1, top)).shifted(-1);

  WJet pole(-1, max_deg, q_order), zeta_pole(-1, max_deg, q_order);
  if (how == SineExpansion::inversion) {
    const WJet inv_sine = inverse(two_i_sine_jet(max_deg + 2, q_order));
    pole = th15 * inv_sine;
    zeta_pole = -(WJet::exponential(1, th15, top) * inv_sine);
  } else {
    pole = th15 * bernoulli_pole_jet(make_rational(1, 2), max_deg, q_order);
    zeta_pole = -(th15 * bernoulli_pole_jet(make_rational(3, 2), max_deg, q_order));
  }
  WJet zeta_theta = -WJet::exponential(make_rational(3, 2), th35, max_deg);
  return {exp_term.window(-1, max_deg), pole.window(-1, max_deg), zeta_pole.window(-1, max_deg),
          zeta_theta.window(-1, max_deg)};
}

inline WJet assemble_A5(int max_deg, int q_order) {
  return assemble_A5_terms(max_deg, q_order).total();
}

/// H_j = 10 q d/dq + d^2/dw^2 + 10 (2j - 1) G_2, the level-5 heat operator.
inline WJet apply_H(int j, const WJet& a) {
  if (j < 1 || j % 2 == 0) throw InvalidArgument("apply_H needs an odd positive index");
  const QSeries g2 = eisenstein(2, a.q_order());
  return q_derivative(a) * Rational(10) + w_second_derivative(a) +
         g2 * a * Rational(10 * (2 * j - 1));
}

/// 24 ((q)_inf C(zeta, q) / (-2i sin pi z))^5 = -24 w^{-5} exp(10 sum_{k>=2} G_k w^k/k!),
/// through w^max_deg.
inline WJet crank_power_jet(int max_deg, int q_order) {
  const int top = max_deg + 5;
  if (top < 0) throw WindowUnderflow("crank side needs max_deg >= -5");
  WJet expo(0, std::max(top, 0), q_order);
  for (int k = 2; k <= top; ++k)
    expo[k] = eisenstein(k, q_order) * make_rational(Integer(10), factorial(static_cast<unsigned>(k)));
  return (series_exp(expo) * Rational(-24)).shifted(-5).window(-5, max_deg);
}

/// (H_3 H_1 - (220/3) G_4) A_5 - 24 ((q)_inf C / (-2i sin pi z))^5 on w^{-5}..w^max_deg.
inline WJet pde_residual(int max_deg, int q_order) {
  if (max_deg < -5) throw WindowUnderflow("pde residual window is empty");
  const WJet a5 = assemble_A5(max_deg + 4, q_order);
  const QSeries g4 = eisenstein(4, q_order);
  const WJet lhs = apply_H(3, apply_H(1, a5)) - g4 * a5 * make_rational(220, 3);
  return (lhs - crank_power_jet(max_deg, q_order)).window(-5, max_deg);
}

enum class ThetaSeries { theta_1_5, theta_3_5 };

inline std::string_view to_string(ThetaSeries t) {
  return t == ThetaSeries::theta_1_5 ? "theta_{1,5}" : "theta_{3,5}";
}

enum class ThetaOdeForm { operator_form, expanded };

/// With theta~ = q^alpha theta (alpha = 1/40 for theta_{1,5}, 9/40 for theta_{3,5}),
/// D_{5/2} D_{1/2} theta~ - (11/15) G_4 theta~ with the q^alpha stripped:
///   (D + alpha + 5 G_2)(D + alpha + G_2) theta - (11/15) G_4 theta,   D = q d/dq.
/// The expanded form uses theta^{[m]} = (2D)^m theta:
///   (1/4) theta^{[2]} + (alpha + 3 G_2) theta^{[1]}
///   + (5 G_2^2 + 6 alpha G_2 + alpha^2 + D G_2) theta - (11/15) G_4 theta.
inline QSeries theta_ode_residual(ThetaSeries which, int order,
                                  ThetaOdeForm form = ThetaOdeForm::operator_form) {
  const int a = which == ThetaSeries::theta_1_5 ? 1 : 3;
  const Rational alpha = which == ThetaSeries::theta_1_5 ? make_rational(1, 40) : make_rational(9, 40);
  const QSeries g2 = eisenstein(2, order);
  const QSeries g4 = eisenstein(4, order);
  const QSeries th = theta(a, 5, order);
  const QSeries one = QSeries::constant(1, order);
  QSeries lhs(order);
  if (form == ThetaOdeForm::operator_form) {
    const QSeries u = q_derivative(th) + (one * alpha + g2) * th;
    lhs = q_derivative(u) + (one * alpha + g2 * Rational(5)) * u;
  } else {
    lhs = theta_deriv(a, 5, 2, order) * make_rational(1, 4) +
          (one * alpha + g2 * Rational(3)) * theta_deriv(a, 5, 1, order) +
          (g2 * g2 * Rational(5) + g2 * (6 * alpha) + one * (alpha * alpha) + q_derivative(g2)) * th;
  }
  return lhs - g4 * th * make_rational(11, 15);
}

}  // namespace mockeis
