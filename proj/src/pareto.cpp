#include "screenlab/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "screenlab/errors.hpp"

namespace screenlab {

double tpd_mean(double alpha, double beta) {
  if (!(alpha > 0.0)) throw std::domain_error("tpd_mean: alpha <= 0");
  if (beta < alpha) throw std::domain_error("tpd_mean: beta < alpha");
  return alpha * (1.0 + std::log(beta / alpha));
}

double TruncatedPareto::mean() const { return tpd_mean(alpha, beta); }

double TruncatedPareto::cdf(double x) const {
  if (x < alpha) return 0.0;
  if (x >= beta) return 1.0;
  return 1.0 - alpha / x;
}

double TruncatedPareto::integrated_cdf(double x) const {
  if (x <= alpha) return 0.0;
  if (x >= beta)
    return beta - alpha - alpha * std::log(beta / alpha) + (x - beta);
  return x - alpha - alpha * std::log(x / alpha);
}

double TruncatedPareto::atom_mass_at_beta() const { return alpha / beta; }

Dist1D TruncatedPareto::to_dist(double lo, double hi,
                                std::size_t grid_points) const {
  if (alpha == beta) return Dist1D::degenerate(alpha, lo, hi);
  return Dist1D::pareto_trunc(alpha, beta, lo, hi, grid_points);
}

double beta_of_alpha(double alpha, double target_mean, double cap) {
  if (!(alpha > 0.0)) throw std::domain_error("beta_of_alpha: alpha <= 0");
  const double hi_mean = tpd_mean(alpha, cap);
  const double tol = 1e-12 * (1.0 + std::abs(target_mean));
  if (target_mean < alpha - tol || target_mean > hi_mean + tol)
    throw InfeasibleError("beta_of_alpha: target mean " +
                          std::to_string(target_mean) +
                          " outside [alpha, tpd_mean(alpha, cap)] = [" +
                          std::to_string(alpha) + ", " +
                          std::to_string(hi_mean) + "]");
  if (target_mean <= alpha) return alpha;
  double beta = alpha * std::exp(target_mean / alpha - 1.0);
  // one Newton step on tpd_mean(alpha, .) to clean up fp residue
  beta -= (tpd_mean(alpha, beta) - target_mean) * beta / alpha;
  return std::clamp(beta, alpha, cap);
}

TruncatedPareto tau_for_profit(double pi, double mu_bar, double cap) {
  if (pi > mu_bar + 1e-12 * (1.0 + std::abs(mu_bar)))
    throw InfeasibleError("tau_for_profit: pi > mu_bar");
  const double pi_c = std::min(pi, mu_bar);
  return {pi_c, beta_of_alpha(pi_c, mu_bar, cap)};
}

AlphaStarResult alpha_star(const Dist1D& grand_bundle, double tol) {
  const double lo = grand_bundle.support_lo();
  const double hi = grand_bundle.support_hi();
  const double mu = grand_bundle.mean();

  const auto feasible = [&](double a) -> bool {
    if (a <= 0.0) return false;
    if (mu > tpd_mean(a, hi) + 1e-12) return false;  // cannot match the mean
    const double b = beta_of_alpha(a, mu, hi);
    const Dist1D h = TruncatedPareto{a, b}.to_dist(lo, hi);
    return is_mps(grand_bundle, h, 1e-8);
  };

  // H_{mu,mu} is the uninformative signal, always feasible
  double a_hi = mu;
  double a_lo = std::max(lo, 0.0);
  if (a_lo >= a_hi || (a_lo > 0.0 && feasible(a_lo))) {
    const double b = a_lo >= a_hi ? a_hi : beta_of_alpha(a_lo, mu, hi);
    const double a = std::min(a_lo, a_hi);
    return {a, TruncatedPareto{a, a >= a_hi ? a : b}, 0.0};
  }
  if (a_lo == 0.0) {
    // bracket a positive infeasible lower end; alpha = 0 is never a valid
    // Pareto parameter
    a_lo = std::min(1e-12 * (1.0 + hi), 0.5 * a_hi);
    while (feasible(a_lo) && a_lo > 1e-300) a_lo *= 0.5;
    if (a_lo <= 1e-300) return {0.0, TruncatedPareto{0.0, hi}, 0.0};
  }
  const double width_tol = tol * (hi - lo > 0.0 ? hi - lo : 1.0);
  while (a_hi - a_lo > width_tol) {
    const double mid = 0.5 * (a_lo + a_hi);
    if (feasible(mid))
      a_hi = mid;
    else
      a_lo = mid;
  }
  const double b = beta_of_alpha(a_hi, mu, hi);
  return {a_hi, TruncatedPareto{a_hi, b}, a_hi - a_lo};
}

}  // namespace screenlab
