#ifndef SCREENLAB_PARETO_HPP
#define SCREENLAB_PARETO_HPP

#include "screenlab/dist1d.hpp"

namespace screenlab {

// Truncated Pareto signal distribution: cdf 1 - alpha/x on [alpha, beta) with
// an atom of mass alpha/beta at beta.  alpha == beta degenerates to a point
// mass at alpha.
struct TruncatedPareto {
  double alpha = 0.0;
  double beta = 0.0;

  double mean() const;
  double cdf(double x) const;
  double integrated_cdf(double x) const;
  double atom_mass_at_beta() const;
  Dist1D to_dist(double lo, double hi,
                 std::size_t grid_points = Dist1D::kDefaultGridPoints) const;
  Dist1D to_dist() const { return to_dist(alpha, beta); }
};

// alpha * (1 + ln(beta / alpha)); requires 0 < alpha <= beta.
double tpd_mean(double alpha, double beta);

// The unique beta in [alpha, cap] with tpd_mean(alpha, beta) == target_mean.
// Closed form beta = alpha * exp(target_mean / alpha - 1), polished by one
// Newton step.  Throws InfeasibleError when target_mean is outside
// [alpha, tpd_mean(alpha, cap)].
double beta_of_alpha(double alpha, double target_mean, double cap);

// Truncated Pareto with support minimum pi and mean mu_bar (the unique
// truncation point tau such that H_{pi,tau} matches the prior's mean).
// Requires pi <= mu_bar.
TruncatedPareto tau_for_profit(double pi, double mu_bar, double cap);

struct AlphaStarResult {
  double alpha_star = 0.0;
  TruncatedPareto signal_dist;
  // residual width of the final bisection bracket
  double bracket_width = 0.0;
};

// Smallest alpha such that the grand-bundle distribution is a mean-preserving
// spread of H_{alpha, beta(alpha)}; bisection over [support_lo, mean].
AlphaStarResult alpha_star(const Dist1D& grand_bundle, double tol = 1e-9);

}  // namespace screenlab

#endif
