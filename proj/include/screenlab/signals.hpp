#ifndef SCREENLAB_SIGNALS_HPP
#define SCREENLAB_SIGNALS_HPP

#include <cstdint>
#include <vector>

#include "screenlab/dist1d.hpp"
#include "screenlab/value_model.hpp"

namespace screenlab {

// Signal whose realizations lie on the diagonal (s_bar/n, ..., s_bar/n); the
// induced grand-bundle distribution is a complete description.
struct PerfectlyCorrelatedSignal {
  Dist1D grand_bundle;  // G-bar over the sum of estimates
  int n = 2;
};

// Finite unbiased signal: joint distribution over signal realizations x type
// grid points (row-major, signals x types).
struct DiscreteSignal {
  int n = 2;
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  std::vector<std::vector<double>> signal_grid;  // posterior-estimate vectors
  std::vector<std::vector<double>> type_grid;    // type vectors
  std::vector<double> joint;

  std::size_t num_signals() const { return signal_grid.size(); }
  std::size_t num_types() const { return type_grid.size(); }
  double joint_at(std::size_t s, std::size_t t) const {
    return joint[s * type_grid.size() + t];
  }
  std::vector<double> signal_marginal() const;
  std::vector<double> type_marginal() const;
};

// Wraps a feasible grand-bundle distribution H (one with is_mps(F_bar, H)).
// Throws InfeasibleError otherwise.
PerfectlyCorrelatedSignal make_perfectly_correlated(const Dist1D& h, int n,
                                                    const Dist1D& f_bar);
// Unchecked variant for callers that established feasibility themselves.
PerfectlyCorrelatedSignal make_perfectly_correlated(const Dist1D& h, int n);

Dist1D induced_grand_bundle(const PerfectlyCorrelatedSignal& sig);
Dist1D induced_grand_bundle(const DiscreteSignal& sig);

// Both DiscreteSignal invariants within tol: realizations equal the
// conditional mean of the type, and the joint is a probability table.
bool check_unbiased(const DiscreteSignal& sig, double tol = 1e-8);

// Finite atom approximation: continuous mass coarsened to per-cell
// conditional means (a mean-preserving contraction), existing atoms kept
// exactly.
std::vector<Atom> discretize_dist(const Dist1D& d, std::size_t cells);

// Discretized prior as a finite exchangeable joint over a product grid.
DiscreteExchangeableJoint discretize_prior(const PriorSpec& prior,
                                           std::size_t points_per_dim);

// Fully revealing / uninformative signals on the discretized type grid.
DiscreteSignal fully_revealing_signal(const DiscreteExchangeableJoint& grid);
DiscreteSignal uninformative_signal(const DiscreteExchangeableJoint& grid);

// Random mean-cell partition of the type grid into `coarseness` cells; each
// cell's realization is its conditional mean vector, so the output is
// unbiased by construction.  Deterministic in seed.
DiscreteSignal sample_garbling(const DiscreteExchangeableJoint& grid,
                               std::uint64_t seed, std::size_t coarseness);
DiscreteSignal sample_garbling(const PriorSpec& prior, std::uint64_t seed,
                               std::size_t coarseness,
                               std::size_t points_per_dim = 21);

}  // namespace screenlab

#endif
