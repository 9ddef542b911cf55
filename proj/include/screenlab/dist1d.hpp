#ifndef SCREENLAB_DIST1D_HPP
#define SCREENLAB_DIST1D_HPP

#include <cstddef>
#include <vector>

namespace screenlab {

struct Atom {
  double x = 0.0;
  double mass = 0.0;
};

// One-dimensional distribution on a closed interval [support_lo, support_hi].
//
// The continuous part is a piecewise-linear sub-CDF sampled on an ascending
// grid; point masses live in a separate atom list and are never smeared into
// the grid.  A few closed-form families (uniform, degenerate, truncated
// Pareto) are tagged so that cdf / integrated_cdf evaluate exactly instead of
// through the grid interpolant.
//
// Immutable after construction; all member functions are const and safe to
// call concurrently.
class Dist1D {
public:
  enum class Family { Generic, Uniform, Degenerate, ParetoTrunc };

  static constexpr std::size_t kDefaultGridPoints = 4096;

  static Dist1D uniform(double a, double b,
                        std::size_t grid_points = kDefaultGridPoints);
  // Point mass at x, embedded in [lo, hi] (defaults to the degenerate box).
  static Dist1D degenerate(double x);
  static Dist1D degenerate(double x, double lo, double hi);
  // Truncated Pareto with cdf 1 - alpha/x on [alpha, beta) and an atom of
  // mass alpha/beta at beta, embedded in [lo, hi] (defaults to [alpha, beta]).
  static Dist1D pareto_trunc(double alpha, double beta,
                             std::size_t grid_points = kDefaultGridPoints);
  static Dist1D pareto_trunc(double alpha, double beta, double lo, double hi,
                             std::size_t grid_points = kDefaultGridPoints);
  // Generic piecewise-linear CDF from grid samples of the full CDF
  // (right-continuous; atoms must sit at the listed locations and equal the
  // CDF jump there).
  static Dist1D from_grid(double lo, double hi, std::vector<double> grid,
                          std::vector<double> cdf_values,
                          std::vector<Atom> atoms = {});
  // Purely atomic distribution.
  static Dist1D from_atoms(double lo, double hi, std::vector<Atom> atoms);

  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }
  Family family() const { return family_; }
  // Family parameters: Uniform -> (a, b); Degenerate -> (x, x);
  // ParetoTrunc -> (alpha, beta).
  double family_param1() const { return p1_; }
  double family_param2() const { return p2_; }

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  // Right-continuous CDF sampled at grid points.
  std::vector<double> cdf_values() const;

  // Right-continuous CDF; 0 below the support, 1 above.
  double cdf(double x) const;
  // Left limit of the CDF at x.
  double cdf_left(double x) const;
  // \int_lo^x F(t) dt.  Throws std::domain_error outside [lo, hi].
  double integrated_cdf(double x) const;
  // CDF jump at x (0 where continuous).
  double atom_mass(double x) const;
  double mean() const;
  // \int_{[lo, x]} t dF(t) (atom at x included).
  double partial_mean_below(double x) const;

  double total_atom_mass() const;

private:
  Dist1D() = default;
  void finalize();
  double continuous_cdf(double x) const;          // sub-CDF of the continuous part
  double continuous_integrated(double x) const;   // \int_lo^x of the sub-CDF

  double lo_ = 0.0;
  double hi_ = 0.0;
  Family family_ = Family::Generic;
  double p1_ = 0.0;
  double p2_ = 0.0;
  std::vector<double> grid_;
  std::vector<double> cont_cdf_;     // continuous sub-CDF at grid points
  std::vector<double> cont_int_;     // prefix integrals of the sub-CDF
  std::vector<Atom> atoms_;          // sorted by location, strictly increasing

  friend Dist1D convolve(const Dist1D& a, const Dist1D& b);
};

// Distribution of the sum of two independent draws.  Both operands must have
// commensurable uniform grid spacing.
Dist1D convolve(const Dist1D& a, const Dist1D& b);

// Distribution of theta_1 + ... + theta_n for iid theta_i ~ marginal.
Dist1D convolve_iid(const Dist1D& marginal, int n);

// Distribution of (theta_1 + ... + theta_n) / n; same support box and mean as
// the marginal.
Dist1D sample_mean_dist(const Dist1D& marginal, int n);

// True iff `spread` is a mean-preserving spread of `contraction`: integrated
// CDFs ordered pointwise (within tol) with matching means.  Supports must
// agree; mismatch throws std::domain_error.
bool is_mps(const Dist1D& spread, const Dist1D& contraction, double tol = 1e-8);

// Rescale d by x -> c * x (c > 0).
Dist1D scale(const Dist1D& d, double c);

}  // namespace screenlab

#endif
