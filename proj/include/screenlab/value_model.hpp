#ifndef SCREENLAB_VALUE_MODEL_HPP
#define SCREENLAB_VALUE_MODEL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "screenlab/dist1d.hpp"

namespace screenlab {

// A bundle of goods encoded as a bitmask over {1..n}, n <= 16.
using Bundle = std::uint32_t;

inline int bundle_size(Bundle b) { return __builtin_popcount(b); }

// Bundle value model u(theta, b) = kappa_b * sum_{i in b} theta_i with the
// grand-bundle coefficient normalized to 1.  Missing kappa entries default
// to 1 (additive values).
class BundleValueModel {
public:
  BundleValueModel(int n, double theta_lo, double theta_hi,
                   std::map<Bundle, double> kappa = {});

  int n() const { return n_; }
  double theta_lo() const { return theta_lo_; }
  double theta_hi() const { return theta_hi_; }
  Bundle grand_bundle() const { return (Bundle{1} << n_) - 1; }
  double kappa(Bundle b) const;
  bool additive() const;

  // kappa_b * sum_{i in b} s_i; 0 for the empty bundle.  s must lie in the
  // type box.
  double bundle_value(std::span<const double> s, Bundle b) const;
  // Value when all coordinates of the estimate equal s_bar / n.
  double diagonal_value(double s_bar, Bundle b) const;

  // Weak free disposal: kappa_b <= 1 + (n-|b|)/|b| * theta_lo/theta_hi for
  // every nonempty bundle.
  bool validate_free_disposal() const;
  // First violating bundle, or 0 if none.
  Bundle first_free_disposal_violation() const;

private:
  int n_;
  double theta_lo_;
  double theta_hi_;
  std::vector<double> kappa_;  // indexed by bundle bitmask
};

// Prior over the type vector.  Only the grand-bundle distribution F-bar is
// needed by the buyer-optimal and robust computations; discrete joints feed
// the LP oracle and the garbling sampler.
struct IIDMarginal {
  Dist1D marginal;
  int n = 2;
};

struct ExplicitGrandBundle {
  Dist1D dist;
  int n = 2;
};

struct DiscreteExchangeableJoint {
  std::vector<double> axis;           // per-dimension grid
  std::vector<double> probs;          // row-major table over axis^n
  int n = 2;
  double theta_lo = 0.0;
  double theta_hi = 0.0;

  // max table asymmetry under coordinate permutations
  double exchangeability_defect() const;
};

class PriorSpec {
public:
  explicit PriorSpec(IIDMarginal p);
  explicit PriorSpec(ExplicitGrandBundle p);
  explicit PriorSpec(DiscreteExchangeableJoint p);

  int n() const;
  bool is_iid() const;
  const Dist1D* iid_marginal() const;
  const DiscreteExchangeableJoint* discrete_joint() const;

  // F-bar: distribution of theta_1 + ... + theta_n.
  const Dist1D& grand_bundle_dist() const { return grand_bundle_; }
  // Maximal surplus mu-bar = mean of F-bar.
  double max_surplus() const { return grand_bundle_.mean(); }

private:
  std::variant<IIDMarginal, ExplicitGrandBundle, DiscreteExchangeableJoint>
      kind_;
  Dist1D grand_bundle_;
};

}  // namespace screenlab

#endif
