#include "screenlab/value_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "screenlab/errors.hpp"

namespace screenlab {

BundleValueModel::BundleValueModel(int n, double theta_lo, double theta_hi,
                                   std::map<Bundle, double> kappa)
    : n_(n), theta_lo_(theta_lo), theta_hi_(theta_hi) {
  if (n < 2 || n > 16)
    throw std::invalid_argument("BundleValueModel: n must be in [2, 16]");
  if (theta_lo < 0.0 || !(theta_hi > theta_lo))
    throw std::invalid_argument(
        "BundleValueModel: requires 0 <= theta_lo < theta_hi");
  kappa_.assign(std::size_t{1} << n, 1.0);
  kappa_[0] = 0.0;
  for (const auto& [b, k] : kappa) {
    if (b == 0 || b > grand_bundle())
      throw std::invalid_argument("BundleValueModel: bad bundle key");
    if (k < 0.0)
      throw std::invalid_argument("BundleValueModel: kappa must be >= 0");
    kappa_[b] = k;
  }
  if (std::abs(kappa_[grand_bundle()] - 1.0) > 1e-12)
    throw std::invalid_argument(
        "BundleValueModel: grand-bundle kappa must be 1");
}

double BundleValueModel::kappa(Bundle b) const {
  if (b > grand_bundle()) throw std::invalid_argument("kappa: bad bundle");
  return kappa_[b];
}

bool BundleValueModel::additive() const {
  for (Bundle b = 1; b <= grand_bundle(); ++b)
    if (std::abs(kappa_[b] - 1.0) > 1e-12) return false;
  return true;
}

double BundleValueModel::bundle_value(std::span<const double> s,
                                      Bundle b) const {
  if (static_cast<int>(s.size()) != n_)
    throw std::invalid_argument("bundle_value: estimate dimension mismatch");
  const double slack = 1e-9 * (1.0 + theta_hi_);
  for (double v : s)
    if (v < theta_lo_ - slack || v > theta_hi_ + slack)
      throw std::domain_error("bundle_value: estimate outside type box");
  if (b == 0) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < n_; ++i)
    if (b & (Bundle{1} << i)) sum += s[static_cast<std::size_t>(i)];
  return kappa_[b] * sum;
}

double BundleValueModel::diagonal_value(double s_bar, Bundle b) const {
  if (b == 0) return 0.0;
  return kappa_[b] * bundle_size(b) * s_bar / n_;
}

Bundle BundleValueModel::first_free_disposal_violation() const {
  for (Bundle b = 1; b <= grand_bundle(); ++b) {
    const int sz = bundle_size(b);
    const double bound =
        1.0 + (static_cast<double>(n_ - sz) / sz) * (theta_lo_ / theta_hi_);
    if (kappa_[b] > bound + 1e-12) return b;
  }
  return 0;
}

bool BundleValueModel::validate_free_disposal() const {
  return first_free_disposal_violation() == 0;
}

double DiscreteExchangeableJoint::exchangeability_defect() const {
  const auto k = axis.size();
  if (n != 2) {
    // pairwise transpositions generate the symmetric group; check adjacent
    // swaps on the index tuple
    double worst = 0.0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    const auto flat = [&](const std::vector<std::size_t>& ix) {
      std::size_t f = 0;
      for (std::size_t d = 0; d < ix.size(); ++d) f = f * k + ix[d];
      return f;
    };
    for (std::size_t f = 0; f < probs.size(); ++f) {
      std::size_t rem = f;
      for (int d = n - 1; d >= 0; --d) {
        idx[static_cast<std::size_t>(d)] = rem % k;
        rem /= k;
      }
      for (int d = 0; d + 1 < n; ++d) {
        auto swapped = idx;
        std::swap(swapped[static_cast<std::size_t>(d)],
                  swapped[static_cast<std::size_t>(d) + 1]);
        worst = std::max(worst, std::abs(probs[f] - probs[flat(swapped)]));
      }
    }
    return worst;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      worst = std::max(worst, std::abs(probs[i * k + j] - probs[j * k + i]));
  return worst;
}

namespace {

Dist1D joint_sum_pushforward(const DiscreteExchangeableJoint& j) {
  std::vector<Atom> atoms;
  const auto k = j.axis.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(j.n), 0);
  for (std::size_t f = 0; f < j.probs.size(); ++f) {
    std::size_t rem = f;
    double sum = 0.0;
    for (int d = j.n - 1; d >= 0; --d) {
      sum += j.axis[rem % k];
      rem /= k;
    }
    atoms.push_back({sum, j.probs[f]});
  }
  return Dist1D::from_atoms(j.n * j.theta_lo, j.n * j.theta_hi,
                            std::move(atoms));
}

}  // namespace

PriorSpec::PriorSpec(IIDMarginal p)
    : kind_(p), grand_bundle_(convolve_iid(p.marginal, p.n)) {
  if (p.n < 1) throw ConfigError("PriorSpec: n < 1");
}

PriorSpec::PriorSpec(ExplicitGrandBundle p)
    : kind_(p), grand_bundle_(p.dist) {}

PriorSpec::PriorSpec(DiscreteExchangeableJoint p)
    : kind_(p), grand_bundle_(joint_sum_pushforward(p)) {
  if (p.probs.size() !=
      static_cast<std::size_t>(std::pow(static_cast<double>(p.axis.size()),
                                        p.n) +
                               0.5))
    throw ConfigError("PriorSpec: joint table size mismatch");
  if (p.exchangeability_defect() > 1e-12)
    throw ConfigError("PriorSpec: joint table is not exchangeable");
}

int PriorSpec::n() const {
  if (const auto* p = std::get_if<IIDMarginal>(&kind_)) return p->n;
  if (const auto* p = std::get_if<ExplicitGrandBundle>(&kind_)) return p->n;
  return std::get<DiscreteExchangeableJoint>(kind_).n;
}

bool PriorSpec::is_iid() const {
  return std::holds_alternative<IIDMarginal>(kind_);
}

const Dist1D* PriorSpec::iid_marginal() const {
  if (const auto* p = std::get_if<IIDMarginal>(&kind_)) return &p->marginal;
  return nullptr;
}

const DiscreteExchangeableJoint* PriorSpec::discrete_joint() const {
  return std::get_if<DiscreteExchangeableJoint>(&kind_);
}

}  // namespace screenlab
