#include "screenlab/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "screenlab/errors.hpp"

namespace screenlab {

std::vector<double> DiscreteSignal::signal_marginal() const {
  std::vector<double> m(signal_grid.size(), 0.0);
  for (std::size_t s = 0; s < signal_grid.size(); ++s)
    for (std::size_t t = 0; t < type_grid.size(); ++t) m[s] += joint_at(s, t);
  return m;
}

std::vector<double> DiscreteSignal::type_marginal() const {
  std::vector<double> m(type_grid.size(), 0.0);
  for (std::size_t s = 0; s < signal_grid.size(); ++s)
    for (std::size_t t = 0; t < type_grid.size(); ++t) m[t] += joint_at(s, t);
  return m;
}

PerfectlyCorrelatedSignal make_perfectly_correlated(const Dist1D& h, int n) {
  return {h, n};
}

PerfectlyCorrelatedSignal make_perfectly_correlated(const Dist1D& h, int n,
                                                    const Dist1D& f_bar) {
  if (!is_mps(f_bar, h))
    throw InfeasibleError(
        "make_perfectly_correlated: grand-bundle distribution is not an "
        "MPS-contraction of the prior");
  return {h, n};
}

Dist1D induced_grand_bundle(const PerfectlyCorrelatedSignal& sig) {
  return sig.grand_bundle;
}

Dist1D induced_grand_bundle(const DiscreteSignal& sig) {
  std::vector<Atom> atoms;
  const auto marg = sig.signal_marginal();
  for (std::size_t s = 0; s < sig.signal_grid.size(); ++s) {
    const double sum = std::accumulate(sig.signal_grid[s].begin(),
                                       sig.signal_grid[s].end(), 0.0);
    atoms.push_back({sum, marg[s]});
  }
  return Dist1D::from_atoms(sig.n * sig.theta_lo, sig.n * sig.theta_hi,
                            std::move(atoms));
}

bool check_unbiased(const DiscreteSignal& sig, double tol) {
  double total = 0.0;
  for (double p : sig.joint) {
    if (p < -1e-15) return false;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) return false;
  for (std::size_t s = 0; s < sig.signal_grid.size(); ++s) {
    double mass = 0.0;
    std::vector<double> mean(static_cast<std::size_t>(sig.n), 0.0);
    for (std::size_t t = 0; t < sig.type_grid.size(); ++t) {
      const double p = sig.joint_at(s, t);
      mass += p;
      for (std::size_t d = 0; d < mean.size(); ++d)
        mean[d] += p * sig.type_grid[t][d];
    }
    if (mass <= 0.0) continue;
    for (std::size_t d = 0; d < mean.size(); ++d)
      if (std::abs(mean[d] / mass - sig.signal_grid[s][d]) > tol) return false;
  }
  return true;
}

std::vector<Atom> discretize_dist(const Dist1D& d, std::size_t cells) {
  if (cells == 0) throw std::invalid_argument("discretize_dist: cells == 0");
  double lo = d.support_lo();
  double hi = d.support_hi();
  if (d.family() != Dist1D::Family::Generic) {
    lo = d.family_param1();
    hi = d.family_param2();
  } else if (!d.grid().empty()) {
    lo = d.grid().front();
    hi = d.grid().back();
  }
  std::vector<Atom> out = d.atoms();
  const double cont_mass = 1.0 - d.total_atom_mass();
  if (cont_mass > 1e-14 && hi > lo) {
    // continuous-only CDF and first moment (atoms subtracted)
    const auto cont_stats = [&](double x) {
      double m = 0.0, mx = 0.0;
      for (const Atom& a : d.atoms())
        if (a.x <= x + 1e-15) {
          m += a.mass;
          mx += a.mass * a.x;
        }
      return std::pair{d.cdf(x) - m, d.partial_mean_below(x) - mx};
    };
    auto [prev_cdf, prev_pm] = cont_stats(lo);
    double prev = lo;
    for (std::size_t c = 1; c <= cells; ++c) {
      const double x =
          lo + (hi - lo) * static_cast<double>(c) / static_cast<double>(cells);
      const auto [cdf_c, pm_c] = cont_stats(x);
      const double mass = cdf_c - prev_cdf;
      if (mass > 1e-15) {
        const double mean = (pm_c - prev_pm) / mass;
        out.push_back({std::clamp(mean, prev, x), mass});
      }
      prev = x;
      prev_cdf = cdf_c;
      prev_pm = pm_c;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Atom& u, const Atom& v) { return u.x < v.x; });
  return out;
}

DiscreteExchangeableJoint discretize_prior(const PriorSpec& prior,
                                           std::size_t points_per_dim) {
  if (const auto* j = prior.discrete_joint()) return *j;
  const Dist1D* marg = prior.iid_marginal();
  if (marg == nullptr)
    throw ConfigError(
        "discretize_prior: explicit grand-bundle priors have no type grid");
  const auto atoms = discretize_dist(*marg, points_per_dim);
  DiscreteExchangeableJoint out;
  out.n = prior.n();
  out.theta_lo = marg->support_lo();
  out.theta_hi = marg->support_hi();
  std::vector<double> axis_probs;
  for (const Atom& a : atoms) {
    out.axis.push_back(a.x);
    axis_probs.push_back(a.mass);
  }
  const std::size_t k = out.axis.size();
  std::size_t total = 1;
  for (int d = 0; d < out.n; ++d) total *= k;
  out.probs.resize(total);
  for (std::size_t f = 0; f < total; ++f) {
    std::size_t rem = f;
    double p = 1.0;
    for (int d = 0; d < out.n; ++d) {
      p *= axis_probs[rem % k];
      rem /= k;
    }
    out.probs[f] = p;
  }
  return out;
}

namespace {

std::vector<std::vector<double>> joint_type_points(
    const DiscreteExchangeableJoint& grid) {
  const std::size_t k = grid.axis.size();
  std::vector<std::vector<double>> pts(grid.probs.size());
  for (std::size_t f = 0; f < grid.probs.size(); ++f) {
    std::vector<double> v(static_cast<std::size_t>(grid.n));
    std::size_t rem = f;
    for (int d = grid.n - 1; d >= 0; --d) {
      v[static_cast<std::size_t>(d)] = grid.axis[rem % k];
      rem /= k;
    }
    pts[f] = std::move(v);
  }
  return pts;
}

DiscreteSignal from_partition(const DiscreteExchangeableJoint& grid,
                              const std::vector<std::size_t>& cell_of) {
  const auto types = joint_type_points(grid);
  const std::size_t ncells =
      cell_of.empty() ? 0 : *std::max_element(cell_of.begin(), cell_of.end()) + 1;
  DiscreteSignal sig;
  sig.n = grid.n;
  sig.theta_lo = grid.theta_lo;
  sig.theta_hi = grid.theta_hi;
  sig.type_grid = types;
  std::vector<double> cell_mass(ncells, 0.0);
  std::vector<std::vector<double>> cell_mean(
      ncells, std::vector<double>(static_cast<std::size_t>(grid.n), 0.0));
  for (std::size_t t = 0; t < types.size(); ++t) {
    const double p = grid.probs[t];
    cell_mass[cell_of[t]] += p;
    for (std::size_t d = 0; d < cell_mean[cell_of[t]].size(); ++d)
      cell_mean[cell_of[t]][d] += p * types[t][d];
  }
  std::vector<std::size_t> signal_index(ncells, SIZE_MAX);
  for (std::size_t c = 0; c < ncells; ++c) {
    if (cell_mass[c] <= 0.0) continue;
    for (double& v : cell_mean[c]) v /= cell_mass[c];
    signal_index[c] = sig.signal_grid.size();
    sig.signal_grid.push_back(cell_mean[c]);
  }
  sig.joint.assign(sig.signal_grid.size() * types.size(), 0.0);
  for (std::size_t t = 0; t < types.size(); ++t) {
    const std::size_t s = signal_index[cell_of[t]];
    sig.joint[s * types.size() + t] = grid.probs[t];
  }
  return sig;
}

}  // namespace

DiscreteSignal fully_revealing_signal(const DiscreteExchangeableJoint& grid) {
  std::vector<std::size_t> cell_of(grid.probs.size());
  std::iota(cell_of.begin(), cell_of.end(), std::size_t{0});
  return from_partition(grid, cell_of);
}

DiscreteSignal uninformative_signal(const DiscreteExchangeableJoint& grid) {
  return from_partition(grid,
                        std::vector<std::size_t>(grid.probs.size(), 0));
}

DiscreteSignal sample_garbling(const DiscreteExchangeableJoint& grid,
                               std::uint64_t seed, std::size_t coarseness) {
  const std::size_t m = grid.probs.size();
  if (coarseness <= 1) return uninformative_signal(grid);
  if (coarseness >= m) return fully_revealing_signal(grid);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> cell_of(m);
  std::uniform_int_distribution<std::size_t> pick(0, coarseness - 1);
  for (std::size_t i = 0; i < m; ++i)
    cell_of[order[i]] = i < coarseness ? i : pick(rng);
  return from_partition(grid, cell_of);
}

DiscreteSignal sample_garbling(const PriorSpec& prior, std::uint64_t seed,
                               std::size_t coarseness,
                               std::size_t points_per_dim) {
  return sample_garbling(discretize_prior(prior, points_per_dim), seed,
                         coarseness);
}

}  // namespace screenlab
