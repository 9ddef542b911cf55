#include "screenlab/dist1d.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "screenlab/errors.hpp"

namespace screenlab {

namespace {

constexpr double kNormTol = 1e-12;

bool same_point(double a, double b) {
  return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b));
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.front() = a;
  g.back() = b;
  return g;
}

void sort_merge_atoms(std::vector<Atom>& atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& u, const Atom& v) { return u.x < v.x; });
  std::vector<Atom> merged;
  for (const Atom& a : atoms) {
    if (a.mass <= 0.0) continue;
    if (!merged.empty() && same_point(merged.back().x, a.x))
      merged.back().mass += a.mass;
    else
      merged.push_back(a);
  }
  atoms.swap(merged);
}

}  // namespace

void Dist1D::finalize() {
  if (!(hi_ >= lo_)) throw std::invalid_argument("Dist1D: empty support");
  sort_merge_atoms(atoms_);
  for (const Atom& a : atoms_) {
    if (a.x < lo_ - 1e-12 || a.x > hi_ + 1e-12)
      throw std::invalid_argument("Dist1D: atom outside support");
  }
  if (grid_.empty()) {
    grid_ = {lo_, hi_};
    cont_cdf_.assign(grid_.size(), 0.0);
  }
  if (grid_.size() != cont_cdf_.size())
    throw std::invalid_argument("Dist1D: grid/cdf size mismatch");
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (grid_[i] < grid_[i - 1])
      throw std::invalid_argument("Dist1D: grid not ascending");
    if (cont_cdf_[i] < cont_cdf_[i - 1] - kNormTol)
      throw std::invalid_argument("Dist1D: CDF not non-decreasing");
  }
  const double total = cont_cdf_.back() + total_atom_mass();
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("Dist1D: total mass is not 1");
  cont_int_.assign(grid_.size(), 0.0);
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    const double h = grid_[i] - grid_[i - 1];
    cont_int_[i] =
        cont_int_[i - 1] + 0.5 * (cont_cdf_[i] + cont_cdf_[i - 1]) * h;
  }
}

Dist1D Dist1D::uniform(double a, double b, std::size_t grid_points) {
  if (!(b > a)) throw std::invalid_argument("uniform: requires b > a");
  Dist1D d;
  d.lo_ = a;
  d.hi_ = b;
  d.family_ = Family::Uniform;
  d.p1_ = a;
  d.p2_ = b;
  d.grid_ = linspace(a, b, std::max<std::size_t>(grid_points, 2));
  d.cont_cdf_.resize(d.grid_.size());
  for (std::size_t i = 0; i < d.grid_.size(); ++i)
    d.cont_cdf_[i] = (d.grid_[i] - a) / (b - a);
  d.cont_cdf_.back() = 1.0;
  d.finalize();
  return d;
}

Dist1D Dist1D::degenerate(double x) { return degenerate(x, x, x); }

Dist1D Dist1D::degenerate(double x, double lo, double hi) {
  if (x < lo || x > hi)
    throw std::invalid_argument("degenerate: point outside box");
  Dist1D d;
  d.lo_ = lo;
  d.hi_ = hi;
  d.family_ = Family::Degenerate;
  d.p1_ = x;
  d.p2_ = x;
  d.atoms_ = {{x, 1.0}};
  d.finalize();
  return d;
}

Dist1D Dist1D::pareto_trunc(double alpha, double beta,
                            std::size_t grid_points) {
  return pareto_trunc(alpha, beta, alpha, beta, grid_points);
}

Dist1D Dist1D::pareto_trunc(double alpha, double beta, double lo, double hi,
                            std::size_t grid_points) {
  if (!(alpha > 0.0)) throw std::domain_error("pareto_trunc: alpha <= 0");
  if (beta < alpha) throw std::domain_error("pareto_trunc: beta < alpha");
  if (alpha < lo - 1e-12 || beta > hi + 1e-12)
    throw std::invalid_argument("pareto_trunc: [alpha, beta] outside box");
  if (same_point(alpha, beta)) return degenerate(alpha, lo, hi);
  Dist1D d;
  d.lo_ = lo;
  d.hi_ = hi;
  d.family_ = Family::ParetoTrunc;
  d.p1_ = alpha;
  d.p2_ = beta;
  d.grid_ = linspace(alpha, beta, std::max<std::size_t>(grid_points, 2));
  d.cont_cdf_.resize(d.grid_.size());
  for (std::size_t i = 0; i < d.grid_.size(); ++i)
    d.cont_cdf_[i] = 1.0 - alpha / d.grid_[i];
  d.cont_cdf_.back() = 1.0 - alpha / beta;
  d.atoms_ = {{beta, alpha / beta}};
  d.finalize();
  return d;
}

Dist1D Dist1D::from_grid(double lo, double hi, std::vector<double> grid,
                         std::vector<double> cdf_values,
                         std::vector<Atom> atoms) {
  Dist1D d;
  d.lo_ = lo;
  d.hi_ = hi;
  sort_merge_atoms(atoms);
  d.atoms_ = atoms;
  d.grid_ = std::move(grid);
  d.cont_cdf_.resize(d.grid_.size());
  for (std::size_t i = 0; i < d.grid_.size(); ++i) {
    double below = 0.0;
    for (const Atom& a : atoms)
      if (a.x <= d.grid_[i] + 1e-15) below += a.mass;
    d.cont_cdf_[i] = cdf_values[i] - below;
    if (d.cont_cdf_[i] < -1e-9)
      throw std::invalid_argument("from_grid: atom mass exceeds CDF jump");
    d.cont_cdf_[i] = std::max(d.cont_cdf_[i], 0.0);
  }
  d.finalize();
  return d;
}

Dist1D Dist1D::from_atoms(double lo, double hi, std::vector<Atom> atoms) {
  Dist1D d;
  d.lo_ = lo;
  d.hi_ = hi;
  d.atoms_ = std::move(atoms);
  d.finalize();
  return d;
}

double Dist1D::total_atom_mass() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.mass;
  return s;
}

double Dist1D::continuous_cdf(double x) const {
  if (x <= grid_.front()) return 0.0;
  if (x >= grid_.back()) return cont_cdf_.back();
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - grid_.begin()) - 1;
  const double h = grid_[i + 1] - grid_[i];
  if (h <= 0.0) return cont_cdf_[i];
  const double w = (x - grid_[i]) / h;
  return cont_cdf_[i] + w * (cont_cdf_[i + 1] - cont_cdf_[i]);
}

double Dist1D::continuous_integrated(double x) const {
  if (x <= grid_.front()) return 0.0;
  if (x >= grid_.back())
    return cont_int_.back() + cont_cdf_.back() * (x - grid_.back());
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - grid_.begin()) - 1;
  const double h = grid_[i + 1] - grid_[i];
  if (h <= 0.0) return cont_int_[i];
  const double w = (x - grid_[i]);
  const double slope = (cont_cdf_[i + 1] - cont_cdf_[i]) / h;
  return cont_int_[i] + cont_cdf_[i] * w + 0.5 * slope * w * w;
}

double Dist1D::cdf(double x) const {
  if (x < lo_) return 0.0;
  if (x >= hi_) return 1.0;
  double atom_below = 0.0;
  for (const Atom& a : atoms_) {
    if (a.x <= x + 1e-15 || same_point(a.x, x))
      atom_below += a.mass;
    else
      break;
  }
  switch (family_) {
    case Family::Uniform:
      return std::clamp((x - p1_) / (p2_ - p1_), 0.0, 1.0);
    case Family::Degenerate:
      return x >= p1_ ? 1.0 : 0.0;
    case Family::ParetoTrunc:
      if (x < p1_) return 0.0;
      if (x >= p2_ || same_point(x, p2_)) return 1.0;
      return 1.0 - p1_ / x;
    case Family::Generic:
      break;
  }
  return continuous_cdf(x) + atom_below;
}

double Dist1D::cdf_left(double x) const { return cdf(x) - atom_mass(x); }

double Dist1D::atom_mass(double x) const {
  for (const Atom& a : atoms_)
    if (same_point(a.x, x)) return a.mass;
  return 0.0;
}

double Dist1D::integrated_cdf(double x) const {
  if (x < lo_ - 1e-12 || x > hi_ + 1e-12)
    throw std::domain_error("integrated_cdf: x outside support");
  x = std::clamp(x, lo_, hi_);
  switch (family_) {
    case Family::Uniform: {
      if (x <= p1_) return 0.0;
      if (x >= p2_) return 0.5 * (p2_ - p1_) + (x - p2_);
      const double u = x - p1_;
      return 0.5 * u * u / (p2_ - p1_);
    }
    case Family::Degenerate:
      return std::max(0.0, x - p1_);
    case Family::ParetoTrunc: {
      if (x <= p1_) return 0.0;
      const double at_beta = p2_ - p1_ - p1_ * std::log(p2_ / p1_);
      if (x >= p2_) return at_beta + (x - p2_);
      return x - p1_ - p1_ * std::log(x / p1_);
    }
    case Family::Generic:
      break;
  }
  double v = continuous_integrated(x);
  for (const Atom& a : atoms_)
    if (a.x < x) v += a.mass * (x - a.x);
  return v;
}

double Dist1D::mean() const { return hi_ - integrated_cdf(hi_); }

double Dist1D::partial_mean_below(double x) const {
  if (x < lo_) return 0.0;
  if (x >= hi_) return mean();
  return x * cdf(x) - integrated_cdf(x);
}

std::vector<double> Dist1D::cdf_values() const {
  std::vector<double> v(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) v[i] = cdf(grid_[i]);
  return v;
}

namespace {

// Continuous part as equal-width cell masses plus the atom list.  A
// piecewise-linear CDF on a uniform grid is exactly a piecewise-constant
// density, so convolutions below are exact at output grid nodes.
struct CellRep {
  double lo = 0.0;
  double hi = 0.0;
  double h = 0.0;  // 0 when the distribution is purely atomic
  std::vector<double> mass;
  std::vector<Atom> atoms;
};

CellRep to_cells(const Dist1D& d) {
  CellRep r;
  r.lo = d.support_lo();
  r.hi = d.support_hi();
  r.atoms = d.atoms();
  const auto& g = d.grid();
  const auto cont_total = 1.0 - [&] {
    double s = 0.0;
    for (const Atom& a : r.atoms) s += a.mass;
    return s;
  }();
  if (cont_total <= 1e-14 || g.size() < 2 || g.back() <= g.front()) return r;
  const std::size_t cells = g.size() - 1;
  r.h = (g.back() - g.front()) / static_cast<double>(cells);
  for (std::size_t i = 1; i < g.size(); ++i) {
    const double expect = g.front() + r.h * static_cast<double>(i);
    if (std::abs(g[i] - expect) > 1e-9 * (1.0 + g.back() - g.front()))
      throw std::invalid_argument("convolve: grid is not uniform");
  }
  r.mass.resize(cells);
  const auto vals = d.cdf_values();
  // recover continuous increments (atoms subtracted via cdf_left at nodes)
  double prev = 0.0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    double below = 0.0;
    for (const Atom& a : r.atoms)
      if (a.x <= g[i] + 1e-15) below += a.mass;
    const double cont = vals[i] - below;
    r.mass[i - 1] = std::max(cont - prev, 0.0);
    prev = cont;
  }
  // the continuous sub-CDF of the family types is evaluated on their own
  // support; r.lo for cells is the grid origin
  r.lo = g.front();
  r.hi = g.back();
  return r;
}

// Deposit the mass of a source cell [x0, x0 + h) into the aligned output
// cell array; proportional split is exact for piecewise-constant densities.
void deposit_cell(std::vector<double>& out, double out_lo, double h,
                  double x0, double m) {
  if (m <= 0.0) return;
  const double rel = (x0 - out_lo) / h;
  const auto k = static_cast<long>(std::floor(rel + 1e-9));
  const double frac = rel - static_cast<double>(k);
  const auto n = static_cast<long>(out.size());
  const long k0 = std::clamp(k, 0L, n - 1);
  if (std::abs(frac) < 1e-9) {
    out[static_cast<std::size_t>(k0)] += m;
  } else {
    const long k1 = std::clamp(k + 1, 0L, n - 1);
    out[static_cast<std::size_t>(k0)] += m * (1.0 - frac);
    out[static_cast<std::size_t>(k1)] += m * frac;
  }
}

}  // namespace

Dist1D convolve(const Dist1D& a, const Dist1D& b) {
  const CellRep ra = to_cells(a);
  const CellRep rb = to_cells(b);
  const double lo = a.support_lo() + b.support_lo();
  const double hi = a.support_hi() + b.support_hi();

  std::vector<Atom> out_atoms;
  for (const Atom& ua : ra.atoms)
    for (const Atom& ub : rb.atoms)
      out_atoms.push_back({ua.x + ub.x, ua.mass * ub.mass});

  if (ra.h == 0.0 && rb.h == 0.0) return Dist1D::from_atoms(lo, hi, out_atoms);

  double h = ra.h > 0.0 ? ra.h : rb.h;
  if (ra.h > 0.0 && rb.h > 0.0) {
    if (std::abs(ra.h - rb.h) > 1e-9 * h)
      throw std::invalid_argument("convolve: incompatible grid spacings");
    h = 0.5 * (ra.h + rb.h);
  }
  const auto cells = static_cast<std::size_t>(std::llround((hi - lo) / h));
  std::vector<double> out(std::max<std::size_t>(cells, 1), 0.0);

  if (ra.h > 0.0 && rb.h > 0.0) {
    // cell x cell: the sum of two uniform cells is triangular over two cells,
    // half the mass in each; exact at grid nodes when the cell origins align
    const double base = ra.lo + rb.lo - lo;
    const double rel = base / h;
    const bool aligned = std::abs(rel - std::round(rel)) < 1e-9;
    const auto off = static_cast<std::size_t>(std::llround(rel));
    for (std::size_t i = 0; i < ra.mass.size(); ++i) {
      const double mi = ra.mass[i];
      if (mi == 0.0) continue;
      for (std::size_t j = 0; j < rb.mass.size(); ++j) {
        const double m = mi * rb.mass[j];
        if (m == 0.0) continue;
        if (aligned) {
          const std::size_t k = off + i + j;
          out[std::min(k, out.size() - 1)] += 0.5 * m;
          out[std::min(k + 1, out.size() - 1)] += 0.5 * m;
        } else {
          const double x0 = base + lo + h * static_cast<double>(i + j);
          deposit_cell(out, lo, h, x0, 0.5 * m);
          deposit_cell(out, lo, h, x0 + h, 0.5 * m);
        }
      }
    }
  }
  if (rb.h > 0.0) {
    for (const Atom& ua : ra.atoms)
      for (std::size_t j = 0; j < rb.mass.size(); ++j)
        deposit_cell(out, lo, h, ua.x + rb.lo + h * static_cast<double>(j),
                     ua.mass * rb.mass[j]);
  }
  if (ra.h > 0.0) {
    for (const Atom& ub : rb.atoms)
      for (std::size_t i = 0; i < ra.mass.size(); ++i)
        deposit_cell(out, lo, h, ub.x + ra.lo + h * static_cast<double>(i),
                     ub.mass * ra.mass[i]);
  }

  std::vector<double> grid(out.size() + 1), cdfv(out.size() + 1);
  double run = 0.0;
  double atom_total = 0.0;
  for (const Atom& at : out_atoms) atom_total += at.mass;
  for (std::size_t i = 0; i <= out.size(); ++i) {
    grid[i] = lo + h * static_cast<double>(i);
    if (i > 0) run += out[i - 1];
    cdfv[i] = run;
  }
  grid.back() = hi;
  // renormalize tiny fp drift in the continuous mass
  const double cont_target = 1.0 - atom_total;
  if (run > 0.0 && std::abs(run - cont_target) < 1e-9) {
    const double c = cont_target / run;
    for (double& v : cdfv) v *= c;
  }
  std::vector<double> full(cdfv.size());
  for (std::size_t i = 0; i < cdfv.size(); ++i) {
    double below = 0.0;
    for (const Atom& at : out_atoms)
      if (at.x <= grid[i] + 1e-15) below += at.mass;
    full[i] = cdfv[i] + below;
  }
  return Dist1D::from_grid(lo, hi, std::move(grid), std::move(full),
                           std::move(out_atoms));
}

Dist1D convolve_iid(const Dist1D& marginal, int n) {
  if (n < 1) throw std::invalid_argument("convolve_iid: n < 1");
  Dist1D acc = marginal;
  for (int i = 1; i < n; ++i) acc = convolve(acc, marginal);
  return acc;
}

Dist1D scale(const Dist1D& d, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("scale: factor must be > 0");
  if (c == 1.0) return d;
  std::vector<Atom> atoms = d.atoms();
  for (Atom& a : atoms) a.x *= c;
  switch (d.family()) {
    case Dist1D::Family::Uniform:
      return Dist1D::uniform(d.family_param1() * c, d.family_param2() * c,
                             d.grid().size());
    case Dist1D::Family::Degenerate:
      return Dist1D::degenerate(d.family_param1() * c, d.support_lo() * c,
                                d.support_hi() * c);
    case Dist1D::Family::ParetoTrunc:
      // a scaled truncated Pareto is again truncated Pareto
      return Dist1D::pareto_trunc(d.family_param1() * c, d.family_param2() * c,
                                  d.support_lo() * c, d.support_hi() * c,
                                  d.grid().size());
    case Dist1D::Family::Generic:
      break;
  }
  std::vector<double> grid = d.grid();
  for (double& x : grid) x *= c;
  return Dist1D::from_grid(d.support_lo() * c, d.support_hi() * c,
                           std::move(grid), d.cdf_values(), std::move(atoms));
}

Dist1D sample_mean_dist(const Dist1D& marginal, int n) {
  if (n < 1) throw std::invalid_argument("sample_mean_dist: n < 1");
  if (n == 1) return marginal;
  return scale(convolve_iid(marginal, n), 1.0 / static_cast<double>(n));
}

bool is_mps(const Dist1D& spread, const Dist1D& contraction, double tol) {
  const double span =
      1.0 + std::abs(spread.support_hi()) + std::abs(spread.support_lo());
  if (std::abs(spread.support_lo() - contraction.support_lo()) > 1e-9 * span ||
      std::abs(spread.support_hi() - contraction.support_hi()) > 1e-9 * span)
    throw std::domain_error("is_mps: supports differ");
  if (std::abs(spread.mean() - contraction.mean()) > tol) return false;

  std::vector<double> pts;
  pts.reserve(spread.grid().size() + contraction.grid().size() + 8);
  for (double x : spread.grid()) pts.push_back(x);
  for (double x : contraction.grid()) pts.push_back(x);
  for (const Atom& a : spread.atoms()) pts.push_back(a.x);
  for (const Atom& a : contraction.atoms()) pts.push_back(a.x);
  for (const Dist1D* d : {&spread, &contraction}) {
    if (d->family() != Dist1D::Family::Generic) {
      pts.push_back(d->family_param1());
      pts.push_back(d->family_param2());
    }
  }
  const double lo = spread.support_lo();
  const double hi = spread.support_hi();
  for (double x : pts) {
    if (x < lo || x > hi) continue;
    if (spread.integrated_cdf(x) < contraction.integrated_cdf(x) - tol)
      return false;
  }
  return true;
}

}  // namespace screenlab
