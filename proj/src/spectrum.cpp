#include "fluxtri/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "fluxtri/entangle.hpp"
#include "fluxtri/optimize.hpp"

namespace fluxtri {

namespace {

// Largest-magnitude component made real and positive, as in hermitian_eigensystem.
void fix_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[pivot]) + 1e-12) pivot = i;
  }
  v *= std::conj(v[pivot]) / std::abs(v[pivot]);
}

const Eigen::MatrixXcd& frustrated_sector_basis() {
  static const Eigen::MatrixXcd basis = [] {
    const Eigen::MatrixXcd& s = symmetric_sector_basis();
    const Eigen::MatrixXcd complement = Eigen::MatrixXcd::Identity(8, 8) - s * s.adjoint();
    const auto es = hermitian_eigensystem(complement);
    return Eigen::MatrixXcd(es.vectors.rightCols(4));
  }();
  return basis;
}

// Eigenvalue groups of an ascending spectrum, chained within tol.
std::vector<std::vector<int>> group_levels(const Eigen::VectorXd& energies, double tol) {
  std::vector<std::vector<int>> groups;
  for (int k = 0; k < energies.size(); ++k) {
    if (!groups.empty() && energies[k] - energies[groups.back().back()] < tol) {
      groups.back().push_back(k);
    } else {
      groups.push_back({k});
    }
  }
  return groups;
}

Amplitudes ket(std::string_view s) { return PureState::basis(s).amplitudes(); }

Amplitudes f_up() { return ket("uud") + ket("udu") + ket("duu"); }
Amplitudes f_down() { return ket("ddu") + ket("dud") + ket("udd"); }

// Template family as span{primary, secondary}; the coefficient pair for a given delta
// and its inverse (ratio secondary/primary -> delta).
struct TemplateFamily {
  Amplitudes primary;
  Amplitudes secondary;
  bool sqrt_normalized_primary = false;  // primary carries 1/(2 sqrt(1+d^2))

  std::pair<double, double> coefficients(double delta) const {
    if (sqrt_normalized_primary) return {0.5 / std::sqrt(1.0 + delta * delta), delta};
    return {1.0, delta};
  }

  double delta_from_ratio(double ratio) const {
    if (!sqrt_normalized_primary) return ratio;
    // ratio = 2 d sqrt(1 + d^2)
    const double d2 = 0.5 * (std::sqrt(1.0 + ratio * ratio) - 1.0);
    return std::copysign(std::sqrt(d2), ratio);
  }
};

TemplateFamily family(Template id) {
  const Amplitudes uuu = ket("uuu");
  const Amplitudes ddd = ket("ddd");
  const Amplitudes f_all = f_up() + f_down();
  switch (id) {
    case Template::GroundE1: return {f_all, uuu + ddd};
    case Template::ExcitedE3: return {ddd + uuu, -f_all};
    case Template::ExcitedE4: return {ddd - uuu, f_up() - f_down()};
    case Template::E2Left:
      return {ket("uud") + ket("udu") + ket("duu") - ddd,
              ket("ddu") + ket("dud") + ket("udd") - uuu, true};
  }
  throw std::invalid_argument("template: unknown id");
}

constexpr std::array<std::pair<int, int>, 6> kBranchGroups{{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 2}, {6, 2}}};

// Closest orthonormal frame in span(v) to the columns of old.
Eigen::MatrixXcd polar_align(const Eigen::MatrixXcd& v, const Eigen::MatrixXcd& old) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v.adjoint() * old, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return v * svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

Spectrum solve(const SystemParams& p) {
  const auto es = hermitian_eigensystem(build_hamiltonian(p));
  return {p, es.values, es.vectors};
}

const Eigen::MatrixXcd& symmetric_sector_basis() {
  static const Eigen::MatrixXcd basis = [] {
    Eigen::MatrixXcd b(8, 4);
    b.col(0) = ket("uuu");
    b.col(1) = f_up() / std::sqrt(3.0);
    b.col(2) = f_down() / std::sqrt(3.0);
    b.col(3) = ket("ddd");
    return b;
  }();
  return basis;
}

PureState BranchSpectrum::branch(int label) const {
  if (label < 1 || label > energies.size()) throw std::invalid_argument("branch: label out of range");
  return PureState::normalized(states.col(label - 1));
}

BranchSpectrum solve_branches(const SystemParams& p) {
  const Operator h = build_hamiltonian(p);
  BranchSpectrum out{p, Eigen::VectorXd(8), Eigen::MatrixXcd(8, 8)};
  if (!p.identical_qubits()) {
    const auto es = hermitian_eigensystem(h);
    out.energies = es.values;
    out.states = es.vectors;
    return out;
  }
  int column = 0;
  for (const Eigen::MatrixXcd* sector : {&symmetric_sector_basis(), &frustrated_sector_basis()}) {
    const Operator block = sector->adjoint() * h * (*sector);
    const auto es = hermitian_eigensystem(0.5 * (block + block.adjoint()));
    for (Eigen::Index k = 0; k < es.values.size(); ++k, ++column) {
      out.energies[column] = es.values[k];
      out.states.col(column) = (*sector) * es.vectors.col(k);
      fix_phase(out.states.col(column));
    }
  }
  return out;
}

SweepResult sweep(const SystemParams& p, double eps_min, double eps_max, int steps) {
  if (steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
  if (!(eps_min < eps_max)) throw std::invalid_argument("sweep: eps_min must be below eps_max");

  SweepResult r;
  r.branches.resize(steps, 8);
  r.eps_grid.resize(static_cast<std::size_t>(steps));
  for (int t = 0; t < steps; ++t) {
    r.eps_grid[t] = eps_min + (eps_max - eps_min) * t / (steps - 1);
  }
  r.eps_grid.back() = eps_max;

  const BranchSpectrum first = solve_branches(p.with_bias(r.eps_grid[0]));
  r.branches.row(0) = first.energies.transpose();
  r.branch_states.push_back(first.states);

  if (p.identical_qubits()) {
    // Sector levels never cross, so labels are fixed; only frames and phases follow the previous step.
    for (int t = 1; t < steps; ++t) {
      const BranchSpectrum b = solve_branches(p.with_bias(r.eps_grid[t]));
      const Eigen::MatrixXcd& prev = r.branch_states.back();
      Eigen::MatrixXcd next(8, 8);
      for (const auto& [lo, d] : kBranchGroups) {
        next.middleCols(lo, d) = polar_align(b.states.middleCols(lo, d), prev.middleCols(lo, d));
      }
      r.branches.row(t) = b.energies.transpose();
      r.branch_states.push_back(std::move(next));
    }
    return r;
  }

  for (int t = 1; t < steps; ++t) {
    const Spectrum s = solve(p.with_bias(r.eps_grid[t]));
    const Eigen::MatrixXcd& prev = r.branch_states.back();
    const auto groups = group_levels(s.energies, kDegeneracyTolerance);

    // Weight of previous branch k inside group g: squared norm of its projection.
    struct Candidate {
      double weight;
      int group;
      int branch;
    };
    std::vector<Candidate> candidates;
    for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
      Eigen::MatrixXcd v(8, groups[g].size());
      for (std::size_t i = 0; i < groups[g].size(); ++i) v.col(i) = s.states.col(groups[g][i]);
      const Eigen::MatrixXcd proj = v.adjoint() * prev;
      for (int k = 0; k < 8; ++k) candidates.push_back({proj.col(k).squaredNorm(), g, k});
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      if (std::abs(a.weight - b.weight) > 1e-12) return a.weight > b.weight;
      return std::tie(a.group, a.branch) < std::tie(b.group, b.branch);
    });
    std::vector<std::vector<int>> assigned(groups.size());
    std::vector<bool> done(8, false);
    for (const auto& c : candidates) {
      if (done[c.branch] || assigned[c.group].size() >= groups[c.group].size()) continue;
      assigned[c.group].push_back(c.branch);
      done[c.branch] = true;
    }

    Eigen::MatrixXcd next(8, 8);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& members = groups[g];
      auto& branches = assigned[g];
      std::sort(branches.begin(), branches.end());
      const auto d = static_cast<Eigen::Index>(members.size());
      Eigen::MatrixXcd v(8, d);
      Eigen::MatrixXcd old(8, d);
      for (Eigen::Index i = 0; i < d; ++i) {
        v.col(i) = s.states.col(members[i]);
        old.col(i) = prev.col(branches[i]);
      }
      const Eigen::MatrixXcd aligned = polar_align(v, old);
      // Energies: the group's eigenvalues, handed out in Rayleigh-quotient order.
      const Operator h = build_hamiltonian(s.params);
      std::vector<Eigen::Index> order(d);
      std::iota(order.begin(), order.end(), 0);
      std::vector<double> rayleigh(d);
      for (Eigen::Index i = 0; i < d; ++i) {
        rayleigh[i] = aligned.col(i).dot(h * aligned.col(i)).real();
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](auto a, auto b) { return rayleigh[a] < rayleigh[b]; });
      for (Eigen::Index i = 0; i < d; ++i) {
        next.col(branches[order[i]]) = aligned.col(order[i]);
        r.branches(t, branches[order[i]]) = s.energies[members[i]];
      }
    }
    r.branch_states.push_back(std::move(next));
  }
  return r;
}

std::vector<DegenerateSubspace> degenerate_subspaces(const Spectrum& s, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("degenerate_subspaces: tol must be positive");
  std::vector<DegenerateSubspace> out;
  for (const auto& g : group_levels(s.energies, tol)) {
    if (g.size() < 2) continue;
    DegenerateSubspace d;
    d.basis.resize(s.states.rows(), static_cast<Eigen::Index>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
      d.energy += s.energies[g[i]] / static_cast<double>(g.size());
      d.basis.col(i) = s.states.col(g[i]);
    }
    out.push_back(std::move(d));
  }
  return out;
}

DegenerateSubspace branch_pair(const SystemParams& p, int first_label) {
  if (first_label != 5 && first_label != 7) {
    throw std::invalid_argument("branch_pair: first label must be 5 or 7");
  }
  if (!p.identical_qubits()) {
    throw std::invalid_argument("branch_pair: degenerate pairs require identical qubits");
  }
  const BranchSpectrum b = solve_branches(p);
  DegenerateSubspace d;
  d.energy = 0.5 * (b.energy(first_label) + b.energy(first_label + 1));
  d.basis = b.states.middleCols(first_label - 1, 2);
  return d;
}

Anticrossing locate_anticrossing(const SystemParams& p, int branch_lo, int branch_hi,
                                 double window_lo, double window_hi) {
  if (branch_lo < 1 || branch_hi > 8 || branch_lo >= branch_hi) {
    throw std::invalid_argument("locate_anticrossing: need 1 <= branch_lo < branch_hi <= 8");
  }
  auto gap = [&](double e) {
    const BranchSpectrum b = solve_branches(p.with_bias(e));
    return b.energy(branch_hi) - b.energy(branch_lo);
  };
  const auto m = bracket_and_refine(gap, window_lo, window_hi, 241, 1e-10);
  return {m.x, m.value};
}

TanglePeak locate_tangle_peak(const SystemParams& p, int label, double window_lo,
                              double window_hi) {
  auto neg_tangle = [&](double e) {
    return -three_tangle(solve_branches(p.with_bias(e)).branch(label));
  };
  const auto m = bracket_and_refine(neg_tangle, window_lo, window_hi, 241, 1e-10);
  return {m.x, -m.value};
}

PureState template_state(Template id, double delta) {
  const TemplateFamily f = family(id);
  const auto [a, b] = f.coefficients(delta);
  return PureState::normalized(a * f.primary + b * f.secondary);
}

TemplateFit fit_template(const PureState& state, Template id) {
  if (state.qubits() != 3) throw std::invalid_argument("fit_template: three-qubit state required");
  const TemplateFamily f = family(id);
  const auto& psi = state.amplitudes();

  // |<c1 A + c2 B|psi>|^2 / |c1 A + c2 B|^2 over real (c1, c2): a 2x2 generalized
  // Rayleigh quotient whose top eigenvector gives the stationary ratio c2/c1.
  const std::array<const Amplitudes*, 2> span{&f.primary, &f.secondary};
  Eigen::Matrix2d num;
  Eigen::Matrix2d den;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      num(i, j) = (span[i]->dot(psi) * std::conj(span[j]->dot(psi))).real();
      den(i, j) = span[i]->dot(*span[j]).real();
    }
  }
  auto overlap_at = [&](double d) {
    return std::abs(template_state(id, d).amplitudes().dot(psi));
  };

  std::vector<double> candidates{-1.0, 1.0};
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix2d> solver(num, den);
  const Eigen::Vector2d c = solver.eigenvectors().col(1);
  if (std::abs(c[0]) > 1e-300) {
    const double d = f.delta_from_ratio(c[1] / c[0]);
    if (std::isfinite(d) && std::abs(d) <= 1.0) candidates.push_back(d);
  }
  TemplateFit best{id, 0.0, -1.0, false};
  for (double d : candidates) {
    const double ov = overlap_at(d);
    if (ov > best.overlap) {
      best.delta = d;
      best.overlap = ov;
    }
  }
  best.overlap = std::min(best.overlap, 1.0);
  best.mismatch = best.overlap < 0.9;
  return best;
}

PureState max_entangled_subspace_state(const PureState& u1, const PureState& u2,
                                       const std::optional<PureState>& reference) {
  if (u1.qubits() != 3 || u2.qubits() != 3) {
    throw std::invalid_argument("max_entangled_subspace_state: three-qubit basis required");
  }
  if (overlap(u1, u2) > 1e-9) {
    throw std::invalid_argument("max_entangled_subspace_state: basis is not orthogonal");
  }
  const Amplitudes& a = u1.amplitudes();
  const Amplitudes& b = u2.amplitudes();
  auto combine = [&](double theta, double phi) {
    return PureState::normalized(std::cos(theta) * a + std::polar(std::sin(theta), phi) * b);
  };
  auto q = [&](double theta, double phi) { return global_entanglement(combine(theta, phi)); };

  constexpr int kGrid = 64;
  const double dtheta = (std::numbers::pi / 2) / (kGrid - 1);
  const double dphi = 2 * std::numbers::pi / kGrid;
  Eigen::MatrixXd grid(kGrid, kGrid);
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) grid(i, j) = q(i * dtheta, j * dphi);
  }

  // Grid local maxima (theta bounded, phi periodic), best first.
  std::vector<std::tuple<double, int, int>> peaks;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      bool is_peak = true;
      for (int di = -1; di <= 1 && is_peak; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int ii = i + di;
          if ((di == 0 && dj == 0) || ii < 0 || ii >= kGrid) continue;
          if (grid(ii, (j + dj + kGrid) % kGrid) > grid(i, j)) {
            is_peak = false;
            break;
          }
        }
      }
      if (is_peak) peaks.emplace_back(grid(i, j), i, j);
    }
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const auto& x, const auto& y) { return std::get<0>(x) > std::get<0>(y); });
  if (peaks.size() > 8) peaks.resize(8);

  NelderMeadOptions options;
  options.initial_step = dtheta;
  options.diameter_tol = 1e-10;
  std::vector<std::pair<double, PureState>> refined;
  for (const auto& [value, i, j] : peaks) {
    const auto r = nelder_mead([&](const std::vector<double>& x) { return -q(x[0], x[1]); },
                               {i * dtheta, j * dphi}, options);
    refined.emplace_back(-r.value, combine(r.x[0], r.x[1]));
  }
  double best_q = -1.0;
  for (const auto& [value, s] : refined) best_q = std::max(best_q, value);

  std::optional<PureState> chosen;
  double chosen_score = -1.0;
  for (const auto& [value, s] : refined) {
    if (value < best_q - 1e-9) continue;
    const double score = reference ? overlap(*reference, s) : 0.0;
    if (!chosen || score > chosen_score + 1e-9) {
      chosen = s;
      chosen_score = score;
    }
  }
  Amplitudes out = chosen->amplitudes();
  fix_phase(out);
  return PureState::normalized(std::move(out));
}

}  // namespace fluxtri
