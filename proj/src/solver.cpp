#include "equipart/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <thread>

namespace equipart {

namespace {

const PointCloud<double>& as_cloud(const Mass<double>& mass) {
  const auto* cloud = std::get_if<PointCloud<double>>(&mass);
  if (!cloud) throw ScalarKindError("solver: only point-cloud masses are supported");
  return *cloud;
}

// Clouds re-expressed around the common weighted centroid and scaled to unit
// RMS spread, so step sizes and bandwidths are dimensionless.
struct Problem {
  std::size_t d = 0;
  std::size_t k = 0;
  std::vector<std::vector<double>> coords;  // per mass, row-major, normalized frame
  std::vector<std::vector<double>> weights;
  std::vector<double> centroid;
  double spread = 1.0;

  std::size_t params() const { return k * (d + 1); }
};

Problem make_problem(const std::vector<Mass<double>>& masses, std::size_t k) {
  if (masses.empty()) throw std::invalid_argument("solver: no masses");
  Problem pr;
  pr.k = k;
  pr.d = dimension_of(masses.front());
  for (const auto& m : masses)
    if (dimension_of(m) != pr.d) throw DimensionError("solver: masses of different dimensions");
  if (k < 1 || k > pr.d) throw std::invalid_argument("solver: need 1 <= k <= d");

  pr.centroid.assign(pr.d, 0.0);
  for (const auto& m : masses) {
    const auto& c = as_cloud(m);
    for (std::size_t p = 0; p < c.size(); ++p)
      for (std::size_t i = 0; i < pr.d; ++i) pr.centroid[i] += c.weights()[p] * c.point(p)[i] / masses.size();
  }
  double var = 0;
  for (const auto& m : masses) {
    const auto& c = as_cloud(m);
    for (std::size_t p = 0; p < c.size(); ++p)
      for (std::size_t i = 0; i < pr.d; ++i) {
        const double dx = c.point(p)[i] - pr.centroid[i];
        var += c.weights()[p] * dx * dx / masses.size();
      }
  }
  pr.spread = var > 0 ? std::sqrt(var) : 1.0;
  for (const auto& m : masses) {
    const auto& c = as_cloud(m);
    std::vector<double> xs(c.coordinates().size());
    for (std::size_t p = 0; p < c.size(); ++p)
      for (std::size_t i = 0; i < pr.d; ++i) xs[p * pr.d + i] = (c.point(p)[i] - pr.centroid[i]) / pr.spread;
    pr.coords.push_back(std::move(xs));
    pr.weights.push_back(c.weights());
  }
  return pr;
}

void normalize_blocks(std::vector<double>& x, const Problem& pr) {
  for (std::size_t h = 0; h < pr.k; ++h) {
    double* b = x.data() + h * (pr.d + 1);
    double n = 0;
    for (std::size_t i = 0; i < pr.d; ++i) n += b[i] * b[i];
    n = std::sqrt(n);
    if (n == 0) {
      b[0] = 1;
      n = 1;
    }
    for (std::size_t i = 0; i <= pr.d; ++i) b[i] /= n;
  }
}

double side(const double* x, const double* block, std::size_t d) {
  double s = -block[d];
  for (std::size_t i = 0; i < d; ++i) s += x[i] * block[i];
  return s;
}

// Closed-orthant test vector in the normalized frame; same semantics as
// eval_test_map.
std::vector<double> hard_components(const Problem& pr, const std::vector<double>& x) {
  const std::size_t labels = std::size_t{1} << pr.k;
  const double target = 1.0 / static_cast<double>(labels);
  std::vector<double> out(pr.coords.size() * labels, -target);
  for (std::size_t m = 0; m < pr.coords.size(); ++m) {
    const std::size_t n = pr.weights[m].size();
    for (std::size_t p = 0; p < n; ++p) {
      const double* pt = pr.coords[m].data() + p * pr.d;
      std::size_t base = 0, boundary = 0;
      for (std::size_t h = 0; h < pr.k; ++h) {
        const double s = side(pt, x.data() + h * (pr.d + 1), pr.d);
        const std::size_t bit = std::size_t{1} << (pr.k - 1 - h);
        if (s < 0)
          base |= bit;
        else if (s == 0)
          boundary |= bit;
      }
      std::size_t sub = boundary;
      while (true) {
        out[m * labels + (base | sub)] += pr.weights[m][p];
        if (sub == 0) break;
        sub = (sub - 1) & boundary;
      }
    }
  }
  return out;
}

double max_abs(const std::vector<double>& v) {
  double r = 0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

double sum_squares(const std::vector<double>& v) {
  double r = 0;
  for (double x : v) r += x * x;
  return r;
}

// Orthant indicators replaced by products of logistic sides of width h.
double surrogate(const Problem& pr, const std::vector<double>& x, double h, std::vector<double>& scratch) {
  const std::size_t labels = std::size_t{1} << pr.k;
  const double target = 1.0 / static_cast<double>(labels);
  double total = 0;
  std::vector<double> side_prob(pr.k);
  for (std::size_t m = 0; m < pr.coords.size(); ++m) {
    scratch.assign(labels, 0.0);
    const std::size_t n = pr.weights[m].size();
    for (std::size_t p = 0; p < n; ++p) {
      const double* pt = pr.coords[m].data() + p * pr.d;
      for (std::size_t hp = 0; hp < pr.k; ++hp)
        side_prob[hp] = 1.0 / (1.0 + std::exp(-side(pt, x.data() + hp * (pr.d + 1), pr.d) / h));
      const double w = pr.weights[m][p];
      for (std::size_t label = 0; label < labels; ++label) {
        double prob = w;
        for (std::size_t hp = 0; hp < pr.k; ++hp)
          prob *= (label >> (pr.k - 1 - hp) & 1) ? 1.0 - side_prob[hp] : side_prob[hp];
        scratch[label] += prob;
      }
    }
    for (double v : scratch) total += (v - target) * (v - target);
  }
  return total;
}

struct Deadline {
  std::chrono::steady_clock::time_point at;
  bool passed() const { return std::chrono::steady_clock::now() > at; }
};

template <class F>
int nelder_mead(F&& f, std::vector<double>& best, double& best_value, double step, int iters,
                const SolverConfig& cfg, const Problem& pr, std::uint64_t& evals, const Deadline& deadline) {
  const std::size_t n = best.size();
  std::vector<std::vector<double>> pts(n + 1, best);
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i + 1][i] += step;
    normalize_blocks(pts[i + 1], pr);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    vals[i] = f(pts[i]);
    ++evals;
  }
  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto eval = [&](std::vector<double>& x) {
    normalize_blocks(x, pr);
    ++evals;
    return f(x);
  };
  int it = 0;
  for (; it < iters; ++it) {
    if ((it & 63) == 0 && deadline.passed()) break;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t lo = order.front(), hi = order.back(), second = order[n - 1];
    if (vals[hi] - vals[lo] <= 1e-14 * (1 + std::abs(vals[lo]))) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != hi)
        for (std::size_t c = 0; c < n; ++c) centroid[c] += pts[i][c] / n;

    for (std::size_t c = 0; c < n; ++c) trial[c] = centroid[c] + cfg.reflect * (centroid[c] - pts[hi][c]);
    const double fr = eval(trial);
    if (fr < vals[lo]) {
      for (std::size_t c = 0; c < n; ++c) trial2[c] = centroid[c] + cfg.expand * (trial[c] - centroid[c]);
      const double fe = eval(trial2);
      if (fe < fr) {
        pts[hi] = trial2;
        vals[hi] = fe;
      } else {
        pts[hi] = trial;
        vals[hi] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[hi] = trial;
      vals[hi] = fr;
      continue;
    }
    const bool outside = fr < vals[hi];
    for (std::size_t c = 0; c < n; ++c)
      trial2[c] = outside ? centroid[c] + cfg.contract * (trial[c] - centroid[c])
                          : centroid[c] + cfg.contract * (pts[hi][c] - centroid[c]);
    const double fc = eval(trial2);
    if (fc < std::min(fr, vals[hi])) {
      pts[hi] = trial2;
      vals[hi] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == lo) continue;
      for (std::size_t c = 0; c < n; ++c) pts[i][c] = pts[lo][c] + cfg.shrink * (pts[i][c] - pts[lo][c]);
      vals[i] = eval(pts[i]);
    }
  }
  const auto best_it = std::min_element(vals.begin(), vals.end());
  best = pts[best_it - vals.begin()];
  best_value = *best_it;
  return it;
}

struct RestartOutcome {
  bool found = false;
  double residual = 1.0;
  std::vector<double> params;
  std::uint64_t evaluations = 0;
};

RestartOutcome run_restart(const Problem& pr, const SolverConfig& cfg, int restart, const Deadline& deadline) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Random normals through the centroid (the origin of the normalized frame).
  std::vector<double> x(pr.params(), 0.0);
  for (std::size_t h = 0; h < pr.k; ++h)
    for (std::size_t i = 0; i < pr.d; ++i) x[h * (pr.d + 1) + i] = gauss(rng);
  normalize_blocks(x, pr);

  RestartOutcome out;
  out.params = x;
  out.residual = max_abs(hard_components(pr, x));
  ++out.evaluations;
  auto consider = [&](const std::vector<double>& candidate) {
    const double r = max_abs(hard_components(pr, candidate));
    ++out.evaluations;
    if (r < out.residual) {
      out.residual = r;
      out.params = candidate;
    }
    return r <= cfg.eps;
  };
  if (out.residual <= cfg.eps) {
    out.found = true;
    return out;
  }

  // Bandwidth and step size anneal together from the cloud scale down to
  // the eps resolution; the last stage searches the exact objective.
  constexpr int kStages = 7;
  const double h_start = 0.5, h_end = std::max(1e-3, cfg.eps / 4);
  const int stage_iters = std::max(1, cfg.max_iters / (kStages + 1));
  std::vector<double> scratch;
  double value = 0;
  for (int s = 0; s < kStages && !deadline.passed(); ++s) {
    const double h = h_start * std::pow(h_end / h_start, static_cast<double>(s) / (kStages - 1));
    auto f = [&](const std::vector<double>& p) { return surrogate(pr, p, h, scratch); };
    nelder_mead(f, x, value, h, stage_iters, cfg, pr, out.evaluations, deadline);
    if (consider(x)) {
      out.found = true;
      return out;
    }
  }
  x = out.params;
  auto hard = [&](const std::vector<double>& p) { return sum_squares(hard_components(pr, p)); };
  nelder_mead(hard, x, value, h_end, stage_iters, cfg, pr, out.evaluations, deadline);
  out.found = consider(x);
  return out;
}

Arrangement<double> to_arrangement(const Problem& pr, const std::vector<double>& x) {
  // Undo the frame change: <(y - c)/s, v> = a  <=>  <y, v> = s a + <c, v>.
  std::vector<AffineHyperplane<double>> hs;
  for (std::size_t h = 0; h < pr.k; ++h) {
    const double* b = x.data() + h * (pr.d + 1);
    AffineHyperplane<double> hp;
    hp.normal.assign(b, b + pr.d);
    hp.offset = pr.spread * b[pr.d];
    for (std::size_t i = 0; i < pr.d; ++i) hp.offset += pr.centroid[i] * b[i];
    hs.push_back(normalized(hp));
  }
  return Arrangement<double>(std::move(hs));
}

}  // namespace

double objective(const std::vector<Mass<double>>& masses, const Arrangement<double>& arr) {
  const auto tv = eval_test_map(masses, arr);
  double total = 0;
  for (const auto& per_mass : tv.values)
    for (double v : per_mass) total += v * v;
  return total;
}

double residual(const std::vector<Mass<double>>& masses, const Arrangement<double>& arr) {
  const auto tv = eval_test_map(masses, arr);
  double r = 0;
  for (const auto& per_mass : tv.values)
    for (double v : per_mass) r = std::max(r, std::abs(v));
  return r;
}

SolveResult solve(const std::vector<Mass<double>>& masses, std::size_t k, const SolverConfig& config) {
  if (!(config.eps > 0) || k >= 63 || !(config.eps < std::ldexp(1.0, -static_cast<int>(k))))
    throw std::invalid_argument("solve: need 0 < eps < 2^-k");
  if (config.restarts < 1) throw std::invalid_argument("solve: restarts must be at least 1");
  if (config.max_iters < 1) throw std::invalid_argument("solve: max_iters must be at least 1");
  if (!(config.time_budget > 0)) throw std::invalid_argument("solve: time_budget must be positive");
  if (!(config.reflect > 0) || !(config.expand > 1) || !(config.contract > 0 && config.contract < 1) ||
      !(config.shrink > 0 && config.shrink < 1))
    throw std::invalid_argument("solve: invalid simplex parameters");
  const Problem pr = make_problem(masses, k);

  const Deadline deadline{std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(config.time_budget))};
  const unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());

  SolveResult result;
  std::vector<RestartOutcome> done;
  done.reserve(config.restarts);
  int found_at = -1;
  for (int batch = 0; batch < config.restarts && found_at < 0 && !deadline.passed(); batch += threads) {
    const int end = std::min(config.restarts, batch + static_cast<int>(threads));
    std::vector<std::future<RestartOutcome>> jobs;
    for (int r = batch; r < end; ++r)
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                [&, r] { return run_restart(pr, config, r, deadline); }));
    for (auto& job : jobs) done.push_back(job.get());
    // Lowest successful index wins regardless of completion order.
    for (int r = batch; r < end; ++r)
      if (done[r].found) {
        found_at = r;
        break;
      }
  }

  if (found_at >= 0) {
    result.status = SolveStatus::Found;
    result.restart_index = found_at;
    for (int r = 0; r <= found_at; ++r) result.evaluations += done[r].evaluations;
  } else {
    int best = 0;
    for (int r = 0; r < static_cast<int>(done.size()); ++r) {
      result.evaluations += done[r].evaluations;
      if (done[r].residual < done[best].residual) best = r;
    }
    result.restart_index = done.empty() ? -1 : best;
  }
  if (result.restart_index >= 0) {
    auto arr = to_arrangement(pr, done[result.restart_index].params);
    // Report what the exact evaluator sees in the caller's frame.
    result.residual = residual(masses, arr);
    if (result.status == SolveStatus::Found && result.residual > config.eps) result.status = SolveStatus::NotFound;
    result.arrangement = std::move(arr);
  } else {
    result.residual = 1.0;
  }
  return result;
}

SolveResult ham_sandwich(const std::vector<Mass<double>>& masses, const SolverConfig& config) {
  for (const auto& m : masses)
    if (dimension_of(m) != masses.size())
      throw DimensionError("ham_sandwich: need j masses in dimension j");
  return solve(masses, 1, config);
}

}  // namespace equipart
