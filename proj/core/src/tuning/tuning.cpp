#include "rollsim/tuning/tuning.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>
#include <tuple>

#include "rollsim/error.hpp"

namespace rollsim {
namespace {

constexpr double kSpreadTolerance = 1e-8;

std::array<double, 3> as_array(const PidGains& g) { return {g.kp, g.ki, g.kd}; }

PidGains with_values(const PidGains& base, const std::array<double, 3>& v) {
  PidGains g = base;
  g.kp = v[0];
  g.ki = v[1];
  g.kd = v[2];
  return g;
}

bool lexicographically_less(const PidGains& a, const PidGains& b) {
  return std::tie(a.kp, a.ki, a.kd) < std::tie(b.kp, b.ki, b.kd);
}

std::vector<double> axis_values(const GainRange& r, int points, GridScale scale) {
  if (!r.values.empty()) return r.values;
  if (!r.free() || points <= 1) return {r.lo};
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    if (scale == GridScale::log) {
      v[static_cast<std::size_t>(i)] = r.lo * std::pow(r.hi / r.lo, f);
    } else {
      v[static_cast<std::size_t>(i)] = r.lo + f * (r.hi - r.lo);
    }
  }
  v.back() = r.hi;
  return v;
}

class Evaluator {
 public:
  explicit Evaluator(const TuneSpec& spec) : spec_(spec) {}

  double cost(const PidGains& g) const {
    LoopSpec loop = spec_.loop;
    loop.gains = g;
    return loop_cost(loop, spec_.cost);
  }

 private:
  const TuneSpec& spec_;
};

TuneResult finish(std::vector<TuneEval> history) {
  TuneResult res;
  res.evals = static_cast<int>(history.size());
  auto best = history.begin();
  for (auto it = history.begin(); it != history.end(); ++it) {
    if (it->cost < best->cost ||
        (it->cost == best->cost && lexicographically_less(it->gains, best->gains))) {
      best = it;
    }
  }
  res.best_gains = best->gains;
  res.best_cost = best->cost;
  res.history = std::move(history);
  return res;
}

TuneResult grid_search(const TuneSpec& spec) {
  std::array<std::vector<double>, 3> axes;
  for (std::size_t i = 0; i < 3; ++i) axes[i] = axis_values(spec.bounds[i], spec.grid_points, spec.grid_scale);

  std::vector<TuneEval> history;
  for (double kp : axes[0]) {
    for (double ki : axes[1]) {
      for (double kd : axes[2]) history.push_back({with_values(spec.initial, {kp, ki, kd}), 0.0});
    }
  }

  const Evaluator eval(spec);
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(history.size())));
  if (workers == 1) {
    for (auto& h : history) h.cost = eval.cost(h.gains);
  } else {
    // Each slot is written by exactly one worker, so the history order and
    // contents do not depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < history.size(); i = next++) {
          history[i].cost = eval.cost(history[i].gains);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return finish(std::move(history));
}

TuneResult nelder_mead(const TuneSpec& spec) {
  const Evaluator eval(spec);
  std::vector<std::size_t> free_dims;
  for (std::size_t i = 0; i < 3; ++i) {
    if (spec.bounds[i].free()) free_dims.push_back(i);
  }

  std::vector<TuneEval> history;
  std::array<double, 3> start = as_array(spec.initial);
  for (std::size_t i = 0; i < 3; ++i) {
    start[i] = std::clamp(start[i], spec.bounds[i].lo, spec.bounds[i].hi);
  }

  auto evaluate = [&](const std::vector<double>& p) {
    std::array<double, 3> full = start;
    for (std::size_t j = 0; j < free_dims.size(); ++j) {
      const std::size_t d = free_dims[j];
      full[d] = std::clamp(p[j], spec.bounds[d].lo, spec.bounds[d].hi);
    }
    const PidGains g = with_values(spec.initial, full);
    const double c = eval.cost(g);
    history.push_back({g, c});
    return c;
  };
  auto clamp_point = [&](std::vector<double> p) {
    for (std::size_t j = 0; j < free_dims.size(); ++j) {
      const auto& b = spec.bounds[free_dims[j]];
      p[j] = std::clamp(p[j], b.lo, b.hi);
    }
    return p;
  };

  const std::size_t dim = free_dims.size();
  std::vector<double> x0(dim);
  for (std::size_t j = 0; j < dim; ++j) x0[j] = start[free_dims[j]];

  struct Vertex {
    std::vector<double> x;
    double f;
  };
  std::vector<Vertex> simplex;
  simplex.push_back({x0, evaluate(x0)});
  if (dim == 0) return finish(std::move(history));

  for (std::size_t j = 0; j < dim && static_cast<int>(history.size()) < spec.max_evals; ++j) {
    const auto& b = spec.bounds[free_dims[j]];
    const double step = 0.1 * (b.hi - b.lo);
    std::vector<double> x = x0;
    x[j] = x0[j] + step <= b.hi ? x0[j] + step : x0[j] - step;
    simplex.push_back({x, evaluate(x)});
  }

  constexpr double reflect = 1.0;
  constexpr double expand = 2.0;
  constexpr double contract = 0.5;
  constexpr double shrink = 0.5;

  while (simplex.size() == dim + 1 && static_cast<int>(history.size()) < spec.max_evals) {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    double spread = 0.0;
    for (const auto& v : simplex) {
      for (std::size_t j = 0; j < dim; ++j) spread = std::max(spread, std::abs(v.x[j] - simplex[0].x[j]));
    }
    if (spread < kSpreadTolerance) break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i].x[j] / static_cast<double>(dim);
    }
    auto along = [&](double coeff) {
      std::vector<double> p(dim);
      for (std::size_t j = 0; j < dim; ++j) p[j] = centroid[j] + coeff * (centroid[j] - simplex[dim].x[j]);
      return clamp_point(std::move(p));
    };

    const auto xr = along(reflect);
    const double fr = evaluate(xr);
    if (fr < simplex[0].f) {
      if (static_cast<int>(history.size()) >= spec.max_evals) {
        simplex[dim] = {xr, fr};
        break;
      }
      const auto xe = along(expand);
      const double fe = evaluate(xe);
      simplex[dim] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[dim - 1].f) {
      simplex[dim] = {xr, fr};
      continue;
    }
    if (static_cast<int>(history.size()) >= spec.max_evals) break;
    const bool outside = fr < simplex[dim].f;
    const auto xc = along(outside ? contract : -contract);
    const double fc = evaluate(xc);
    if (fc < std::min(fr, simplex[dim].f)) {
      simplex[dim] = {xc, fc};
      continue;
    }
    for (std::size_t i = 1; i <= dim && static_cast<int>(history.size()) < spec.max_evals; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        simplex[i].x[j] = simplex[0].x[j] + shrink * (simplex[i].x[j] - simplex[0].x[j]);
      }
      simplex[i].f = evaluate(simplex[i].x);
    }
  }
  return finish(std::move(history));
}

}  // namespace

const char* to_string(CostKind c) {
  switch (c) {
    case CostKind::itae: return "ITAE";
    case CostKind::ise: return "ISE";
    case CostKind::iae: return "IAE";
  }
  return "ITAE";
}

const char* to_string(TuneMethod m) { return m == TuneMethod::grid ? "grid" : "nelder_mead"; }
const char* to_string(GridScale s) { return s == GridScale::log ? "log" : "linear"; }

CostKind cost_kind_from_string(std::string_view s) {
  for (auto c : {CostKind::itae, CostKind::ise, CostKind::iae}) {
    if (s == to_string(c)) return c;
  }
  throw InvalidArgument("unknown cost kind '" + std::string(s) + "' (expected ITAE, ISE or IAE)");
}

TuneMethod tune_method_from_string(std::string_view s) {
  if (s == "grid") return TuneMethod::grid;
  if (s == "nelder_mead") return TuneMethod::nelder_mead;
  throw InvalidArgument("unknown tuning method '" + std::string(s) + "'");
}

GridScale grid_scale_from_string(std::string_view s) {
  if (s == "linear") return GridScale::linear;
  if (s == "log") return GridScale::log;
  throw InvalidArgument("unknown grid scale '" + std::string(s) + "'");
}

void TuneSpec::validate() const {
  static constexpr const char* names[] = {"kp", "ki", "kd"};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& b = bounds[i];
    const std::string name = names[i];
    if (!(b.lo >= 0.0)) throw InvalidArgument("tune." + name + ".lo must be >= 0");
    if (!(b.lo <= b.hi)) throw InvalidArgument("tune." + name + ": empty bounds (lo > hi)");
    for (double v : b.values) {
      if (v < b.lo || v > b.hi) throw InvalidArgument("tune." + name + ".values outside [lo, hi]");
    }
    if (grid_scale == GridScale::log && b.free() && b.values.empty() && !(b.lo > 0.0)) {
      throw InvalidArgument("tune." + name + ": log grid needs lo > 0");
    }
  }
  if (max_evals < 1) throw InvalidArgument("tune.max_evals must be >= 1");
  if (grid_points < 1) throw InvalidArgument("tune.grid_points must be >= 1");
  initial.validate();
  loop.sim.validate();
}

double loop_cost(const LoopSpec& spec, CostKind kind) {
  const LoopResult res = simulate_loop(spec);
  if (res.diverged()) return kDivergencePenalty;
  const auto t = res.series.t();
  const auto r = res.series.channel("setpoint");
  const auto y = res.series.channel("y_true");
  const double dt = res.series.dt();
  double acc = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double e = r[k] - y[k];
    switch (kind) {
      case CostKind::itae: acc += t[k] * std::abs(e) * dt; break;
      case CostKind::ise: acc += e * e * dt; break;
      case CostKind::iae: acc += std::abs(e) * dt; break;
    }
  }
  return acc;
}

TuneResult tune_pid(const TuneSpec& spec) {
  spec.validate();
  return spec.method == TuneMethod::grid ? grid_search(spec) : nelder_mead(spec);
}

}  // namespace rollsim
