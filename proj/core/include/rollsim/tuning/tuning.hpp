#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "rollsim/control/pid.hpp"
#include "rollsim/loops/loops.hpp"

namespace rollsim {

enum class CostKind { itae, ise, iae };
enum class TuneMethod { nelder_mead, grid };
enum class GridScale { linear, log };

const char* to_string(CostKind c);
const char* to_string(TuneMethod m);
const char* to_string(GridScale s);
CostKind cost_kind_from_string(std::string_view s);
TuneMethod tune_method_from_string(std::string_view s);
GridScale grid_scale_from_string(std::string_view s);

/// Cost reported for runs that diverge.
inline constexpr double kDivergencePenalty = 1e12;

/// Search range of one gain. A non-empty `values` list replaces the
/// generated grid (and must lie inside [lo, hi]).
struct GainRange {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> values;

  [[nodiscard]] bool free() const { return lo < hi; }
  friend bool operator==(const GainRange&, const GainRange&) = default;
};

struct TuneSpec {
  LoopSpec loop;  ///< gains inside are ignored
  CostKind cost = CostKind::itae;
  std::array<GainRange, 3> bounds{};  ///< kp, ki, kd
  PidGains initial;                   ///< start point; n and limits are kept for every trial
  TuneMethod method = TuneMethod::nelder_mead;
  int grid_points = 5;
  GridScale grid_scale = GridScale::linear;
  int max_evals = 200;
  unsigned jobs = 1;  ///< worker threads for grid evaluation

  void validate() const;
};

struct TuneEval {
  PidGains gains;
  double cost = 0.0;
};

struct TuneResult {
  PidGains best_gains;
  double best_cost = 0.0;
  int evals = 0;
  std::vector<TuneEval> history;
};

/// Integral error index over the horizon, with e = setpoint - y_true.
/// ITAE = Σ t|e|dt, ISE = Σ e²dt, IAE = Σ |e|dt. Diverged runs cost
/// kDivergencePenalty.
double loop_cost(const LoopSpec& spec, CostKind kind);

/// Deterministic PID search.
///
/// grid: every combination of grid_points values per free gain (explicit
/// values take precedence); ties resolve to the lexicographically smallest
/// (kp, ki, kd). nelder_mead: simplex over the free gains from `initial`
/// with reflection 1, expansion 2, contraction 0.5 and shrink 0.5, trial
/// points clamped to the bounds; stops after max_evals evaluations or when
/// the simplex spread falls below 1e-8. The initial point is always
/// evaluated and the best recorded point is returned.
TuneResult tune_pid(const TuneSpec& spec);

}  // namespace rollsim
