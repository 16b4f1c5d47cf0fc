#include "rollsim/faults/detector.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "rollsim/error.hpp"

namespace rollsim {
namespace {

struct Alarm {
  std::size_t start;
  std::size_t confirm;
  std::size_t end;
  AlarmKind kind;
};

void collect_runs(const std::vector<bool>& flags, int needed, AlarmKind kind,
                  std::vector<Alarm>& out) {
  std::optional<std::size_t> start;
  for (std::size_t k = 0; k <= flags.size(); ++k) {
    const bool on = k < flags.size() && flags[k];
    if (on && !start) start = k;
    if (!on && start) {
      const std::size_t len = k - *start;
      if (len >= static_cast<std::size_t>(needed)) {
        out.push_back({*start, *start + static_cast<std::size_t>(needed) - 1, k - 1, kind});
      }
      start.reset();
    }
  }
}

}  // namespace

const char* to_string(AlarmKind k) { return k == AlarmKind::threshold ? "threshold" : "rate"; }

void DetectorConfig::validate() const {
  if (!(residual_threshold > 0.0)) throw InvalidArgument("detector.residual_threshold must be > 0");
  if (!(rate_threshold >= 0.0)) throw InvalidArgument("detector.rate_threshold must be >= 0");
  if (consecutive_required < 1) throw InvalidArgument("detector.consecutive_required must be >= 1");
}

std::vector<FaultEvent> detect_faults(std::span<const double> residuals, double dt,
                                      const DetectorConfig& cfg, double t0) {
  cfg.validate();
  if (!(dt > 0.0)) throw InvalidArgument("detect_faults: dt must be > 0");
  const std::size_t n = residuals.size();

  std::vector<double> r(residuals.begin(), residuals.end());
  if (cfg.window > 0 && n > 0) {
    const std::size_t w = std::min(cfg.window, n);
    double base = 0.0;
    for (std::size_t k = 0; k < w; ++k) base += r[k];
    base /= static_cast<double>(w);
    for (double& v : r) v -= base;
  }

  std::vector<Alarm> alarms;
  std::vector<bool> over(n);
  for (std::size_t k = 0; k < n; ++k) over[k] = std::abs(r[k]) > cfg.residual_threshold;
  collect_runs(over, cfg.consecutive_required, AlarmKind::threshold, alarms);

  if (cfg.rate_threshold > 0.0) {
    std::vector<bool> fast(n, false);
    for (std::size_t k = 1; k < n; ++k) {
      fast[k] = std::abs(r[k] - r[k - 1]) / dt > cfg.rate_threshold;
    }
    collect_runs(fast, cfg.consecutive_required, AlarmKind::rate, alarms);
  }

  std::sort(alarms.begin(), alarms.end(), [](const Alarm& a, const Alarm& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.kind == AlarmKind::threshold && b.kind == AlarmKind::rate;
  });

  std::vector<FaultEvent> events;
  std::optional<Alarm> open;
  auto flush = [&](const Alarm& a) {
    FaultEvent e;
    e.detected_t = t0 + static_cast<double>(a.start) * dt;
    e.confirmed_t = t0 + static_cast<double>(a.confirm) * dt;
    e.end_t = t0 + static_cast<double>(a.end) * dt;
    e.kind_hint = a.kind;
    for (std::size_t k = a.start; k <= a.end; ++k) {
      if (std::abs(r[k]) > std::abs(e.peak_residual)) e.peak_residual = r[k];
    }
    events.push_back(e);
  };
  for (const Alarm& a : alarms) {
    if (open && a.start <= open->end + 1) {
      open->end = std::max(open->end, a.end);
      open->confirm = std::min(open->confirm, a.confirm);
    } else {
      if (open) flush(*open);
      open = a;
    }
  }
  if (open) flush(*open);
  return events;
}

std::vector<FaultEvent> detect_faults(const TimeSeries& ts, std::string_view channel,
                                      const DetectorConfig& cfg) {
  return detect_faults(ts.channel(channel), ts.dt(), cfg, ts.empty() ? 0.0 : ts.t()[0]);
}

}  // namespace rollsim
