#include "rollsim/lti/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "rollsim/error.hpp"

namespace rollsim {
namespace {

// First time the normalized response reaches level, interpolated.
std::optional<double> first_crossing(std::span<const double> t, std::span<const double> yn,
                                     double level) {
  for (std::size_t k = 0; k < yn.size(); ++k) {
    if (yn[k] >= level) {
      if (k == 0) return t[0];
      const double frac = (level - yn[k - 1]) / (yn[k] - yn[k - 1]);
      return t[k - 1] + frac * (t[k] - t[k - 1]);
    }
  }
  return std::nullopt;
}

}  // namespace

ResponseMetrics response_metrics(std::span<const double> t, std::span<const double> y,
                                 double setpoint) {
  if (y.empty() || t.size() != y.size()) {
    throw InvalidArgument("response metrics need a nonempty series with matching time base");
  }
  ResponseMetrics m;
  const std::size_t n = y.size();
  const std::size_t tail = std::max<std::size_t>(1, n / 20);
  double tail_sum = 0.0;
  for (std::size_t k = n - tail; k < n; ++k) tail_sum += y[k];
  m.steady_state_error = setpoint - tail_sum / static_cast<double>(tail);
  m.final_value = y.back();

  const bool relative = setpoint != 0.0;
  const double scale = relative ? std::abs(setpoint) : 1.0;
  const double direction = setpoint < 0.0 ? -1.0 : 1.0;

  double peak = 0.0;
  for (double v : y) {
    const double excess = relative ? direction * (v - setpoint) : std::abs(v);
    peak = std::max(peak, excess);
  }
  m.overshoot_pct = peak / scale * 100.0;

  if (relative) {
    std::vector<double> yn(n);
    for (std::size_t k = 0; k < n; ++k) yn[k] = y[k] / setpoint;
    if (yn[0] < 0.1) {
      const auto t10 = first_crossing(t, yn, 0.1);
      const auto t90 = first_crossing(t, yn, 0.9);
      if (t10 && t90) m.rise_time_10_90 = *t90 - *t10;
    }
  }

  const double band = 0.02 * scale;
  std::optional<std::size_t> last_outside;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(y[k] - setpoint) > band) last_outside = k;
  }
  if (!last_outside) {
    m.settling_time_2pct = t[0];
  } else if (*last_outside + 1 < n) {
    // Interpolate the band entry between the last outside and first inside sample.
    const std::size_t k = *last_outside;
    const double e0 = std::abs(y[k] - setpoint);
    const double e1 = std::abs(y[k + 1] - setpoint);
    const double frac = e0 == e1 ? 1.0 : (e0 - band) / (e0 - e1);
    m.settling_time_2pct = t[k] + std::clamp(frac, 0.0, 1.0) * (t[k + 1] - t[k]);
  }
  return m;
}

ResponseMetrics response_metrics(const TimeSeries& ts, double setpoint, std::string_view channel) {
  return response_metrics(ts.t(), ts.channel(channel), setpoint);
}

}  // namespace rollsim
