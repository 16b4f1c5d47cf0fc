#include "rollsim/lti/time_series.hpp"

#include <algorithm>

#include "rollsim/error.hpp"

namespace rollsim {

TimeSeries::TimeSeries(double dt, std::size_t samples) : dt_(dt), t_(samples) {
  if (!(dt > 0.0)) throw InvalidArgument("time series dt must be positive");
  for (std::size_t k = 0; k < samples; ++k) t_[k] = static_cast<double>(k) * dt;
}

void TimeSeries::add_channel(std::string name, std::vector<double> values) {
  if (values.size() != t_.size()) {
    throw InvalidArgument("channel '" + name + "' has " + std::to_string(values.size()) +
                          " samples, time base has " + std::to_string(t_.size()));
  }
  if (has_channel(name)) throw InvalidArgument("duplicate channel '" + name + "'");
  names_.push_back(std::move(name));
  data_.push_back(std::move(values));
}

bool TimeSeries::has_channel(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::span<const double> TimeSeries::channel(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidArgument("no channel named '" + std::string(name) + "'");
  return data_[static_cast<std::size_t>(it - names_.begin())];
}

std::span<double> TimeSeries::channel(std::string_view name) {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidArgument("no channel named '" + std::string(name) + "'");
  return data_[static_cast<std::size_t>(it - names_.begin())];
}

void TimeSeries::truncate(std::size_t n) {
  if (n >= t_.size()) return;
  t_.resize(n);
  for (auto& d : data_) d.resize(n);
}

}  // namespace rollsim
