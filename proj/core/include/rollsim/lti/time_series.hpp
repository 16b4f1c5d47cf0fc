#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rollsim {

/// Uniformly sampled signals sharing one time base t_k = k·dt.
///
/// Channels keep insertion order, which is also the CSV column order.
class TimeSeries {
 public:
  TimeSeries() = default;
  TimeSeries(double dt, std::size_t samples);

  [[nodiscard]] double dt() const { return dt_; }
  [[nodiscard]] std::size_t size() const { return t_.size(); }
  [[nodiscard]] bool empty() const { return t_.empty(); }
  [[nodiscard]] std::span<const double> t() const { return t_; }

  void add_channel(std::string name, std::vector<double> values);
  [[nodiscard]] bool has_channel(std::string_view name) const;
  [[nodiscard]] std::span<const double> channel(std::string_view name) const;
  [[nodiscard]] std::span<double> channel(std::string_view name);
  [[nodiscard]] const std::vector<std::string>& channel_names() const { return names_; }

  /// Drops every sample from index n onward (used when a run diverges).
  void truncate(std::size_t n);

  /// Time at which a simulation producing this series left the finite range.
  std::optional<double> diverged_at;

 private:
  double dt_ = 0.0;
  std::vector<double> t_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> data_;
};

}  // namespace rollsim
