#pragma once

#include <string_view>
#include <vector>

namespace rollsim {

enum class SegmentKind { step, ramp, hold };

const char* to_string(SegmentKind k);
SegmentKind segment_kind_from_string(std::string_view s);

/// step jumps to `value`; ramp rises at `value` units/s from wherever the
/// profile was at t_start; hold freezes the level reached at t_start.
struct SetpointSegment {
  double t_start = 0.0;
  SegmentKind kind = SegmentKind::step;
  double value = 0.0;

  friend bool operator==(const SetpointSegment&, const SetpointSegment&) = default;
};

/// Piecewise reference signal; zero before the first segment.
class SetpointProfile {
 public:
  SetpointProfile() = default;
  explicit SetpointProfile(std::vector<SetpointSegment> segments);

  static SetpointProfile step(double value, double t_start = 0.0) {
    return SetpointProfile({{t_start, SegmentKind::step, value}});
  }

  [[nodiscard]] double operator()(double t) const;
  [[nodiscard]] const std::vector<SetpointSegment>& segments() const { return segments_; }
  [[nodiscard]] bool identically_zero() const;

  friend bool operator==(const SetpointProfile&, const SetpointProfile&) = default;

 private:
  std::vector<SetpointSegment> segments_;
  std::vector<double> start_levels_;  // profile value at each segment start
};

}  // namespace rollsim
