#include "rollsim/loops/setpoint.hpp"

#include <algorithm>
#include <string>

#include "rollsim/error.hpp"

namespace rollsim {

const char* to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::step: return "step";
    case SegmentKind::ramp: return "ramp";
    case SegmentKind::hold: return "hold";
  }
  return "step";
}

SegmentKind segment_kind_from_string(std::string_view s) {
  for (auto k : {SegmentKind::step, SegmentKind::ramp, SegmentKind::hold}) {
    if (s == to_string(k)) return k;
  }
  throw InvalidArgument("unknown setpoint segment kind '" + std::string(s) + "'");
}

SetpointProfile::SetpointProfile(std::vector<SetpointSegment> segments)
    : segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!(segments_[i].t_start >= 0.0)) throw InvalidArgument("setpoint t_start must be >= 0");
    if (i > 0 && segments_[i].t_start < segments_[i - 1].t_start) {
      throw InvalidArgument("setpoint segments must be time-ordered");
    }
  }
  double level = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i > 0 && segments_[i - 1].kind == SegmentKind::ramp) {
      level += segments_[i - 1].value * (segments_[i].t_start - segments_[i - 1].t_start);
    }
    if (segments_[i].kind == SegmentKind::step) level = segments_[i].value;
    start_levels_.push_back(level);
  }
}

double SetpointProfile::operator()(double t) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](double v, const SetpointSegment& s) { return v < s.t_start; });
  if (it == segments_.begin()) return 0.0;
  const auto i = static_cast<std::size_t>(it - segments_.begin()) - 1;
  const SetpointSegment& seg = segments_[i];
  if (seg.kind == SegmentKind::ramp) return start_levels_[i] + seg.value * (t - seg.t_start);
  return start_levels_[i];
}

bool SetpointProfile::identically_zero() const {
  return std::all_of(segments_.begin(), segments_.end(),
                     [](const SetpointSegment& s) { return s.value == 0.0; });
}

}  // namespace rollsim
