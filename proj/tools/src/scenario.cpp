#include "rollsim/app/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace rollsim::app {
namespace {

enum class Dim { none, stress, length, speed, rotation, time };

struct Unit {
  std::string_view name;
  Dim dim;
  double scale;
};

constexpr Unit kUnits[] = {
    {"Pa", Dim::stress, 1.0},       {"kPa", Dim::stress, 1e3},     {"MPa", Dim::stress, 1e6},
    {"GPa", Dim::stress, 1e9},      {"N/m^2", Dim::stress, 1.0},   {"m", Dim::length, 1.0},
    {"cm", Dim::length, 1e-2},      {"mm", Dim::length, 1e-3},     {"um", Dim::length, 1e-6},
    {"m/s", Dim::speed, 1.0},       {"mm/s", Dim::speed, 1e-3},    {"m/min", Dim::speed, 1.0 / 60.0},
    {"rpm", Dim::rotation, 1.0},    {"RPM", Dim::rotation, 1.0},   {"s", Dim::time, 1.0},
    {"ms", Dim::time, 1e-3},        {"min", Dim::time, 60.0},
};

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

double parse_quantity(const std::string& text, Dim dim, const std::string& path) {
  std::string_view s = trim(text);
  // Split "<number> <unit>" at the first space; "5mm" style is not accepted.
  const auto space = s.find(' ');
  if (space == std::string_view::npos) {
    if (auto v = parse_double(s)) return *v;
    throw ScenarioError(path, "expected a number, got '" + text + "'");
  }
  const auto number = parse_double(s.substr(0, space));
  const std::string_view unit = trim(s.substr(space + 1));
  if (!number) throw ScenarioError(path, "expected a number, got '" + text + "'");
  for (const Unit& u : kUnits) {
    if (u.name != unit) continue;
    if (u.dim != dim) throw ScenarioError(path, "unit '" + std::string(unit) + "' has the wrong dimension");
    return *number * u.scale;
  }
  throw ScenarioError(path, "unknown unit '" + std::string(unit) + "'");
}

// Map node wrapper that records which keys were read so leftovers can be
// reported with their full path.
class Section {
 public:
  Section(YAML::Node node, std::string path, const ParseOptions& opts, std::vector<std::string>& warnings)
      : node_(std::move(node)), path_(std::move(path)), opts_(opts), warnings_(warnings) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) {
      throw ScenarioError(path_, "expected a mapping");
    }
  }

  [[nodiscard]] bool has(std::string_view key) const {
    return node_ && node_.IsMap() && node_[std::string(key)] && !node_[std::string(key)].IsNull();
  }

  [[nodiscard]] const std::string& path() const { return path_; }

  YAML::Node raw(std::string_view key) {
    seen_.insert(std::string(key));
    return node_[std::string(key)];
  }

  std::string key_path(std::string_view key) const { return join(path_, key); }

  Section sub(std::string_view key) {
    return Section(has(key) ? raw(key) : YAML::Node(), key_path(key), opts_, warnings_);
  }

  std::optional<std::string> text(std::string_view key) {
    if (!has(key)) {
      if (node_ && node_.IsMap() && node_[std::string(key)]) seen_.insert(std::string(key));
      return std::nullopt;
    }
    const YAML::Node n = raw(key);
    if (!n.IsScalar()) throw ScenarioError(key_path(key), "expected a scalar");
    return n.Scalar();
  }

  std::optional<double> number(std::string_view key, Dim dim = Dim::none) {
    const auto t = text(key);
    if (!t) return std::nullopt;
    return parse_quantity(*t, dim, key_path(key));
  }

  void number(std::string_view key, double& out, Dim dim = Dim::none) {
    if (auto v = number(key, dim)) out = *v;
  }

  void nonnegative(std::string_view key, double& out, Dim dim = Dim::none) {
    number(key, out, dim);
    if (!(out >= 0.0)) throw ScenarioError(key_path(key), "must be >= 0");
  }

  void positive(std::string_view key, double& out, Dim dim = Dim::none) {
    number(key, out, dim);
    if (!(out > 0.0)) throw ScenarioError(key_path(key), "must be > 0");
  }

  template <class Int>
  void integer(std::string_view key, Int& out) {
    const auto t = text(key);
    if (!t) return;
    const std::string_view s = trim(*t);
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ScenarioError(key_path(key), "expected an integer, got '" + *t + "'");
    }
    out = v;
  }

  template <class Enum, class Parse>
  void choice(std::string_view key, Enum& out, Parse parse) {
    const auto t = text(key);
    if (!t) return;
    try {
      out = parse(*t);
    } catch (const InvalidArgument& e) {
      throw ScenarioError(key_path(key), e.what());
    }
  }

  std::vector<double> number_list(std::string_view key) {
    if (!has(key)) return {};
    const YAML::Node n = raw(key);
    if (!n.IsSequence()) throw ScenarioError(key_path(key), "expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const std::string p = key_path(key) + "[" + std::to_string(i) + "]";
      if (!n[i].IsScalar()) throw ScenarioError(p, "expected a number");
      out.push_back(parse_quantity(n[i].Scalar(), Dim::none, p));
    }
    return out;
  }

  /// Rejects (or, non-strict, reports) keys that were never read.
  void finish() {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& kv : node_) {
      const std::string key = kv.first.as<std::string>();
      if (seen_.count(key)) continue;
      const std::string p = key_path(key);
      if (opts_.strict) throw ScenarioError(p, "unknown key");
      warnings_.push_back(p + ": unknown key ignored");
    }
  }

 private:
  YAML::Node node_;
  std::string path_;
  const ParseOptions& opts_;
  std::vector<std::string>& warnings_;
  std::set<std::string> seen_;
};

void parse_sizing(Section s, SizingInputs& in) {
  s.number("sigma_y", in.sigma_y, Dim::stress);
  s.number("width_w", in.width_w, Dim::length);
  s.number("t_initial", in.t_initial, Dim::length);
  s.number("t_final", in.t_final, Dim::length);
  s.number("roll_diameter_D", in.roll_diameter_D, Dim::length);
  s.number("line_speed_v", in.line_speed_v, Dim::speed);
  s.number("motor_rpm", in.motor_rpm, Dim::rotation);
  s.integer("motor_poles", in.motor_poles);
  s.choice("contact_mode", in.contact_mode, contact_length_mode_from_string);
  s.finish();
  try {
    in.validate();
  } catch (const InvalidArgument& e) {
    // Messages start with the field name.
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    if (colon == std::string::npos) throw ScenarioError(s.path(), msg);
    throw ScenarioError(s.key_path(msg.substr(0, colon)), std::string(trim(msg.substr(colon + 1))));
  }
}

PlantType plant_type_from_string(std::string_view s) {
  for (auto t : {PlantType::roll_drive, PlantType::power_screw, PlantType::multibody, PlantType::custom}) {
    if (s == to_string(t)) return t;
  }
  throw InvalidArgument("unknown plant type '" + std::string(s) +
                        "' (expected roll_drive, power_screw, multibody or custom)");
}

void parse_plant(Section s, PlantConfig& p) {
  s.choice("type", p.type, plant_type_from_string);
  switch (p.type) {
    case PlantType::roll_drive: {
      Section params = s.sub("params");
      params.positive("K", p.roll.K);
      params.positive("J", p.roll.J);
      params.positive("B", p.roll.B);
      params.positive("r", p.roll.r, Dim::length);
      params.finish();
      break;
    }
    case PlantType::power_screw: {
      Section params = s.sub("params");
      params.positive("K_ps", p.screw.K_ps);
      params.positive("J_ps", p.screw.J_ps);
      params.positive("B_ps", p.screw.B_ps);
      params.positive("lead", p.screw.lead, Dim::length);
      params.finish();
      s.choice("mode", p.mode, kinematics_mode_from_string);
      break;
    }
    case PlantType::multibody:
      break;
    case PlantType::custom:
      p.num = s.number_list("num");
      p.den = s.number_list("den");
      if (p.num.empty()) throw ScenarioError(s.key_path("num"), "required for a custom plant");
      if (p.den.empty()) throw ScenarioError(s.key_path("den"), "required for a custom plant");
      try {
        (void)p.transfer_function();
      } catch (const InvalidArgument& e) {
        throw ScenarioError(s.path(), e.what());
      }
      break;
  }
  s.finish();
}

void parse_controller(Section s, PidGains& g) {
  s.nonnegative("kp", g.kp);
  s.nonnegative("ki", g.ki);
  s.nonnegative("kd", g.kd);
  s.nonnegative("n", g.n);
  g.output_min = s.number("umin");
  g.output_max = s.number("umax");
  s.finish();
  if (g.output_min && g.output_max && !(*g.output_min < *g.output_max)) {
    throw ScenarioError(s.key_path("umin"), "must be < controller.umax");
  }
}

SetpointProfile parse_setpoint(YAML::Node n, const std::string& path, const ParseOptions& opts,
                               std::vector<std::string>& warnings) {
  if (n.IsScalar()) return SetpointProfile::step(parse_quantity(n.Scalar(), Dim::none, path));
  if (!n.IsSequence()) throw ScenarioError(path, "expected a number or a list of segments");
  std::vector<SetpointSegment> segs;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Section s(n[i], path + "[" + std::to_string(i) + "]", opts, warnings);
    SetpointSegment seg;
    s.nonnegative("t_start", seg.t_start, Dim::time);
    s.choice("kind", seg.kind, segment_kind_from_string);
    s.number("value", seg.value);
    s.finish();
    segs.push_back(seg);
  }
  try {
    return SetpointProfile(std::move(segs));
  } catch (const InvalidArgument& e) {
    throw ScenarioError(path, e.what());
  }
}

void parse_sim(Section s, SimConfig& sim) {
  s.positive("dt", sim.dt, Dim::time);
  s.positive("t_end", sim.t_end, Dim::time);
  s.choice("integrator", sim.integrator, integrator_from_string);
  s.positive("divergence_limit", sim.divergence_limit);
  s.finish();
  if (sim.t_end < sim.dt) throw ScenarioError(s.key_path("t_end"), "must be >= sim.dt");
}

SensorModel parse_sensor(Section s) {
  SensorModel m;
  s.choice("channel", m.channel, sensor_channel_from_string);
  s.nonnegative("noise_sigma", m.noise_sigma);
  s.number("bias", m.bias);
  s.nonnegative("quantization_step", m.quantization_step);
  s.nonnegative("sample_dt", m.sample_dt, Dim::time);
  s.finish();
  return m;
}

FaultSpec parse_fault(Section s) {
  FaultSpec f;
  s.choice("kind", f.kind, fault_kind_from_string);
  s.nonnegative("onset_t", f.onset_t, Dim::time);
  s.number("magnitude", f.magnitude);
  f.duration = s.number("duration", Dim::time);
  if (f.duration && !(*f.duration > 0.0)) throw ScenarioError(s.key_path("duration"), "must be > 0");
  s.finish();
  return f;
}

DetectorConfig parse_detector(Section s) {
  DetectorConfig d;
  s.positive("residual_threshold", d.residual_threshold);
  s.nonnegative("rate_threshold", d.rate_threshold);
  s.integer("consecutive_required", d.consecutive_required);
  if (d.consecutive_required < 1) throw ScenarioError(s.key_path("consecutive_required"), "must be >= 1");
  s.integer("window", d.window);
  s.finish();
  return d;
}

void parse_tune(Section s, Scenario& sc) {
  s.choice("cost", sc.cost, cost_kind_from_string);
  s.choice("method", sc.method, tune_method_from_string);
  const double fixed[3] = {sc.controller.kp, sc.controller.ki, sc.controller.kd};
  const char* names[3] = {"kp", "ki", "kd"};
  for (int i = 0; i < 3; ++i) {
    GainRange& r = sc.bounds[static_cast<std::size_t>(i)];
    r = GainRange{fixed[i], fixed[i], {}};
    if (!s.has(names[i])) {
      s.text(names[i]);
      continue;
    }
    Section g = s.sub(names[i]);
    g.number("lo", r.lo);
    g.number("hi", r.hi);
    r.values = g.number_list("values");
    if (!g.has("lo") && !r.values.empty()) r.lo = *std::min_element(r.values.begin(), r.values.end());
    if (!g.has("hi") && !r.values.empty()) r.hi = *std::max_element(r.values.begin(), r.values.end());
    g.finish();
  }
  s.integer("grid_points", sc.grid_points);
  s.choice("grid_scale", sc.grid_scale, grid_scale_from_string);
  s.integer("max_evals", sc.max_evals);
  s.integer("jobs", sc.jobs);
  s.finish();
  try {
    sc.tune_spec().validate();
  } catch (const ScenarioError&) {
    throw;
  } catch (const InvalidArgument& e) {
    // tune_spec().validate() already names "tune.<key>".
    const std::string msg = e.what();
    const auto end = msg.find_first_of(": ");
    throw ScenarioError(msg.substr(0, end), std::string(trim(msg.substr(end + 1))));
  }
}

// Sections each kind accepts besides kind/output_prefix.
std::set<std::string> allowed_sections(ScenarioKind k) {
  const std::set<std::string> loop = {"plant",  "controller", "setpoint", "sim",
                                      "sensor", "fault",      "detector", "seed"};
  switch (k) {
    case ScenarioKind::size: return {"sizing"};
    case ScenarioKind::simulate: return loop;
    case ScenarioKind::tune: {
      auto s = loop;
      s.insert("tune");
      return s;
    }
    case ScenarioKind::poles: return {"plant", "controller"};
  }
  return {};
}

}  // namespace

const char* to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::size: return "size";
    case ScenarioKind::simulate: return "simulate";
    case ScenarioKind::tune: return "tune";
    case ScenarioKind::poles: return "poles";
  }
  return "simulate";
}

ScenarioKind scenario_kind_from_string(std::string_view s) {
  for (auto k : {ScenarioKind::size, ScenarioKind::simulate, ScenarioKind::tune, ScenarioKind::poles}) {
    if (s == to_string(k)) return k;
  }
  throw InvalidArgument("unknown scenario kind '" + std::string(s) +
                        "' (expected size, simulate, tune or poles)");
}

const char* to_string(PlantType t) {
  switch (t) {
    case PlantType::roll_drive: return "roll_drive";
    case PlantType::power_screw: return "power_screw";
    case PlantType::multibody: return "multibody";
    case PlantType::custom: return "custom";
  }
  return "custom";
}

TransferFunction PlantConfig::transfer_function() const {
  switch (type) {
    case PlantType::roll_drive: return roll_drive_tf(roll);
    case PlantType::power_screw: return power_screw_tf(screw, mode);
    case PlantType::multibody: return multibody_tf();
    case PlantType::custom: return tf_new(num, den);
  }
  return multibody_tf();
}

LoopSpec Scenario::loop_spec() const {
  LoopSpec spec;
  spec.plant = plant.transfer_function();
  spec.gains = controller;
  spec.setpoint = setpoint;
  spec.sensor = sensor;
  spec.fault = fault;
  spec.detector = detector;
  spec.seed = seed;
  spec.sim = sim;
  return spec;
}

TuneSpec Scenario::tune_spec() const {
  TuneSpec t;
  t.loop = loop_spec();
  t.cost = cost;
  t.bounds = bounds;
  t.initial = controller;
  t.method = method;
  t.grid_points = grid_points;
  t.grid_scale = grid_scale;
  t.max_evals = max_evals;
  t.jobs = jobs;
  return t;
}

bool equivalent(const Scenario& a, const Scenario& b) {
  if (a.kind != b.kind || a.output_prefix != b.output_prefix) return false;
  switch (a.kind) {
    case ScenarioKind::size: return a.sizing == b.sizing;
    case ScenarioKind::poles: return a.plant == b.plant && a.controller == b.controller;
    case ScenarioKind::simulate:
    case ScenarioKind::tune: break;
  }
  const bool loop = a.plant == b.plant && a.controller == b.controller && a.setpoint == b.setpoint &&
                    a.sim == b.sim && a.sensor == b.sensor && a.fault == b.fault &&
                    a.detector == b.detector && a.seed == b.seed;
  if (!loop || a.kind == ScenarioKind::simulate) return loop;
  return a.cost == b.cost && a.method == b.method && a.bounds == b.bounds &&
         a.grid_points == b.grid_points && a.grid_scale == b.grid_scale &&
         a.max_evals == b.max_evals && a.jobs == b.jobs;
}

Scenario parse_scenario(std::string_view text, const ParseOptions& opts) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ScenarioError("", std::string("malformed scenario: ") + e.what());
  }
  Scenario sc;
  if (!root.IsMap()) throw ScenarioError("", "scenario must be a mapping");
  Section top(root, "", opts, sc.warnings);

  const auto kind = top.text("kind");
  if (!kind) throw ScenarioError("kind", "missing (size, simulate, tune or poles)");
  top.choice("kind", sc.kind, scenario_kind_from_string);
  sc.output_prefix = top.text("output_prefix").value_or(std::string("rollsim_") + to_string(sc.kind));

  const auto allowed = allowed_sections(sc.kind);
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (key == "kind" || key == "output_prefix" || allowed.count(key)) continue;
    static const std::set<std::string> known = {"sizing", "plant", "controller", "setpoint", "sim",
                                                "sensor", "fault", "detector", "seed", "tune"};
    if (known.count(key)) {
      const std::string msg = std::string("section not used by kind '") + to_string(sc.kind) + "'";
      if (opts.strict) throw ScenarioError(key, msg);
      sc.warnings.push_back(key + ": " + msg);
      top.raw(key);
    }
  }

  switch (sc.kind) {
    case ScenarioKind::size:
      if (!top.has("sizing")) throw ScenarioError("sizing", "missing");
      parse_sizing(top.sub("sizing"), sc.sizing);
      break;
    case ScenarioKind::poles:
      parse_plant(top.sub("plant"), sc.plant);
      parse_controller(top.sub("controller"), sc.controller);
      break;
    case ScenarioKind::simulate:
    case ScenarioKind::tune:
      parse_plant(top.sub("plant"), sc.plant);
      parse_controller(top.sub("controller"), sc.controller);
      if (top.has("setpoint")) {
        sc.setpoint = parse_setpoint(top.raw("setpoint"), "setpoint", opts, sc.warnings);
      }
      parse_sim(top.sub("sim"), sc.sim);
      if (top.has("sensor")) sc.sensor = parse_sensor(top.sub("sensor"));
      if (top.has("fault")) sc.fault = parse_fault(top.sub("fault"));
      if (top.has("detector")) sc.detector = parse_detector(top.sub("detector"));
      top.integer("seed", sc.seed);
      if (sc.kind == ScenarioKind::tune) parse_tune(top.sub("tune"), sc);
      break;
  }
  top.finish();
  return sc;
}

Scenario load_scenario(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("", "cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), opts);
}

ParseOptions parse_options_from_env() {
  ParseOptions o;
  if (const char* v = std::getenv("ROLLSIM_STRICT")) o.strict = std::string_view(v) != "0";
  return o;
}

}  // namespace rollsim::app
