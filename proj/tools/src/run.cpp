#include "rollsim/app/run.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "rollsim/control/closed_loop.hpp"
#include "rollsim/lti/roots.hpp"
#include "rollsim/lti/routh.hpp"

namespace rollsim::app {

using nlohmann::json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) {
  return v ? number_or_null(*v) : json(nullptr);
}

json complex_list(const std::vector<std::complex<double>>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back({z.real(), z.imag()});
  return out;
}

double max_real_part(const std::vector<std::complex<double>>& zs) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& z : zs) m = std::max(m, z.real());
  return m;
}

json gains_json(const PidGains& g) {
  json j = {{"kp", g.kp}, {"ki", g.ki}, {"kd", g.kd}, {"n", g.n}};
  if (g.output_min) j["umin"] = *g.output_min;
  if (g.output_max) j["umax"] = *g.output_max;
  return j;
}

json metrics_json(const ResponseMetrics& m) {
  return {{"rise_time_10_90", optional_number(m.rise_time_10_90)},
          {"overshoot_pct", number_or_null(m.overshoot_pct)},
          {"settling_time_2pct", optional_number(m.settling_time_2pct)},
          {"steady_state_error", number_or_null(m.steady_state_error)},
          {"final_value", number_or_null(m.final_value)}};
}

json event_json(const FaultEvent& e) {
  return {{"detected_t", e.detected_t},
          {"confirmed_t", e.confirmed_t},
          {"end_t", e.end_t},
          {"kind_hint", to_string(e.kind_hint)},
          {"peak_residual", e.peak_residual}};
}

json routh_or_null(const std::optional<Polynomial>& p) {
  if (!p || p->degree() < 1) return nullptr;
  return to_string(routh_classification(*p));
}

json loop_json(const LoopResult& r) {
  json j;
  j["samples"] = r.series.size();
  j["diverged"] = r.diverged();
  j["diverged_at"] = optional_number(r.diverged_at);
  j["final_setpoint"] = r.final_setpoint;
  j["metrics"] = metrics_json(r.metrics);
  j["stability_verdict"] = r.stability_verdict ? json(to_string(*r.stability_verdict)) : json(nullptr);
  j["characteristic"] = r.characteristic ? json(r.characteristic->coeffs()) : json(nullptr);
  j["routh"] = routh_or_null(r.characteristic);
  j["closed_loop_poles"] = complex_list(r.closed_loop_poles);
  j["max_real_part"] =
      r.closed_loop_poles.empty() ? json(nullptr) : json(max_real_part(r.closed_loop_poles));
  json events = json::array();
  for (const auto& e : r.fault_events) events.push_back(event_json(e));
  j["fault_events"] = events;
  return j;
}

json demo_run_json(const LoopResult& r, Boundedness b, RouthClass routh, double n) {
  return {{"stability_verdict", to_string(*r.stability_verdict)},
          {"routh", to_string(routh)},
          {"boundedness", to_string(b)},
          {"characteristic", r.characteristic->coeffs()},
          {"max_real_part", max_real_part(r.closed_loop_poles)},
          {"diverged_at", optional_number(r.diverged_at)},
          {"n", n}};
}

json multibody_json(const Scenario& sc) {
  const MultibodyDemo d = multibody_demo(sc.controller, sc.sim);
  json j;
  j["open_loop"] = {{"stability_verdict", to_string(d.open_verdict)},
                    {"routh", to_string(d.open_routh)},
                    {"boundedness", to_string(d.open_boundedness)},
                    {"poles", complex_list(d.open_poles)},
                    {"diverged_at", optional_number(d.open_loop.diverged_at)}};
  j["ideal_derivative"] = demo_run_json(d.ideal, d.ideal_boundedness, d.ideal_routh, 0.0);
  j["filtered_derivative"] =
      demo_run_json(d.filtered, d.filtered_boundedness, d.filtered_routh,
                    sc.controller.n > 0.0 ? sc.controller.n : kDefaultDerivativeFilter);
  j["consistent"] = d.consistent();
  j["horizon_s"] = sc.sim.t_end;
  return j;
}

json sizing_json(const SizingReport& r) {
  return {{"contact_length_L", r.contact_length_L}, {"contact_area_A", r.contact_area_A},
          {"force_F", r.force_F},                   {"torque_T", r.torque_T},
          {"omega", r.omega},                       {"roll_rpm", r.roll_rpm},
          {"power_P", r.power_P},                   {"gear_ratio_R", r.gear_ratio_R},
          {"gear_ratio_rounded", r.gear_ratio_rounded}, {"vfd_frequency", r.vfd_frequency}};
}

json plant_echo(const PlantConfig& p) {
  json j = {{"type", to_string(p.type)}};
  switch (p.type) {
    case PlantType::roll_drive:
      j["params"] = {{"K", p.roll.K}, {"J", p.roll.J}, {"B", p.roll.B}, {"r", p.roll.r}};
      break;
    case PlantType::power_screw:
      j["params"] = {{"K_ps", p.screw.K_ps}, {"J_ps", p.screw.J_ps}, {"B_ps", p.screw.B_ps},
                     {"lead", p.screw.lead}};
      j["mode"] = to_string(p.mode);
      break;
    case PlantType::multibody:
      break;
    case PlantType::custom:
      j["num"] = p.num;
      j["den"] = p.den;
      break;
  }
  return j;
}

json range_echo(const GainRange& r) {
  json j = {{"lo", r.lo}, {"hi", r.hi}};
  if (!r.values.empty()) j["values"] = r.values;
  return j;
}

std::string tune_history_csv(const TuneResult& r) {
  std::string out = "eval,kp,ki,kd,cost\n";
  for (std::size_t i = 0; i < r.history.size(); ++i) {
    const auto& h = r.history[i];
    out += std::to_string(i) + "," + format_number(h.gains.kp) + "," + format_number(h.gains.ki) +
           "," + format_number(h.gains.kd) + "," + format_number(h.cost) + "\n";
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  if (ec) throw OutputError("cannot create directory '" + p.parent_path().string() + "': " + ec.message());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw OutputError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw OutputError("failed writing '" + path + "'");
}

}  // namespace

const char* tool_version() { return ROLLSIM_VERSION; }

void apply_overrides(Scenario& sc, const RunOptions& opts) {
  if (opts.out_prefix) sc.output_prefix = *opts.out_prefix;
  if (opts.jobs) {
    if (*opts.jobs < 1) throw ScenarioError("tune.jobs", "must be >= 1");
    sc.jobs = *opts.jobs;
  }
  if (opts.dt) {
    if (!(*opts.dt > 0.0)) throw ScenarioError("sim.dt", "must be > 0");
    sc.sim.dt = *opts.dt;
  }
  if (opts.t_end) {
    if (!(*opts.t_end > 0.0)) throw ScenarioError("sim.t_end", "must be > 0");
    sc.sim.t_end = *opts.t_end;
  }
  if (sc.sim.t_end < sc.sim.dt) throw ScenarioError("sim.t_end", "must be >= sim.dt");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void write_series_csv(const std::string& path, const TimeSeries& ts) {
  static constexpr std::array<const char*, 5> kColumns = {"setpoint", "y_true", "y_measured", "error", "u"};
  std::string out = "t,setpoint,y_true,y_measured,error,u\n";
  out.reserve(ts.size() * 64);
  const auto t = ts.t();
  std::array<std::span<const double>, 5> cols;
  for (std::size_t c = 0; c < kColumns.size(); ++c) cols[c] = ts.channel(kColumns[c]);
  for (std::size_t k = 0; k < ts.size(); ++k) {
    out += format_number(t[k]);
    for (const auto& col : cols) {
      out += ',';
      out += format_number(col[k]);
    }
    out += '\n';
  }
  write_text(path, out);
}

json echo_inputs(const Scenario& sc) {
  json j;
  j["kind"] = to_string(sc.kind);
  j["output_prefix"] = sc.output_prefix;
  if (sc.kind == ScenarioKind::size) {
    const SizingInputs& s = sc.sizing;
    j["sizing"] = {{"sigma_y", s.sigma_y},
                   {"width_w", s.width_w},
                   {"t_initial", s.t_initial},
                   {"t_final", s.t_final},
                   {"roll_diameter_D", s.roll_diameter_D},
                   {"line_speed_v", s.line_speed_v},
                   {"motor_rpm", s.motor_rpm},
                   {"motor_poles", s.motor_poles},
                   {"contact_mode", to_string(s.contact_mode)}};
    return j;
  }
  j["plant"] = plant_echo(sc.plant);
  j["controller"] = gains_json(sc.controller);
  if (sc.kind == ScenarioKind::poles) return j;

  json sp = json::array();
  for (const auto& seg : sc.setpoint.segments()) {
    sp.push_back({{"t_start", seg.t_start}, {"kind", to_string(seg.kind)}, {"value", seg.value}});
  }
  j["setpoint"] = sp;
  j["sim"] = {{"dt", sc.sim.dt},
              {"t_end", sc.sim.t_end},
              {"integrator", to_string(sc.sim.integrator)},
              {"divergence_limit", sc.sim.divergence_limit}};
  if (sc.sensor) {
    const SensorModel& m = *sc.sensor;
    j["sensor"] = {{"channel", to_string(m.channel)},
                   {"noise_sigma", m.noise_sigma},
                   {"bias", m.bias},
                   {"quantization_step", m.quantization_step},
                   {"sample_dt", m.sample_dt}};
  }
  if (sc.fault) {
    const FaultSpec& f = *sc.fault;
    j["fault"] = {{"kind", to_string(f.kind)}, {"onset_t", f.onset_t}, {"magnitude", f.magnitude}};
    if (f.duration) j["fault"]["duration"] = *f.duration;
  }
  if (sc.detector) {
    const DetectorConfig& d = *sc.detector;
    j["detector"] = {{"residual_threshold", d.residual_threshold},
                     {"rate_threshold", d.rate_threshold},
                     {"consecutive_required", d.consecutive_required},
                     {"window", d.window}};
  }
  j["seed"] = sc.seed;
  if (sc.kind == ScenarioKind::tune) {
    j["tune"] = {{"cost", to_string(sc.cost)},
                 {"method", to_string(sc.method)},
                 {"kp", range_echo(sc.bounds[0])},
                 {"ki", range_echo(sc.bounds[1])},
                 {"kd", range_echo(sc.bounds[2])},
                 {"grid_points", sc.grid_points},
                 {"grid_scale", to_string(sc.grid_scale)},
                 {"max_evals", sc.max_evals},
                 {"jobs", sc.jobs}};
  }
  return j;
}

Computed compute(const Scenario& sc) {
  Computed c;
  switch (sc.kind) {
    case ScenarioKind::size: {
      c.results = sizing_json(size_report(sc.sizing));
      break;
    }
    case ScenarioKind::simulate: {
      LoopResult r = simulate_loop(sc.loop_spec());
      c.results = loop_json(r);
      if (sc.plant.type == PlantType::multibody) c.results["multibody_demo"] = multibody_json(sc);
      c.diverged = r.diverged();
      c.series = std::move(r);
      break;
    }
    case ScenarioKind::tune: {
      TuneResult t = tune_pid(sc.tune_spec());
      LoopSpec best = sc.loop_spec();
      best.gains = t.best_gains;
      LoopResult r = simulate_loop(best);
      c.results = {{"best_gains", gains_json(t.best_gains)},
                   {"best_cost", t.best_cost},
                   {"evals", t.evals},
                   {"best_run", loop_json(r)}};
      c.diverged = r.diverged();
      c.series = std::move(r);
      c.tune = std::move(t);
      break;
    }
    case ScenarioKind::poles: {
      const TransferFunction g = sc.plant.transfer_function();
      json open = {{"order", g.order()}, {"dc_gain", nullptr}};
      try {
        open["dc_gain"] = number_or_null(dc_gain(g));
      } catch (const DomainError&) {
      }
      if (g.order() >= 1) {
        const auto p = poles(g);
        open["poles"] = complex_list(p);
        open["max_real_part"] = max_real_part(p);
        open["stability_verdict"] = to_string(classify_poles(p));
        open["routh"] = to_string(routh_classification(g.den()));
      }
      c.results["open_loop"] = open;
      const PidGains& k = sc.controller;
      if (k.kp > 0.0 || k.ki > 0.0 || k.kd > 0.0) {
        const auto [nc, dc] = controller_polynomials(k);
        const Polynomial ch = characteristic_polynomial(nc, dc, g);
        json closed = {{"characteristic", ch.coeffs()}};
        if (ch.degree() >= 1) {
          const auto p = polynomial_roots(ch);
          closed["poles"] = complex_list(p);
          closed["max_real_part"] = max_real_part(p);
          closed["stability_verdict"] = to_string(classify_poles(p));
          closed["routh"] = to_string(routh_classification(ch));
        }
        c.results["closed_loop"] = closed;
      }
      break;
    }
  }
  return c;
}

RunOutcome run_scenario(const Scenario& sc) {
  const auto start = std::chrono::steady_clock::now();
  Computed c = compute(sc);

  RunOutcome out;
  out.json_path = sc.output_prefix + ".json";
  if (c.series) {
    const std::string csv = sc.output_prefix + ".csv";
    write_series_csv(csv, c.series->series);
    out.csv_paths.push_back(csv);
  }
  if (c.tune) {
    const std::string csv = sc.output_prefix + "_history.csv";
    write_text(csv, tune_history_csv(*c.tune));
    out.csv_paths.push_back(csv);
  }
  out.exit_code = c.diverged ? kExitDiverged : kExitOk;

  json report;
  report["tool"] = kToolName;
  report["version"] = tool_version();
  report["kind"] = to_string(sc.kind);
  report["inputs"] = echo_inputs(sc);
  report["results"] = std::move(c.results);
  report["outputs"] = {{"json", out.json_path}, {"csv", out.csv_paths}};
  report["exit_code"] = out.exit_code;
  report["runtime_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_text(out.json_path, report.dump(2) + "\n");
  out.report = std::move(report);
  return out;
}

}  // namespace rollsim::app
