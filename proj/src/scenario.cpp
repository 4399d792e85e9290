#include "tidanse/scenario.hpp"

#include <cmath>
#include <string>

#include "tidanse/errors.hpp"

namespace tidanse {

namespace {

constexpr Index kCalibrationSamples = 15000;

// Unit-power complex uniform draw: both parts uniform over the sample range,
// scaled so E|x|^2 = 1 for the symmetric default range.
double range_power(const ScenarioConfig& c) {
  const double width = c.sample_hi - c.sample_lo;
  return 2.0 * width * width / 12.0;
}

// Thermal power at each node, measured on a fresh desired-only batch at the
// node's first sensor.
RealVec calibrate_thermal(const ScenarioConfig& config, const CMat& a, const std::vector<int>& node_offset) {
  RngStream rng = make_stream(config.seed, stream_purpose::thermal_calibration);
  CMat latents = rng.complex_uniform_matrix(config.num_desired, kCalibrationSamples,
                                            config.sample_lo, config.sample_hi);
  RealVec out(config.num_nodes);
  for (int k = 0; k < config.num_nodes; ++k) {
    const Eigen::RowVectorXcd observed = a.row(node_offset[static_cast<size_t>(k)]) * latents;
    const double power = observed.squaredNorm() / static_cast<double>(kCalibrationSamples);
    out(k) = std::sqrt(config.thermal_power_ratio * power);
  }
  return out;
}

}  // namespace

int ScenarioConfig::total_sensors() const {
  int m = 0;
  for (int mk : sensors_per_node) m += mk;
  return m;
}

void ScenarioConfig::validate() const {
  if (num_nodes < 1) throw InvalidConfig("num_nodes must be >= 1");
  if (static_cast<int>(sensors_per_node.size()) != num_nodes)
    throw InvalidConfig("sensors_per_node must have num_nodes entries");
  if (channels < 1) throw InvalidConfig("channels must be >= 1");
  for (int mk : sensors_per_node)
    if (mk < channels) throw InvalidConfig("sensors_per_node entries must be >= channels");
  if (num_desired < 1) throw InvalidConfig("num_desired must be >= 1");
  if (num_noise < 0) throw InvalidConfig("num_noise must be >= 0");
  if (gevd_rank < 1 || gevd_rank > channels)
    throw InvalidConfig("gevd_rank must satisfy 1 <= gevd_rank <= channels");
  if (perturb_prob < 0.0 || perturb_prob > 1.0)
    throw InvalidConfig("perturb_prob must lie in [0, 1]");
  if (!(thermal_power_ratio > 0.0))
    throw InvalidConfig("thermal_power_ratio must be > 0");
  if (!(sample_hi > sample_lo)) throw InvalidConfig("sample range must be non-empty");
  if (freeze_frames < 0) throw InvalidConfig("freeze_frames must be >= 0");
}

std::vector<int> Scenario::global_selection(int node) const {
  std::vector<int> out;
  out.reserve(selected_channels[static_cast<size_t>(node)].size());
  for (int c : selected_channels[static_cast<size_t>(node)])
    out.push_back(node_offset[static_cast<size_t>(node)] + c);
  return out;
}

Scenario make_scenario(const ScenarioConfig& config) {
  config.validate();
  Scenario sc;
  sc.config = config;

  sc.node_offset.resize(static_cast<size_t>(config.num_nodes));
  int offset = 0;
  for (int k = 0; k < config.num_nodes; ++k) {
    sc.node_offset[static_cast<size_t>(k)] = offset;
    offset += config.sensors_per_node[static_cast<size_t>(k)];
  }

  const int m = config.total_sensors();
  RngStream steering = make_stream(config.seed, stream_purpose::steering);
  sc.a = steering.complex_uniform_matrix(m, config.num_desired, config.sample_lo, config.sample_hi);
  sc.b = steering.complex_uniform_matrix(m, config.num_noise, config.sample_lo, config.sample_hi);

  sc.thermal_std = calibrate_thermal(config, sc.a, sc.node_offset);

  // Default reference channels: the first J sensors of each node.
  sc.selected_channels.resize(static_cast<size_t>(config.num_nodes));
  for (int k = 0; k < config.num_nodes; ++k) {
    auto& sel = sc.selected_channels[static_cast<size_t>(k)];
    sel.resize(static_cast<size_t>(config.channels));
    for (int j = 0; j < config.channels; ++j) sel[static_cast<size_t>(j)] = j;
  }
  return sc;
}

SignalFrame draw_frame(const Scenario& scenario, Index frame_len, RngStream& rng) {
  if (frame_len < 1) throw InvalidConfig("frame_len must be >= 1");
  const ScenarioConfig& c = scenario.config;

  const CMat latents_s = rng.complex_uniform_matrix(c.num_desired, frame_len, c.sample_lo, c.sample_hi);
  const CMat latents_n = rng.complex_uniform_matrix(c.num_noise, frame_len, c.sample_lo, c.sample_hi);

  SignalFrame frame;
  frame.s = scenario.a * latents_s;
  frame.n = scenario.b * latents_n;

  // Thermal noise: same uniform law as the sources, scaled per node so the
  // per-sample power equals thermal_std^2.
  const double unit = std::sqrt(range_power(c));
  for (int k = 0; k < c.num_nodes; ++k) {
    const double scale = scenario.thermal_std(k) / unit;
    const int mk = c.sensors_per_node[static_cast<size_t>(k)];
    const int off = scenario.node_offset[static_cast<size_t>(k)];
    for (int r = 0; r < mk; ++r)
      for (Index t = 0; t < frame_len; ++t)
        frame.n(off + r, t) += scale * rng.complex_uniform(c.sample_lo, c.sample_hi);
  }

  frame.y = frame.s + frame.n;

  frame.d.resize(static_cast<size_t>(c.num_nodes));
  for (int k = 0; k < c.num_nodes; ++k) {
    CMat dk(c.channels, frame_len);
    const auto globals = scenario.global_selection(k);
    for (int j = 0; j < c.channels; ++j)
      dk.row(j) = frame.s.row(globals[static_cast<size_t>(j)]);
    frame.d[static_cast<size_t>(k)] = std::move(dk);
  }
  return frame;
}

PerturbOutcome perturb_steering(const Scenario& scenario, RngStream& rng) {
  PerturbOutcome out{scenario, false};
  Scenario& sc = out.scenario;
  const ScenarioConfig& c = sc.config;

  const bool frozen = sc.frames_since_change >= 0 && sc.frames_since_change < c.freeze_frames;
  if (sc.frames_since_change >= 0) sc.frames_since_change += 1;

  if (frozen || c.perturb_prob <= 0.0) return out;

  bool fired = false;
  if (c.perturb_mode == PerturbMode::whole_matrix) {
    if (rng.bernoulli(c.perturb_prob)) {
      fired = true;
      const int m = c.total_sensors();
      sc.a = rng.complex_uniform_matrix(m, c.num_desired, c.sample_lo, c.sample_hi);
      sc.b = rng.complex_uniform_matrix(m, c.num_noise, c.sample_lo, c.sample_hi);
    }
  } else {
    for (Index r = 0; r < sc.a.rows(); ++r)
      for (Index col = 0; col < sc.a.cols(); ++col)
        if (rng.bernoulli(c.perturb_prob)) {
          sc.a(r, col) = rng.complex_uniform(c.sample_lo, c.sample_hi);
          fired = true;
        }
    for (Index r = 0; r < sc.b.rows(); ++r)
      for (Index col = 0; col < sc.b.cols(); ++col)
        if (rng.bernoulli(c.perturb_prob)) {
          sc.b(r, col) = rng.complex_uniform(c.sample_lo, c.sample_hi);
          fired = true;
        }
  }

  if (fired) {
    out.changed = true;
    sc.generation += 1;
    sc.frames_since_change = 0;
  }
  return out;
}

}  // namespace tidanse
