#pragma once

#include <cstdint>
#include <vector>

#include "tidanse/rng.hpp"
#include "tidanse/types.hpp"

namespace tidanse {

enum class PerturbMode {
  whole_matrix,  // one Bernoulli event redraws every steering entry
  per_entry,     // each entry fires independently
};

struct ScenarioConfig {
  int num_nodes = 1;
  std::vector<int> sensors_per_node;  // length num_nodes
  int num_desired = 1;                // latent target sources
  int num_noise = 0;                  // latent noise sources
  int channels = 1;                   // J, exchanged/estimated channels per node
  int gevd_rank = 1;                  // R
  double thermal_power_ratio = 0.10;
  double sample_lo = -0.5;
  double sample_hi = 0.5;
  double perturb_prob = 0.05;
  int freeze_frames = 30;
  PerturbMode perturb_mode = PerturbMode::whole_matrix;
  std::uint64_t seed = 0;

  int total_sensors() const;
  void validate() const;  // throws InvalidConfig naming the violated constraint
};

// Immutable generative world. Steering entries are i.i.d. uniform over the
// sample range (real and imaginary parts independently); per-node thermal
// noise power is calibrated against a desired-only batch at the node's
// first sensor.
struct Scenario {
  ScenarioConfig config;
  CMat a;                        // total_sensors x num_desired
  CMat b;                        // total_sensors x num_noise
  RealVec thermal_std;           // length num_nodes, sqrt of per-sample noise power
  std::vector<std::vector<int>> selected_channels;  // per node, length J, local indices
  std::vector<int> node_offset;  // first global sensor index per node
  int generation = 0;            // bumped by each steering change
  int frames_since_change = -1;  // -1: no change yet

  int first_sensor(int node) const { return node_offset[static_cast<size_t>(node)]; }
  // Global sensor indices of node k's selected channels.
  std::vector<int> global_selection(int node) const;
};

// One frame of generated signals. y = s + n holds exactly by construction;
// d[k] are the rows of s picked by node k's channel selection.
struct SignalFrame {
  CMat y;                  // mixed, total_sensors x B
  CMat s;                  // desired component
  CMat n;                  // total noise component (directional + thermal)
  std::vector<CMat> d;     // per node, J x B desired reference
};

Scenario make_scenario(const ScenarioConfig& config);

SignalFrame draw_frame(const Scenario& scenario, Index frame_len, RngStream& rng);

struct PerturbOutcome {
  Scenario scenario;
  bool changed = false;
};

// Call once per online frame. A fired event redraws steering entries from
// the sample range; the firing probability is held at zero for
// freeze_frames frames after each change.
PerturbOutcome perturb_steering(const Scenario& scenario, RngStream& rng);

}  // namespace tidanse
