#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rlqas/agents/config.hpp"
#include "rlqas/agents/replay.hpp"
#include "rlqas/env/observation.hpp"

namespace rlqas::agents {

/// Common interface the trainer drives. Value-based agents learn inside
/// observe(); rollout agents learn in observe()/episode_end() on their own
/// schedule.
class Agent {
 public:
  virtual ~Agent() = default;

  virtual const std::string& id() const = 0;
  virtual int select_action(const env::QasObservation& obs,
                            const std::vector<std::uint8_t>& mask) = 0;
  virtual void observe(const Transition& t) = 0;
  virtual void episode_end() {}

  virtual nlohmann::json config_json() const = 0;
};

/// The nine benchmarked algorithms.
std::vector<std::string> agent_ids();
bool is_valid_agent_id(const std::string& id);

/// Builds a single-threaded agent. "a3c" is driven by the dedicated
/// multi-worker runner in train.hpp; requesting it here yields one worker
/// equivalent (used for smoke paths).
std::unique_ptr<Agent> make_agent(const std::string& id, const AgentConfig& cfg,
                                  std::size_t obs_dim, int n_actions,
                                  std::uint64_t seed);

}  // namespace rlqas::agents
