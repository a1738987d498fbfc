#include "riskgame/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "riskgame/errors.hpp"
#include "riskgame/serialize.hpp"

namespace riskgame::config {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (const auto& item : object.items()) {
    if (allowed.find(item.key()) == allowed.end()) {
      throw ConfigError("unknown key '" + path + item.key() + "'");
    }
  }
}

const json* find(const json& object, const std::string& key) {
  const auto it = object.find(key);
  return it == object.end() ? nullptr : &*it;
}

double get_number(const json& object, const std::string& path, const std::string& key,
                  double fallback) {
  const json* value = find(object, key);
  if (value == nullptr) return fallback;
  if (!value->is_number()) {
    throw ConfigError("'" + path + key + "' must be a number");
  }
  return value->get<double>();
}

std::uint64_t get_count(const json& object, const std::string& path, const std::string& key,
                        std::uint64_t fallback) {
  const json* value = find(object, key);
  if (value == nullptr) return fallback;
  if (!value->is_number_unsigned()) {
    throw ConfigError("'" + path + key + "' must be a non-negative integer");
  }
  return value->get<std::uint64_t>();
}

bool get_bool(const json& object, const std::string& path, const std::string& key,
              bool fallback) {
  const json* value = find(object, key);
  if (value == nullptr) return fallback;
  if (!value->is_boolean()) {
    throw ConfigError("'" + path + key + "' must be a boolean");
  }
  return value->get<bool>();
}

std::string get_string(const json& object, const std::string& path, const std::string& key,
                       const std::string& fallback) {
  const json* value = find(object, key);
  if (value == nullptr) return fallback;
  if (!value->is_string()) {
    throw ConfigError("'" + path + key + "' must be a string");
  }
  return value->get<std::string>();
}

void check_interval(double value, double lo, double hi, bool lo_open, bool hi_open,
                    const std::string& path, const std::string& interval) {
  const bool above = lo_open ? value > lo : value >= lo;
  const bool below = hi_open ? value < hi : value <= hi;
  if (!(above && below)) {
    throw ConfigError("'" + path + "' must lie in " + interval + ", got " +
                      serialize::format_double(value));
  }
}

void parse_agent_common(const json& section, const std::string& path,
                        belief::BeliefParams& priors, double& gamma,
                        belief::MemoryCounts& initial) {
  priors.prior_success = get_number(section, path, "prior_success", priors.prior_success);
  priors.prior_failure = get_number(section, path, "prior_failure", priors.prior_failure);
  if (!(priors.prior_success > 0.0)) {
    throw ConfigError("'" + path + "prior_success' must be > 0, got " +
                      serialize::format_double(priors.prior_success));
  }
  if (!(priors.prior_failure > 0.0)) {
    throw ConfigError("'" + path + "prior_failure' must be > 0, got " +
                      serialize::format_double(priors.prior_failure));
  }
  gamma = get_number(section, path, "gamma", gamma);
  check_interval(gamma, 0.0, 1.0, false, false, path + "gamma", "[0, 1]");
  initial.successes = get_count(section, path, "initial_successes", initial.successes);
  initial.failures = get_count(section, path, "initial_failures", initial.failures);
}

agents::InvestorPolicy parse_policy(const json& section, const std::string& path) {
  reject_unknown_keys(section, path, {"mode", "mu", "mu1", "mu2", "mu3"});
  const std::string mode = get_string(section, path, "mode", "all_or_nothing");
  if (mode == "all_or_nothing") {
    if (find(section, "mu1") || find(section, "mu2") || find(section, "mu3")) {
      throw ConfigError("'" + path + "' with mode all_or_nothing takes 'mu', not tier keys");
    }
    const double mu = get_number(section, path, "mu", 0.7);
    check_interval(mu, 0.5, 1.0, true, false, path + "mu", "(0.5; 1]");
    return agents::AllOrNothingPolicy(mu);
  }
  if (mode == "tiered") {
    if (find(section, "mu")) {
      throw ConfigError("'" + path + "' with mode tiered takes 'mu1'..'mu3', not 'mu'");
    }
    const double mu1 = get_number(section, path, "mu1", 0.6);
    const double mu2 = get_number(section, path, "mu2", 0.7);
    const double mu3 = get_number(section, path, "mu3", 0.85);
    check_interval(mu1, 0.5, 0.65, true, false, path + "mu1", "(0.5; 0.65]");
    check_interval(mu2, 0.65, 0.8, true, false, path + "mu2", "(0.65; 0.8]");
    check_interval(mu3, 0.8, 1.0, true, false, path + "mu3", "(0.8; 1]");
    return agents::TieredPolicy(mu1, mu2, mu3);
  }
  throw ConfigError("'" + path + "mode' must be all_or_nothing or tiered, got '" + mode + "'");
}

agents::CostDistribution parse_cost(const json& section, const std::string& path) {
  reject_unknown_keys(section, path, {"distribution", "value", "alpha", "beta"});
  const std::string kind = get_string(section, path, "distribution", "uniform");
  if (kind == "uniform") {
    if (find(section, "value") || find(section, "alpha") || find(section, "beta")) {
      throw ConfigError("'" + path + "' uniform distribution takes no parameters");
    }
    return agents::UniformCost{};
  }
  if (kind == "point_mass") {
    const double value = get_number(section, path, "value", 0.5);
    check_interval(value, 0.0, 1.0, false, false, path + "value", "[0, 1]");
    return agents::PointMassCost{value};
  }
  if (kind == "beta") {
    const double alpha = get_number(section, path, "alpha", 1.0);
    const double beta = get_number(section, path, "beta", 1.0);
    if (!(alpha > 0.0) || !(beta > 0.0)) {
      throw ConfigError("'" + path + "' beta shapes must be > 0");
    }
    return agents::BetaCost{alpha, beta};
  }
  throw ConfigError("'" + path + "distribution' must be uniform, point_mass or beta, got '" +
                    kind + "'");
}

}  // namespace

void RunConfig::validate() const {
  episode.validate();
  if (replications < 1) {
    throw ConfigError("'simulation.replications' must be >= 1");
  }
}

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }
  reject_unknown_keys(root, "", {"investor", "manager", "success_model", "simulation"});

  RunConfig config;
  engine::EpisodeConfig& ep = config.episode;

  if (const json* investor = find(root, "investor")) {
    const std::string path = "investor.";
    reject_unknown_keys(*investor, path,
                        {"prior_success", "prior_failure", "gamma", "policy",
                         "initial_successes", "initial_failures"});
    parse_agent_common(*investor, path, ep.investor_belief, ep.investor_gamma,
                       ep.investor_initial_counts);
    if (const json* policy = find(*investor, "policy")) {
      ep.investor_policy = parse_policy(*policy, path + "policy.");
    }
  }

  if (const json* manager = find(root, "manager")) {
    const std::string path = "manager.";
    reject_unknown_keys(*manager, path,
                        {"prior_success", "prior_failure", "gamma", "cost",
                         "initial_successes", "initial_failures"});
    parse_agent_common(*manager, path, ep.manager_belief, ep.manager_gamma,
                       ep.manager_initial_counts);
    if (const json* cost = find(*manager, "cost")) {
      ep.manager_cost = parse_cost(*cost, path + "cost.");
    }
  }

  if (const json* success = find(root, "success_model")) {
    const std::string path = "success_model.";
    reject_unknown_keys(*success, path,
                        {"psi_base", "embezzle_c0", "embezzle_c1", "embezzle_c2",
                         "confidence_enhanced", "confidence_gain", "investor_loss_rule"});
    ep.success.psi_base = get_number(*success, path, "psi_base", ep.success.psi_base);
    check_interval(ep.success.psi_base, 0.0, 1.0, false, false, path + "psi_base", "[0, 1]");
    ep.success.embezzle.c0 = get_number(*success, path, "embezzle_c0", ep.success.embezzle.c0);
    ep.success.embezzle.c1 = get_number(*success, path, "embezzle_c1", ep.success.embezzle.c1);
    ep.success.embezzle.c2 = get_number(*success, path, "embezzle_c2", ep.success.embezzle.c2);
    ep.success.confidence_enhanced =
        get_bool(*success, path, "confidence_enhanced", ep.success.confidence_enhanced);
    ep.success.confidence_gain =
        get_number(*success, path, "confidence_gain", ep.success.confidence_gain);
    if (!(ep.success.confidence_gain >= 0.0)) {
      throw ConfigError("'" + path + "confidence_gain' must be >= 0");
    }
    const std::string rule =
        get_string(*success, path, "investor_loss_rule", "always_failure");
    if (rule == "always_failure") {
      ep.success.loss_rule = engine::InvestorLossRule::AlwaysFailure;
    } else if (rule == "failure_if_embezzle_succeeds") {
      ep.success.loss_rule = engine::InvestorLossRule::FailureIfEmbezzleSucceeds;
    } else {
      throw ConfigError("'" + path +
                        "investor_loss_rule' must be always_failure or "
                        "failure_if_embezzle_succeeds, got '" +
                        rule + "'");
    }
  }

  if (const json* simulation = find(root, "simulation")) {
    const std::string path = "simulation.";
    reject_unknown_keys(*simulation, path, {"rounds", "replications", "seed"});
    ep.rounds = get_count(*simulation, path, "rounds", ep.rounds);
    config.replications = get_count(*simulation, path, "replications", config.replications);
    config.seed = get_count(*simulation, path, "seed", config.seed);
  }
  if (ep.rounds < 1) {
    throw ConfigError("'simulation.rounds' must be >= 1");
  }

  config.validate();
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed reading config file '" + path + "'");
  }
  try {
    return parse_config(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string serialize_config(const RunConfig& config) {
  const engine::EpisodeConfig& ep = config.episode;
  nlohmann::ordered_json root;

  nlohmann::ordered_json investor;
  investor["prior_success"] = ep.investor_belief.prior_success;
  investor["prior_failure"] = ep.investor_belief.prior_failure;
  investor["gamma"] = ep.investor_gamma;
  nlohmann::ordered_json policy;
  if (const auto* all = std::get_if<agents::AllOrNothingPolicy>(&ep.investor_policy)) {
    policy["mode"] = "all_or_nothing";
    policy["mu"] = all->mu();
  } else {
    const auto& tiered = std::get<agents::TieredPolicy>(ep.investor_policy);
    policy["mode"] = "tiered";
    policy["mu1"] = tiered.mu1();
    policy["mu2"] = tiered.mu2();
    policy["mu3"] = tiered.mu3();
  }
  investor["policy"] = policy;
  investor["initial_successes"] = ep.investor_initial_counts.successes;
  investor["initial_failures"] = ep.investor_initial_counts.failures;
  root["investor"] = investor;

  nlohmann::ordered_json manager;
  manager["prior_success"] = ep.manager_belief.prior_success;
  manager["prior_failure"] = ep.manager_belief.prior_failure;
  manager["gamma"] = ep.manager_gamma;
  nlohmann::ordered_json cost;
  if (std::holds_alternative<agents::UniformCost>(ep.manager_cost)) {
    cost["distribution"] = "uniform";
  } else if (const auto* point = std::get_if<agents::PointMassCost>(&ep.manager_cost)) {
    cost["distribution"] = "point_mass";
    cost["value"] = point->value;
  } else {
    const auto& beta = std::get<agents::BetaCost>(ep.manager_cost);
    cost["distribution"] = "beta";
    cost["alpha"] = beta.alpha;
    cost["beta"] = beta.beta;
  }
  manager["cost"] = cost;
  manager["initial_successes"] = ep.manager_initial_counts.successes;
  manager["initial_failures"] = ep.manager_initial_counts.failures;
  root["manager"] = manager;

  nlohmann::ordered_json success;
  success["psi_base"] = ep.success.psi_base;
  success["embezzle_c0"] = ep.success.embezzle.c0;
  success["embezzle_c1"] = ep.success.embezzle.c1;
  success["embezzle_c2"] = ep.success.embezzle.c2;
  success["confidence_enhanced"] = ep.success.confidence_enhanced;
  success["confidence_gain"] = ep.success.confidence_gain;
  success["investor_loss_rule"] = ep.success.loss_rule == engine::InvestorLossRule::AlwaysFailure
                                      ? "always_failure"
                                      : "failure_if_embezzle_succeeds";
  root["success_model"] = success;

  nlohmann::ordered_json simulation;
  simulation["rounds"] = ep.rounds;
  simulation["replications"] = config.replications;
  simulation["seed"] = config.seed;
  root["simulation"] = simulation;

  return root.dump(2) + "\n";
}

}  // namespace riskgame::config
