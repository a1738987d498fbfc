#include "riskgame/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace riskgame::serialize {

namespace {

// JSON value for an optional numeric/enum field.
template <typename T, typename Format>
std::string json_optional(const std::optional<T>& value, Format format) {
  return value.has_value() ? format(*value) : std::string("null");
}

std::string json_string(const std::string& s) { return "\"" + s + "\""; }

std::string bool_name(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string outcome_name(perception::Outcome outcome) {
  return outcome == perception::Outcome::Success ? "success" : "failure";
}

std::string impulse_name(perception::Impulse impulse) {
  return impulse == perception::Impulse::Normal ? "normal" : "misattributed";
}

std::string fraction_name(agents::InvestedFraction fraction) {
  switch (fraction) {
    case agents::InvestedFraction::None: return "0";
    case agents::InvestedFraction::Third: return "1/3";
    case agents::InvestedFraction::TwoThirds: return "2/3";
    case agents::InvestedFraction::All: return "1";
  }
  return "0";
}

void write_trajectory_jsonl(std::ostream& out, const engine::Trajectory& trajectory) {
  char fingerprint[32];
  std::snprintf(fingerprint, sizeof(fingerprint), "%016llx",
                static_cast<unsigned long long>(trajectory.config_fingerprint));
  out << "{\"config_fingerprint\":\"" << fingerprint << "\",\"seed\":" << trajectory.seed
      << ",\"rounds\":" << trajectory.rounds.size() << "}\n";

  const auto fmt = [](double v) { return format_double(v); };
  for (const engine::RoundRecord& r : trajectory.rounds) {
    out << "{\"round\":" << r.round_index
        << ",\"p0\":" << format_double(r.p0)
        << ",\"fraction\":" << json_string(fraction_name(r.fraction))
        << ",\"p1\":" << json_optional(r.p1, fmt)
        << ",\"h\":" << json_optional(r.cost, fmt)
        << ",\"embezzled\":" << json_optional(r.embezzled, bool_name)
        << ",\"investor_outcome\":"
        << json_optional(r.investor_outcome, [](auto o) { return json_string(outcome_name(o)); })
        << ",\"manager_outcome\":"
        << json_optional(r.manager_outcome, [](auto o) { return json_string(outcome_name(o)); })
        << ",\"investor_impulse\":"
        << json_optional(r.investor_impulse, [](auto i) { return json_string(impulse_name(i)); })
        << ",\"manager_impulse\":"
        << json_optional(r.manager_impulse, [](auto i) { return json_string(impulse_name(i)); })
        << ",\"investor_counts\":[" << r.investor_counts_after.successes << ","
        << r.investor_counts_after.failures << "]"
        << ",\"manager_counts\":[" << r.manager_counts_after.successes << ","
        << r.manager_counts_after.failures << "]}\n";
  }
}

void write_trajectory_csv(std::ostream& out, const engine::Trajectory& trajectory) {
  out << "round,p0,fraction,p1,h,embezzled,investor_outcome,manager_outcome,"
         "investor_impulse,manager_impulse,investor_s,investor_f,manager_s,manager_f\n";
  const auto fmt = [](double v) { return format_double(v); };
  for (const engine::RoundRecord& r : trajectory.rounds) {
    out << r.round_index << ',' << format_double(r.p0) << ',' << fraction_name(r.fraction)
        << ',' << json_optional(r.p1, fmt) << ',' << json_optional(r.cost, fmt) << ','
        << json_optional(r.embezzled, bool_name) << ','
        << json_optional(r.investor_outcome, [](auto o) { return outcome_name(o); }) << ','
        << json_optional(r.manager_outcome, [](auto o) { return outcome_name(o); }) << ','
        << json_optional(r.investor_impulse, [](auto i) { return impulse_name(i); }) << ','
        << json_optional(r.manager_impulse, [](auto i) { return impulse_name(i); }) << ','
        << r.investor_counts_after.successes << ',' << r.investor_counts_after.failures << ','
        << r.manager_counts_after.successes << ',' << r.manager_counts_after.failures << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<montecarlo::SweepRow>& rows) {
  out << "point_index,parameter,value,mean_p0,se_p0,mean_p1,se_p1,invest_rate,"
         "mean_fraction,embezzle_rate,empirical_success_freq,closed_form_confidence\n";
  for (const montecarlo::SweepRow& row : rows) {
    const montecarlo::AggregateStats& s = row.stats;
    out << row.point_index << ',' << montecarlo::parameter_name(row.parameter) << ','
        << format_double(row.value) << ',' << format_double(s.mean_p0) << ','
        << format_double(s.se_p0) << ',' << format_double(s.mean_p1) << ','
        << format_double(s.se_p1) << ',' << format_double(s.invest_rate) << ','
        << format_double(s.mean_fraction) << ',' << format_double(s.embezzle_rate) << ','
        << format_double(s.success_freq) << ',' << format_double(row.closed_form_confidence)
        << '\n';
  }
}

void write_sweep_jsonl(std::ostream& out, const std::vector<montecarlo::SweepRow>& rows) {
  const auto number = [](double v) {
    // NaN has no JSON literal; emit null for absent statistics.
    return std::isnan(v) ? std::string("null") : format_double(v);
  };
  for (const montecarlo::SweepRow& row : rows) {
    const montecarlo::AggregateStats& s = row.stats;
    out << "{\"point_index\":" << row.point_index << ",\"parameter\":\""
        << montecarlo::parameter_name(row.parameter) << "\",\"value\":" << number(row.value)
        << ",\"mean_p0\":" << number(s.mean_p0) << ",\"se_p0\":" << number(s.se_p0)
        << ",\"mean_p1\":" << number(s.mean_p1) << ",\"se_p1\":" << number(s.se_p1)
        << ",\"invest_rate\":" << number(s.invest_rate)
        << ",\"mean_fraction\":" << number(s.mean_fraction)
        << ",\"embezzle_rate\":" << number(s.embezzle_rate)
        << ",\"empirical_success_freq\":" << number(s.success_freq)
        << ",\"closed_form_confidence\":" << number(row.closed_form_confidence) << "}\n";
  }
}

}  // namespace riskgame::serialize
