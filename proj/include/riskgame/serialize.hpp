#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "riskgame/engine.hpp"
#include "riskgame/montecarlo.hpp"

namespace riskgame::serialize {

// All numeric output goes through this: 12 significant digits, so identical
// runs produce byte-identical files.
std::string format_double(double value);

std::string outcome_name(perception::Outcome outcome);
std::string impulse_name(perception::Impulse impulse);
// "0", "1/3", "2/3" or "1" - the four legal fractions, kept exact.
std::string fraction_name(agents::InvestedFraction fraction);

// Trajectory as line-delimited JSON: a header object with the config
// fingerprint, seed and round count, then one object per round with fields
// in record order and explicit nulls for absent fields.
void write_trajectory_jsonl(std::ostream& out, const engine::Trajectory& trajectory);

// Same data as CSV: one header row, one row per round, "null" for absent
// fields.
void write_trajectory_csv(std::ostream& out, const engine::Trajectory& trajectory);

// Sweep table columns, fixed order:
//   point_index,parameter,value,mean_p0,se_p0,mean_p1,se_p1,invest_rate,
//   mean_fraction,embezzle_rate,empirical_success_freq,closed_form_confidence
void write_sweep_csv(std::ostream& out, const std::vector<montecarlo::SweepRow>& rows);

// The same table as line-delimited JSON, one object per row.
void write_sweep_jsonl(std::ostream& out, const std::vector<montecarlo::SweepRow>& rows);

}  // namespace riskgame::serialize
