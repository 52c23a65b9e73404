/*
   Copyright 2026 The galord authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef GALORD_RECORDS_HPP
#define GALORD_RECORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galord/assocorder.hpp"
#include "galord/ramification.hpp"
#include "galord/verdict.hpp"

namespace galord {

/// One row of tool output: the tuple, the derived quantities, the verdict,
/// and (when a != 0) the valuation profile. JSON keys follow the field
/// order below; the CSV projection stops after reason and appends the two
/// scaffold columns, rendering the partial-quotient list semicolon-joined.
struct SurveyRecord {
  std::int64_t p = 0;
  std::int64_t e = 0;
  std::int64_t t = 0;
  Closure closure = Closure::Dihedral;
  bool totally_ramified = true;
  std::int64_t ell = 0;
  std::int64_t a = 0;
  std::int64_t a0 = 0;
  std::vector<std::int64_t> cf;
  std::int64_t cf_length = 0;
  std::string case_tag;
  bool free = false;
  std::string reason;
  std::optional<std::vector<std::int64_t>> nu;
  std::optional<std::vector<std::int64_t>> n;
  std::optional<std::vector<std::int64_t>> e_set;
  std::optional<std::int64_t> scaffold_c;
  std::optional<std::int64_t> scaffold_l;
};

/// Builds the record for one validated tuple (any closure).
SurveyRecord record_for(const RamificationData& rd);

std::string record_to_json(const SurveyRecord& record);

extern const char* const kSurveyCsvHeader;
std::string record_to_csv_row(const SurveyRecord& record);

struct SurveyParams {
  std::vector<std::int64_t> p_list;  // takes precedence when nonempty
  std::int64_t p_max = 0;
  std::int64_t e_max = 1;
};

/// All valid totally ramified dihedral tuples in (p, e, t)-ascending order:
/// odd jumps up to 2pe/(p-1), jumps divisible by p admitted only at the
/// bound itself.
std::vector<SurveyRecord> run_survey(const SurveyParams& params);

/// One JSON object per line, in enumeration order.
std::string survey_to_ndjson(const std::vector<SurveyRecord>& records);
/// Fixed header plus one row per record.
std::string survey_to_csv(const std::vector<SurveyRecord>& records);

/// Payload of the expansion query: partial quotients, convergents and the
/// running-minima set of a/p.
std::string cf_to_json(std::int64_t a, std::int64_t p);

/// Payload of the profile query; NotApplicable when a = 0.
std::string order_to_json(const RamificationData& rd);

/// {"error": <code>, "message": <text>} for the CLI/C-API error channel.
std::string error_to_json(const std::string& code, const std::string& message);

}  // namespace galord

#endif
