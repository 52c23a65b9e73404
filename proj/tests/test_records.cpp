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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "galord/errors.hpp"
#include "galord/records.hpp"

using namespace galord;
using nlohmann::ordered_json;

TEST_CASE("record for the reference tuple") {
  SurveyRecord rec = record_for(validate(13, 2, 3, Closure::Dihedral, true));
  CHECK(rec.free == false);
  CHECK(rec.cf_length == 5);
  CHECK(rec.case_tag == "cf_length");
  REQUIRE(rec.nu.has_value());
  CHECK(rec.nu->size() == 13);
  CHECK(rec.scaffold_c.value() == 8);
  CHECK(rec.scaffold_l.value() == 0);

  ordered_json j = ordered_json::parse(record_to_json(rec));
  CHECK(j["p"] == 13);
  CHECK(j["free"] == false);
  CHECK(j["E"] == ordered_json::array({1, 2, 5}));

  // Canonical key order, stable under re-serialization.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{
                    "p", "e", "t", "closure", "totally_ramified", "ell", "a",
                    "a0", "cf", "cf_length", "case", "free", "reason", "nu",
                    "n", "E", "scaffold_c", "scaffold_l"});
  CHECK(ordered_json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("maximal record omits the profile") {
  SurveyRecord rec = record_for(validate(5, 2, 5, Closure::Dihedral, true));
  CHECK(rec.free);
  CHECK_FALSE(rec.nu.has_value());
  ordered_json j = ordered_json::parse(record_to_json(rec));
  CHECK_FALSE(j.contains("nu"));
  CHECK_FALSE(j.contains("scaffold_c"));
  CHECK(j["case"] == "maximal_a0");
}

TEST_CASE("csv projection") {
  std::string header(kSurveyCsvHeader);
  CHECK(header ==
        "p,e,t,closure,totally_ramified,ell,a,a0,cf,cf_length,case,free,"
        "reason,scaffold_c,scaffold_l");

  SurveyRecord rec = record_for(validate(13, 2, 3, Closure::Dihedral, true));
  CHECK(record_to_csv_row(rec) ==
        "13,2,3,dihedral,true,8,8,0,0;1;1;1;1;2,5,cf_length,false,"
        "cf_length_5_gt_4,8,0");

  SurveyRecord maximal = record_for(validate(5, 2, 5, Closure::Dihedral, true));
  CHECK(record_to_csv_row(maximal) ==
        "5,2,5,dihedral,true,5,0,1,0,0,maximal_a0,true,a_zero_maximal_order,,");
}

TEST_CASE("survey enumeration") {
  SurveyParams params;
  params.p_max = 7;
  params.e_max = 1;
  std::vector<SurveyRecord> rows = run_survey(params);
  REQUIRE_FALSE(rows.empty());
  for (const SurveyRecord& rec : rows) {
    CHECK(rec.e == 1);
    CHECK(rec.free);  // absolutely unramified tuples are always free
  }

  // p = 3, e = 1 admits t = 1 and the maximal t = 3; p in {5,7} only t = 1.
  CHECK(rows.size() == 4);

  SurveyParams listed;
  listed.p_list = {13};
  listed.e_max = 2;
  std::vector<SurveyRecord> rows13 = run_survey(listed);
  bool saw_reference = false;
  for (const SurveyRecord& rec : rows13)
    if (rec.t == 3 && rec.e == 2 && !rec.free) saw_reference = true;
  CHECK(saw_reference);

  // Deterministic ordering: (p, e, t) ascending.
  for (std::size_t i = 1; i < rows13.size(); ++i) {
    auto key = [](const SurveyRecord& r) {
      return std::tuple(r.p, r.e, r.t);
    };
    CHECK(key(rows13[i - 1]) < key(rows13[i]));
  }

  SurveyParams empty;
  empty.p_max = 2;
  CHECK(run_survey(empty).empty());
  CHECK(survey_to_ndjson(run_survey(empty)).empty());

  SurveyParams bad;
  bad.p_list = {9};
  CHECK_THROWS_AS(run_survey(bad), Error);
}

TEST_CASE("ndjson and csv shapes") {
  SurveyParams params;
  params.p_max = 5;
  params.e_max = 1;
  std::vector<SurveyRecord> rows = run_survey(params);

  std::string nd = survey_to_ndjson(rows);
  std::istringstream lines(nd);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    ordered_json row = ordered_json::parse(line);
    CHECK(row.is_object());
    ++count;
  }
  CHECK(count == rows.size());

  std::string csv = survey_to_csv(rows);
  CHECK(csv.rfind(kSurveyCsvHeader, 0) == 0);
}

TEST_CASE("query payloads") {
  ordered_json cf = ordered_json::parse(cf_to_json(8, 13));
  CHECK(cf["partials"] == ordered_json::array({0, 1, 1, 1, 1, 2}));
  CHECK(cf["length"] == 5);
  CHECK(cf["E"] == ordered_json::array({1, 2, 5}));

  ordered_json ord = ordered_json::parse(
      order_to_json(validate(13, 2, 3, Closure::Dihedral, true)));
  CHECK(ord["nu"].size() == 13);
  CHECK(ord["scaffold_c"] == 8);

  CHECK_THROWS_AS(order_to_json(validate(5, 2, 5, Closure::Dihedral, true)),
                  Error);

  ordered_json err =
      ordered_json::parse(error_to_json("OutOfRange", "t exceeds the bound"));
  CHECK(err["error"] == "OutOfRange");
}
