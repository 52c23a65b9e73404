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
#include "galord/records.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "galord/cfrac.hpp"
#include "galord/errors.hpp"
#include "galord/numutil.hpp"

namespace galord {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* closure_name(Closure c) {
  return c == Closure::Dihedral ? "dihedral" : "cyclic";
}

Verdict verdict_for(const RamificationData& rd) {
  if (rd.closure == Closure::Cyclic) return cyclic_verdict(rd.p, rd.e, rd.t);
  if (rd.totally_ramified) return dihedral_verdict(rd);
  return nontot_verdict(rd.p, rd.e, rd.t);
}

}  // namespace

SurveyRecord record_for(const RamificationData& rd) {
  SurveyRecord rec;
  rec.p = rd.p;
  rec.e = rd.e;
  rec.t = rd.t;
  rec.closure = rd.closure;
  rec.totally_ramified = rd.totally_ramified;
  rec.ell = rd.ell;
  rec.a = rd.a;
  rec.a0 = rd.a0;

  ContinuedFraction cf = cf_expand(rd.a, rd.p);
  rec.cf = cf.partials;
  rec.cf_length = cf.length();

  Verdict v = verdict_for(rd);
  rec.case_tag = verdict_case_name(v.vcase);
  rec.free = v.free;
  rec.reason = v.reason;

  if (rd.a != 0) {
    OrderProfile profile = make_order_profile(rd);
    rec.nu = profile.nu;
    rec.n = profile.n;
    rec.e_set = profile.e_set.members;
    if (rd.dihedral_totally_ramified()) {
      rec.scaffold_c = profile.scaffold_c;
      rec.scaffold_l = profile.scaffold_l;
    }
  }
  return rec;
}

std::string record_to_json(const SurveyRecord& rec) {
  ordered_json j;
  j["p"] = rec.p;
  j["e"] = rec.e;
  j["t"] = rec.t;
  j["closure"] = closure_name(rec.closure);
  j["totally_ramified"] = rec.totally_ramified;
  j["ell"] = rec.ell;
  j["a"] = rec.a;
  j["a0"] = rec.a0;
  j["cf"] = rec.cf;
  j["cf_length"] = rec.cf_length;
  j["case"] = rec.case_tag;
  j["free"] = rec.free;
  j["reason"] = rec.reason;
  if (rec.nu) j["nu"] = *rec.nu;
  if (rec.n) j["n"] = *rec.n;
  if (rec.e_set) j["E"] = *rec.e_set;
  if (rec.scaffold_c) j["scaffold_c"] = *rec.scaffold_c;
  if (rec.scaffold_l) j["scaffold_l"] = *rec.scaffold_l;
  return j.dump();
}

const char* const kSurveyCsvHeader =
    "p,e,t,closure,totally_ramified,ell,a,a0,cf,cf_length,case,free,reason,"
    "scaffold_c,scaffold_l";

std::string record_to_csv_row(const SurveyRecord& rec) {
  std::ostringstream out;
  out << rec.p << ',' << rec.e << ',' << rec.t << ','
      << closure_name(rec.closure) << ','
      << (rec.totally_ramified ? "true" : "false") << ',' << rec.ell << ','
      << rec.a << ',' << rec.a0 << ',';
  for (std::size_t i = 0; i < rec.cf.size(); ++i)
    out << (i ? ";" : "") << rec.cf[i];
  out << ',' << rec.cf_length << ',' << rec.case_tag << ','
      << (rec.free ? "true" : "false") << ',' << rec.reason << ',';
  if (rec.scaffold_c) out << *rec.scaffold_c;
  out << ',';
  if (rec.scaffold_l) out << *rec.scaffold_l;
  return out.str();
}

std::vector<SurveyRecord> run_survey(const SurveyParams& params) {
  std::vector<std::int64_t> primes;
  if (!params.p_list.empty()) {
    primes = params.p_list;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (std::int64_t p : primes)
      if (!is_odd_prime(p))
        raise(errc::parameter,
              "p-list entry " + std::to_string(p) + " is not an odd prime");
  } else {
    primes = odd_primes_up_to(params.p_max);
  }
  if (params.e_max < 1) raise(errc::parameter, "e-max must be >= 1");

  std::vector<SurveyRecord> records;
  for (std::int64_t p : primes)
    for (std::int64_t e = 1; e <= params.e_max; ++e)
      for (std::int64_t t = 1; t * (p - 1) <= 2 * p * e; t += 2) {
        if (t % p == 0 && t * (p - 1) != 2 * p * e) continue;
        records.push_back(
            record_for(validate(p, e, t, Closure::Dihedral, true)));
      }
  return records;
}

std::string survey_to_ndjson(const std::vector<SurveyRecord>& records) {
  std::string out;
  for (const SurveyRecord& rec : records) {
    out += record_to_json(rec);
    out += '\n';
  }
  return out;
}

std::string survey_to_csv(const std::vector<SurveyRecord>& records) {
  std::string out = kSurveyCsvHeader;
  out += '\n';
  for (const SurveyRecord& rec : records) {
    out += record_to_csv_row(rec);
    out += '\n';
  }
  return out;
}

std::string cf_to_json(std::int64_t a, std::int64_t p) {
  ContinuedFraction cf = cf_expand(a, p);
  ordered_json j;
  j["a"] = a;
  j["p"] = p;
  j["partials"] = cf.partials;
  j["length"] = cf.length();
  ordered_json convs = ordered_json::array();
  for (const auto& [num, den] : cf.convergents)
    convs.push_back(ordered_json::array({num, den}));
  j["convergents"] = convs;
  if (a != 0) j["E"] = e_set_parametrized(a, p).members;
  return j.dump();
}

std::string order_to_json(const RamificationData& rd) {
  OrderProfile profile = make_order_profile(rd);
  ordered_json j;
  j["p"] = rd.p;
  j["e"] = rd.e;
  j["t"] = rd.t;
  j["closure"] = closure_name(rd.closure);
  j["totally_ramified"] = rd.totally_ramified;
  j["ell"] = rd.ell;
  j["a"] = rd.a;
  j["a0"] = rd.a0;
  j["nu"] = profile.nu;
  j["n"] = profile.n;
  j["E"] = profile.e_set.members;
  if (rd.dihedral_totally_ramified()) {
    j["scaffold_c"] = profile.scaffold_c;
    j["scaffold_l"] = profile.scaffold_l;
  }
  return j.dump();
}

std::string error_to_json(const std::string& code, const std::string& message) {
  ordered_json j;
  j["error"] = code;
  j["message"] = message;
  return j.dump();
}

}  // namespace galord
