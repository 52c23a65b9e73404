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
#include "galord.h"

#include <json.hpp>
#include <new>
#include <string>

#include "galord/cfrac.hpp"
#include "galord/errors.hpp"
#include "galord/records.hpp"
#include "galord/redmethod.hpp"
#include "galord/verify.hpp"

#if defined(__GNUC__)
#define GALORD_EXPORT __attribute__((visibility("default")))
#else
#define GALORD_EXPORT
#endif

struct galord_buf {
  std::string text;
};

namespace {

using galord::errc;
using ordered_json = nlohmann::ordered_json;

galord_buf* wrap(std::string text) {
  return new (std::nothrow) galord_buf{std::move(text)};
}

void deliver(galord_buf** out, std::string text) {
  if (out) *out = wrap(std::move(text));
}

galord_status status_for(errc code) {
  return code == errc::internal ? GALORD_INTERNAL : GALORD_INVALID;
}

// Runs the body, routing exceptions into the error buffer.
template <typename Fn>
galord_status guarded(galord_buf** out, Fn&& body) {
  try {
    return body();
  } catch (const galord::Error& err) {
    deliver(out, galord::error_to_json(galord::errc_name(err.code()), err.what()));
    return status_for(err.code());
  } catch (const std::exception& err) {
    deliver(out, galord::error_to_json("Internal", err.what()));
    return GALORD_INTERNAL;
  }
}

galord::RamificationData parse_tuple(int64_t p, int64_t e, int64_t t,
                                     const char* closure,
                                     int totally_ramified) {
  std::string name = closure ? closure : "";
  if (name == "dihedral")
    return galord::validate(p, e, t, galord::Closure::Dihedral,
                            totally_ramified != 0);
  if (name == "cyclic")
    return galord::validate(p, e, t, galord::Closure::Cyclic, true);
  galord::raise(errc::parameter,
                "closure must be 'dihedral' or 'cyclic', got '" + name + "'");
}

galord::Rat parse_rat(const std::string& text) {
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return galord::Rat(galord::BigInt(text));
    galord::BigInt num(text.substr(0, slash));
    galord::BigInt den(text.substr(slash + 1));
    if (den == 0) galord::raise(errc::parameter, "zero denominator");
    galord::Rat value(num, den);
    value.canonicalize();
    return value;
  } catch (const std::invalid_argument&) {
    galord::raise(errc::parameter, "malformed rational '" + text + "'");
  }
}

std::string rat_string(const galord::Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace

extern "C" {

GALORD_EXPORT const char* galord_version(void) { return "0.1.0"; }

GALORD_EXPORT const char* galord_buf_data(const galord_buf* buf) {
  return buf ? buf->text.c_str() : "";
}

GALORD_EXPORT size_t galord_buf_size(const galord_buf* buf) {
  return buf ? buf->text.size() : 0;
}

GALORD_EXPORT void galord_buf_free(galord_buf* buf) { delete buf; }

GALORD_EXPORT galord_status galord_verdict(int64_t p, int64_t e, int64_t t,
                                           const char* closure,
                                           int totally_ramified, int* out_free,
                                           int64_t* out_cf_length) {
  return guarded(nullptr, [&]() {
    galord::RamificationData rd = parse_tuple(p, e, t, closure, totally_ramified);
    galord::SurveyRecord rec = galord::record_for(rd);
    if (out_free) *out_free = rec.free ? 1 : 0;
    if (out_cf_length) *out_cf_length = rec.cf_length;
    return GALORD_OK;
  });
}

GALORD_EXPORT galord_status galord_verdict_json(int64_t p, int64_t e, int64_t t,
                                                const char* closure,
                                                int totally_ramified,
                                                galord_buf** out) {
  return guarded(out, [&]() {
    galord::RamificationData rd = parse_tuple(p, e, t, closure, totally_ramified);
    deliver(out, galord::record_to_json(galord::record_for(rd)));
    return GALORD_OK;
  });
}

GALORD_EXPORT galord_status galord_order_json(int64_t p, int64_t e, int64_t t,
                                              const char* closure,
                                              int totally_ramified,
                                              galord_buf** out) {
  return guarded(out, [&]() {
    galord::RamificationData rd = parse_tuple(p, e, t, closure, totally_ramified);
    deliver(out, galord::order_to_json(rd));
    return GALORD_OK;
  });
}

GALORD_EXPORT galord_status galord_cf_json(int64_t a, int64_t p,
                                           galord_buf** out) {
  return guarded(out, [&]() {
    deliver(out, galord::cf_to_json(a, p));
    return GALORD_OK;
  });
}

GALORD_EXPORT galord_status galord_survey(const int64_t* p_list, size_t p_count,
                                          int64_t p_max, int64_t e_max,
                                          const char* format,
                                          galord_buf** out) {
  return guarded(out, [&]() {
    galord::SurveyParams params;
    if (p_list)
      params.p_list.assign(p_list, p_list + p_count);
    params.p_max = p_max;
    params.e_max = e_max;
    std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "csv")
      galord::raise(errc::parameter, "format must be 'json' or 'csv'");
    std::vector<galord::SurveyRecord> records = galord::run_survey(params);
    deliver(out, fmt == "json" ? galord::survey_to_ndjson(records)
                               : galord::survey_to_csv(records));
    return GALORD_OK;
  });
}

GALORD_EXPORT galord_status galord_verify(const char* suite, int64_t max_p,
                                          uint64_t seed, galord_buf** out) {
  return guarded(out, [&]() {
    std::optional<int64_t> bound;
    if (max_p > 0) bound = max_p;
    galord::SuiteReport report =
        galord::run_suite(suite ? suite : "all", bound, seed);
    bool pass = report.all_pass();
    deliver(out, report.format());
    return pass ? GALORD_OK : GALORD_CHECK_FAILED;
  });
}

GALORD_EXPORT galord_status galord_reduce_json(const char* matrix_json,
                                               galord_buf** out) {
  return guarded(out, [&]() {
    ordered_json input;
    try {
      input = ordered_json::parse(matrix_json ? matrix_json : "");
    } catch (const nlohmann::json::exception& err) {
      galord::raise(errc::parameter, std::string("bad JSON: ") + err.what());
    }
    if (!input.contains("p") || !input.contains("n") || !input.contains("rows"))
      galord::raise(errc::parameter, "need keys p, n, rows");
    const int64_t p = input["p"].get<int64_t>();
    const int64_t n = input["n"].get<int64_t>();
    galord::RatMatrix rows;
    for (const auto& row : input["rows"]) {
      galord::RatVector parsed;
      for (const auto& cell : row) parsed.push_back(parse_rat(cell.get<std::string>()));
      rows.push_back(std::move(parsed));
    }
    galord::ReducedPair rp =
        galord::reduce(galord::make_action_matrix(p, n, std::move(rows)));

    ordered_json result;
    result["p"] = p;
    result["n"] = n;
    ordered_json d = ordered_json::array();
    for (const auto& row : rp.D) {
      ordered_json r = ordered_json::array();
      for (const auto& x : row) r.push_back(rat_string(x));
      d.push_back(r);
    }
    result["D"] = d;
    ordered_json basis = ordered_json::array();
    for (const auto& column : galord::basis_from_reduced(rp)) {
      ordered_json c = ordered_json::array();
      for (const auto& x : column) c.push_back(rat_string(x));
      basis.push_back(c);
    }
    result["basis"] = basis;
    result["certificate_ok"] = galord::verify_certificate(rp);
    deliver(out, result.dump());
    return GALORD_OK;
  });
}

}  // extern "C"
