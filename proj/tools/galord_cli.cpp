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

// Command-line front end. Talks to the library exclusively through the C
// surface in galord.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation
// error, 3 I/O error.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "galord.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string take(galord_buf* buf) {
  std::string text = buf ? galord_buf_data(buf) : "";
  galord_buf_free(buf);
  return text;
}

int finish(galord_status status, const std::string& payload) {
  switch (status) {
    case GALORD_OK:
      std::cout << payload;
      if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
      return kExitOk;
    case GALORD_CHECK_FAILED:
      std::cout << payload;
      return kExitCheckFailed;
    case GALORD_INVALID:
      std::cerr << payload << '\n';
      return kExitUsage;
    default:
      std::cerr << payload << '\n';
      return kExitCheckFailed;
  }
}

std::string render_text(const std::string& record_json) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(record_json);
  std::ostringstream out;
  out << "p=" << j["p"] << " e=" << j["e"] << " t=" << j["t"] << " ("
      << j["closure"].get<std::string>()
      << (j["totally_ramified"].get<bool>() ? ", totally ramified" : "")
      << ")\n";
  out << "ell=" << j["ell"] << " a=" << j["a"] << " a0=" << j["a0"] << "\n";
  out << "cf=[";
  for (std::size_t i = 0; i < j["cf"].size(); ++i)
    out << (i ? ";" : "") << j["cf"][i];
  out << "] length=" << j["cf_length"] << "\n";
  out << "free=" << (j["free"].get<bool>() ? "yes" : "no") << " case="
      << j["case"].get<std::string>() << " reason="
      << j["reason"].get<std::string>() << "\n";
  return out.str();
}

struct TupleFlags {
  std::int64_t p = 0;
  std::int64_t e = 0;
  std::int64_t t = 0;
  std::string closure = "dihedral";
  bool totally_ramified = true;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "odd prime degree")->required();
    cmd->add_option("--e", e, "absolute ramification index of the base")
        ->required();
    cmd->add_option("--t", t, "ramification jump")->required();
    cmd->add_option("--closure", closure, "closure type: dihedral or cyclic")
        ->check(CLI::IsMember({"dihedral", "cyclic"}));
    cmd->add_option("--totally-ramified", totally_ramified,
                    "whether the closure is totally ramified (dihedral only)");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freeness of rings of integers over their associated orders "
               "in degree-p extensions of p-adic fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(galord_version()));

  // verdict
  TupleFlags verdict_flags;
  std::string verdict_format = "json";
  CLI::App* cmd_verdict =
      app.add_subcommand("verdict", "freeness decision for one tuple");
  verdict_flags.attach(cmd_verdict);
  cmd_verdict->add_option("--format", verdict_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // order
  TupleFlags order_flags;
  CLI::App* cmd_order = app.add_subcommand(
      "order", "valuation profile (nu, n, E, scaffold) for one tuple");
  order_flags.attach(cmd_order);

  // cf
  std::int64_t cf_a = 0, cf_p = 0;
  CLI::App* cmd_cf = app.add_subcommand(
      "cf", "continued fraction of a/p with convergents and running minima");
  cmd_cf->add_option("--a", cf_a, "numerator")->required();
  cmd_cf->add_option("--p", cf_p, "odd prime denominator")->required();

  // survey
  std::vector<std::int64_t> survey_plist;
  std::int64_t survey_pmax = 0, survey_emax = 1;
  std::string survey_format = "json";
  std::string survey_out;
  CLI::App* cmd_survey = app.add_subcommand(
      "survey", "sweep all valid totally ramified dihedral tuples");
  cmd_survey->add_option("--p-list", survey_plist, "explicit primes")
      ->delimiter(',');
  cmd_survey->add_option("--p-max", survey_pmax, "sweep primes up to this bound");
  cmd_survey->add_option("--e-max", survey_emax, "sweep e = 1..e-max");
  cmd_survey->add_option("--format", survey_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_survey->add_option("--out", survey_out, "output file (default stdout)");

  // verify
  std::string verify_suite = "all";
  std::int64_t verify_maxp = 0;
  std::uint64_t verify_seed = 20260314;
  std::string verify_matrix;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run an invariant suite");
  cmd_verify->add_option(
      "--suite", verify_suite,
      "cfrac, assocorder, groupring, redmethod, patterns, or all");
  cmd_verify->add_option("--max-p", verify_maxp,
                         "override the default sweep bound");
  cmd_verify->add_option("--seed", verify_seed,
                         "seed for the randomized reduction trials");
  cmd_verify->add_option("--matrix", verify_matrix,
                         "reduce one stacked action matrix from a JSON file "
                         "(suite redmethod)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_verdict->parsed()) {
    galord_buf* buf = nullptr;
    galord_status status = galord_verdict_json(
        verdict_flags.p, verdict_flags.e, verdict_flags.t,
        verdict_flags.closure.c_str(), verdict_flags.totally_ramified ? 1 : 0,
        &buf);
    std::string payload = take(buf);
    if (status == GALORD_OK && verdict_format == "text")
      payload = render_text(payload);
    return finish(status, payload);
  }

  if (cmd_order->parsed()) {
    galord_buf* buf = nullptr;
    galord_status status = galord_order_json(
        order_flags.p, order_flags.e, order_flags.t,
        order_flags.closure.c_str(), order_flags.totally_ramified ? 1 : 0,
        &buf);
    return finish(status, take(buf));
  }

  if (cmd_cf->parsed()) {
    galord_buf* buf = nullptr;
    galord_status status = galord_cf_json(cf_a, cf_p, &buf);
    return finish(status, take(buf));
  }

  if (cmd_survey->parsed()) {
    galord_buf* buf = nullptr;
    galord_status status = galord_survey(
        survey_plist.empty() ? nullptr : survey_plist.data(),
        survey_plist.size(), survey_pmax, survey_emax, survey_format.c_str(),
        &buf);
    std::string payload = take(buf);
    if (status != GALORD_OK) return finish(status, payload);
    if (survey_out.empty()) {
      std::cout << payload;
      return kExitOk;
    }
    std::ofstream file(survey_out, std::ios::binary);
    if (!file || !(file << payload) || !file.flush()) {
      std::cerr << "cannot write " << survey_out << '\n';
      return kExitIo;
    }
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    if (!verify_matrix.empty()) {
      if (verify_suite != "redmethod") {
        std::cerr << "--matrix applies to --suite redmethod\n";
        return kExitUsage;
      }
      std::ifstream file(verify_matrix, std::ios::binary);
      if (!file) {
        std::cerr << "cannot read " << verify_matrix << '\n';
        return kExitIo;
      }
      std::stringstream content;
      content << file.rdbuf();
      galord_buf* buf = nullptr;
      galord_status status = galord_reduce_json(content.str().c_str(), &buf);
      return finish(status, take(buf));
    }
    galord_buf* buf = nullptr;
    galord_status status =
        galord_verify(verify_suite.c_str(), verify_maxp, verify_seed, &buf);
    return finish(status, take(buf));
  }

  return kExitUsage;
}
