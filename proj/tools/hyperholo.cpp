/*
 * Copyright (C) 2026 The hyperholo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperholo/hyperholo.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Owned {
  char* s = nullptr;
  ~Owned() { hh_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

std::vector<double> numbers(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "not a number: '" + item + "'");
    }
  }
  return out;
}

nlohmann::json quaternion_arg(const std::string& text, const std::string& flag) {
  const auto v = numbers(text, flag);
  if (v.size() == 1) return v[0];
  if (v.size() != 4) throw CLI::ValidationError(flag, "expected 1 or 4 numbers");
  return v;
}

// JSON, or ball | box | ball:R | box:LO,HI.
nlohmann::json domain_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{') return nlohmann::json::parse(text);
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "ball") {
    const double r = rest.empty() ? 1.0 : numbers(rest, "--domain").at(0);
    return {{"type", "ball"}, {"center", {0, 0, 0, 0}}, {"radius", r}};
  }
  if (kind == "box") {
    double lo = 0.0, hi = 1.0;
    if (!rest.empty()) {
      const auto v = numbers(rest, "--domain");
      if (v.size() != 2) throw CLI::ValidationError("--domain", "box:LO,HI");
      lo = v[0];
      hi = v[1];
    }
    return {{"type", "box"}, {"lo", {lo, lo, lo, lo}}, {"hi", {hi, hi, hi, hi}}};
  }
  throw CLI::ValidationError("--domain", "expected ball, box, ball:R, box:LO,HI or JSON");
}

// JSON, or polar,azimuthal,periodic,radial,box.
nlohmann::json resolution_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{') return nlohmann::json::parse(text);
  const auto v = numbers(text, "--resolution");
  if (v.size() != 5) {
    throw CLI::ValidationError("--resolution", "expected 5 integers or JSON");
  }
  return {{"sphere", {v[0], v[1], v[2]}}, {"radial", v[3]}, {"box", v[4]}};
}

// a,b,c,d as reals, 16 numbers as four quaternions, or JSON.
nlohmann::json map_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{') return nlohmann::json::parse(text);
  const auto v = numbers(text, "--map");
  if (v.size() == 4) return {{"a", v[0]}, {"b", v[1]}, {"c", v[2]}, {"d", v[3]}};
  if (v.size() == 16) return v;
  throw CLI::ValidationError("--map", "expected 4 or 16 numbers");
}

struct CheckFlags {
  std::string domain, q, r, resolution, map;
  int points = 0;
  int samples = 0;
  long long seed = -1;
  double tolerance = 0.0;
  std::string out;
  bool timings = false;

  void attach(CLI::App* app) {
    app->add_option("--domain", domain, "ball, box, ball:R, box:LO,HI or JSON");
    app->add_option("--q", q, "perturbation q0,q1,q2,q3");
    app->add_option("--r", r, "second perturbation r0,r1,r2,r3");
    app->add_option("--resolution", resolution,
                    "polar,azimuthal,periodic,radial,box or JSON");
    app->add_option("--points", points, "interior sample points")
        ->check(CLI::PositiveNumber);
    app->add_option("--map", map, "Moebius map a,b,c,d (reals) or 16 numbers");
    app->add_option("--samples", samples, "random samples")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "base seed")->check(CLI::NonNegativeNumber);
    app->add_option("--tolerance", tolerance, "override the main tolerance")
        ->check(CLI::PositiveNumber);
    app->add_option("--out", out, "write the report here instead of stdout");
    app->add_flag("--timings", timings, "record runtime_ms");
  }

  nlohmann::json settings(const std::string& check) const {
    nlohmann::json j = nlohmann::json::object();
    if (!domain.empty()) j["domain"] = domain_arg(domain);
    if (!q.empty()) j["q"] = quaternion_arg(q, "--q");
    if (!r.empty()) j["r"] = quaternion_arg(r, "--r");
    if (!resolution.empty()) j["resolutions"]["surface"] = resolution_arg(resolution);
    if (!map.empty()) j["map"] = map_arg(map);
    if (points > 0) j["points"]["interior"] = points;
    if (samples > 0) j["samples"] = samples;
    if (seed >= 0) j["seed"] = seed;
    if (tolerance > 0) j["tolerances"][check] = tolerance;
    return j;
  }
};

int report_error(const char* what) {
  std::cerr << "hyperholo: " << what << ": " << hh_last_error() << "\n";
  return kExitUsage;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  return static_cast<bool>(f);
}

int run_one(const std::string& check, const CheckFlags& flags) {
  const std::string settings = flags.settings(check).dump();
  if (flags.timings) {
    // Timings are only recorded by the batch runner.
    nlohmann::json cfg = nlohmann::json::parse(settings);
    cfg["checks"] = {check};
    Owned out;
    int pass = 0;
    if (hh_run_config(cfg.dump().c_str(), 1, 1, &out.s, &pass) != HH_OK) {
      return report_error("verify");
    }
    const auto reports = nlohmann::json::parse(out.str());
    const std::string text = reports.at(0).dump(2);
    if (flags.out.empty()) {
      std::cout << text << "\n";
    } else if (!write_file(flags.out, text)) {
      std::cerr << "hyperholo: cannot write " << flags.out << "\n";
      return kExitUsage;
    }
    return pass ? 0 : kExitFail;
  }
  Owned out;
  int pass = 0;
  if (hh_run_check(check.c_str(), settings.c_str(), &out.s, &pass) != HH_OK) {
    return report_error("verify");
  }
  if (flags.out.empty()) {
    std::cout << out.str() << "\n";
  } else if (!write_file(flags.out, out.str())) {
    std::cerr << "hyperholo: cannot write " << flags.out << "\n";
    return kExitUsage;
  }
  std::cerr << check << ": " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? 0 : kExitFail;
}

int run_config(const std::string& path, const std::string& out_dir,
               const std::string& csv, int jobs, bool timings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "hyperholo: cannot read " << path << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Owned out;
  int all_pass = 0;
  if (hh_run_config(buf.str().c_str(), jobs, timings ? 1 : 0, &out.s,
                    &all_pass) != HH_OK) {
    return report_error(path.c_str());
  }
  const auto reports = nlohmann::json::parse(out.str());
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    for (const auto& r : reports) {
      const auto file = std::filesystem::path(out_dir) /
                        (r.at("name").get<std::string>() + ".json");
      if (!write_file(file.string(), r.dump(2))) {
        std::cerr << "hyperholo: cannot write " << file << "\n";
        return kExitUsage;
      }
    }
  }
  Owned table;
  if (hh_summary(out.s, "text", &table.s) != HH_OK) return report_error("summary");
  std::cout << table.str();
  if (!csv.empty()) {
    Owned c;
    if (hh_summary(out.s, "csv", &c.s) != HH_OK) return report_error("summary");
    if (!write_file(csv, c.str())) {
      std::cerr << "hyperholo: cannot write " << csv << "\n";
      return kExitUsage;
    }
  }
  return all_pass ? 0 : kExitFail;
}

int list_checks() {
  Owned out;
  if (hh_list_checks(&out.s) != HH_OK) return report_error("list-checks");
  for (const auto& c : nlohmann::json::parse(out.str())) {
    std::cout << c.at("name").get<std::string>() << "\t"
              << c.at("description").get<std::string>() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for perturbed quaternionic function theory",
               "hyperholo"};
  app.set_version_flag("--version", std::string(hh_version()));
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list-checks", list, "print the registry of check names");

  CheckFlags verify_flags;
  std::string check;
  auto* verify = app.add_subcommand("verify", "run one check and print its report");
  verify->add_option("check", check, "check name (see --list-checks)")->required();
  verify_flags.attach(verify);

  std::string config_path, out_dir, csv;
  int jobs = 1;
  bool timings = false;
  auto* run = app.add_subcommand("run", "run every check of a config file");
  run->add_option("config", config_path, "experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "directory for per-check JSON reports");
  run->add_option("--csv", csv, "write a CSV summary");
  run->add_option("--jobs", jobs, "checks run in parallel")->check(CLI::PositiveNumber);
  run->add_flag("--timings", timings, "record runtime_ms");

  CheckFlags bergman_flags;
  std::string which;
  auto* bergman = app.add_subcommand("bergman", "subspace kernel checks");
  bergman->add_option("subcommand", which, "kernel, project or relations")
      ->required()
      ->check(CLI::IsMember({"kernel", "project", "relations"}));
  bergman_flags.attach(bergman);

  try {
    app.parse(argc, argv);
    if (list) return list_checks();
    if (*verify) return run_one(check, verify_flags);
    if (*run) return run_config(config_path, out_dir, csv, jobs, timings);
    if (*bergman) return run_one("bergman-" + which, bergman_flags);
    std::cout << app.help();
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hyperholo: " << e.what() << "\n";
    return kExitUsage;
  }
}
