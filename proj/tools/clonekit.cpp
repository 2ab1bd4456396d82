// Copyright 2026 The clonekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "clonekit/cli.hpp"

namespace {

struct Option {
  const char* name;
  const char* help;
};

struct Subcommand {
  const char* name;
  const char* help;
  std::vector<Option> options;
};

const std::vector<Subcommand>& subcommands() {
  static const std::vector<Subcommand> table{
      {"fidelity-table",
       "optimal universal N -> M fidelities over a grid",
       {{"N", "largest input count (default 3)"},
        {"M", "largest output count (default 5)"},
        {"d", "comma-separated dimensions (default 2,3)"}}},
      {"clone",
       "run one cloning machine on an input state",
       {{"machine", "werner, buzek-hillery, asymmetric, filip, phase-covariant, pc-ancilla, measure-prepare"},
        {"N", "input copies (werner)"},
        {"M", "output copies (werner)"},
        {"d", "dimension (werner, asymmetric)"},
        {"theta", "qubit polar angle"},
        {"phi", "qubit azimuth"},
        {"state", "amplitudes re:im,re:im,... (overrides theta/phi)"},
        {"fa", "fidelity of clone A (asymmetric)"},
        {"eta", "cloner angle (phase-covariant, pc-ancilla)"},
        {"T", "projector parameter (filip)"},
        {"seed", "random seed (default 0)"},
        {"samples", "Monte-Carlo samples (measure-prepare)"}}},
      {"qkd-sweep",
       "BB84 cloning-attack informations and key rates over an eta grid",
       {{"eta", "start:stop:count"}, {"ancilla", "true for the machine with ancilla (default)"}}},
      {"cv-network",
       "Gaussian N -> M cloning network moments",
       {{"N", "input copies"},
        {"M", "output copies"},
        {"x", "input mean x"},
        {"p", "input mean p"},
        {"r", "squeezing of the input (optional)"},
        {"matched", "squeeze the ancillae to match (with r)"}}},
      {"verify", "run the acceptance suite", {{"seed", "random seed (default 0)"}}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clonekit: quantum cloning machines and their verification"};
  app.require_subcommand(1);
  std::string format;
  std::string output;

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, CLI::App*> apps;
  std::vector<std::pair<std::string, std::pair<std::string, CLI::Option*>>> registered;
  for (const auto& sc : subcommands()) {
    CLI::App* sub = app.add_subcommand(sc.name, sc.help);
    apps[sc.name] = sub;
    for (const auto& opt : sc.options) {
      CLI::Option* o = sub->add_option(std::string("--") + opt.name, values[sc.name][opt.name], opt.help);
      registered.push_back({sc.name, {opt.name, o}});
    }
    sub->add_option("--format", format, "csv (default) or json");
    sub->add_option("--output,-o", output, "write to a file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return clonekit::cli::kExitUsage;
  }

  clonekit::cli::RunConfig config;
  for (const auto& [name, sub] : apps) {
    if (!sub->parsed()) continue;
    config.command = *clonekit::cli::parse_command(name);
    for (const auto& [owner, entry] : registered)
      if (owner == name && entry.second->count() > 0) config.parameters[entry.first] = values[name][entry.first];
  }
  if (!format.empty()) config.parameters["format"] = format;
  if (!output.empty()) config.parameters["output"] = output;
  return clonekit::cli::run(config, std::cout, std::cerr);
}
