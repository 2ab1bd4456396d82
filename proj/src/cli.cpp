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

#include "clonekit/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

#include "json.hpp"

#include "clonekit/acceptance.hpp"
#include "clonekit/asymqcm.hpp"
#include "clonekit/cvclone.hpp"
#include "clonekit/pcqcm.hpp"
#include "clonekit/qkd.hpp"
#include "clonekit/uqcm.hpp"

namespace clonekit::cli {
namespace {

/// Bad parameter value or unknown parameter; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Extra key-value lines appended after the rows.
  std::vector<std::pair<std::string, std::string>> footer;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
  } visitor;
  return std::visit(visitor, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    // Round through the 12-digit text form so JSON and CSV agree.
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return std::stod(format_double(v));
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  } visitor;
  return std::visit(visitor, c);
}

class Params {
 public:
  Params(Command command, const std::map<std::string, std::string>& given,
         std::map<std::string, std::string> defaults)
      : command_(command), values_(std::move(defaults)) {
    std::set<std::string> allowed{"format", "output"};
    for (const auto& [k, v] : values_) allowed.insert(k);
    for (const auto& [k, v] : given) {
      if (!allowed.contains(k))
        throw UsageError("parameter '" + k + "' is not accepted by " + command_name(command_));
      values_[k] = v;
    }
    values_.try_emplace("format", "csv");
    if (values_["format"] != "csv" && values_["format"] != "json")
      throw UsageError("format must be csv or json");
  }

  bool has(const std::string& key) const {
    auto it = values_.find(key);
    return it != values_.end() && !it->second.empty();
  }
  const std::string& str(const std::string& key) const { return values_.at(key); }

  long long integer(const std::string& key) const {
    const std::string& s = str(key);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError(key + " must be an integer, got '" + s + "'");
    return v;
  }
  double real(const std::string& key) const { return parse_real(key, str(key)); }
  bool flag(const std::string& key) const {
    const std::string& s = str(key);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw UsageError(key + " must be true or false, got '" + s + "'");
  }
  std::vector<std::string> list(const std::string& key, char sep = ',') const {
    std::vector<std::string> out;
    std::stringstream ss(str(key));
    for (std::string item; std::getline(ss, item, sep);)
      if (!item.empty()) out.push_back(item);
    return out;
  }

  static double parse_real(const std::string& key, const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
      throw UsageError(key + " must be a finite number, got '" + s + "'");
    return v;
  }

  std::string comment() const {
    std::string line = "# clonekit " + command_name(command_);
    for (const auto& [k, v] : values_)
      if (k != "output") line += " " + k + "=" + v;
    return line;
  }
  nlohmann::ordered_json json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : values_)
      if (k != "output") j[k] = v;
    return j;
  }

 private:
  Command command_;
  std::map<std::string, std::string> values_;
};

void require(bool ok, const std::string& precondition) {
  if (!ok) throw UsageError("precondition violated: " + precondition);
}

/// Evaluates f(0..n-1) on the worker pool; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& f) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

Table fidelity_table(const Params& p) {
  const long long n_max = p.integer("N");
  const long long m_max = p.integer("M");
  require(n_max >= 1, "N >= 1");
  require(m_max >= 2, "M >= 2");
  require(m_max <= 100000, "M <= 100000");
  std::vector<int> dims;
  for (const auto& s : p.list("d")) {
    long long d = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("d must be a list of integers");
    require(d >= 2 && d <= 1000000, "2 <= d <= 1000000");
    dims.push_back(static_cast<int>(d));
  }
  require(!dims.empty(), "at least one d");
  struct Cellspec {
    int n, m, d;
  };
  std::vector<Cellspec> cells;
  for (int d : dims)
    for (int n = 1; n <= n_max; ++n)
      for (int m = n + 1; m <= m_max; ++m) cells.push_back({n, m, d});
  const auto rows = parallel_map<std::vector<Cell>>(cells.size(), [&](std::size_t i) {
    const auto [n, m, d] = cells[i];
    return std::vector<Cell>{static_cast<long long>(n), static_cast<long long>(m), static_cast<long long>(d),
                             fidelity_formula(n, m, d), shrinking_eta(n, m, d)};
  });
  return Table{{"N", "M", "d", "fidelity", "eta"}, rows, {}};
}

StateVectord input_state(const Params& p, int d) {
  if (p.has("state")) {
    CVectord amps(d);
    const auto parts = p.list("state");
    require(static_cast<int>(parts.size()) == d, "state has d amplitudes");
    for (int k = 0; k < d; ++k) {
      const std::string& s = parts[static_cast<std::size_t>(k)];
      const auto colon = s.find(':');
      const double re = Params::parse_real("state", s.substr(0, colon));
      const double im = colon == std::string::npos ? 0.0 : Params::parse_real("state", s.substr(colon + 1));
      amps(k) = {re, im};
    }
    require(amps.norm() > 1e-12, "state is nonzero");
    return StateVectord::normalized(HilbertDims{d}, amps);
  }
  if (d == 2) return bloch_state<double>(p.real("theta"), p.real("phi"));
  std::mt19937_64 rng(static_cast<std::uint64_t>(p.integer("seed")));
  return haar_state<double>(HilbertDims{d}, rng);
}

Table clone(const Params& p) {
  const std::string machine = p.str("machine");
  const int n = static_cast<int>(p.integer("N"));
  const int m = static_cast<int>(p.integer("M"));
  const int d = static_cast<int>(p.integer("d"));
  require(d >= 2, "d >= 2");
  const bool qubit_only = machine != "werner" && machine != "asymmetric";
  require(!qubit_only || d == 2, machine + " acts on qubits (d = 2)");
  Table t{{"machine", "clone", "fidelity", "std_error", "shrinking_factor", "global_fidelity"}, {}, {}};
  const Cell none{};
  auto row = [&](long long k, double f, Cell err, Cell eta, Cell global) {
    t.rows.push_back({machine, k, f, std::move(err), std::move(eta), std::move(global)});
  };
  if (machine == "werner") {
    require(n >= 1 && m > n, "1 <= N < M");
    const StateVectord psi = input_state(p, d);
    const CloneReport r = werner_clone(psi, n, m);
    for (std::size_t k = 0; k < r.per_clone_fidelity.size(); ++k)
      row(static_cast<long long>(k), r.per_clone_fidelity[k], none, r.shrinking_factor, r.global_fidelity);
  } else if (machine == "buzek-hillery") {
    const StateVectord psi = input_state(p, 2);
    const BuzekHilleryOutput r = buzek_hillery(psi);
    row(0, fidelity_pure(r.clone_a, psi), none, 2.0 / 3.0, none);
    row(1, fidelity_pure(r.clone_b, psi), none, 2.0 / 3.0, none);
    t.rows.push_back({"buzek-hillery anticlone", 2LL, fidelity_pure(r.anticlone, qubit_perp(psi)), none, none, none});
  } else if (machine == "asymmetric") {
    const double fa = p.real("fa");
    require(fa >= 1.0 / d && fa <= 1.0, "1/d <= fa <= 1");
    const StateVectord psi = input_state(p, d);
    const auto [a, b] = clone_fidelities(asym_output_state(psi, AsymParams::from_fidelity_a(d, fa)), psi);
    row(0, a, none, none, none);
    row(1, b, none, none, none);
  } else if (machine == "filip") {
    const double tr = p.real("T");
    require(tr > 0.0 && tr <= 1.0, "0 < T <= 1");
    const FilipOutcome r = filip_asymmetric(input_state(p, 2), tr);
    row(0, r.fa, none, none, r.success_probability);
    row(1, r.fb, none, none, r.success_probability);
    t.columns.back() = "success_probability";
  } else if (machine == "phase-covariant" || machine == "pc-ancilla") {
    const double eta = p.real("eta");
    require(eta >= 0.0 && eta <= std::numbers::pi / 2, "0 <= eta <= pi/2");
    const StateVectord psi = input_state(p, 2);
    if (machine == "phase-covariant") {
      const QuantumChanneld ch = ng_channel(eta);
      const DensityMatrixd out = apply_channel(ch, DensityMatrixd(psi.projector()));
      row(0, fidelity_pure(partial_trace(out, {0}), psi), none, none, none);
      row(1, fidelity_pure(partial_trace(out, {1}), psi), none, none, none);
    } else {
      const PcAncillaOutput r = pc_ancilla_clone(psi, eta);
      row(0, fidelity_pure(r.rho_a, psi), none, none, none);
      row(1, fidelity_pure(r.rho_b, psi), none, none, none);
    }
  } else if (machine == "measure-prepare") {
    const long long samples = p.integer("samples");
    require(samples >= 2, "samples >= 2");
    const StateVectord psi = input_state(p, 2);
    const MonteCarloEstimate e =
        trivial_measure_clone(psi, static_cast<std::size_t>(samples), static_cast<std::uint64_t>(p.integer("seed")));
    row(0, e.mean, e.std_error, none, none);
    row(1, e.mean, e.std_error, none, none);
  } else {
    throw UsageError("unknown machine '" + machine +
                     "' (werner, buzek-hillery, asymmetric, filip, phase-covariant, pc-ancilla, measure-prepare)");
  }
  return t;
}

Table qkd_sweep(const Params& p) {
  const auto grid = p.list("eta", ':');
  require(grid.size() == 3, "eta is start:stop:count");
  const double lo = Params::parse_real("eta", grid[0]);
  const double hi = Params::parse_real("eta", grid[1]);
  long long count = 0;
  auto [ptr, ec] = std::from_chars(grid[2].data(), grid[2].data() + grid[2].size(), count);
  require(ec == std::errc() && ptr == grid[2].data() + grid[2].size() && count >= 1 && count <= 100000,
          "1 <= count <= 100000");
  require(lo >= 0.0 && hi <= std::numbers::pi / 2 + 1e-12 && lo <= hi, "0 <= start <= stop <= pi/2");
  const bool ancilla = p.flag("ancilla");
  const double dc_inc = critical_disturbance(AttackMode::incoherent);
  const double dc_col = critical_disturbance(AttackMode::collective);
  const auto rows = parallel_map<std::vector<Cell>>(static_cast<std::size_t>(count), [&](std::size_t i) {
    const double eta = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    const AttackOutcome o = ancilla ? bb84_with_ancilla(std::min(eta, std::numbers::pi / 2))
                                    : bb84_no_ancilla(std::min(eta, std::numbers::pi / 2));
    const Cell chi_ae = o.chi_ae ? Cell{*o.chi_ae} : Cell{};
    const Cell chi_be = o.chi_be ? Cell{*o.chi_be} : Cell{};
    return std::vector<Cell>{eta,     1.0 - o.f_ab, o.i_ab, o.i_ae, o.i_be, chi_ae, chi_be,
                             key_rate(o, AttackMode::incoherent), key_rate(o, AttackMode::collective), dc_inc, dc_col};
  });
  return Table{{"eta", "D", "I_AB", "I_AE", "I_BE", "chi_AE", "chi_BE", "R_incoherent", "R_collective",
                "Dc_incoherent", "Dc_collective"},
               rows,
               {}};
}

Table cv_network(const Params& p) {
  const int n = static_cast<int>(p.integer("N"));
  const int m = static_cast<int>(p.integer("M"));
  require(n >= 1 && m > n, "1 <= N < M");
  require(m <= 512, "M <= 512");
  const double x = p.real("x");
  const double q = p.real("p");
  CloneNetworkResult r = [&] {
    if (p.has("r")) return squeezed_clone_network(n, m, p.real("r"), x, q, p.flag("matched"));
    GaussianEnsembled in = GaussianEnsembled::coherent(x, q);
    for (int k = 1; k < n; ++k) in = in.concat(GaussianEnsembled::coherent(x, q));
    return clone_network(n, m, in);
  }();
  const GaussianEnsembled target =
      p.has("r") ? GaussianEnsembled::squeezed(p.real("r"), x, q) : GaussianEnsembled::coherent(x, q);
  const SgcBound bound = sgc_bound(n, m);
  Table t{{"mode", "role", "mean_x", "mean_p", "var_x", "var_p", "fidelity", "bound_added_noise", "bound_fidelity"},
          {},
          {{"symplectic_residual", format_double(r.transform.symplectic_residual())}}};
  const auto& mean = r.output.mean();
  for (int k = 0; k <= m; ++k) {
    const bool anti = k == r.anticlone_mode();
    t.rows.push_back({static_cast<long long>(k), std::string(anti ? "anticlone" : "clone"), mean(2 * k),
                      mean(2 * k + 1), r.output.variance_x(k), r.output.variance_p(k),
                      anti ? Cell{} : Cell{gaussian_fidelity(target, r.output.mode(k))},
                      anti ? Cell{} : Cell{bound.variance}, anti ? Cell{} : Cell{bound.fidelity}});
  }
  return t;
}

Table verify(const Params& p, bool& all_passed) {
  const auto results = run_acceptance(static_cast<std::uint64_t>(p.integer("seed")));
  Table t{{"criterion", "name", "result", "detail"}, {}, {}};
  long long passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    t.rows.push_back({static_cast<long long>(r.id), r.name, std::string(r.passed ? "PASS" : "FAIL"), r.detail});
  }
  all_passed = passed == static_cast<long long>(results.size());
  t.footer = {{"passed", std::to_string(passed)},
              {"failed", std::to_string(static_cast<long long>(results.size()) - passed)}};
  return t;
}

void emit(const Table& t, const Params& p, Command command, std::ostream& os) {
  if (p.str("format") == "json") {
    nlohmann::ordered_json j;
    j["command"] = command_name(command);
    j["config"] = p.json();
    j["columns"] = t.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json o = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) o[t.columns[c]] = json_cell(r[c]);
      rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    for (const auto& [k, v] : t.footer) j["summary"][k] = v;
    os << j.dump(2) << '\n';
    return;
  }
  os << p.comment() << '\n';
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << csv_cell(r[c]);
    os << '\n';
  }
  for (const auto& [k, v] : t.footer) os << "# " << k << "=" << v << '\n';
}

std::map<std::string, std::string> defaults_for(Command c) {
  switch (c) {
    case Command::fidelity_table:
      return {{"N", "3"}, {"M", "5"}, {"d", "2,3"}};
    case Command::clone:
      return {{"machine", "werner"}, {"N", "1"},    {"M", "2"},      {"d", "2"},     {"theta", "0"},
              {"phi", "0"},          {"state", ""}, {"fa", "0.8"},   {"eta", "0.785398163397"},
              {"T", "0.75"},         {"seed", "0"}, {"samples", "4096"}};
    case Command::qkd_sweep:
      return {{"eta", "0:1.57079632679:17"}, {"ancilla", "true"}};
    case Command::cv_network:
      return {{"N", "1"}, {"M", "2"}, {"x", "0"}, {"p", "0"}, {"r", ""}, {"matched", "true"}};
    case Command::verify:
      return {{"seed", "0"}};
  }
  return {};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "fidelity-table") return Command::fidelity_table;
  if (name == "clone") return Command::clone;
  if (name == "qkd-sweep") return Command::qkd_sweep;
  if (name == "cv-network") return Command::cv_network;
  if (name == "verify") return Command::verify;
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::fidelity_table:
      return "fidelity-table";
    case Command::clone:
      return "clone";
    case Command::qkd_sweep:
      return "qkd-sweep";
    case Command::cv_network:
      return "cv-network";
    case Command::verify:
      return "verify";
  }
  return "";
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CLONEKIT_THREADS")) {
    unsigned cap = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc() && ptr == s.data() + s.size() && cap >= 1) n = std::min(n, cap);
  }
  return n;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Params p(config.command, config.parameters, defaults_for(config.command));
    bool all_passed = true;
    Table t;
    switch (config.command) {
      case Command::fidelity_table:
        t = fidelity_table(p);
        break;
      case Command::clone:
        t = clone(p);
        break;
      case Command::qkd_sweep:
        t = qkd_sweep(p);
        break;
      case Command::cv_network:
        t = cv_network(p);
        break;
      case Command::verify:
        t = verify(p, all_passed);
        break;
    }
    if (p.has("output")) {
      std::ofstream file(p.str("output"), std::ios::binary);
      if (!file) {
        err << "error: cannot open output file " << p.str("output") << '\n';
        return kExitUsage;
      }
      emit(t, p, config.command, file);
    } else {
      emit(t, p, config.command, out);
    }
    return all_passed ? kExitOk : kExitVerification;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace clonekit::cli
