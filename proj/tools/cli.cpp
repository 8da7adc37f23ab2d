// Copyright 2026 The revram Authors. All rights reserved.
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

#include "revram/cli.hpp"

#include "revram/error.hpp"
#include "revram/generators.hpp"
#include "revram/improvements.hpp"
#include "revram/metrics.hpp"
#include "revram/netlist_io.hpp"
#include "revram/quantum_algebra.hpp"
#include "revram/sequential_sim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace revram {

namespace {

using Json = nlohmann::ordered_json;

// Largest width whose truth table `gate info` prints in full.
constexpr unsigned kMaxTableWidth = 8;

enum class Format { Text, Json };

struct Globals {
  Format format = Format::Text;
  std::string out_path;
  std::string delay_model = "depth";
};

// Thrown by handlers whose check failed after the artifact was written.
struct CheckFailed {
  std::string message;
};

std::string bits_of(std::uint32_t pattern, unsigned width) {
  std::string s;
  for (unsigned i = 0; i < width; ++i)
    s.push_back((pattern >> (width - 1 - i)) & 1u ? '1' : '0');
  return s;
}

std::string join_ops(const std::vector<PrimitiveOp> &ops) {
  std::string s;
  for (const auto &op : ops) {
    if (!s.empty())
      s += ' ';
    s += to_string(op);
  }
  return s;
}

Json ops_json(const std::vector<PrimitiveOp> &ops) {
  Json a = Json::array();
  for (const auto &op : ops)
    a.push_back(to_string(op));
  return a;
}

Json metrics_json(const Netlist &nl, const MetricsReport &r) {
  Json j;
  j["name"] = nl.name();
  const auto n = nl.param("n");
  const auto m = nl.param("m");
  j["n"] = n ? Json(*n) : Json(nullptr);
  j["m"] = m ? Json(*m) : Json(nullptr);
  j["gate_count"] = r.gate_count;
  j["quantum_cost"] = r.quantum_cost;
  j["delay"] = r.delay;
  j["garbage"] = r.garbage_count;
  j["lines"] = r.line_count;
  j["constants"] = r.constant_inputs;
  return j;
}

void metrics_text(std::ostream &os, const Netlist &nl, const MetricsReport &r,
                  DelayModel model) {
  os << "name: " << nl.name() << "\n";
  for (const auto &[k, v] : nl.params())
    os << k << ": " << v << "\n";
  os << "gates: " << r.gate_count << "\n"
     << "quantum cost: " << r.quantum_cost << "\n"
     << "delay (" << to_string(model) << "): " << r.delay << "\n"
     << "garbage: " << r.garbage_count << "\n"
     << "lines: " << r.line_count << "\n"
     << "constants: " << r.constant_inputs << "\n";
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "': file not found or unreadable");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Closed-form expectations for a netlist produced by a known generator.
std::vector<std::pair<Formula, unsigned>>
expected_counts(const Netlist &nl, const MetricsReport &r) {
  const auto n = nl.param("n");
  if (!n)
    return {};
  if (nl.name() == "decoder")
    return {{Formula::DecoderGates, r.gate_count},
            {Formula::DecoderGarbage, r.garbage_count},
            {Formula::DecoderQc, r.quantum_cost}};
  if (nl.name() == "rram_paper" && nl.param("m"))
    return {{Formula::RamGates, r.gate_count},
            {Formula::RamGarbage, r.garbage_count},
            {Formula::RamQc, r.quantum_cost}};
  return {};
}

class Cli {
public:
  Cli(std::ostream &err) : err_(err) {}

  int run(const std::vector<std::string> &args, std::ostream &out);

private:
  void setup();
  DelayModel model() const { return parse_delay_model(g_.delay_model); }
  bool json() const { return g_.format == Format::Json; }
  void emit_json(const Json &j) { body_ << j.dump(2) << "\n"; }

  void gate_list();
  void gate_info();
  void gate_verify();
  void search();
  void synth(const Netlist &nl);
  void metrics();
  void check();
  void sim_ram();
  void sim_fuzz();
  void sim_exhaustive();
  void improvements();
  void formula();

  std::ostream &err_;
  std::ostringstream body_;
  CLI::App app_{"Reversible RAM synthesis and verification toolkit", "revram"};
  Globals g_;
  std::function<void()> action_;

  std::string gate_name_;
  unsigned max_len_ = 5;
  unsigned n_ = 1;
  unsigned m_ = 1;
  bool for_ram_ = false;
  std::string variant_ = "paper";
  std::string file_;
  std::size_t scripts_ = 100;
  std::size_t ops_ = 32;
  std::uint64_t seed_ = 7;
  std::string formula_;
};

void Cli::setup() {
  app_.require_subcommand(1);
  app_.fallthrough();
  app_.add_option("--format", g_.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text},
                                        {"json", Format::Json}}));
  app_.add_option("--out", g_.out_path, "Write the artifact to FILE");
  app_.add_option("--delay-model", g_.delay_model,
                  "Delay model: depth (primitive depth) or unit")
      ->check(CLI::IsMember({"depth", "unit"}));

  auto *gate = app_.add_subcommand("gate", "Query the gate catalog");
  gate->require_subcommand(1);
  gate->add_subcommand("list", "List catalog gates")->callback([this] {
    action_ = [this] { gate_list(); };
  });
  auto *info = gate->add_subcommand("info", "Show a gate's definition");
  info->add_option("name", gate_name_, "Gate name or mnemonic")->required();
  info->callback([this] { action_ = [this] { gate_info(); }; });
  auto *verify =
      gate->add_subcommand("verify", "Check a gate's stored decomposition");
  verify->add_option("name", gate_name_, "Gate name or mnemonic")->required();
  verify->callback([this] { action_ = [this] { gate_verify(); }; });

  auto *srch = app_.add_subcommand("search", "Search primitive realizations");
  srch->require_subcommand(1);
  auto *decomp = srch->add_subcommand(
      "decomposition", "Shortest NOT/CNOT/CV/CV+ sequence for a 3-line gate");
  decomp->add_option("name", gate_name_, "Gate name or mnemonic")->required();
  decomp->add_option("--max-len", max_len_, "Longest sequence to try")
      ->check(CLI::Range(0u, SearchLimits::max_length));
  decomp->callback([this] { action_ = [this] { search(); }; });

  auto *synth = app_.add_subcommand("synth", "Generate a netlist");
  synth->require_subcommand(1);
  auto *dec = synth->add_subcommand("decoder", "n-to-2^n decoder");
  dec->add_option("-n", n_, "Select bits")->required();
  dec->callback([this] { action_ = [this] { this->synth(build_decoder(n_)); }; });
  synth->add_subcommand("dff", "Gated D flip-flop")->callback([this] {
    action_ = [this] { this->synth(build_dff()); };
  });
  auto *ms = synth->add_subcommand("msdff", "Write-enable master-slave DFF");
  ms->add_flag("--for-ram", for_ram_, "Use the 5-gate in-array form");
  ms->callback(
      [this] { action_ = [this] { this->synth(build_msdff_we(for_ram_)); }; });
  auto *ram = synth->add_subcommand("ram", "2^n x m RAM array");
  ram->add_option("-n", n_, "Address bits")->required();
  ram->add_option("-m", m_, "Word width")->required();
  ram->add_option("--variant", variant_, "paper or functional");
  ram->callback([this] {
    action_ = [this] {
      this->synth(build_rram({n_, m_, parse_ram_variant(variant_)}));
    };
  });

  auto *met = app_.add_subcommand("metrics", "Measure a netlist file");
  met->add_option("file", file_, "Netlist file")->required();
  met->callback([this] { action_ = [this] { metrics(); }; });

  auto *chk = app_.add_subcommand(
      "check", "Validate a netlist file and test its reversibility");
  chk->add_option("file", file_, "Netlist file")->required();
  chk->callback([this] { action_ = [this] { check(); }; });

  auto *sim = app_.add_subcommand("sim", "Clocked RAM simulation");
  sim->require_subcommand(1);
  auto add_ram_options = [this](CLI::App *cmd) {
    cmd->add_option("-n", n_, "Address bits")->required();
    cmd->add_option("-m", m_, "Word width")->required();
    cmd->add_option("--variant", variant_, "paper or functional");
  };
  auto *sram = sim->add_subcommand("ram", "Run an operation script");
  add_ram_options(sram);
  sram->add_option("--script", file_, "Script file (w <addr> <bits> / r <addr>)")
      ->required();
  sram->callback([this] { action_ = [this] { sim_ram(); }; });
  auto *fuzz = sim->add_subcommand("fuzz", "Random differential test");
  add_ram_options(fuzz);
  fuzz->add_option("--scripts", scripts_, "Number of scripts");
  fuzz->add_option("--ops", ops_, "Operations per script");
  fuzz->add_option("--seed", seed_, "Random seed");
  fuzz->callback([this] { action_ = [this] { sim_fuzz(); }; });
  auto *exh = sim->add_subcommand("exhaustive", "Every script up to a length");
  add_ram_options(exh);
  exh->add_option("--max-len", max_len_, "Longest script")->required();
  exh->callback([this] { action_ = [this] { sim_exhaustive(); }; });

  app_.add_subcommand("improvements", "Recompute published improvements")
      ->callback([this] { action_ = [this] { improvements(); }; });

  auto *form = app_.add_subcommand("formula", "Evaluate a closed-form count");
  form->add_option("id", formula_,
                   "decoder_gates|decoder_garbage|decoder_qc|ram_gates|"
                   "ram_garbage|ram_qc")
      ->required();
  form->add_option("-n", n_, "Address bits")->required();
  form->add_option("-m", m_, "Word width");
  form->callback([this] { action_ = [this] { formula(); }; });
}

int Cli::run(const std::vector<std::string> &args, std::ostream &out) {
  setup();
  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      app_.get_subcommand_no_throw(args.front()) == nullptr) {
    err_ << "error: unknown subcommand '" << args.front() << "' (see --help)\n";
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app_.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app_.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app_.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err_ << "error: " << e.what() << " (see --help)\n";
    return 2;
  }

  int code = 0;
  try {
    action_();
  } catch (const CheckFailed &f) {
    err_ << "error: " << f.message << "\n";
    code = 1;
  } catch (const ArgumentError &e) {
    err_ << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundsError &e) {
    err_ << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err_ << "error: " << e.what() << "\n";
    return 1;
  }

  if (g_.out_path.empty()) {
    out << body_.str();
  } else {
    std::ofstream file(g_.out_path, std::ios::binary);
    if (!file || !(file << body_.str())) {
      err_ << "error: cannot write '" << g_.out_path << "'\n";
      return 1;
    }
  }
  return code;
}

void Cli::gate_list() {
  if (json()) {
    Json a = Json::array();
    for (const auto &name : catalog_names()) {
      const auto g = builtin_gate(name);
      a.push_back({{"name", g->name()},
                   {"mnemonic", g->mnemonic()},
                   {"width", g->width()},
                   {"quantum_cost", g->quantum_cost()}});
    }
    emit_json(a);
    return;
  }
  for (const auto &name : catalog_names()) {
    const auto g = builtin_gate(name);
    body_ << g->name() << " (" << g->mnemonic() << ") width " << g->width()
          << " cost " << g->quantum_cost() << "\n";
  }
}

void Cli::gate_info() {
  const auto g = builtin_gate(gate_name_);
  const bool bijective = is_bijective(*g);
  const bool show_table = g->width() <= kMaxTableWidth;
  if (json()) {
    Json j;
    j["name"] = g->name();
    j["mnemonic"] = g->mnemonic();
    j["width"] = g->width();
    j["quantum_cost"] = g->quantum_cost();
    j["delay"] = g->delay();
    j["bijective"] = bijective;
    j["decomposition"] =
        g->decomposition() ? ops_json(*g->decomposition()) : Json(nullptr);
    j["truth_table"] = show_table ? Json(g->permutation()) : Json(nullptr);
    emit_json(j);
    return;
  }
  body_ << "name: " << g->name() << "\n"
        << "mnemonic: " << g->mnemonic() << "\n"
        << "width: " << g->width() << "\n"
        << "cost: " << g->quantum_cost() << "\n"
        << "delay: " << g->delay() << "\n"
        << "bijective: " << (bijective ? "yes" : "no") << "\n"
        << "decomposition: "
        << (g->decomposition() ? join_ops(*g->decomposition()) : "none")
        << "\n";
  if (!show_table) {
    body_ << "truth table: omitted (width > " << kMaxTableWidth << ")\n";
    return;
  }
  body_ << "truth table:\n";
  for (std::uint32_t x = 0; x < g->permutation().size(); ++x)
    body_ << "  " << bits_of(x, g->width()) << " -> "
          << bits_of(g->permutation()[x], g->width()) << "\n";
}

void Cli::gate_verify() {
  const auto g = builtin_gate(gate_name_);
  const auto verdict = verify_decomposition(*g);
  if (json()) {
    Json j;
    j["gate"] = g->name();
    j["verdict"] = to_string(verdict);
    j["quantum_cost"] = g->quantum_cost();
    j["decomposition"] =
        g->decomposition() ? ops_json(*g->decomposition()) : Json(nullptr);
    emit_json(j);
    return;
  }
  body_ << g->name() << ": " << to_string(verdict) << "\n";
}

void Cli::search() {
  const auto g = builtin_gate(gate_name_);
  const auto start = std::chrono::steady_clock::now();
  const auto found = search_min_decomposition(*g, max_len_);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (json()) {
    Json j;
    j["gate"] = g->name();
    j["max_len"] = max_len_;
    j["found"] = found.has_value();
    j["length"] = found ? Json(found->size()) : Json(nullptr);
    j["sequence"] = found ? ops_json(*found) : Json(nullptr);
    j["wall_time_us"] = micros;
    emit_json(j);
    return;
  }
  body_ << g->name() << " (max length " << max_len_ << "): "
        << (found ? join_ops(*found) : "NONE") << "\n";
  if (found)
    body_ << "length: " << found->size() << "\n";
  body_ << "wall time: " << micros / 1000 << "." << std::setw(3)
        << std::setfill('0') << micros % 1000 << std::setfill(' ') << " ms\n";
}

void Cli::synth(const Netlist &nl) {
  if (json()) {
    auto j = metrics_json(nl, measure(nl, model()));
    j["netlist"] = serialize(nl);
    emit_json(j);
    return;
  }
  body_ << serialize(nl);
}

void Cli::metrics() {
  const auto nl = parse(read_file(file_));
  const auto r = measure(nl, model());
  if (json())
    emit_json(metrics_json(nl, r));
  else
    metrics_text(body_, nl, r, model());
}

void Cli::check() {
  const auto nl = parse(read_file(file_));
  const auto r = measure(nl, model());
  const bool exhaustive = nl.free_lines().size() <= kMaxExhaustiveFreeLines;
  std::optional<ReversibilityReport> rev;
  if (exhaustive)
    rev = check_reversibility(nl);

  std::vector<std::string> failures;
  if (rev && !rev->reversible)
    failures.push_back("terminal vectors collide");
  Json forms = Json::object();
  const auto n = static_cast<unsigned>(nl.param("n").value_or(0));
  const auto m = static_cast<unsigned>(nl.param("m").value_or(1));
  for (const auto &[which, measured] : expected_counts(nl, r)) {
    const long expected = closed_form(which, n, m);
    forms[to_string(which)] = {{"expected", expected}, {"measured", measured}};
    if (expected != static_cast<long>(measured))
      failures.push_back(to_string(which) + " is " + std::to_string(measured) +
                         ", expected " + std::to_string(expected));
  }

  if (json()) {
    Json j;
    j["name"] = nl.name();
    j["valid"] = true;
    j["reversible"] = rev ? Json(rev->reversible) : Json(nullptr);
    j["assignments"] = rev ? Json(rev->evaluated) : Json(nullptr);
    j["closed_form"] = forms;
    j["ok"] = failures.empty();
    emit_json(j);
  } else {
    body_ << "name: " << nl.name() << "\n"
          << "structure: valid\n";
    if (rev)
      body_ << "reversible: " << (rev->reversible ? "yes" : "no") << " ("
            << rev->evaluated << " assignments)\n";
    else
      body_ << "reversible: skipped (" << nl.free_lines().size()
            << " free lines)\n";
    for (const auto &[id, v] : forms.items())
      body_ << id << ": " << v["measured"].get<long>() << " (closed form "
            << v["expected"].get<long>() << ")\n";
  }
  if (!failures.empty())
    throw CheckFailed{failures.front()};
}

void Cli::sim_ram() {
  const RamConfig config{n_, m_, parse_ram_variant(variant_)};
  const auto script = parse_script(read_file(file_));
  const auto reads = run_script(config, script);
  if (json()) {
    Json a = Json::array();
    for (const auto &w : reads)
      a.push_back(format_word(w));
    emit_json({{"variant", to_string(config.variant)}, {"reads", a}});
    return;
  }
  for (const auto &w : reads)
    body_ << format_word(w) << "\n";
}

namespace {

Json report_json(const DifferentialReport &r) {
  Json j;
  j["scripts"] = r.scripts;
  j["operations"] = r.operations;
  j["divergences"] = r.divergences;
  j["refresh_violations"] = r.refresh_violations;
  j["isolation_violations"] = r.isolation_violations;
  if (r.first)
    j["first_divergence"] = {{"script", r.first->script},
                             {"op", r.first->op},
                             {"operation", to_string(r.first->operation)},
                             {"expected", format_word(r.first->expected)},
                             {"actual", format_word(r.first->actual)}};
  else
    j["first_divergence"] = nullptr;
  return j;
}

void report_text(std::ostream &os, const DifferentialReport &r) {
  os << "scripts: " << r.scripts << "\n"
     << "operations: " << r.operations << "\n"
     << "divergences: " << r.divergences << "\n"
     << "refresh violations: " << r.refresh_violations << "\n"
     << "isolation violations: " << r.isolation_violations << "\n";
  if (r.first)
    os << "first divergence: script " << r.first->script << " op "
       << r.first->op << " (" << to_string(r.first->operation)
       << ") expected " << format_word(r.first->expected) << " got "
       << format_word(r.first->actual) << "\n";
}

} // namespace

void Cli::sim_fuzz() {
  const RamConfig config{n_, m_, parse_ram_variant(variant_)};
  const auto r = differential_test(config, scripts_, ops_, seed_);
  if (json())
    emit_json(report_json(r));
  else
    report_text(body_, r);
  // The parity read bus is expected to diverge.
  if (config.variant == RamVariant::Functional && !r.clean())
    throw CheckFailed{"functional RAM diverged from the oracle"};
}

void Cli::sim_exhaustive() {
  const RamConfig config{n_, m_, parse_ram_variant(variant_)};
  const auto r = exhaustive_check(config, max_len_);
  if (json())
    emit_json(report_json(r));
  else
    report_text(body_, r);
  if (config.variant == RamVariant::Functional && !r.clean())
    throw CheckFailed{"functional RAM diverged from the oracle"};
}

void Cli::improvements() {
  const auto rows = report_improvements(model());
  bool all = true;
  if (json()) {
    Json a = Json::array();
    for (const auto &r : rows) {
      all = all && r.matches();
      a.push_back({{"design", r.design},
                   {"baseline", r.baseline},
                   {"metric", to_string(r.metric)},
                   {"baseline_value", r.baseline_value},
                   {"measured", r.measured},
                   {"computed_percent", r.computed},
                   {"printed_percent", r.printed},
                   {"match", r.matches()}});
    }
    emit_json(a);
  } else {
    for (const auto &r : rows) {
      all = all && r.matches();
      body_ << r.design << " vs " << r.baseline << " " << to_string(r.metric)
            << ": " << r.baseline_value << " -> " << r.measured << " = "
            << r.computed << "% (printed " << r.printed << "%)"
            << (r.matches() ? "" : " MISMATCH") << "\n";
    }
  }
  if (!all)
    throw CheckFailed{"recomputed improvements differ from the published ones"};
}

void Cli::formula() {
  const auto which = parse_formula(formula_);
  const long value = closed_form(which, n_, m_);
  if (json())
    emit_json({{"formula", formula_}, {"n", n_}, {"m", m_}, {"value", value}});
  else
    body_ << value << "\n";
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  Cli cli(err);
  return cli.run(args, out);
}

} // namespace revram
