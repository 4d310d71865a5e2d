// Copyright 2026 The netcreate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netcreate/netcreate.hpp"

namespace netcreate::cli {
namespace {

struct Config {
  std::string in = "-";
  std::string out;
  std::string alpha;
  std::string format;
  std::string mode = "weak";
  int n = 0;
  int k = 3;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  int limit_exhaustive = ExhaustiveOptions{}.exhaustive_limit;
  int limit_enumeration = EnumerationOptions{}.enumeration_limit;
  int vertex = 0;
  int root = 0;
  int max_rounds = 100;
  std::string schedule = "round-robin";
  std::string tie_break = "incumbent";
  bool skip_certify = false;
  std::vector<int> n_list;
  std::vector<std::string> alpha_list;
};

class Command {
 public:
  Command(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err)
      : cfg_(cfg), in_(in), out_(out), err_(err) {}

  Rational alpha() const {
    if (cfg_.alpha.empty()) throw InvalidInput("--alpha is required");
    return Rational::parse(cfg_.alpha);
  }

  GameParams game() const { return GameParams(cfg_.n, alpha()); }

  ExhaustiveOptions exhaustive() const { return {cfg_.limit_exhaustive, cfg_.threads}; }
  EnumerationOptions enumeration() const { return {cfg_.limit_enumeration, cfg_.threads}; }
  NashMode mode() const { return parse_nash_mode(cfg_.mode); }

  std::uint64_t seed(std::string_view what) const {
    if (!cfg_.seed) throw InvalidInput(std::string(what) + " is randomized and needs --seed");
    return *cfg_.seed;
  }

  // Profile from --in, with --alpha overriding the document's price.
  ProfileDocument load() const {
    std::string text;
    if (cfg_.in == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream f(cfg_.in, std::ios::binary);
      if (!f) throw InvalidInput("cannot read profile file '" + cfg_.in + "'");
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    ProfileDocument doc = parse_profile_json(text);
    if (!cfg_.alpha.empty()) doc.game = GameParams(doc.game.n(), alpha());
    return doc;
  }

  std::string format(std::initializer_list<std::string_view> allowed) const {
    std::string f = cfg_.format.empty() ? std::string(*allowed.begin()) : cfg_.format;
    for (auto a : allowed) {
      if (a == f) return f;
    }
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
    throw InvalidInput("--format " + f + " is not available here (expected " + list + ")");
  }

  void emit(const std::string& text) const {
    if (cfg_.out.empty()) {
      out_ << text;
      out_.flush();
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidInput("cannot write output file '" + cfg_.out + "'");
    f << text;
  }

  void emit(const Json& j) const { emit(j.dump(2) + "\n"); }

  std::ostream& note() const { return err_; }
  const Config& cfg() const { return cfg_; }

 private:
  const Config& cfg_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

void emit_profile(const Command& c, const GameParams& game, const StrategyProfile& profile) {
  if (c.format({"json", "dot"}) == "dot") {
    c.emit(profile_to_dot(game, profile));
  } else {
    c.emit(to_canonical_json(game, profile) + "\n");
  }
  c.note() << "n=" << game.n() << " alpha=" << game.alpha() << " purchases="
           << profile.purchase_count() << "\n";
}

void cmd_construct_star(const Command& c) {
  auto g = c.game();
  emit_profile(c, g, make_star(g.n()));
}

void cmd_construct_clique(const Command& c) {
  auto g = c.game();
  emit_profile(c, g, make_clique(g.n()));
}

void cmd_construct_clique_leaves(const Command& c) {
  Rational a = c.alpha();
  if (!a.is_integer() || a < Rational(2) || a > Rational(1 << 20)) {
    throw PreconditionError("clique-leaves needs integer alpha >= 2, got " + a.to_string());
  }
  CliqueLeavesSpec spec{c.cfg().k, static_cast<int>(a.numerator())};
  auto profile = make_clique_with_leaves(spec);
  emit_profile(c, GameParams(spec.n(), a), profile);
}

void cmd_construct_random(const Command& c) {
  auto g = c.game();
  std::uint64_t seed = c.seed("construct random");
  emit_profile(c, g, make_random_profile(g.n(), c.cfg().p, seed));
}

void cmd_cost(const Command& c) {
  auto doc = c.load();
  auto report = social_cost(doc.game, doc.profile, c.cfg().threads);
  if (c.format({"json", "csv"}) == "csv") {
    std::ostringstream os;
    os << "vertex,purchases,edge_cost,distance_sum,total\n";
    for (Vertex v = 0; v < doc.game.n(); ++v) {
      const auto& vc = report.vertices[v];
      os << v << ',' << doc.profile.purchases(v).size() << ',' << vc.edge_cost << ','
         << (vc.distance_sum ? std::to_string(*vc.distance_sum) : "") << ','
         << vc.total.to_string() << '\n';
    }
    c.emit(os.str());
  } else {
    c.emit(cost_report_to_json(doc.game, doc.profile, report));
  }
  c.note() << "social cost " << report.social_cost.to_string()
           << (report.connected ? "" : " (disconnected)") << "\n";
}

void cmd_check_nash(const Command& c) {
  c.format({"json"});
  auto doc = c.load();
  auto verdict = is_nash(doc.game, doc.profile, c.exhaustive());
  c.emit(verdict_to_json(verdict));
  c.note() << "weak Nash: " << (verdict.is_weak_nash ? "yes" : "no")
           << ", strict Nash: " << (verdict.is_strict_nash ? "yes" : "no") << "\n";
}

void cmd_best_response(const Command& c) {
  c.format({"json"});
  auto doc = c.load();
  const Vertex v = c.cfg().vertex;
  auto br = best_response_exact(doc.game, doc.profile, v, c.exhaustive());
  Cost current = vertex_cost(doc.game, doc.profile, v);
  c.emit(Json{{"vertex", v},
              {"current_purchases", vertices_json(doc.profile.purchases(v))},
              {"current_cost", current.to_string()},
              {"best_purchases", vertices_json(br.purchases)},
              {"best_cost", br.cost.to_string()},
              {"improves", br.cost < current}});
  c.note() << "vertex " << v << ": " << current.to_string() << " -> " << br.cost.to_string()
           << "\n";
}

void cmd_dynamics(const Command& c) {
  c.format({"json"});
  auto doc = c.load();
  const auto& cfg = c.cfg();
  DynamicsOptions opts;
  if (cfg.schedule == "round-robin") {
    opts.schedule = Schedule::kRoundRobin;
  } else if (cfg.schedule == "random") {
    opts.schedule = Schedule::kSeededRandom;
    opts.seed = c.seed("dynamics --schedule random");
  } else {
    throw InvalidInput("--schedule must be round-robin or random, got '" + cfg.schedule + "'");
  }
  if (cfg.tie_break == "incumbent") {
    opts.tie_break = TieBreak::kPreferIncumbent;
  } else if (cfg.tie_break == "lex") {
    opts.tie_break = TieBreak::kLexLeast;
  } else {
    throw InvalidInput("--tie-break must be incumbent or lex, got '" + cfg.tie_break + "'");
  }
  opts.max_rounds = cfg.max_rounds;
  opts.exhaustive = c.exhaustive();
  auto result = best_response_dynamics(doc.game, doc.profile, opts);
  Json j{{"n", doc.game.n()},
         {"alpha", doc.game.alpha().to_string()},
         {"schedule", cfg.schedule},
         {"tie_break", cfg.tie_break}};
  if (opts.schedule == Schedule::kSeededRandom) j["seed"] = opts.seed;
  j["fixed_point"] = result.fixed_point;
  j["rounds"] = result.rounds;
  j["changes"] = result.trajectory.size() - 1;
  j["final"] = profile_to_json(doc.game, result.trajectory.back());
  c.emit(j);
  c.note() << (result.fixed_point ? "reached a fixed point" : "stopped at max rounds") << " after "
           << result.rounds << " rounds\n";
}

void cmd_partition(const Command& c) {
  c.format({"json"});
  auto doc = c.load();
  auto graph = build_graph(doc.profile);
  auto p = layer_partition(graph, c.cfg().root);
  c.emit(partition_to_json(p, children_map(p, graph)));
  c.note() << "root " << p.root << ", " << p.depth() << " layers\n";
}

void cmd_audit(const Command& c) {
  auto fmt = c.format({"json", "csv"});
  auto doc = c.load();
  auto report = lemma_audit(doc.game, doc.profile, !c.cfg().skip_certify, c.exhaustive());
  if (fmt == "csv") {
    c.emit(audit_to_csv(report));
  } else {
    c.emit(audit_to_json(report));
  }
  c.note() << "all applicable checks passed: " << (report.all_applicable_passed() ? "yes" : "no")
           << "\n";
}

void cmd_enumerate(const Command& c) {
  auto fmt = c.format({"json", "csv"});
  auto g = c.game();
  auto eqs = enumerate_equilibria(g, c.mode(), c.enumeration());
  if (fmt == "csv") {
    c.emit(equilibria_to_csv(eqs));
  } else {
    c.emit(equilibria_to_json(g, c.mode(), eqs));
  }
  c.note() << eqs.size() << " " << c.cfg().mode << " equilibria\n";
}

void cmd_poa(const Command& c) {
  auto fmt = c.format({"json", "csv"});
  auto r = price_of_anarchy_exact(c.game(), c.mode(), c.enumeration());
  if (fmt == "csv") {
    c.emit(sweep_to_csv({r}));
  } else {
    c.emit(poa_to_json(r));
  }
  c.note() << "PoA " << r.poa << " (" << r.worst_equilibrium << " / " << r.optimum << ")\n";
}

void cmd_sweep(const Command& c) {
  auto fmt = c.format({"csv", "json"});
  const auto& cfg = c.cfg();
  if (cfg.n_list.empty() || cfg.alpha_list.empty()) {
    throw InvalidInput("sweep needs --n and --alpha lists");
  }
  std::vector<Rational> alphas;
  for (const auto& a : cfg.alpha_list) alphas.push_back(Rational::parse(a));
  auto rows = poa_sweep(cfg.n_list, alphas, c.mode(), c.enumeration());
  if (fmt == "csv") {
    c.emit(sweep_to_csv(rows));
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(poa_to_json(r));
    c.emit(arr);
  }
  c.note() << rows.size() << " rows\n";
}

void cmd_bounds_lower(const Command& c) {
  c.format({"json"});
  Rational a = c.alpha();
  Rational b = poa_lower_bound_asymptote(a);
  c.emit(Json{{"bound", "lower"},
              {"alpha", a.to_string()},
              {"value", b.to_string()},
              {"approx", b.to_double()}});
  c.note() << b << "\n";
}

void cmd_bounds_upper(const Command& c) {
  c.format({"json"});
  Rational a = c.alpha();
  if (c.cfg().n < 1) throw InvalidInput("--n is required");
  double b = poa_upper_bound_formula(a, static_cast<std::uint64_t>(c.cfg().n));
  c.emit(Json{{"bound", "upper"}, {"alpha", a.to_string()}, {"n", c.cfg().n}, {"value", b}});
  c.note() << b << "\n";
}

void cmd_export_dot(const Command& c) {
  c.format({"dot"});
  auto doc = c.load();
  c.emit(profile_to_dot(doc.game, doc.profile));
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Network creation game toolkit", "netcreate"};
  app.require_subcommand(1);
  std::map<const CLI::App*, std::function<void(const Command&)>> actions;

  auto in_opt = [&](CLI::App* s) {
    s->add_option("--in", cfg.in, "profile JSON path, '-' for stdin");
    s->add_option("--alpha", cfg.alpha, "edge price p/q, overrides the file");
  };
  auto out_opt = [&](CLI::App* s) {
    s->add_option("--out", cfg.out, "output path (default stdout)");
    s->add_option("--format", cfg.format, "json|csv|dot");
    s->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };
  auto exhaustive_opt = [&](CLI::App* s) {
    s->add_option("--limit-exhaustive", cfg.limit_exhaustive, "largest n for exhaustive search");
  };
  auto enum_opt = [&](CLI::App* s) {
    s->add_option("--limit-enumeration", cfg.limit_enumeration, "largest n for enumeration");
    s->add_option("--mode", cfg.mode, "weak|strict");
  };
  auto game_opt = [&](CLI::App* s) {
    s->add_option("--n", cfg.n, "number of agents")->required();
    s->add_option("--alpha", cfg.alpha, "edge price p/q")->required();
  };
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                 void (*fn)(const Command&)) {
    CLI::App* s = parent->add_subcommand(name, desc);
    out_opt(s);
    actions[s] = fn;
    return s;
  };

  auto* construct = app.add_subcommand("construct", "generate a named profile");
  construct->require_subcommand(1);
  game_opt(add(construct, "star", "vertex 0 buys every edge", cmd_construct_star));
  game_opt(add(construct, "clique", "complete graph, lower id buys", cmd_construct_clique));
  {
    auto* s = add(construct, "clique-leaves", "k-clique, each vertex buys alpha-1 leaves",
                  cmd_construct_clique_leaves);
    s->add_option("--k", cfg.k, "clique size");
    s->add_option("--alpha", cfg.alpha, "integer edge price")->required();
  }
  {
    auto* s = add(construct, "random", "random pairs, random buyer", cmd_construct_random);
    game_opt(s);
    s->add_option("--p", cfg.p, "edge probability");
    s->add_option("--seed", cfg.seed, "RNG seed")->required();
  }

  in_opt(add(&app, "cost", "per-vertex and social cost", cmd_cost));
  {
    auto* s = add(&app, "check-nash", "exhaustive weak/strict Nash test", cmd_check_nash);
    in_opt(s);
    exhaustive_opt(s);
  }
  {
    auto* s = add(&app, "best-response", "exact best response of one vertex", cmd_best_response);
    in_opt(s);
    exhaustive_opt(s);
    s->add_option("--vertex", cfg.vertex, "deviating vertex")->required();
  }
  {
    auto* s = add(&app, "dynamics", "best-response dynamics", cmd_dynamics);
    in_opt(s);
    exhaustive_opt(s);
    s->add_option("--schedule", cfg.schedule, "round-robin|random");
    s->add_option("--tie-break", cfg.tie_break, "incumbent|lex");
    s->add_option("--seed", cfg.seed, "RNG seed for the random schedule");
    s->add_option("--max-rounds", cfg.max_rounds, "pass limit");
  }
  {
    auto* s = add(&app, "partition", "distance layers and children", cmd_partition);
    in_opt(s);
    s->add_option("--root", cfg.root, "root vertex");
  }
  {
    auto* s = add(&app, "audit", "structural inequalities at every root", cmd_audit);
    in_opt(s);
    exhaustive_opt(s);
    s->add_flag("--no-certify", cfg.skip_certify, "skip the weak-Nash certification");
  }
  {
    auto* s = add(&app, "enumerate", "all equilibria of a tiny game", cmd_enumerate);
    game_opt(s);
    enum_opt(s);
  }
  {
    auto* s = add(&app, "poa", "exact price of anarchy", cmd_poa);
    game_opt(s);
    enum_opt(s);
  }
  {
    auto* s = add(&app, "sweep", "price of anarchy over a grid", cmd_sweep);
    s->add_option("--n", cfg.n_list, "comma separated n values")->required()->delimiter(',');
    s->add_option("--alpha", cfg.alpha_list, "comma separated prices")->required()->delimiter(',');
    enum_opt(s);
  }
  auto* bounds = app.add_subcommand("bounds", "closed-form price of anarchy bounds");
  bounds->require_subcommand(1);
  add(bounds, "lower", "integer-alpha lower bound asymptote", cmd_bounds_lower)
      ->add_option("--alpha", cfg.alpha, "edge price")
      ->required();
  {
    auto* s = add(bounds, "upper", "upper bound for non-integral alpha", cmd_bounds_upper);
    s->add_option("--alpha", cfg.alpha, "edge price")->required();
    s->add_option("--n", cfg.n, "number of agents")->required();
  }
  in_opt(add(&app, "export-dot", "Graphviz rendering, buyer at the tail", cmd_export_dot));

  if (argc > 1 && argv[1][0] != '-') {
    bool known = false;
    for (const auto* s : app.get_subcommands({})) known = known || s->check_name(argv[1]);
    if (!known) {
      err << "error: unknown subcommand '" << argv[1] << "'\n";
      return kMalformed;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: invalid command line: " << e.what() << "\n";
    return kMalformed;
  }

  const CLI::App* selected = &app;
  while (!selected->get_subcommands().empty()) selected = selected->get_subcommands().front();
  auto it = actions.find(selected);
  if (it == actions.end()) {
    err << "error: unknown subcommand\n";
    return kMalformed;
  }

  Command cmd(cfg, in, out, err);
  try {
    it->second(cmd);
  } catch (const PreconditionError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const TrialsExhausted& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kOk;
}

}  // namespace netcreate::cli
