// acq: command-line front end for the acquaintance-process toolkit.
//
// Exit codes: 0 success, 1 usage or parse failure, 2 illegal schedule,
// 3 legal but incomplete schedule, 4 capability limit (size cap, no
// Hamiltonian path found, wrong graph class).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acq/bounds.hpp"
#include "acq/exact.hpp"
#include "acq/experiment.hpp"
#include "acq/graph.hpp"
#include "acq/process.hpp"
#include "acq/strategies.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kIllegal = 2;
constexpr int kIncomplete = 3;
constexpr int kCapability = 4;

struct Failure {
  int code;
  std::string message;
};

acq::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kUsage, "cannot open graph file " + path};
  try {
    return acq::read_graph(in);
  } catch (const acq::GraphError& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

acq::Schedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kUsage, "cannot open schedule file " + path};
  try {
    return acq::read_schedule_json(in);
  } catch (const acq::ScheduleMismatch& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

// Output file if given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Failure{kUsage, "cannot write " + path};
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct GenArgs {
  std::size_t n = 0;
  double p = 0.5;
  acq::Seed seed = 0;
  std::string type = "gnp";
  std::size_t spine = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  acq::Graph g;
  if (a.type == "gnp") {
    g = acq::gnp_sample(a.n, a.p, a.seed);
  } else if (a.type == "tree") {
    g = acq::random_tree(a.n, a.seed).graph();
  } else {
    const std::size_t spine = a.spine ? a.spine : std::max<std::size_t>(2, a.n / 4);
    if (spine > a.n || a.n < 2) throw Failure{kUsage, "caterpillar needs 2 <= spine <= n"};
    g = acq::random_caterpillar(a.n, spine, a.seed).tree.graph();
  }
  Output out(a.out);
  acq::write_graph(out.stream(), g);
  return 0;
}

struct StrategyArgs {
  std::string graph;
  std::string algo = "general";
  double p = -1;
  std::string mode = "direct";
  double eps = 1.0;
  acq::Seed seed = 0;
  std::string out;
};

acq::Tree require_tree(const acq::Graph& g) {
  try {
    return acq::Tree(g);
  } catch (const acq::GraphError&) {
    throw Failure{kCapability, "graph is not a tree"};
  }
}

int cmd_strategy(const StrategyArgs& a) {
  const acq::Graph g = load_graph(a.graph);
  Output out(a.out);
  try {
    if (a.algo == "oscillation" || a.algo == "team") {
      if (a.algo == "oscillation") {
        auto path = acq::find_hamiltonian_path(g, a.seed);
        if (!path) throw acq::NoHamiltonianPath();
        acq::write_schedule_json(out.stream(), acq::oscillation_on(*path, g.n()));
        return 0;
      }
      const double pairs = static_cast<double>(g.n()) * static_cast<double>(g.n() - 1) / 2.0;
      const double p = a.p > 0 ? a.p : static_cast<double>(g.m()) / pairs;
      const auto mode = a.mode == "strict" ? acq::TeamMode::strict : acq::TeamMode::direct;
      acq::write_schedule_json(out.stream(), acq::gnp_team_strategy(g, p, mode, a.eps, a.seed));
      return 0;
    }
    if (a.algo == "caterpillar") {
      acq::Tree t = require_tree(g);
      auto shape = acq::caterpillar_of(t);
      if (!shape) throw Failure{kCapability, "tree is not a caterpillar"};
      acq::JsonScheduleWriter w(out.stream(), g.n());
      acq::caterpillar_strategy(acq::CaterpillarTree{t, *shape}, w);
      return 0;
    }
    if (a.algo == "tree") {
      acq::Tree t = require_tree(g);
      acq::JsonScheduleWriter w(out.stream(), g.n());
      acq::tree_strategy(t, w);
      return 0;
    }
    acq::JsonScheduleWriter w(out.stream(), g.n());
    acq::general_graph_strategy(g, w);
    return 0;
  } catch (const acq::NoHamiltonianPath& e) {
    throw Failure{kCapability, e.what()};
  } catch (const acq::DisconnectedGraph& e) {
    throw Failure{kCapability, e.what()};
  } catch (const acq::bounds::BoundsError& e) {
    throw Failure{kUsage, e.what()};
  }
}

// Shared by run and verify. Returns 0 / 2 / 3 and prints the report.
int replay(const std::string& graph_path, const std::string& schedule_path, bool verify) {
  const acq::Graph g = load_graph(graph_path);
  const acq::Schedule s = load_schedule(schedule_path);
  try {
    const acq::RunReport r = acq::run_schedule(g, s);
    acq::write_report_json(std::cout, r);
    return verify && !r.completed ? kIncomplete : 0;
  } catch (const acq::ProcessError& e) {
    std::cerr << "illegal schedule";
    if (e.round) std::cerr << " at round " << *e.round;
    std::cerr << ": " << e.what() << '\n';
    return kIllegal;
  }
}

struct ExactArgs {
  std::string what;
  std::string graph;
  bool allow_six = false;
};

int cmd_exact(const ExactArgs& a) {
  const acq::Graph g = load_graph(a.graph);
  const std::size_t cap = a.allow_six ? acq::exact::kHardMaxN : acq::exact::kDefaultMaxN;
  try {
    std::size_t v = 0;
    if (a.what == "ac") {
      v = acq::exact::exact_ac(g, cap);
    } else if (a.what == "bac") {
      v = acq::exact::exact_bac(g, cap);
    } else {
      v = acq::exact::cover_number(g, cap);
    }
    std::cout << v << '\n';
    return 0;
  } catch (const acq::exact::TooLarge& e) {
    throw Failure{kCapability, e.what()};
  } catch (const acq::exact::NoCover& e) {
    throw Failure{kCapability, e.what()};
  } catch (const acq::DisconnectedGraph& e) {
    throw Failure{kCapability, e.what()};
  }
}

struct BoundsArgs {
  std::size_t n = 0;
  double p = 0;
  double eps = 1.0;
  std::int64_t m = -1;
};

int cmd_bounds(const BoundsArgs& a) {
  try {
    std::optional<std::uint64_t> m;
    if (a.m >= 0) m = static_cast<std::uint64_t>(a.m);
    acq::bounds::write_report_json(std::cout, acq::bounds::evaluate(a.n, a.p, a.eps, m));
    return 0;
  } catch (const acq::bounds::BoundsError& e) {
    throw Failure{kUsage, e.what()};
  }
}

int cmd_experiment(const std::string& config_path, const std::string& out_override) {
  std::ifstream in(config_path);
  if (!in) throw Failure{kUsage, "cannot open config " + config_path};
  std::stringstream text;
  text << in.rdbuf();
  acq::experiment::Config cfg;
  try {
    cfg = acq::experiment::parse_config(text.str());
  } catch (const acq::experiment::ConfigError& e) {
    throw Failure{kUsage, e.what()};
  }
  const auto rows = acq::experiment::run(cfg, acq::experiment::threads_from_env());
  Output out(out_override.empty() ? cfg.output : out_override);
  acq::experiment::write_csv(out.stream(), rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acquaintance-time simulator, strategies and exact solver"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Sample a graph and print it in the graph text format");
  g->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  g->add_option("--p", gen.p, "Edge probability for gnp")->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--type", gen.type, "gnp | tree | caterpillar")
      ->check(CLI::IsMember({"gnp", "tree", "caterpillar"}));
  g->add_option("--spine", gen.spine, "Spine length for caterpillars (default n/4)");
  g->add_option("-o,--out", gen.out, "Output file (default stdout)");

  StrategyArgs strat;
  auto* s = app.add_subcommand("strategy", "Emit a strategy schedule as JSON");
  s->add_option("--graph", strat.graph, "Graph file")->required();
  s->add_option("--algo", strat.algo, "oscillation | team | caterpillar | tree | general")
      ->check(CLI::IsMember({"oscillation", "team", "caterpillar", "tree", "general"}));
  s->add_option("--p", strat.p, "Edge probability for team sizing (default: graph density)");
  s->add_option("--mode", strat.mode, "direct | strict")->check(CLI::IsMember({"direct", "strict"}));
  s->add_option("--eps", strat.eps, "eps for strict mode");
  s->add_option("--seed", strat.seed, "Seed for the Hamiltonian path search");
  s->add_option("-o,--out", strat.out, "Output file (default stdout)");

  std::string run_graph, run_schedule;
  auto* r = app.add_subcommand("run", "Replay a schedule and print the run report");
  r->add_option("--graph", run_graph)->required();
  r->add_option("--schedule", run_schedule)->required();

  std::string ver_graph, ver_schedule;
  auto* v = app.add_subcommand("verify", "Exit 0 iff the schedule is legal and completes");
  v->add_option("--graph", ver_graph)->required();
  v->add_option("--schedule", ver_schedule)->required();

  ExactArgs ex;
  auto* e = app.add_subcommand("exact", "Exact AC, helicopter AC or cover number of a tiny graph");
  e->add_option("what", ex.what, "ac | bac | cover")->required()->check(CLI::IsMember({"ac", "bac", "cover"}));
  e->add_option("--graph", ex.graph)->required();
  e->add_flag("--allow-6", ex.allow_six, "Raise the size cap from 5 to 6 vertices");

  BoundsArgs bd;
  auto* b = app.add_subcommand("bounds", "Evaluate the bound formulas as JSON");
  b->add_option("--n", bd.n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 31));
  b->add_option("--p", bd.p)->required()->check(CLI::Range(0.0, 1.0));
  b->add_option("--eps", bd.eps);
  b->add_option("--m", bd.m, "Edge count for the counting bound (default round(p*C(n,2)))");

  std::string cfg_path, cfg_out;
  auto* x = app.add_subcommand("experiment", "Run an experiment grid and write CSV");
  x->add_option("--config", cfg_path)->required();
  x->add_option("-o,--out", cfg_out, "Output file (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*s) return cmd_strategy(strat);
    if (*r) return replay(run_graph, run_schedule, false);
    if (*v) return replay(ver_graph, ver_schedule, true);
    if (*e) return cmd_exact(ex);
    if (*b) return cmd_bounds(bd);
    if (*x) return cmd_experiment(cfg_path, cfg_out);
  } catch (const Failure& f) {
    std::cerr << "acq: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& ex_) {
    std::cerr << "acq: " << ex_.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
