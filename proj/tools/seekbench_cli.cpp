// Operator entry point: generate instances, run experiments, pool,
// analyze, and query the parallelization theory.
//
// Exit codes: 0 success, 2 configuration error, 3 episode failure.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "seekbench/analysis.hpp"
#include "seekbench/baselines.hpp"
#include "seekbench/harness.hpp"
#include "seekbench/presets.hpp"
#include "seekbench/subprocess.hpp"
#include "seekbench/theory.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;
using namespace seekbench;

namespace {

constexpr const char* kVersion = "seekbench 0.1.0";

fs::path resolve_out(const std::string& path) {
  fs::path p(path);
  if (p.is_absolute()) return p;
  if (const char* base = std::getenv("SEEKBENCH_OUT")) {
    return fs::path(base) / p;
  }
  return p;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::string> split_command(const std::string& cmd) {
  std::vector<std::string> out;
  std::stringstream ss(cmd);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

struct RunOptions {
  std::string instance_path;
  std::string preset;
  std::string agent = "baseline";
  std::vector<int> budgets{48};
  int episodes = 0;  // 0 = per-task default run count
  std::uint64_t seed = 1;
  int parallel_p = 1;
  int summary_s = 1;
  int jobs = 1;
  int retry_silent = 20;
  int retry_feedback = 5;
  double agent_timeout = 120.0;
  bool allow_remainder = false;
  double hill_alpha = 0.8;
  double hill_beta = 0.05;
  double tree_tau = 4.0;
  double sat_alpha = 0.5;
  std::string out = "logs.jsonl";
};

int default_episode_count(Task task, bool external) {
  if (external) return 50;
  return task == Task::hill ? 500 : 200;
}

AnyInstance load_run_instance(const RunOptions& opt) {
  if (!opt.preset.empty()) return presets::make(opt.preset);
  if (opt.instance_path.empty()) {
    throw CLI::ValidationError("run", "need --instance or --preset");
  }
  return load_instance(opt.instance_path);
}

std::unique_ptr<Agent> make_agent(const RunOptions& opt,
                                  const AnyInstance& inst, int budget,
                                  std::uint64_t seed) {
  if (opt.agent == "baseline") {
    return baselines::make_baseline(
        inst, budget, seed, baselines::HillParams{opt.hill_alpha, opt.hill_beta},
        baselines::TreeParams{opt.tree_tau},
        baselines::SatParams{opt.sat_alpha});
  }
  if (opt.agent.rfind("cmd:", 0) == 0) {
    const int sat_vars =
        inst.task() == Task::sat ? inst.as_sat().n : 0;
    return std::make_unique<subprocess::ProcessAgent>(
        split_command(opt.agent.substr(4)), inst.task(), sat_vars,
        subprocess::ProtocolConfig{opt.agent_timeout});
  }
  throw CLI::ValidationError("run",
                             "--agent must be \"baseline\" or \"cmd:<command>\"");
}

ordered_json agent_params_json(const RunOptions& opt, Task task) {
  if (opt.agent != "baseline") return ordered_json{{"command", opt.agent}};
  switch (task) {
    case Task::hill:
      return ordered_json{{"alpha", opt.hill_alpha}, {"beta", opt.hill_beta}};
    case Task::tree:
      return ordered_json{{"tau", opt.tree_tau}};
    case Task::sat:
      return ordered_json{{"alpha", opt.sat_alpha}};
  }
  return ordered_json::object();
}

int cmd_run(const RunOptions& opt) {
  const AnyInstance inst = load_run_instance(opt);
  const bool external = opt.agent != "baseline";
  const int episodes = opt.episodes > 0
                           ? opt.episodes
                           : default_episode_count(inst.task(), external);

  struct Cell {
    int budget;
    int episode;
  };
  std::vector<Cell> cells;
  for (int budget : opt.budgets) {
    for (int e = 0; e < episodes; ++e) cells.push_back({budget, e});
  }

  // One slot per cell; parallel cells hold the p thread logs.
  std::vector<std::vector<harness::EpisodeLog>> cell_logs(cells.size());
  std::vector<double> cell_rewards(cells.size(), 0.0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::atomic<int> episode_failures{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size() || failed.load()) return;
      const auto [budget, episode] = cells[i];
      const std::uint64_t cell_seed =
          Rng::derive(opt.seed, (static_cast<std::uint64_t>(budget) << 32) |
                                    static_cast<std::uint64_t>(episode));
      try {
        harness::EpisodeConfig cfg;
        cfg.budget = budget;
        cfg.seed = cell_seed;
        cfg.retry = harness::RetryPolicy{opt.retry_silent, opt.retry_feedback};
        cfg.summary_s = opt.summary_s;
        cfg.agent_id = opt.agent;
        cfg.agent_params = agent_params_json(opt, inst.task());
        if (opt.parallel_p > 1) {
          auto factory = [&](int, int thread_budget,
                             std::uint64_t thread_seed) {
            return make_agent(opt, inst, thread_budget, thread_seed);
          };
          auto result =
              harness::run_parallel(inst, factory, budget, opt.parallel_p,
                                    cell_seed, cfg, opt.allow_remainder);
          cell_rewards[i] = result.reward;
          cell_logs[i] = std::move(result.logs);
        } else {
          auto agent = make_agent(opt, inst, budget, cell_seed);
          cell_logs[i].push_back(harness::run_episode(inst, *agent, cfg));
          cell_rewards[i] = cell_logs[i].back().normalized_reward;
        }
        for (const auto& log : cell_logs[i]) {
          if (log.termination == harness::Termination::agent_crash ||
              log.termination == harness::Termination::timeout) {
            episode_failures.fetch_add(1);
          }
        }
      } catch (const std::exception& e) {
        std::cerr << "episode failed: " << e.what() << "\n";
        failed.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  const int jobs = std::max(1, opt.jobs);
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load()) return 3;

  const fs::path out_path = resolve_out(opt.out);
  if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  std::size_t written = 0;
  for (const auto& group : cell_logs) {
    for (const auto& log : group) {
      harness::append_log_line(out, log);
      ++written;
    }
  }
  if (opt.parallel_p > 1) {
    const double mean_best =
        std::accumulate(cell_rewards.begin(), cell_rewards.end(), 0.0) /
        static_cast<double>(cell_rewards.size());
    std::cout << "mean best-of-" << opt.parallel_p << " reward: " << mean_best
              << "\n";
  }

  ordered_json manifest;
  manifest["schema"] = "seekbench.manifest.v1";
  manifest["version"] = kVersion;
  manifest["instance"] = inst.id;
  manifest["instance_digest"] = instance_digest(inst);
  manifest["task"] = task_name(inst.task());
  manifest["agent"] = opt.agent;
  manifest["budgets"] = opt.budgets;
  manifest["episodes"] = episodes;
  manifest["master_seed"] = opt.seed;
  manifest["parallel_p"] = opt.parallel_p;
  manifest["summary_s"] = opt.summary_s;
  std::ofstream mout(out_path.string() + ".manifest.json");
  mout << manifest.dump(2) << '\n';

  std::cout << "wrote " << written << " episode logs to " << out_path << "\n";
  return episode_failures.load() > 0 ? 3 : 0;
}

int cmd_gen(CLI::App* sub, const std::string& task_str,
            const std::string& preset, const std::string& out,
            const std::string& public_out, std::uint64_t seed,
            const std::map<std::string, double>& numeric) {
  AnyInstance inst;
  if (!preset.empty()) {
    inst = presets::make(preset);
  } else {
    const Task task = task_from_name(task_str);
    auto get = [&](const char* name, double fallback) {
      const auto it = numeric.find(name);
      return it != numeric.end() && sub->count(std::string("--") + name)
                 ? it->second
                 : fallback;
    };
    switch (task) {
      case Task::hill: {
        hill::GenParams p;
        p.k = static_cast<int>(get("k", 3));
        p.k_prime = static_cast<int>(get("k-prime", 4));
        p.jitter_decoy = get("jitter-decoy", 0.1);
        p.jitter_needle = get("jitter-needle", 0.2);
        p.width_decoy = get("width-decoy", 0.01);
        p.width_needle = get("width-needle", 0.008);
        p.seed = seed;
        inst.payload = hill::generate(p);
        break;
      }
      case Task::tree: {
        tree::GenParams p;
        p.r_trap = static_cast<int>(get("r-trap", 3));
        p.r_good = static_cast<int>(get("r-good", 3));
        p.fanout = static_cast<int>(get("fanout", 5));
        p.d_trap = static_cast<int>(get("d-trap", 40));
        p.d_good = static_cast<int>(get("d-good", 12));
        p.seed = seed;
        inst.payload = tree::generate(p);
        break;
      }
      case Task::sat: {
        maxsat::GenParams p;
        p.n = static_cast<int>(get("n", 15));
        p.m = static_cast<int>(get("m", 120));
        p.k_gold = static_cast<int>(get("k-gold", 4));
        p.k_other = static_cast<int>(get("k-other", 2));
        p.w_gold = static_cast<int>(get("w-gold", 80));
        p.seed = seed;
        inst.payload = maxsat::generate(p);
        break;
      }
    }
    inst.id = std::string(task_name(task)) + "-seed" + std::to_string(seed);
  }

  const fs::path out_path = resolve_out(out);
  if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
  save_instance(out_path, inst);
  if (!public_out.empty()) {
    save_instance_public(resolve_out(public_out), inst);
  }

  switch (inst.task()) {
    case Task::hill: {
      const auto& h = inst.as_hill();
      std::cout << "hill instance: " << h.hills.size() << " hills, needle height "
                << h.hills[static_cast<std::size_t>(h.needle_index)].height
                << ", global max " << h.global_max << "\n";
      break;
    }
    case Task::tree: {
      const auto& t = inst.as_tree();
      std::cout << "tree instance: " << t.node_count << " nodes, max value "
                << t.max_value << "\n";
      break;
    }
    case Task::sat: {
      const auto& s = inst.as_sat();
      std::cout << "sat instance: n=" << s.n << ", m=" << s.m
                << ", w_gold=" << s.w_gold << "\n";
      break;
    }
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_pool(const std::string& logs_path, const std::string& ps_csv,
             int total_budget) {
  const auto logs = harness::load_log_file(resolve_out(logs_path));
  if (logs.empty()) {
    std::cerr << "no logs in " << logs_path << "\n";
    return 2;
  }
  const auto runsets = analysis::group_logs(logs);
  std::vector<int> ps = parse_int_list(ps_csv);
  if (ps.empty()) ps = {2, 3, 4};
  std::cout << analysis::emit_pooled_table(runsets, total_budget, ps);
  return 0;
}

int cmd_analyze(const std::string& logs_path, const std::string& out_dir) {
  const auto logs = harness::load_log_file(resolve_out(logs_path));
  if (logs.empty()) {
    std::cerr << "no logs in " << logs_path << "\n";
    return 2;
  }
  const auto runsets = analysis::group_logs(logs);
  const std::string table = analysis::emit_reward_table(runsets);
  std::cout << table;

  // Scaling series per (task, instance, agent), across budgets.
  std::map<std::string, std::map<int, std::vector<double>>> series;
  for (const auto& rs : runsets) {
    if (rs.key.parallel_p != 1 || rs.key.summary_s != 1) continue;
    const std::string name =
        rs.key.task + "_" + rs.key.instance + "_" + rs.key.agent;
    series[name][rs.key.budget] = rs.rewards;
  }
  if (!out_dir.empty()) {
    const fs::path dir = resolve_out(out_dir);
    fs::create_directories(dir);
    std::ofstream(dir / "rewards.tsv") << table;
    for (const auto& [name, by_budget] : series) {
      const auto pts = analysis::scaling_series(by_budget);
      std::string safe = name;
      for (char& c : safe) {
        if (c == '/' || c == ' ' || c == ':') c = '-';
      }
      std::ofstream(dir / ("series_" + safe + ".tsv"))
          << analysis::emit_series_tsv(pts);
    }
    std::cout << "wrote tables to " << dir << "\n";
  }
  return 0;
}

int cmd_theory(int p, double alpha, double c, int grid) {
  theory::PowerLawModel model{c, alpha};
  const double y_star = theory::solve_root(p, alpha);
  const auto threshold = theory::budget_threshold(model, p);
  std::cout << "y*_" << p << " = " << y_star << "\n";
  std::cout << "v_" << p << " = " << threshold.v_p
            << "  (clamped to domain: " << threshold.clamped << ")\n";
  std::cout << "x\tq(x)\tsplit_gain\tbeneficial\n";
  for (int i = 1; i <= grid; ++i) {
    const double x = static_cast<double>(i) / grid;
    const double qx = model.q(x);
    const double split = 1.0 - std::pow(1.0 - model.q(x / p), p);
    std::cout << x << '\t' << qx << '\t' << split - qx << '\t'
              << (theory::benefit_condition(model, x, p) ? "yes" : "no")
              << "\n";
  }
  return 0;
}

int cmd_sweep(const std::string& kind, const std::string& task_str, int budget,
              int episodes, std::uint64_t seed, const std::string& out) {
  const Task task = task_from_name(task_str);
  std::ostringstream tsv;

  auto run_cell = [&](const AnyInstance& inst, double param_value,
                      baselines::HillParams hp, baselines::TreeParams tp,
                      baselines::SatParams sp) {
    std::vector<double> rewards;
    rewards.reserve(static_cast<std::size_t>(episodes));
    for (int e = 0; e < episodes; ++e) {
      const std::uint64_t s = Rng::derive(seed, static_cast<std::uint64_t>(e));
      auto agent = baselines::make_baseline(inst, budget, s, hp, tp, sp);
      harness::EpisodeConfig cfg;
      cfg.budget = budget;
      cfg.seed = s;
      cfg.agent_id = "baseline";
      rewards.push_back(
          harness::run_episode(inst, *agent, cfg).normalized_reward);
    }
    const double mean =
        std::accumulate(rewards.begin(), rewards.end(), 0.0) /
        static_cast<double>(rewards.size());
    const double se = analysis::bootstrap_stderr(rewards, 2000, seed);
    tsv << param_value << '\t' << mean << '\t' << se << '\n';
  };

  if (kind == "difficulty") {
    tsv << "level\tmean\tstderr\n";
    switch (task) {
      case Task::hill:
        for (const auto& p : presets::hill_difficulty_sweep(seed)) {
          AnyInstance inst;
          inst.id = "hill-sweep-k" + std::to_string(p.k_prime);
          inst.payload = hill::generate(p);
          run_cell(inst, p.k_prime, {}, {}, {});
        }
        break;
      case Task::tree:
        for (const auto& p : presets::tree_difficulty_sweep(seed)) {
          AnyInstance inst;
          inst.id = "tree-sweep-rg" + std::to_string(p.r_good);
          inst.payload = tree::generate(p);
          run_cell(inst, p.r_good, {}, {}, {});
        }
        break;
      case Task::sat:
        for (const auto& p : presets::sat_difficulty_sweep(seed)) {
          AnyInstance inst;
          inst.id = "sat-sweep-kg" + std::to_string(p.k_gold);
          inst.payload = maxsat::generate(p);
          run_cell(inst, p.k_gold, {}, {}, {});
        }
        break;
    }
  } else if (kind == "baseline-param") {
    tsv << "param\tmean\tstderr\n";
    const AnyInstance inst =
        presets::make(std::string(task_name(task)) + "-main");
    switch (task) {
      case Task::hill:
        for (int i = 0; i <= 10; ++i) {
          const double a = i / 10.0;
          run_cell(inst, a, baselines::HillParams{a, 0.05}, {}, {});
        }
        break;
      case Task::tree:
        for (int i = 0; i <= 12; ++i) {
          const double tau = i * 0.5;
          run_cell(inst, tau, {}, baselines::TreeParams{tau}, {});
        }
        break;
      case Task::sat:
        for (int i = 0; i <= 10; ++i) {
          const double a = i / 10.0;
          run_cell(inst, a, {}, {}, baselines::SatParams{a});
        }
        break;
    }
  } else {
    std::cerr << "--kind must be difficulty or baseline-param\n";
    return 2;
  }

  if (out.empty()) {
    std::cout << tsv.str();
  } else {
    const fs::path out_path = resolve_out(out);
    if (out_path.has_parent_path())
      fs::create_directories(out_path.parent_path());
    std::ofstream(out_path) << tsv.str();
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

void apply_config_file(const std::string& path, RunOptions& opt,
                       const CLI::App* sub) {
  std::ifstream in(resolve_out(path));
  if (!in) throw CLI::ValidationError("run", "cannot read config " + path);
  json cfg = json::parse(in);
  auto overridden = [&](const char* flag) { return sub->count(flag) > 0; };
  if (cfg.contains("instance") && !overridden("--instance"))
    opt.instance_path = cfg["instance"].get<std::string>();
  if (cfg.contains("preset") && !overridden("--preset"))
    opt.preset = cfg["preset"].get<std::string>();
  if (cfg.contains("agent") && !overridden("--agent"))
    opt.agent = cfg["agent"].get<std::string>();
  if (cfg.contains("budgets") && !overridden("--budgets"))
    opt.budgets = cfg["budgets"].get<std::vector<int>>();
  if (cfg.contains("episodes") && !overridden("--episodes"))
    opt.episodes = cfg["episodes"].get<int>();
  if (cfg.contains("seed") && !overridden("--seed"))
    opt.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("parallel") && !overridden("--parallel"))
    opt.parallel_p = cfg["parallel"].get<int>();
  if (cfg.contains("summary") && !overridden("--summary"))
    opt.summary_s = cfg["summary"].get<int>();
  if (cfg.contains("jobs") && !overridden("--jobs"))
    opt.jobs = cfg["jobs"].get<int>();
  if (cfg.contains("out") && !overridden("--out"))
    opt.out = cfg["out"].get<std::string>();
  if (cfg.contains("hill_alpha") && !overridden("--hill-alpha"))
    opt.hill_alpha = cfg["hill_alpha"].get<double>();
  if (cfg.contains("hill_beta") && !overridden("--hill-beta"))
    opt.hill_beta = cfg["hill_beta"].get<double>();
  if (cfg.contains("tree_tau") && !overridden("--tree-tau"))
    opt.tree_tau = cfg["tree_tau"].get<double>();
  if (cfg.contains("sat_alpha") && !overridden("--sat-alpha"))
    opt.sat_alpha = cfg["sat_alpha"].get<double>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) +
               " - budgeted black-box exploration benchmark"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_task = "hill", gen_preset, gen_out = "instance.json",
              gen_public;
  std::uint64_t gen_seed = 1;
  std::map<std::string, double> gen_numeric;
  gen->add_option("--task", gen_task, "hill | tree | sat");
  gen->add_option("--preset", gen_preset,
                  "pinned instance (hill-main, hill-alt, tree-main, "
                  "tree-alt1, tree-alt2, sat-main)");
  gen->add_option("--out", gen_out, "output path (secret instance file)");
  gen->add_option("--public", gen_public, "also write the public projection");
  gen->add_option("--seed", gen_seed, "generator seed");
  for (const char* name :
       {"k", "k-prime", "jitter-decoy", "jitter-needle", "width-decoy",
        "width-needle", "r-trap", "r-good", "fanout", "d-trap", "d-good", "n",
        "m", "k-gold", "k-other", "w-gold"}) {
    gen->add_option(std::string("--") + name, gen_numeric[name]);
  }

  // --- run ---
  auto* run = app.add_subcommand("run", "run episodes and write JSONL logs");
  RunOptions ro;
  std::string run_config;
  std::string budgets_csv;
  run->add_option("--config", run_config, "JSON config file; flags override");
  run->add_option("--instance", ro.instance_path, "instance file (secret)");
  run->add_option("--preset", ro.preset, "pinned instance name");
  run->add_option("--agent", ro.agent, "\"baseline\" or \"cmd:<command>\"");
  run->add_option("--budgets", budgets_csv, "comma-separated budgets");
  run->add_option("--episodes", ro.episodes,
                  "episodes per budget (0 = per-task default)");
  run->add_option("--seed", ro.seed, "master seed");
  run->add_option("--parallel", ro.parallel_p, "split budget into p threads");
  run->add_option("--summary", ro.summary_s, "summaries per episode (s)");
  run->add_option("--jobs", ro.jobs, "concurrent episodes");
  run->add_option("--retry-silent", ro.retry_silent);
  run->add_option("--retry-feedback", ro.retry_feedback);
  run->add_option("--agent-timeout", ro.agent_timeout, "seconds per round");
  run->add_flag("--allow-remainder", ro.allow_remainder,
                "permit p that does not divide N (drops the remainder)");
  run->add_option("--hill-alpha", ro.hill_alpha);
  run->add_option("--hill-beta", ro.hill_beta);
  run->add_option("--tree-tau", ro.tree_tau);
  run->add_option("--sat-alpha", ro.sat_alpha);
  run->add_option("--out", ro.out, "log file (JSONL)");

  // --- pool ---
  auto* pool = app.add_subcommand("pool", "best-of-p pooling over logs");
  std::string pool_logs, pool_ps = "2,3,4";
  int pool_budget = 48;
  pool->add_option("--logs", pool_logs)->required();
  pool->add_option("--p", pool_ps, "comma-separated p values");
  pool->add_option("--total-budget", pool_budget);

  // --- analyze ---
  auto* analyze = app.add_subcommand("analyze", "tables and plot series");
  std::string an_logs, an_out;
  analyze->add_option("--logs", an_logs)->required();
  analyze->add_option("--out-dir", an_out, "directory for TSV outputs");

  // --- theory ---
  auto* th = app.add_subcommand("theory", "parallelization threshold");
  int th_p = 2, th_grid = 20;
  double th_alpha = 0.5, th_c = 1.0;
  th->add_option("--p", th_p);
  th->add_option("--alpha", th_alpha);
  th->add_option("--c", th_c);
  th->add_option("--grid", th_grid);

  // --- sweep ---
  auto* sweep = app.add_subcommand("sweep", "difficulty / parameter sweeps");
  std::string sw_kind = "difficulty", sw_task = "hill", sw_out;
  int sw_budget = 36, sw_episodes = 200;
  std::uint64_t sw_seed = 1;
  sweep->add_option("--kind", sw_kind, "difficulty | baseline-param");
  sweep->add_option("--task", sw_task);
  sweep->add_option("--budget", sw_budget);
  sweep->add_option("--episodes", sw_episodes);
  sweep->add_option("--seed", sw_seed);
  sweep->add_option("--out", sw_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen(gen, gen_task, gen_preset, gen_out, gen_public, gen_seed,
                     gen_numeric);
    }
    if (run->parsed()) {
      if (!run_config.empty()) apply_config_file(run_config, ro, run);
      if (run->count("--budgets")) ro.budgets = parse_int_list(budgets_csv);
      if (ro.budgets.empty()) {
        std::cerr << "no budgets given\n";
        return 2;
      }
      return cmd_run(ro);
    }
    if (pool->parsed()) return cmd_pool(pool_logs, pool_ps, pool_budget);
    if (analyze->parsed()) return cmd_analyze(an_logs, an_out);
    if (th->parsed()) return cmd_theory(th_p, th_alpha, th_c, th_grid);
    if (sweep->parsed()) {
      return cmd_sweep(sw_kind, sw_task, sw_budget, sw_episodes, sw_seed,
                       sw_out);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
