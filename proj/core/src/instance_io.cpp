#include "seekbench/instance_io.hpp"

#include <fstream>
#include <stdexcept>

namespace seekbench {

using nlohmann::json;
using nlohmann::ordered_json;

const char* task_name(Task task) {
  switch (task) {
    case Task::hill: return "hill";
    case Task::tree: return "tree";
    case Task::sat: return "sat";
  }
  return "?";
}

Task task_from_name(const std::string& name) {
  if (name == "hill") return Task::hill;
  if (name == "tree") return Task::tree;
  if (name == "sat") return Task::sat;
  throw std::invalid_argument("unknown task: " + name);
}

Task AnyInstance::task() const {
  if (std::holds_alternative<hill::Instance>(payload)) return Task::hill;
  if (std::holds_alternative<tree::Instance>(payload)) return Task::tree;
  return Task::sat;
}

double AnyInstance::max_reward() const {
  switch (task()) {
    case Task::hill: return as_hill().global_max;
    case Task::tree: return static_cast<double>(as_tree().max_value);
    case Task::sat: return static_cast<double>(as_sat().m);
  }
  return 0.0;
}

namespace {

constexpr const char* kSchema = "seekbench.instance.v1";

ordered_json hill_params_json(const hill::GenParams& p) {
  return ordered_json{{"k", p.k},
                      {"k_prime", p.k_prime},
                      {"jitter_decoy", p.jitter_decoy},
                      {"jitter_needle", p.jitter_needle},
                      {"width_decoy", p.width_decoy},
                      {"width_needle", p.width_needle},
                      {"seed", p.seed}};
}

hill::GenParams hill_params_from(const json& j) {
  hill::GenParams p;
  p.k = j.at("k").get<int>();
  p.k_prime = j.at("k_prime").get<int>();
  p.jitter_decoy = j.at("jitter_decoy").get<double>();
  p.jitter_needle = j.at("jitter_needle").get<double>();
  p.width_decoy = j.at("width_decoy").get<double>();
  p.width_needle = j.at("width_needle").get<double>();
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

}  // namespace

ordered_json instance_to_json(const AnyInstance& inst) {
  ordered_json doc;
  doc["schema"] = kSchema;
  doc["task"] = task_name(inst.task());
  doc["id"] = inst.id;
  doc["secret"] = true;
  switch (inst.task()) {
    case Task::hill: {
      const auto& h = inst.as_hill();
      ordered_json hills = ordered_json::array();
      for (const auto& hl : h.hills) {
        hills.push_back(ordered_json{{"c", hl.center}, {"w", hl.width}, {"h", hl.height}});
      }
      doc["hills"] = std::move(hills);
      doc["needle_index"] = h.needle_index;
      doc["global_max"] = h.global_max;
      if (h.params) doc["params"] = hill_params_json(*h.params);
      break;
    }
    case Task::tree: {
      const auto& t = inst.as_tree();
      doc["node_count"] = t.node_count;
      doc["root"] = t.root;
      doc["max_value"] = t.max_value;
      doc["adjacency"] = t.adjacency;
      doc["values"] = t.values;
      doc["structural_ids"] = t.id_of_structural;
      doc["params"] = ordered_json{{"r_trap", t.params.r_trap},
                                   {"r_good", t.params.r_good},
                                   {"fanout", t.params.fanout},
                                   {"d_trap", t.params.d_trap},
                                   {"d_good", t.params.d_good},
                                   {"seed", t.params.seed}};
      break;
    }
    case Task::sat: {
      const auto& s = inst.as_sat();
      doc["n"] = s.n;
      doc["m"] = s.m;
      doc["w_gold"] = s.w_gold;
      // 1-based signed literals: +v means the variable must be true.
      ordered_json clauses = ordered_json::array();
      for (const auto& clause : s.clauses) {
        ordered_json lits = ordered_json::array();
        for (const auto& lit : clause) {
          lits.push_back(lit.positive ? lit.var + 1 : -(lit.var + 1));
        }
        clauses.push_back(std::move(lits));
      }
      doc["clauses"] = std::move(clauses);
      doc["gold_vars"] = s.gold_vars;
      doc["x_star"] = s.x_star;
      doc["params"] = ordered_json{{"n", s.params.n},
                                   {"m", s.params.m},
                                   {"k_gold", s.params.k_gold},
                                   {"k_other", s.params.k_other},
                                   {"w_gold", s.params.w_gold},
                                   {"seed", s.params.seed}};
      break;
    }
  }
  return doc;
}

ordered_json instance_public_json(const AnyInstance& inst) {
  ordered_json doc;
  doc["schema"] = kSchema;
  doc["task"] = task_name(inst.task());
  doc["id"] = inst.id;
  doc["secret"] = false;
  switch (inst.task()) {
    case Task::hill:
      doc["domain"] = {hill::kDomainLo, hill::kDomainHi};
      break;
    case Task::tree: {
      const auto& t = inst.as_tree();
      doc["node_count"] = t.node_count;
      doc["root"] = t.root;
      doc["adjacency"] = t.adjacency;
      break;
    }
    case Task::sat: {
      const auto& s = inst.as_sat();
      doc["n"] = s.n;
      doc["m"] = s.m;
      doc["max_clause_arity"] = maxsat::max_clause_arity(s);
      break;
    }
  }
  return doc;
}

AnyInstance instance_from_json(const json& doc) {
  if (doc.value("schema", "") != kSchema) {
    throw std::invalid_argument("not an instance document");
  }
  if (!doc.value("secret", false)) {
    throw std::invalid_argument(
        "public instance projection lacks ground truth; load the secret file");
  }
  AnyInstance inst;
  inst.id = doc.value("id", "");
  const Task task = task_from_name(doc.at("task").get<std::string>());
  switch (task) {
    case Task::hill: {
      hill::Instance h;
      for (const auto& hj : doc.at("hills")) {
        h.hills.push_back(hill::Hill{hj.at("c").get<double>(),
                                     hj.at("w").get<double>(),
                                     hj.at("h").get<double>()});
      }
      h.needle_index = doc.at("needle_index").get<int>();
      h.global_max = doc.at("global_max").get<double>();
      if (doc.contains("params")) h.params = hill_params_from(doc.at("params"));
      inst.payload = std::move(h);
      break;
    }
    case Task::tree: {
      tree::Instance t;
      t.node_count = doc.at("node_count").get<int>();
      t.root = doc.at("root").get<NodeId>();
      t.max_value = doc.at("max_value").get<int>();
      t.adjacency = doc.at("adjacency").get<std::vector<std::vector<NodeId>>>();
      t.values = doc.at("values").get<std::vector<int>>();
      t.id_of_structural = doc.at("structural_ids").get<std::vector<NodeId>>();
      const auto& pj = doc.at("params");
      t.params.r_trap = pj.at("r_trap").get<int>();
      t.params.r_good = pj.at("r_good").get<int>();
      t.params.fanout = pj.at("fanout").get<int>();
      t.params.d_trap = pj.at("d_trap").get<int>();
      t.params.d_good = pj.at("d_good").get<int>();
      t.params.seed = pj.at("seed").get<std::uint64_t>();
      inst.payload = std::move(t);
      break;
    }
    case Task::sat: {
      maxsat::Instance s;
      s.n = doc.at("n").get<int>();
      s.m = doc.at("m").get<int>();
      s.w_gold = doc.at("w_gold").get<int>();
      for (const auto& cj : doc.at("clauses")) {
        maxsat::Clause clause;
        for (const auto& lj : cj) {
          const int lit = lj.get<int>();
          clause.push_back(maxsat::Literal{std::abs(lit) - 1, lit > 0});
        }
        s.clauses.push_back(std::move(clause));
      }
      s.gold_vars = doc.at("gold_vars").get<std::vector<int>>();
      s.x_star = doc.at("x_star").get<std::vector<std::uint8_t>>();
      const auto& pj = doc.at("params");
      s.params.n = pj.at("n").get<int>();
      s.params.m = pj.at("m").get<int>();
      s.params.k_gold = pj.at("k_gold").get<int>();
      s.params.k_other = pj.at("k_other").get<int>();
      s.params.w_gold = pj.at("w_gold").get<int>();
      s.params.seed = pj.at("seed").get<std::uint64_t>();
      inst.payload = std::move(s);
      break;
    }
  }
  return inst;
}

void save_instance(const std::filesystem::path& path, const AnyInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << instance_to_json(inst).dump(2) << '\n';
}

void save_instance_public(const std::filesystem::path& path,
                          const AnyInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << instance_public_json(inst).dump(2) << '\n';
}

AnyInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  json doc = json::parse(in);
  return instance_from_json(doc);
}

std::string instance_digest(const AnyInstance& inst) {
  const std::string dump = instance_to_json(inst).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace seekbench
