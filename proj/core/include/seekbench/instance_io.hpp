#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "seekbench/hill.hpp"
#include "seekbench/maxsat.hpp"
#include "seekbench/tree.hpp"

namespace seekbench {

enum class Task { hill, tree, sat };

const char* task_name(Task task);
Task task_from_name(const std::string& name);

struct AnyInstance {
  std::string id;
  std::variant<hill::Instance, tree::Instance, maxsat::Instance> payload;

  Task task() const;
  // Denominator for reward normalization.
  double max_reward() const;

  const hill::Instance& as_hill() const { return std::get<hill::Instance>(payload); }
  const tree::Instance& as_tree() const { return std::get<tree::Instance>(payload); }
  const maxsat::Instance& as_sat() const { return std::get<maxsat::Instance>(payload); }
};

// Full (secret) document: contains ground truth, flagged "secret": true.
nlohmann::ordered_json instance_to_json(const AnyInstance& inst);

// Agent-facing projection: structure only, no values / hidden data.
nlohmann::ordered_json instance_public_json(const AnyInstance& inst);

AnyInstance instance_from_json(const nlohmann::json& doc);

void save_instance(const std::filesystem::path& path, const AnyInstance& inst);
void save_instance_public(const std::filesystem::path& path,
                          const AnyInstance& inst);
AnyInstance load_instance(const std::filesystem::path& path);

// FNV-1a over the canonical secret document; identifies an instance in
// run manifests.
std::string instance_digest(const AnyInstance& inst);

}  // namespace seekbench
