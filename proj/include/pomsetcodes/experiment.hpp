#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pomsetcodes/linear_code.hpp"
#include "pomsetcodes/macwilliams.hpp"

namespace pomsetcodes {

// Recursive pomset description: chain/antichain/explicit leaves, direct and
// ordinal sum nodes.
struct PomsetSpec {
  enum class Kind { chain, antichain, explicit_pairs, direct, ordinal };

  Kind kind = Kind::chain;
  int points = 0;                           // leaves
  std::vector<std::pair<int, int>> pairs;   // explicit leaves: a below b
  std::vector<PomsetSpec> parts;            // sum nodes

  int total_points() const;
  Pomset build(int m) const;
  std::string describe() const;

  static PomsetSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const PomsetSpec&, const PomsetSpec&) = default;
};

struct ExperimentOptions {
  std::string method = "auto";  // auto | theorem | corollary | sum | fourier
  int trials = 64;
  std::uint64_t seed = 1;
  long long budget = kDefaultEnumerationBudget;

  friend bool operator==(const ExperimentOptions&, const ExperimentOptions&) = default;
};

// One experiment: a block structure over Z_m, a pomset on the blocks, and a
// code given either by generators or as an explicit word list.
struct ExperimentSpec {
  int m = 2;
  std::vector<int> blocks;
  PomsetSpec pomset;
  bool explicit_words = false;
  std::vector<CodeVector> generators;
  std::vector<CodeVector> words;
  bool has_code = false;
  ExperimentOptions options;

  static ExperimentSpec from_json(const nlohmann::json& j);
  static ExperimentSpec load(const std::string& path);
  nlohmann::json to_json() const;

  BlockStructure block_structure() const;
  Pomset build_pomset() const;
  LinearCode build_code() const;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

struct CommandResult {
  int exit_code = 0;      // 0 ok, 1 mismatch, 2 validation error, 3 budget exceeded
  std::string report;     // ends with "RESULT: equal|mismatch|error\n"
};

// Runs enumerate | dual | verify | probe against a parsed spec.
CommandResult execute(const std::string& command, const ExperimentSpec& spec);

}  // namespace pomsetcodes
