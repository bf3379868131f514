#pragma once

#include <filesystem>
#include <optional>

#include "morbit/serialize.hpp"

namespace morbit {

// Batch experiment runner. One JSON config per run; outputs are CSV/JSON
// files that embed the config hash and library version, and identical
// config bytes (plus seed) produce identical output bytes.
struct RunOptions {
  std::filesystem::path out_dir = ".";
  std::optional<uint64_t> seed_override;
  std::optional<NumberMode> mode_override;
  int threads = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitCapExhausted = 3;

// Returns one of the kExit* codes. Validation problems raise Error before
// any file is written; bounded-search failures still write their reports
// and return kExitCapExhausted.
int run_experiment(const Json& config, const RunOptions& opts,
                   std::string* message = nullptr);

// Parse + validate only.
void validate_experiment(const Json& config);

// Human-readable schema and output description for one experiment kind.
std::string describe_experiment(const std::string& kind);
std::vector<std::string> experiment_kinds();

uint64_t fnv1a_hash(const std::string& bytes);

}  // namespace morbit
