#pragma once

#include <optional>
#include <string>

#include "colax/cli/project.hpp"

namespace colax::cli {

struct RunOptions {
  unsigned seed = 1;
  bool parallel = false;
};

struct RunResult {
  int exit_code = 0;
  std::string json;  // canonical: sorted keys, no floats
  std::string text;
};

RunResult run(const Project& p, const RunOptions& opt = {});

/// Parameters and meaning of a task kind, or nullopt for an unknown kind.
std::optional<std::string> explain(const std::string& kind);

}  // namespace colax::cli
