#pragma once

#include <string>
#include <vector>

#include "likegame/types.hpp"

namespace likegame {

enum class Severity { Warning, Error };

struct ValidationMessage {
  Severity severity;
  std::string text;
};

struct ValidationReport {
  std::vector<ValidationMessage> messages;

  bool ok() const;
  std::vector<std::string> errors() const;
  std::vector<std::string> warnings() const;
};

// Structural checks on a config before any simulation state is built.
// Errors make the config unusable; warnings flag suspicious but legal setups.
ValidationReport validate_config(const GameConfig& config);

// Throws ConfigError with all error texts joined if the report has errors.
void require_valid(const GameConfig& config);

}  // namespace likegame
