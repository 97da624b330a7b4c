#pragma once

#include <stdexcept>
#include <string>

namespace fod {

/// Invalid parameters, malformed configuration, or inconsistent setup.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Broken, missing, or inconsistent input data.
class DataError : public std::runtime_error {
  public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A pipeline stage failed while executing.
class StageError : public std::runtime_error {
  public:
    explicit StageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Process exit codes used by the CLI.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_data_error = 3;
inline constexpr int exit_stage_error = 4;

} // namespace fod
