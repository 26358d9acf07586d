#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "insep/errors.hpp"

namespace insep::cli {

using nlohmann::json;

// Raised for malformed jobs and catalogs: bad JSON shape, unknown task
// kinds, expressions that do not parse. Maps to exit code 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("ValidationError", what) {}
};

struct RunOptions {
  std::size_t jobs = 1;
  bool fail_fast = false;
  // Relative catalog paths inside jobs resolve against this directory.
  std::filesystem::path base_dir = ".";
};

// Validates the whole job first (throws ValidationError), then runs every
// task. Task failures are recorded in the report, never thrown.
json run_job(const json& spec, const RunOptions& options = {});

// Runs every catalog entry through classification, the Groebner oracle and,
// for d = 1 plane curves, the curve pipeline.
json verify_all(const json& catalog, const RunOptions& options = {});

json load_json_file(const std::filesystem::path& path);

// The report with every "wall_ms" field removed; the rest is deterministic.
json strip_timing(json report);

// Sorted keys, two-space indentation, trailing newline.
std::string dump(const json& report);

}  // namespace insep::cli
