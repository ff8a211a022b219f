/*
   Copyright 2026 The semirad Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEMIRAD_CLI_JOB_HPP
#define SEMIRAD_CLI_JOB_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "semirad/linalg.hpp"

namespace semirad::cli {

enum class Command { Radius, Bounds, BlockBounds, Zeros, Range };
enum class Format { Table, Json, Svg };

struct JobConfig {
  Command command = Command::Radius;
  std::string input_path;
  Format output_format = Format::Table;
  /// Empty means stdout.
  std::string output_path;
  std::size_t theta_grid = 720;
  std::size_t phi_grid = 64;
  std::size_t mc_samples = 0;
  std::size_t restarts = 8;
  std::size_t iters = 2000;
  std::uint64_t seed = 0;
  Tolerances tolerances;
};

Command parse_command(const std::string& s);
Format parse_format(const std::string& s);
const char* to_string(Command c) noexcept;
const char* to_string(Format f) noexcept;

/// "herm_tol,rank_tol", both positive. Throws InvalidInput otherwise.
Tolerances parse_tolerances(const std::string& s);

/// Throws InvalidInput when a grid is below 8 or an option is out of range.
void validate(const JobConfig& cfg);

/// Runs the job and returns the rendered report. Errors propagate as
/// semirad::Error.
std::string execute(const JobConfig& cfg);

/// Same as execute(), with the input given as text rather than a path.
/// `source` only labels diagnostics.
std::string execute_text(const JobConfig& cfg, const std::string& text,
                         const std::string& source = "<input>");

/// Writes via a sibling temp file and rename.
void write_atomically(const std::string& path, const std::string& text);

/// Full job: 0 on success, 2 on validation errors, 1 otherwise. The report
/// goes to `out` unless cfg.output_path is set; diagnostics go to `err`.
int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace semirad::cli

#endif  // SEMIRAD_CLI_JOB_HPP
