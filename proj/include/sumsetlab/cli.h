// Copyright 2026 The sumsetlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The sumsetlab command line: one subcommand per module.
//
//   exit 0  ok
//   exit 1  counterexample (a claimed value or property failed)
//   exit 2  usage error, refused budget or internal error

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace sumsetlab {

enum class Verdict { kOk, kCounterexample, kError };

// "ok", "counterexample" or "error".
std::string ToString(Verdict v);
int ExitCode(Verdict v);

struct CommandResult {
  std::string command;
  Verdict verdict = Verdict::kOk;
  // Subcommand-specific object; {"error": message} for errors.
  nlohmann::json payload;
  double elapsed_ms = 0;
  // One line for stderr.
  std::string summary;
  // Set by --csv on subcommands with tabular output.
  std::string csv;
  bool want_csv = false;
  // Empty for stdout.
  std::string out_path;
  // Non-empty after --help; printed instead of the document.
  std::string help;
};

// Parses and runs one command line; args exclude the program name. Never
// throws: parse failures and exceptions become kError results.
CommandResult Run(const std::vector<std::string>& args);

// The JSON document written for a result: the payload's members plus
// "command", "verdict" and "elapsed_ms".
nlohmann::json Document(const CommandResult& r);

// Run, then write the document (or CSV) to `out` or the --out file and the
// summary to `err`. Returns the exit code.
int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumsetlab
