// Copyright 2026 The bangla-ged Authors.
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

#ifndef BGED_CLI_HPP_
#define BGED_CLI_HPP_

#include <iosfwd>

namespace bged::cli {

// Entry point of the `bged` tool. Subcommands: validate, stats, mine-rules,
// build-lookup, reconcile, evaluate, ablate, simulate. Returns the process
// exit code; diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bged::cli

#endif  // BGED_CLI_HPP_
