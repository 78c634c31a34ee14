/*
   Copyright 2026 The fsplit Authors

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


#ifndef FSPLIT_CLI_HPP
#define FSPLIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsplit/constructions.hpp"
#include "fsplit/gvd.hpp"
#include "fsplit/lift.hpp"

namespace fsplit {

/// Exit codes of the command-line tool.
enum ExitCode : int { kVerified = 0, kVerifiedNegative = 1, kError = 2 };

/// Reduced basis under the ring order, as strings.
nlohmann::json ideal_json(const Ideal& ideal);
nlohmann::json decomposition_json(const GvdDecomposition& d);
nlohmann::json tree_json(const GvdTree& tree);
nlohmann::json certificate_json(const LiftCertificate& cert);
nlohmann::json chain_json(const LiftChain& chain);

/// Runs one command (args exclude the program name). JSON goes to `out`,
/// progress and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsplit

#endif  // FSPLIT_CLI_HPP
