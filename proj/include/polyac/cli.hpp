/*
   Copyright 2026 The polyac authors

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

#ifndef POLYAC_CLI_HPP
#define POLYAC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polyac {

// Exit codes: 0 success, 1 domain error (error name on stderr), 2 parse
// error, 3 oracle disagreement under --check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyac

#endif
