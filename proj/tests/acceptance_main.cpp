// Copyright 2026 The permlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [criterion ...]
//
// With no arguments every criterion runs. Exit status 1 if any fails.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "permlab/acceptance.hpp"
#include "permlab/advice.hpp"

int main(int argc, char** argv) {
    std::vector<unsigned> ids;
    for (int i = 1; i < argc; ++i) {
        try {
            ids.push_back(static_cast<unsigned>(std::stoul(argv[i])));
        } catch (const std::exception&) {
            std::cerr << "usage: acceptance [criterion ...]\n";
            return 2;
        }
    }
    permlab::AcceptanceOptions options;
    options.advice_dir = permlab::default_advice_dir();
    bool all_pass = true;
    try {
        permlab::run_acceptance(options, ids, [&](const permlab::CriterionReport& r) {
            std::cout << permlab::format_report(r) << std::endl;
            all_pass = all_pass && r.pass;
        });
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
