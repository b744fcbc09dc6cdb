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

#ifndef PERMLAB_ACCEPTANCE_HPP
#define PERMLAB_ACCEPTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace permlab {

struct AcceptanceOptions {
    /// Advice cache; tables are generated there on first use.
    std::filesystem::path advice_dir;
    /// Workers for parallel stages; 0 means worker_count().
    unsigned threads = 0;
    std::uint64_t seed = 20260101;
};

struct CriterionReport {
    unsigned id = 0;
    std::string title;
    bool pass = false;
    /// Measured quantities behind the verdict.
    std::string detail;
    double seconds = 0.0;
};

inline constexpr unsigned kAcceptanceCriteria = 11;

/// Runs one desk-scale criterion (1..kAcceptanceCriteria). An exception inside
/// a check is reported as a failure, not rethrown. Throws InvalidInput on a bad id.
CriterionReport run_criterion(unsigned id, const AcceptanceOptions& options);

/// Runs `ids` in order (all criteria when empty), calling `on_report` after each.
std::vector<CriterionReport> run_acceptance(const AcceptanceOptions& options, const std::vector<unsigned>& ids = {},
                                            const std::function<void(const CriterionReport&)>& on_report = {});

/// `PASS [ 3] title: detail (1.23 s)`.
std::string format_report(const CriterionReport& report);

}  // namespace permlab

#endif  // PERMLAB_ACCEPTANCE_HPP
