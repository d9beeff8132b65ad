// Copyright 2026 The ltz Authors
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

#ifndef LTZ_CLAIMS_HPP
#define LTZ_CLAIMS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "certify.hpp"

namespace ltz::claims {

struct ClaimOptions {
    int grid = 0;             // 0 = claim default
    double inset = 1e-3;
    double y_cap = 10.0;
    int threads = 0;
    double tol = 1e-13;
    bool dump = false;
    double resolution = 1e-2;  // arc-restriction grids
    std::vector<double> alphas;  // empty = claim default sweep
    std::vector<double> svals;
};

struct ClaimRun {
    bool pass = false;
    nlohmann::json report;
    std::vector<certify::SamplePoint> samples;  // filled when options.dump
};

const std::vector<std::string>& claim_names();

// Runs one named claim suite. Throws invalid_domain for unknown names or
// out-of-range sweep parameters.
ClaimRun run_claim(const std::string& name, const ClaimOptions& opt);

}  // namespace ltz::claims

#endif  // LTZ_CLAIMS_HPP
