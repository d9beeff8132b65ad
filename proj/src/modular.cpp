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

#include "modular.hpp"

#include <cmath>

namespace ltz::modular {

namespace {
constexpr double kTol = 1e-12;
}

std::string GroupWord::str() const {
    if (ops.empty()) return "id";
    std::string s;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) s += ' ';
        switch (ops[i]) {
            case Gen::Tplus: s += "T+"; break;
            case Gen::Tminus: s += "T-"; break;
            case Gen::S: s += 'S'; break;
            case Gen::R: s += 'R'; break;
        }
    }
    return s;
}

UpperHalfPoint apply(Gen g, UpperHalfPoint z) {
    switch (g) {
        case Gen::Tplus: return {z.x + 1.0, z.y};
        case Gen::Tminus: return {z.x - 1.0, z.y};
        case Gen::S: {
            const double n2 = z.abs2();
            return {-z.x / n2, z.y / n2};
        }
        case Gen::R: return {-z.x, z.y};
    }
    return z;
}

UpperHalfPoint apply(const GroupWord& w, UpperHalfPoint z) {
    for (Gen g : w.ops) z = apply(g, z);
    return z;
}

Reduced reduce(UpperHalfPoint z) {
    require_upper_half(z);
    Reduced out;
    for (int step = 0;; ++step) {
        if (step >= 10000)
            throw not_converged("reduce: no fixed point after 10^4 steps (|z| ~ 1 pathology)");
        // x into (-1/2, 1/2]
        long k = std::lround(std::floor(z.x + 0.5));
        if (z.x - k == -0.5) k -= 1;
        if (k != 0) {
            const Gen g = k > 0 ? Gen::Tminus : Gen::Tplus;
            for (long i = 0; i < std::labs(k); ++i) out.word.ops.push_back(g);
            z.x -= static_cast<double>(k);
        }
        if (z.abs2() < 1.0 - kTol) {
            z = apply(Gen::S, z);
            out.word.ops.push_back(Gen::S);
            continue;
        }
        break;
    }
    if (z.x < 0.0) {
        z = apply(Gen::R, z);
        out.word.ops.push_back(Gen::R);
    }
    out.point = z;
    return out;
}

bool contains(UpperHalfPoint z, bool closed) {
    if (!z.in_upper_half()) return false;
    const double n2 = z.abs2();
    if (closed) return n2 >= 1.0 - kTol && z.x >= -kTol && z.x <= 0.5 + kTol;
    return n2 > 1.0 + kTol && z.x > kTol && z.x < 0.5 - kTol;
}

}  // namespace ltz::modular
