// Copyright 2026 The povmkit Authors
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

// Rotation search for the maximal (4,3)-POVM in d = 3 with the Gell-Mann
// basis split into four planes.

#include <cstdio>

#include "povm/povm.hpp"

int main() {
    using namespace povm;
    const Mum3Result m = mum3_optimal_partition();
    std::printf("x = %.12f (5/9 = %.12f)\n", m.search.x, 5.0 / 9.0);
    for (const auto& b : m.search.blocks) {
        std::printf("block %d {%d,%d}: %-8s angle %.6f  best radius %.6f  feasible %.4f\n", b.alpha,
                    b.basis_indices[0], b.basis_indices[1], to_string(b.kind).c_str(), b.angle, b.best_radius,
                    b.feasible_fraction);
    }
    const ValidationReport v = validate_povm(m.povm);
    std::printf("valid: %s, max residual %.3e\n", v.passed ? "yes" : "no", v.max_residual());
    return v.passed ? 0 : 1;
}
