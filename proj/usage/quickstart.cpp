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

// Builds a few (N,M)-POVMs and prints their validation residuals.

#include <iostream>

#include "povm/povm.hpp"

int main() {
    using namespace povm;

    // A (4,3)-POVM in d = 3 at the largest x the simplex construction
    // guarantees for any basis.
    const double x = sufficient_x_bound(3, 3);
    const NMPovm p = sufficient_construct(3, 4, 3, x, gell_mann_basis(3));
    const ValidationReport v = validate_povm(p);
    std::cout << "sufficient (d=3, N=4, M=3) x=" << x << " max residual " << v.max_residual()
              << " min eigenvalue " << v.min_eigenvalue << '\n';

    // Optimal (15,2)-POVM in d = 4 from two-qubit Pauli strings.
    const NMPovm q = optimal_n2_pauli(2, 15);
    const NecessaryReport n = check_optimal_m2(q);
    std::cout << "pauli-n2 (d=4, N=15) informationally complete: " << std::boolalpha
              << is_informationally_complete(q) << ", M=2 criterion " << (n.passed ? "holds" : "fails") << '\n';

    // Born probabilities of a random state against the qubit SIC.
    Rng rng(7);
    const auto probs = born_probabilities(fixture_povm(Fixture::sic_qubit), random_density_matrix(2, rng));
    std::cout << "sic_qubit probabilities:";
    for (double pr : probs) std::cout << ' ' << pr;
    std::cout << '\n';

    const RadiiReport r = radii(3, 3);
    std::cout << "radii(3,3): r_in^2=" << r.r_in_sq << " r_out^2=" << r.r_out_sq << '\n';
    return v.passed ? 0 : 1;
}
