// Copyright 2026 The galois-qudits Authors
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

// Builds the [[8,3]] quantum Reed-Solomon code over F_8, turns it into a
// [[24,9]] qubit code through a self-dual basis, and corrects a burst of
// qubit flips that lands inside one qudit block.

#include <iostream>

#include "gq/gq.hpp"

int main() {
    gq::Field f = gq::make_field(3u);
    gq::QrsCode qrs = gq::make_qrs(f, 8, 2, 5);
    gq::CodeParams p = gq::params(qrs.css());
    std::cout << "qudit code: [[" << p.n << "," << p.k << "]] d_X=" << *p.d_x << " d_Z=" << *p.d_z << "\n";

    gq::FieldBasis b = gq::find_self_dual(f);
    std::cout << "self-dual basis:";
    for (auto e : b.elements()) std::cout << ' ' << e;
    std::cout << "\n";

    auto a = gq::BasisAssignment::uniform(b, 8);
    gq::QubitCssCode qc = gq::convert_code(qrs.css(), a);
    std::cout << "qubit code: [[" << qc.num_qubits << "," << qc.num_logical() << "]] with " << qc.hx.rows()
              << " X checks and " << qc.hz.rows() << " Z checks\n";

    // Z flips on qubits 9..11 (qudit 3) and an X flip on qubit 20 (qudit 6).
    gq::QubitError e{gq::BitVector(24), gq::BitVector(24)};
    for (std::size_t i : {9, 10, 11}) e.z.set(i, true);
    e.x.set(20, true);
    auto plan = gq::make_plan(qrs.css(), a);
    gq::QubitError got = gq::end_to_end_decode(qrs, a, plan, e);
    std::cout << "planted  x " << e.x.to_string() << "  z " << e.z.to_string() << "\n";
    std::cout << "decoded  x " << got.x.to_string() << "  z " << got.z.to_string() << "\n";
    std::cout << (got.x == e.x && got.z == e.z ? "recovered\n" : "mismatch\n");
    return got.x == e.x && got.z == e.z ? 0 : 1;
}
