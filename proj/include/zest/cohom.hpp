// Copyright 2026 The zest Authors
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

#ifndef ZEST_COHOM_HPP_
#define ZEST_COHOM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "zest/parameters.hpp"
#include "zest/semiring.hpp"

namespace zest {

class CohomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex map psi: V(H) -> V(G) with distinct non-adjacent pairs mapped to
// distinct non-adjacent pairs (a homomorphism between the complements), or
// absent when none exists. Deterministic backtracking: vertices in index
// order, candidate values most-constraining-first (fewest complement
// neighbors, ties by index).
std::optional<std::vector<int>> find_graph_cohomomorphism(
    const Graph& h, const Graph& g, int vertex_guard = defaults::kCohomVertexGuard);

// Cohomomorphism between sum elements in special form: a vertex map phi on
// the disjoint unions plus one isometry per source vertex, stored
// unnormalized ("scale2" times matrix*matrix is the identity). U_h maps
// C^{pi(h)} into C^{pi(phi(h))}: pi(h) columns, pi(phi(h)) rows.
struct SpecialForm {
  std::vector<int> phi;
  std::vector<ScaledMatrix> isometries;
};

struct WitnessCheck {
  bool ok = false;
  std::string reason;  // names the offending pair / clause / operator
};

// Exact check of the two special-form conditions over all vertex pairs:
//   h !~= h'  =>  phi(h) !~= phi(h')  or  U_h* U_h' = 0
//   h ~= h' and phi(h) ~= phi(h')  =>  U_h* U_h' = c I
// together with the shape and isometry requirements.
WitnessCheck verify_special_form(const AElement& t, const AElement& s, const SpecialForm& form);

struct KrausWitness {
  AElement source;  // T, the smaller element
  AElement target;  // S
  // E_i: ambient(source) -> ambient(target), each sqrt(scale2) * matrix.
  std::vector<ScaledMatrix> operators;
  bool floating = false;  // exact mode when false
  double tol = 1e-9;      // floating-mode residual bound
};

// Kraus operators E_h = |phi(h)><h| (x) U_h of a valid special form; the
// result verifies in exact mode.
KrausWitness kraus_from_special_form(const AElement& t, const AElement& s,
                                     const SpecialForm& form);

// Exact mode: sum E_i* E_i = I on ambient(source) and E_i* B E_j in the span
// of to_ncgraph(source) for every pair (i,j) and basis element B of
// to_ncgraph(target), all in exact arithmetic (the span test is invariant
// under the sqrt scales). Floating mode: same conditions with Frobenius
// residuals <= tol.
WitnessCheck verify_kraus_witness(const KrausWitness& w);

// Lemma-style truncation: for a single-term source (H, q), a valid witness
// never meets the target blocks with d < q, so composing with the projection
// onto the d >= q blocks and dropping the dead rows yields a witness for
// (H, q) <= sum of the d >= q terms. The input must verify; so does the
// output.
KrausWitness project_witness(const KrausWitness& w, int q);

// Maximum collection of pairwise-disjoint d-cliques, exact branch and bound
// over the lexicographic d-clique list; first optimal packing in search order.
std::vector<std::vector<int>> disjoint_cliques(const Graph& g, int d,
                                               std::size_t clique_guard = defaults::kCliqueCountGuard);

// Witness for C_{Md} <= graphnc(G) (x) Q_d from M disjoint d-cliques and
// per-vertex d-dimensional vectors with adjacent => orthogonal; operators
// E_i = (|phi(i)> (x) u_phi(i)) <i| with phi enumerating the cliques in
// order. Exact-mode witness.
KrausWitness witness_from_cliques(const Graph& g, int d, const std::vector<ScaledVector>& rep,
                                  const std::vector<std::vector<int>>& cliques);

}  // namespace zest

#endif  // ZEST_COHOM_HPP_
