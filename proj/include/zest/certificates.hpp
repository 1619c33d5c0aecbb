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

#ifndef ZEST_CERTIFICATES_HPP_
#define ZEST_CERTIFICATES_HPP_

#include <vector>

#include "zest/cohom.hpp"
#include "zest/parameters.hpp"
#include "zest/semiring.hpp"

namespace zest {

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Classical realization of a sum element: the graph union of G_d boxtimes
// K_dbar over the terms. Vertex (g, k) of term t has index
// term_offset + g*d + k.
Graph classical_realization(const AElement& t);

// Input to the transports: a sum element S with terms (G_d, d), a graph H,
// and a unit-vector special form for (H, 1) <= S (each isometry a single
// column).
struct TransportInput {
  AElement target;
  Graph h;
  SpecialForm form;
};

// Turns a special form for t <= s into the unit-vector form for
// (classical_realization(t), 1) <= s: vertex (h, k) maps to phi(h) with
// vector the k-th column of U_h.
TransportInput special_form_classical(const AElement& t, const AElement& s,
                                      const SpecialForm& form);

// Orthonormal-representation transport: w_h = v_phi(h) (x) u_h (x) conj(u_h)
// in the space (+)_d C^{n_d} (x) C^d (x) C^d, handle (+)_d sqrt(lambda_d)
// c_d (x) (1/sqrt d) sum |ii> with lambda_d proportional to d * value_d.
// The result verifies on H and its value is at most sum_d d * value_d.
struct ThetaTransport {
  OrthonormalRepCertificate certificate;
  Rational value;        // recomputed by the verifier from the built vectors
  Rational input_bound;  // sum_d d * (verified value of reps[d])
};
ThetaTransport transport_theta(const TransportInput& in,
                               const std::vector<OrthonormalRepCertificate>& reps);

// Complex subspace-representation transport: T_h = S_phi(h) (x) C u_h in
// dimension sum_d a_d * d. Input denominators are equalized by tensoring
// with full spaces (S_g (x) C^m), which preserves validity and values.
struct HaemersTransport {
  SubspaceRepC certificate;
  Rational value;
  Rational input_bound;
};
HaemersTransport transport_haemers_c(const TransportInput& in,
                                     const std::vector<SubspaceRepC>& reps);

// Projective-rank transport for the complements: Q_h = P_phi(h) (x)
// u_h u_h* / ||u_h||^2, a projective representation of the complement of H;
// input reps are projective representations of the complements of the G_d,
// denominators equalized by P (x) I_m.
struct ProjectiveTransport {
  ProjectiveRep certificate;
  Rational value;
  Rational input_bound;
};
ProjectiveTransport transport_projective(const TransportInput& in,
                                         const std::vector<ProjectiveRep>& reps);

}  // namespace zest

#endif  // ZEST_CERTIFICATES_HPP_
