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

#ifndef ZEST_SEMIRING_HPP_
#define ZEST_SEMIRING_HPP_

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zest/graph.hpp"
#include "zest/ncgraph.hpp"
#include "zest/rational.hpp"

namespace zest {

class SemiringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term {
  Graph graph;
  int dim = 1;
};

// Formal sum  S = G_1 (x) Q_{d_1}  (+)  ...  (+)  G_r (x) Q_{d_r}  in normal
// form: dims strictly increasing, equal dims merged by disjoint union of the
// graphs in encounter order, empty graphs dropped.  The empty term list is the
// additive zero.
class AElement {
 public:
  AElement() = default;
  explicit AElement(std::vector<Term> terms);
  AElement(Graph graph, int dim) : AElement(std::vector<Term>{{std::move(graph), dim}}) {}

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Global indexing of the disjoint union of the term vertex sets, in term
  // order.  Vertex v of term t has global index vertex_offset(t) + v.
  int total_vertices() const;
  int term_of_vertex(int global) const;
  int vertex_offset(int term) const;
  // True when the global vertices lie in the same term and are adjacent-or-
  // equal there; distinct vertices of different terms are never related.
  bool adjacent_or_equal(int gu, int gv) const;

 private:
  std::vector<Term> terms_;
  std::vector<int> offsets_;
};

AElement a_add(const AElement& s, const AElement& t);
AElement a_mul(const AElement& s, const AElement& t);

// Operator-space realization (+)_d graphnc(G_d) (x) Q_d; rejects the zero
// element.
NcGraph to_ncgraph(const AElement& s);

// f_alpha(S) = sum_d f(G_d) d^alpha.
Rational evaluate_exact(const AElement& s, const std::function<Rational(const Graph&)>& f,
                        unsigned alpha);
double evaluate(const AElement& s, const std::function<double(const Graph&)>& f, double alpha);

struct Distribution {
  std::vector<Rational> weights;

  Distribution() = default;
  explicit Distribution(std::vector<Rational> w);
  std::size_t size() const { return weights.size(); }
};

// Shannon entropy in bits of a subprobability vector (zero entries skipped).
double entropy_bits(const std::vector<Rational>& weights);

// Refinement value  H(pi_* Q) + sum_d pi_*Q(d) [ base_log(d) + alpha log2 d ]
// with Q a distribution on the disjoint union of the term vertex sets and
// base_log(d) = log2 f(G_d, Q_d) supplied per dim with pi_*Q(d) > 0.
double refinement_value(const AElement& s, const Distribution& q,
                        const std::map<int, double>& base_log_values, double alpha);

struct RefinementFunctional {
  // log2 f(G, P) oracle; P is a distribution on V(G).
  std::function<double(const Graph&, const std::vector<Rational>&)> base_log;
  double exponent = 1.0;
};

// Same formula with base_log(d) = F.base_log(G_d, Q_d) where Q_d is the
// conditional distribution of Q on term d.
double refinement_value(const AElement& s, const Distribution& q, const RefinementFunctional& f);

// Convex combination: oracle lambda*F + (1-lambda)*G pointwise, exponent
// lambda*alpha + (1-lambda)*beta.
RefinementFunctional combine_refinements(const Rational& lambda, const RefinementFunctional& f,
                                         const RefinementFunctional& g);

// All distributions on [r] with denominators dividing n, first coordinate
// largest first (the order of the stars-and-bars recursion).
std::vector<Distribution> type_distributions(int n, int r);

// Subgraph of G^{boxtimes n} induced on the sequences with empirical
// distribution qn (denominators dividing n); vertices in lexicographic
// sequence order.  Also returns the sequences themselves.
struct TypeGraph {
  Graph graph;
  std::vector<std::vector<int>> sequences;
};
TypeGraph typegraph(const Graph& g, int n, const Distribution& qn,
                    long long guard = defaults::kTypeClassGuard);

// Finite-n estimate of log2 f(G, Q):  log2 f(typegraph(G,n,Qn)) / n.  No
// convergence rate is promised; report as an estimate only.
double refinement_base_estimate(const Graph& g, int n, const Distribution& qn,
                                const std::function<double(const Graph&)>& f,
                                long long guard = defaults::kTypeClassGuard);

// Maximize refinement_value over the marginal grid type_distributions(n, r)
// for fixed per-dim base logs; deterministic reduction (first maximizer in
// enumeration order wins ties), optionally fanned out over workers.
struct GridMaxResult {
  double value = 0.0;
  Distribution pi;
};
GridMaxResult refinement_grid_max(const AElement& s, const std::map<int, double>& base_log_values,
                                  double alpha, int n, int workers = 1);

}  // namespace zest

#endif  // ZEST_SEMIRING_HPP_
