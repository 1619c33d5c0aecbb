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

#ifndef ZEST_NCGRAPH_HPP_
#define ZEST_NCGRAPH_HPP_

#include <vector>

#include "zest/exact_matrix.hpp"
#include "zest/graph.hpp"

namespace zest {

struct NcGraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operator system: a subspace of d x d matrices containing the identity and
// closed under adjoints, stored as a linearly independent basis over Q(i).
class NcGraph {
 public:
  // Reduces the generators to a linearly independent basis (in the given
  // order) and verifies I is a member and the span is adjoint closed.
  NcGraph(int ambient_dim, std::vector<Matrix> generators,
          std::vector<int> block_dims = {});

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const SubspaceBasis& span() const { return span_; }
  // Direct-sum block sizes when this system was assembled as a direct sum;
  // empty for plain systems.
  const std::vector<int>& block_dims() const { return blocks_; }

  bool contains(const Matrix& m) const { return span_.contains(m); }
  bool equal_span(const NcGraph& o) const;

  // span{ |x><x'| : x adjacent-or-equal x' }. Basis order: E_xx for each
  // vertex, then E_uv, E_vu per sorted edge.
  static NcGraph from_graph(const Graph& g);
  // Noiseless quantum channel ideal: the scalars C . I_d.
  static NcGraph quantum_ideal(int d);
  // Noiseless classical channel ideal: the diagonal d x d matrices.
  static NcGraph classical_ideal(int d);

  static NcGraph tensor(const NcGraph& s, const NcGraph& t);
  static NcGraph direct_sum(const NcGraph& s, const NcGraph& t);

 private:
  int ambient_ = 0;
  std::vector<Matrix> basis_;
  SubspaceBasis span_;
  std::vector<int> blocks_;
};

}  // namespace zest

#endif  // ZEST_NCGRAPH_HPP_
