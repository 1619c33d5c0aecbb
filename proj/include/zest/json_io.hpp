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

#ifndef ZEST_JSON_IO_HPP_
#define ZEST_JSON_IO_HPP_

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "zest/cohom.hpp"
#include "zest/exact_matrix.hpp"
#include "zest/graph.hpp"
#include "zest/ncgraph.hpp"
#include "zest/parameters.hpp"
#include "zest/rational.hpp"
#include "zest/semiring.hpp"

namespace zest {

// Field order is fixed by insertion, so serialized output is deterministic.
using Json = nlohmann::ordered_json;

struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Floats in reports: 9 significant digits.
std::string float_string(double value);

// Exact integers: JSON numbers when they fit in 64 bits, decimal strings
// otherwise.  Readers accept either, plus "num/den" strings for rationals.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j, const std::string& field);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& field);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json scaled_matrix_to_json(const ScaledMatrix& m);
ScaledMatrix scaled_matrix_from_json(const Json& j);

Json ncgraph_to_json(const NcGraph& s);
NcGraph ncgraph_from_json(const Json& j);

Json aelement_to_json(const AElement& a);
AElement aelement_from_json(const Json& j);

Json distribution_to_json(const Distribution& d);
Distribution distribution_from_json(const Json& j);

Json scaled_vector_to_json(const ScaledVector& v);
ScaledVector scaled_vector_from_json(const Json& j);

Json orthonormal_rep_to_json(const OrthonormalRepCertificate& c);
OrthonormalRepCertificate orthonormal_rep_from_json(const Json& j);

Json subspace_rep_fp_to_json(const SubspaceRepFp& r);
SubspaceRepFp subspace_rep_fp_from_json(const Json& j);

Json subspace_rep_c_to_json(const SubspaceRepC& r);
SubspaceRepC subspace_rep_c_from_json(const Json& j);

Json projective_rep_to_json(const ProjectiveRep& r);
ProjectiveRep projective_rep_from_json(const Json& j);

Json kraus_witness_to_json(const KrausWitness& w);
KrausWitness kraus_witness_from_json(const Json& j);

Json special_form_to_json(const SpecialForm& f);
SpecialForm special_form_from_json(const Json& j);

// Reads and parses a JSON file; JsonError mentions the path on failure.
Json load_json_file(const std::string& path);

}  // namespace zest

#endif  // ZEST_JSON_IO_HPP_
