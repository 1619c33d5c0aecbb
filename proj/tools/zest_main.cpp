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

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zest/bounds.hpp"
#include "zest/certificates.hpp"
#include "zest/cohom.hpp"
#include "zest/graph.hpp"
#include "zest/json_io.hpp"
#include "zest/parameters.hpp"
#include "zest/semiring.hpp"

namespace {

using zest::Json;

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

// Floats rounded to 9 significant digits before serialization, so reports
// are byte-identical across runs.
Json float_json(double v) {
  return Json(std::strtod(zest::float_string(v).c_str(), nullptr));
}

const Json& need(const Json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field))
    throw zest::JsonError("missing field \"" + field + "\"");
  return j.at(field);
}

Json rationals_to_json(const std::vector<zest::Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(zest::rational_to_json(q));
  return out;
}

struct Options {
  std::string type;
  std::string op;
  std::string functional = "alpha";
  std::string graph_path, second_path, source_path, target_path, witness_path;
  int n = 0;
  int p = 0;
  int k = 1;
  int guard = -1;
  int workers = 1;
  int precision = 50;
  double alpha = 1.0;
  double tol = -1.0;
};

int guard_or(const Options& o, int fallback) { return o.guard >= 0 ? o.guard : fallback; }

zest::Graph load_graph(const std::string& path) {
  return zest::graph_from_json(zest::load_json_file(path));
}

zest::AElement load_element(const std::string& path) {
  return zest::aelement_from_json(zest::load_json_file(path));
}

int report_check(const zest::CertCheck& check) {
  if (check.ok) {
    emit(Json{{"valid", true},
              {"value", zest::rational_to_json(check.value)},
              {"method", "exact"}});
    return 0;
  }
  emit(Json{{"valid", false}, {"reason", check.reason}});
  return 1;
}

int run_graph_gen(const Options& o) {
  zest::Graph g(0, {});
  if (o.type == "complete") {
    g = zest::complete_graph(o.n);
  } else if (o.type == "empty") {
    g = zest::empty_graph(o.n);
  } else if (o.type == "cycle") {
    g = zest::cycle_graph(o.n);
  } else if (o.type == "hadamard") {
    g = zest::hadamard_graph(o.n, guard_or(o, zest::defaults::kHadamardOrderGuard));
  } else if (o.type == "hamming") {
    g = zest::hamming_weight_graph(o.p, guard_or(o, zest::defaults::kHammingPrimeGuard));
  } else {
    throw zest::ValueError("unknown graph type: " + o.type);
  }
  emit(zest::graph_to_json(g));
  return 0;
}

int run_graph_op(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  if (o.op == "complement") {
    emit(zest::graph_to_json(zest::complement(g)));
    return 0;
  }
  if (o.second_path.empty())
    throw zest::ValueError("operation " + o.op + " needs --target for the second operand");
  const zest::Graph h = load_graph(o.second_path);
  if (o.op == "strong-product") {
    emit(zest::graph_to_json(zest::strong_product(g, h)));
  } else if (o.op == "disjoint-union") {
    emit(zest::graph_to_json(zest::disjoint_union(g, h)));
  } else {
    throw zest::ValueError("unknown graph operation: " + o.op);
  }
  return 0;
}

int run_params_alpha(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const int a = zest::independence_number(g, guard_or(o, zest::defaults::kAlphaVertexGuard));
  emit(Json{{"alpha", a}, {"method", "exact"}});
  return 0;
}

int run_params_theta(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const double tol = o.tol > 0 ? o.tol : 1e-8;
  const zest::ThetaResult r =
      zest::lovasz_theta(g, tol, 500, guard_or(o, zest::defaults::kThetaVertexGuard));
  emit(Json{{"value", float_json(r.value)},
            {"gap", float_json(r.gap)},
            {"upper", float_json(r.upper)},
            {"lower", float_json(r.lower)},
            {"iterations", r.iterations},
            {"method", "sdp"}});
  return 0;
}

int run_params_fcc(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const zest::FccResult r = zest::clique_cover_fractional(
      g, o.guard >= 0 ? std::size_t(o.guard) : zest::defaults::kCliqueCountGuard);
  Json cliques = Json::array();
  for (const auto& c : r.cliques) cliques.push_back(c);
  emit(Json{{"value", zest::rational_to_json(r.value)},
            {"cliques", std::move(cliques)},
            {"weights", rationals_to_json(r.weights)},
            {"dual", rationals_to_json(r.dual)},
            {"method", "exact"}});
  return 0;
}

int run_params_capacity(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const zest::CapacityLb r = zest::shannon_capacity_lb(
      g, o.n, guard_or(o, zest::defaults::kAlphaVertexGuard));
  emit(Json{{"power", r.power},
            {"alpha", r.alpha},
            {"value", float_json(r.value)},
            {"method", "exact"}});
  return 0;
}

int run_verify_orthonormal(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const auto cert = zest::orthonormal_rep_from_json(zest::load_json_file(o.witness_path));
  return report_check(zest::verify_orthonormal_rep(g, cert));
}

int run_verify_subspace_fp(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const auto rep = zest::subspace_rep_fp_from_json(zest::load_json_file(o.witness_path));
  return report_check(zest::verify_subspace_rep_fp(g, rep));
}

int run_verify_subspace_c(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const auto rep = zest::subspace_rep_c_from_json(zest::load_json_file(o.witness_path));
  return report_check(zest::verify_subspace_rep_c(g, rep));
}

int run_verify_projective(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const auto rep = zest::projective_rep_from_json(zest::load_json_file(o.witness_path));
  return report_check(zest::verify_projective_rep(g, rep));
}

int run_semiring_add(const Options& o, bool multiply) {
  const zest::AElement a = load_element(o.source_path);
  const zest::AElement b = load_element(o.target_path);
  emit(zest::aelement_to_json(multiply ? zest::a_mul(a, b) : zest::a_add(a, b)));
  return 0;
}

int run_semiring_evaluate(const Options& o) {
  const zest::AElement s = load_element(o.source_path);
  const bool integral = std::floor(o.alpha) == o.alpha && o.alpha >= 1;
  Json out = Json::object();
  if (o.functional != "theta" && integral) {
    const auto f = [&](const zest::Graph& g) -> zest::Rational {
      if (o.functional == "alpha")
        return zest::Rational(
            zest::independence_number(g, guard_or(o, zest::defaults::kAlphaVertexGuard)));
      return zest::clique_cover_fractional(g).value;
    };
    const zest::Rational exact =
        zest::evaluate_exact(s, f, static_cast<unsigned>(o.alpha));
    out["value"] = float_json(zest::to_double(exact));
    out["exact"] = zest::rational_to_json(exact);
    out["method"] = "exact";
  } else {
    const auto f = [&](const zest::Graph& g) -> double {
      if (o.functional == "alpha")
        return static_cast<double>(
            zest::independence_number(g, guard_or(o, zest::defaults::kAlphaVertexGuard)));
      if (o.functional == "fcc")
        return zest::to_double(zest::clique_cover_fractional(g).value);
      const double tol = o.tol > 0 ? o.tol : 1e-8;
      return zest::lovasz_theta(g, tol, 500, guard_or(o, zest::defaults::kThetaVertexGuard))
          .value;
    };
    out["value"] = float_json(zest::evaluate(s, f, o.alpha));
    out["method"] = o.functional == "theta" ? "sdp" : "estimate";
  }
  out["functional"] = o.functional;
  out["alpha"] = float_json(o.alpha);
  emit(out);
  return 0;
}

int run_semiring_refine(const Options& o) {
  const zest::AElement s = load_element(o.source_path);
  std::map<int, double> base;
  if (!o.witness_path.empty()) {
    const Json bj = zest::load_json_file(o.witness_path);
    for (const Json& entry : need(bj, "base")) {
      const int dim = need(entry, "dim").get<int>();
      base[dim] = need(entry, "log2").get<double>();
    }
  } else {
    for (const zest::Term& t : s.terms()) {
      double value = 0;
      if (o.functional == "alpha") {
        value = static_cast<double>(zest::independence_number(
            t.graph, guard_or(o, zest::defaults::kAlphaVertexGuard)));
      } else if (o.functional == "fcc") {
        value = zest::to_double(zest::clique_cover_fractional(t.graph).value);
      } else {
        const double tol = o.tol > 0 ? o.tol : 1e-8;
        value = zest::lovasz_theta(t.graph, tol, 500,
                                   guard_or(o, zest::defaults::kThetaVertexGuard))
                    .value;
      }
      base[t.dim] = std::log2(value);
    }
  }
  const zest::GridMaxResult r = zest::refinement_grid_max(s, base, o.alpha, o.n, o.workers);
  emit(Json{{"value", float_json(r.value)},
            {"pi", rationals_to_json(r.pi.weights)},
            {"alpha", float_json(o.alpha)},
            {"n", o.n}});
  return 0;
}

int run_cohom_find(const Options& o) {
  const zest::Graph h = load_graph(o.source_path);
  const zest::Graph g = load_graph(o.target_path);
  const auto phi =
      zest::find_graph_cohomomorphism(h, g, guard_or(o, zest::defaults::kCohomVertexGuard));
  if (phi) {
    emit(Json{{"found", true}, {"map", *phi}});
  } else {
    emit(Json{{"found", false}});
  }
  return 0;
}

int run_cohom_verify(const Options& o) {
  zest::KrausWitness w = zest::kraus_witness_from_json(zest::load_json_file(o.witness_path));
  if (!o.source_path.empty()) w.source = load_element(o.source_path);
  if (!o.target_path.empty()) w.target = load_element(o.target_path);
  if (o.tol > 0) w.tol = o.tol;
  const zest::WitnessCheck check = zest::verify_kraus_witness(w);
  if (check.ok) {
    emit(Json{{"valid", true}, {"mode", w.floating ? "floating" : "exact"}});
    return 0;
  }
  emit(Json{{"valid", false}, {"reason", check.reason}});
  return 1;
}

int run_cohom_project(const Options& o) {
  const zest::KrausWitness w =
      zest::kraus_witness_from_json(zest::load_json_file(o.witness_path));
  emit(zest::kraus_witness_to_json(zest::project_witness(w, o.n)));
  return 0;
}

int run_cohom_cliques(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const auto packing = zest::disjoint_cliques(
      g, o.n, o.guard >= 0 ? std::size_t(o.guard) : zest::defaults::kCliqueCountGuard);
  Json cliques = Json::array();
  for (const auto& c : packing) cliques.push_back(c);
  emit(Json{{"count", packing.size()}, {"cliques", std::move(cliques)}});
  return 0;
}

int run_cohom_witness_from_cliques(const Options& o) {
  const zest::Graph g = load_graph(o.graph_path);
  const Json rj = zest::load_json_file(o.witness_path);
  std::vector<zest::ScaledVector> rep;
  for (const Json& v : need(rj, "vectors")) rep.push_back(zest::scaled_vector_from_json(v));
  const auto packing = zest::disjoint_cliques(
      g, o.n, o.guard >= 0 ? std::size_t(o.guard) : zest::defaults::kCliqueCountGuard);
  emit(zest::kraus_witness_to_json(zest::witness_from_cliques(g, o.n, rep, packing)));
  return 0;
}

zest::TransportInput transport_input_from_json(const Json& j) {
  zest::TransportInput in;
  in.target = zest::aelement_from_json(need(j, "target"));
  in.h = zest::graph_from_json(need(j, "graph"));
  in.form = zest::special_form_from_json(need(j, "form"));
  return in;
}

int run_transport(const Options& o, const std::string& kind) {
  const Json j = zest::load_json_file(o.witness_path);
  const zest::TransportInput in = transport_input_from_json(j);
  const Json& cj = need(j, "certificates");
  if (!cj.is_array()) throw zest::JsonError("field \"certificates\" must be an array");

  Json out = Json::object();
  if (kind == "theta") {
    std::vector<zest::OrthonormalRepCertificate> reps;
    for (const Json& c : cj) reps.push_back(zest::orthonormal_rep_from_json(c));
    const zest::ThetaTransport r = zest::transport_theta(in, reps);
    out = Json{{"valid", true},
               {"value", zest::rational_to_json(r.value)},
               {"input_bound", zest::rational_to_json(r.input_bound)},
               {"method", "exact"},
               {"certificate", zest::orthonormal_rep_to_json(r.certificate)}};
  } else if (kind == "haemers") {
    std::vector<zest::SubspaceRepC> reps;
    for (const Json& c : cj) reps.push_back(zest::subspace_rep_c_from_json(c));
    const zest::HaemersTransport r = zest::transport_haemers_c(in, reps);
    out = Json{{"valid", true},
               {"value", zest::rational_to_json(r.value)},
               {"input_bound", zest::rational_to_json(r.input_bound)},
               {"method", "exact"},
               {"certificate", zest::subspace_rep_c_to_json(r.certificate)}};
  } else {
    std::vector<zest::ProjectiveRep> reps;
    for (const Json& c : cj) reps.push_back(zest::projective_rep_from_json(c));
    const zest::ProjectiveTransport r = zest::transport_projective(in, reps);
    out = Json{{"valid", true},
               {"value", zest::rational_to_json(r.value)},
               {"input_bound", zest::rational_to_json(r.input_bound)},
               {"method", "exact"},
               {"certificate", zest::projective_rep_to_json(r.certificate)}};
  }
  emit(out);
  return 0;
}

int run_bounds_fp(const Options& o) {
  const zest::FpBoundReport r = zest::fp_exponent_lower_bound(o.p);
  emit(Json{{"p", r.p},
            {"central_binomial", r.central_binomial.str()},
            {"tail_sum", r.tail_sum.str()},
            {"binomial_form", r.binomial_form.str(o.precision)},
            {"entropy_form", r.entropy_form.str(o.precision)},
            {"exceeds_one", r.exceeds_one},
            {"assumption", r.assumption}});
  return 0;
}

int run_bounds_fcc_omega(const Options& o) {
  const zest::OmegaFccReport r = zest::omega_fcc_report(o.k);
  emit(Json{{"k", r.k},
            {"vertices", r.vertices},
            {"alpha", r.alpha},
            {"chi_f", zest::rational_to_json(r.chi_f)},
            {"xi_upper", r.xi_upper},
            {"ratio", r.ratio.str(o.precision)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  int rc = 0;

  CLI::App app{"Exact graph-semiring toolkit: parameters, witnesses, transports, bounds"};
  app.require_subcommand(1);

  auto* graph_cmd = app.add_subcommand("graph", "Graph generators and operations");
  graph_cmd->require_subcommand(1);
  auto* gen = graph_cmd->add_subcommand("gen", "Generate a named graph");
  gen->add_option("--type", o.type, "complete|empty|cycle|hadamard|hamming")->required();
  gen->add_option("--n", o.n, "order parameter");
  gen->add_option("--p", o.p, "prime parameter (hamming)");
  gen->add_option("--guard", o.guard, "size guard override");
  gen->callback([&] { rc = run_graph_gen(o); });
  auto* gop = graph_cmd->add_subcommand("op", "Apply a graph operation");
  gop->add_option("--op", o.op, "complement|strong-product|disjoint-union")->required();
  gop->add_option("--graph", o.graph_path, "first operand")->required();
  gop->add_option("--target", o.second_path, "second operand");
  gop->callback([&] { rc = run_graph_op(o); });

  auto* params_cmd = app.add_subcommand("params", "Graph parameters and certificate checks");
  params_cmd->require_subcommand(1);
  auto* alpha_cmd = params_cmd->add_subcommand("alpha", "Exact independence number");
  auto* theta_cmd = params_cmd->add_subcommand("theta", "Lovasz theta (SDP)");
  auto* fcc_cmd = params_cmd->add_subcommand("fcc", "Exact fractional clique cover number");
  auto* cap_cmd = params_cmd->add_subcommand("capacity-lb", "Capacity lower bound from power n");
  auto* von = params_cmd->add_subcommand("verify-orthonormal", "Check an orthonormal representation");
  auto* vfp = params_cmd->add_subcommand("verify-subspace-fp", "Check an F_p subspace representation");
  auto* vc = params_cmd->add_subcommand("verify-subspace-c", "Check a complex subspace representation");
  auto* vpr = params_cmd->add_subcommand("verify-projective", "Check a projective representation");
  for (auto* sub : {alpha_cmd, theta_cmd, fcc_cmd, cap_cmd, von, vfp, vc, vpr}) {
    sub->add_option("--graph", o.graph_path, "graph JSON path")->required();
    sub->add_option("--guard", o.guard, "size guard override");
  }
  theta_cmd->add_option("--tol", o.tol, "duality-gap tolerance");
  cap_cmd->add_option("--n", o.n, "strong-product power")->required();
  for (auto* sub : {von, vfp, vc, vpr})
    sub->add_option("--witness", o.witness_path, "certificate JSON path")->required();
  alpha_cmd->callback([&] { rc = run_params_alpha(o); });
  theta_cmd->callback([&] { rc = run_params_theta(o); });
  fcc_cmd->callback([&] { rc = run_params_fcc(o); });
  cap_cmd->callback([&] { rc = run_params_capacity(o); });
  von->callback([&] { rc = run_verify_orthonormal(o); });
  vfp->callback([&] { rc = run_verify_subspace_fp(o); });
  vc->callback([&] { rc = run_verify_subspace_c(o); });
  vpr->callback([&] { rc = run_verify_projective(o); });

  auto* semiring_cmd = app.add_subcommand("semiring", "Sum-of-terms elements and functionals");
  semiring_cmd->require_subcommand(1);
  auto* sadd = semiring_cmd->add_subcommand("add", "Sum of two elements");
  auto* smul = semiring_cmd->add_subcommand("mul", "Product of two elements");
  for (auto* sub : {sadd, smul}) {
    sub->add_option("--source", o.source_path, "first element JSON path")->required();
    sub->add_option("--target", o.target_path, "second element JSON path")->required();
  }
  sadd->callback([&] { rc = run_semiring_add(o, false); });
  smul->callback([&] { rc = run_semiring_add(o, true); });
  auto* seval = semiring_cmd->add_subcommand("evaluate", "Extension functional f_alpha");
  auto* srefine = semiring_cmd->add_subcommand("refine", "Grid maximum of the refinement value");
  for (auto* sub : {seval, srefine}) {
    sub->add_option("--source", o.source_path, "element JSON path")->required();
    sub->add_option("--alpha", o.alpha, "exponent, >= 1")->required();
    sub->add_option("--functional", o.functional, "alpha|theta|fcc")
        ->check(CLI::IsMember({"alpha", "theta", "fcc"}));
    sub->add_option("--guard", o.guard, "size guard override");
    sub->add_option("--tol", o.tol, "theta tolerance");
  }
  srefine->add_option("--n", o.n, "type denominator")->required();
  srefine->add_option("--workers", o.workers, "worker threads");
  srefine->add_option("--witness", o.witness_path,
                      "optional base log file {\"base\": [{\"dim\", \"log2\"}]}");
  seval->callback([&] { rc = run_semiring_evaluate(o); });
  srefine->callback([&] { rc = run_semiring_refine(o); });

  auto* cohom_cmd = app.add_subcommand("cohom", "Cohomomorphism search and witnesses");
  cohom_cmd->require_subcommand(1);
  auto* cfind = cohom_cmd->add_subcommand("find", "Search a graph cohomomorphism");
  cfind->add_option("--source", o.source_path, "graph JSON path (smaller side)")->required();
  cfind->add_option("--target", o.target_path, "graph JSON path (larger side)")->required();
  cfind->add_option("--guard", o.guard, "vertex guard override");
  cfind->callback([&] { rc = run_cohom_find(o); });
  auto* cverify = cohom_cmd->add_subcommand("verify", "Verify a Kraus witness");
  cverify->add_option("--witness", o.witness_path, "witness JSON path")->required();
  cverify->add_option("--source", o.source_path, "override witness source element");
  cverify->add_option("--target", o.target_path, "override witness target element");
  cverify->add_option("--tol", o.tol, "floating-mode residual bound");
  cverify->callback([&] { rc = run_cohom_verify(o); });
  auto* cproject = cohom_cmd->add_subcommand("project", "Drop small target terms");
  cproject->add_option("--witness", o.witness_path, "witness JSON path")->required();
  cproject->add_option("--n", o.n, "source dimension q")->required();
  cproject->callback([&] { rc = run_cohom_project(o); });
  auto* ccliques = cohom_cmd->add_subcommand("cliques", "Greedy-optimal disjoint d-cliques");
  auto* cwit = cohom_cmd->add_subcommand("witness-from-cliques",
                                         "Witness from clique packing and representation");
  for (auto* sub : {ccliques, cwit}) {
    sub->add_option("--graph", o.graph_path, "graph JSON path")->required();
    sub->add_option("--n", o.n, "clique size d")->required();
    sub->add_option("--guard", o.guard, "clique guard override");
  }
  cwit->add_option("--witness", o.witness_path, "representation JSON {\"vectors\": [...]}")
      ->required();
  ccliques->callback([&] { rc = run_cohom_cliques(o); });
  cwit->callback([&] { rc = run_cohom_witness_from_cliques(o); });

  auto* transport_cmd = app.add_subcommand("transport", "Certificate transports");
  transport_cmd->require_subcommand(1);
  for (const std::string kind : {"theta", "haemers", "projective"}) {
    auto* sub = transport_cmd->add_subcommand(
        kind, "Transport " + kind + " certificates along a special form");
    sub->add_option("--witness", o.witness_path,
                    "input JSON {target, graph, form, certificates}")
        ->required();
    sub->callback([&o, &rc, kind] { rc = run_transport(o, kind); });
  }

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form exponent bounds");
  bounds_cmd->require_subcommand(1);
  auto* bfp = bounds_cmd->add_subcommand("fp", "F_p exponent lower bound");
  bfp->add_option("--p", o.p, "odd prime")->required();
  bfp->add_option("--precision", o.precision, "printed significant digits");
  bfp->callback([&] { rc = run_bounds_fp(o); });
  auto* bfcc = bounds_cmd->add_subcommand("fcc-omega", "Hadamard graph impossibility report");
  bfcc->add_option("--k", o.k, "Omega_{4k} index (only 1)");
  bfcc->add_option("--precision", o.precision, "printed significant digits");
  bfcc->callback([&] { rc = run_bounds_fcc_omega(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const zest::JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const zest::CohomError& e) {
    emit(Json{{"valid", false}, {"reason", e.what()}});
    return 1;
  } catch (const zest::TransportError& e) {
    emit(Json{{"valid", false}, {"reason", e.what()}});
    return 1;
  } catch (const zest::ThetaError& e) {
    emit(Json{{"valid", false}, {"reason", e.what()}});
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
