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

#include "zest/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace zest {

namespace {

std::vector<Term> normalize(std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.dim < 1) throw SemiringError("term dim must be >= 1");
  std::erase_if(terms, [](const Term& t) { return t.graph.vertex_count() == 0; });
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.dim < b.dim; });
  std::vector<Term> out;
  for (Term& t : terms) {
    if (!out.empty() && out.back().dim == t.dim)
      out.back().graph = disjoint_union(out.back().graph, t.graph);
    else
      out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

AElement::AElement(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {
  offsets_.reserve(terms_.size() + 1);
  offsets_.push_back(0);
  for (const Term& t : terms_) offsets_.push_back(offsets_.back() + t.graph.vertex_count());
}

int AElement::total_vertices() const { return offsets_.empty() ? 0 : offsets_.back(); }

int AElement::term_of_vertex(int global) const {
  if (global < 0 || global >= total_vertices()) throw SemiringError("vertex index out of range");
  int t = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), global) -
                           offsets_.begin()) -
          1;
  return t;
}

int AElement::vertex_offset(int term) const {
  if (term < 0 || term >= static_cast<int>(terms_.size()))
    throw SemiringError("term index out of range");
  return offsets_[term];
}

bool AElement::adjacent_or_equal(int gu, int gv) const {
  const int tu = term_of_vertex(gu), tv = term_of_vertex(gv);
  if (tu != tv) return false;
  return terms_[tu].graph.adjacent_or_equal(gu - offsets_[tu], gv - offsets_[tu]);
}

AElement a_add(const AElement& s, const AElement& t) {
  std::vector<Term> terms = s.terms();
  terms.insert(terms.end(), t.terms().begin(), t.terms().end());
  return AElement(std::move(terms));
}

AElement a_mul(const AElement& s, const AElement& t) {
  std::vector<Term> terms;
  for (const Term& a : s.terms())
    for (const Term& b : t.terms())
      terms.push_back(Term{strong_product(a.graph, b.graph), a.dim * b.dim});
  return AElement(std::move(terms));
}

NcGraph to_ncgraph(const AElement& s) {
  if (s.is_zero()) throw SemiringError("zero element has no operator realization");
  bool first = true;
  NcGraph acc = NcGraph::quantum_ideal(1);
  for (const Term& t : s.terms()) {
    NcGraph block = NcGraph::tensor(NcGraph::from_graph(t.graph), NcGraph::quantum_ideal(t.dim));
    acc = first ? std::move(block) : NcGraph::direct_sum(acc, block);
    first = false;
  }
  if (s.terms().size() == 1) {
    // Single term: tag the lone block explicitly.
    return NcGraph(acc.ambient_dim(), acc.basis(), {acc.ambient_dim()});
  }
  return acc;
}

Rational evaluate_exact(const AElement& s, const std::function<Rational(const Graph&)>& f,
                        unsigned alpha) {
  if (alpha < 1) throw SemiringError("exponent must be >= 1");
  Rational sum(0);
  for (const Term& t : s.terms())
    sum += f(t.graph) * Rational(boost::multiprecision::pow(Integer(t.dim), alpha));
  return sum;
}

double evaluate(const AElement& s, const std::function<double(const Graph&)>& f, double alpha) {
  if (alpha < 1.0) throw SemiringError("exponent must be >= 1");
  double sum = 0.0;
  for (const Term& t : s.terms()) sum += f(t.graph) * std::pow(static_cast<double>(t.dim), alpha);
  return sum;
}

Distribution::Distribution(std::vector<Rational> w) : weights(std::move(w)) {
  Rational sum(0);
  for (const Rational& p : weights) {
    if (p < 0) throw SemiringError("distribution weight < 0");
    sum += p;
  }
  if (sum != 1) throw SemiringError("distribution weights must sum to 1");
}

double entropy_bits(const std::vector<Rational>& weights) {
  double h = 0.0;
  for (const Rational& p : weights) {
    if (p.is_zero()) continue;
    const double x = to_double(p);
    h -= x * std::log2(x);
  }
  return h;
}

namespace {

// Marginal of q over the terms of s; validates support.
std::vector<Rational> marginal(const AElement& s, const Distribution& q) {
  if (static_cast<int>(q.size()) != s.total_vertices())
    throw SemiringError("distribution must be indexed by the disjoint union of term vertex sets");
  std::vector<Rational> pi(s.terms().size(), Rational(0));
  for (int v = 0; v < s.total_vertices(); ++v) pi[s.term_of_vertex(v)] += q.weights[v];
  return pi;
}

}  // namespace

double refinement_value(const AElement& s, const Distribution& q,
                        const std::map<int, double>& base_log_values, double alpha) {
  if (alpha < 1.0) throw SemiringError("exponent must be >= 1");
  const std::vector<Rational> pi = marginal(s, q);
  double value = entropy_bits(pi);
  for (std::size_t t = 0; t < pi.size(); ++t) {
    if (pi[t].is_zero()) continue;
    const int d = s.terms()[t].dim;
    auto it = base_log_values.find(d);
    if (it == base_log_values.end())
      throw SemiringError("missing base log value for dim " + std::to_string(d));
    value += to_double(pi[t]) * (it->second + alpha * std::log2(static_cast<double>(d)));
  }
  return value;
}

double refinement_value(const AElement& s, const Distribution& q, const RefinementFunctional& f) {
  if (f.exponent < 1.0) throw SemiringError("exponent must be >= 1");
  const std::vector<Rational> pi = marginal(s, q);
  double value = entropy_bits(pi);
  for (std::size_t t = 0; t < pi.size(); ++t) {
    if (pi[t].is_zero()) continue;
    const Term& term = s.terms()[t];
    std::vector<Rational> cond(term.graph.vertex_count());
    const int off = s.vertex_offset(static_cast<int>(t));
    for (int v = 0; v < term.graph.vertex_count(); ++v) cond[v] = q.weights[off + v] / pi[t];
    value += to_double(pi[t]) * (f.base_log(term.graph, cond) +
                                 f.exponent * std::log2(static_cast<double>(term.dim)));
  }
  return value;
}

RefinementFunctional combine_refinements(const Rational& lambda, const RefinementFunctional& f,
                                         const RefinementFunctional& g) {
  if (lambda < 0 || lambda > 1) throw SemiringError("lambda must lie in [0,1]");
  const double lam = to_double(lambda);
  RefinementFunctional out;
  out.exponent = lam * f.exponent + (1.0 - lam) * g.exponent;
  auto fb = f.base_log;
  auto gb = g.base_log;
  out.base_log = [lam, fb, gb](const Graph& graph, const std::vector<Rational>& p) {
    return lam * fb(graph, p) + (1.0 - lam) * gb(graph, p);
  };
  return out;
}

namespace {

void compositions(int remaining, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.push_back(k);
    compositions(remaining - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Distribution> type_distributions(int n, int r) {
  if (n < 1 || r < 1) throw SemiringError("type_distributions requires n >= 1 and r >= 1");
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(n, r, cur, comps);
  std::vector<Distribution> out;
  out.reserve(comps.size());
  for (const auto& c : comps) {
    std::vector<Rational> w(r);
    for (int i = 0; i < r; ++i) w[i] = Rational(c[i], n);
    out.push_back(Distribution(std::move(w)));
  }
  return out;
}

namespace {

void sequences_rec(int n, std::vector<int>& counts, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] == 0) continue;
    --counts[v];
    cur.push_back(static_cast<int>(v));
    sequences_rec(n, counts, cur, out);
    cur.pop_back();
    ++counts[v];
  }
}

}  // namespace

TypeGraph typegraph(const Graph& g, int n, const Distribution& qn, long long guard) {
  if (n < 1) throw SemiringError("typegraph requires n >= 1");
  if (static_cast<int>(qn.size()) != g.vertex_count())
    throw SemiringError("type distribution must be indexed by V(G)");
  std::vector<int> counts(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Rational k = qn.weights[v] * n;
    if (denominator(k) != 1) throw SemiringError("type denominators must divide n");
    counts[v] = static_cast<int>(numerator(k));
  }
  Integer num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (int c : counts)
    for (int k = 2; k <= c; ++k) den *= k;
  const Integer size = num / den;  // multinomial, exact
  if (size > guard) throw SemiringError("type class size exceeds guard");

  std::vector<std::vector<int>> seqs;
  std::vector<int> cur;
  sequences_rec(n, counts, cur, seqs);
  const int big = static_cast<int>(seqs.size());
  std::vector<Edge> edges;
  for (int i = 0; i < big; ++i)
    for (int j = i + 1; j < big; ++j) {
      bool adj = true;
      for (int k = 0; k < n && adj; ++k) adj = g.adjacent_or_equal(seqs[i][k], seqs[j][k]);
      if (adj) edges.emplace_back(i, j);
    }
  return TypeGraph{Graph(big, std::move(edges)), std::move(seqs)};
}

double refinement_base_estimate(const Graph& g, int n, const Distribution& qn,
                                const std::function<double(const Graph&)>& f, long long guard) {
  TypeGraph tg = typegraph(g, n, qn, guard);
  return std::log2(f(tg.graph)) / n;
}

GridMaxResult refinement_grid_max(const AElement& s, const std::map<int, double>& base_log_values,
                                  double alpha, int n, int workers) {
  if (s.is_zero()) throw SemiringError("grid max over the zero element");
  if (n < 1 || workers < 1) throw SemiringError("grid max requires n >= 1 and workers >= 1");
  const int r = static_cast<int>(s.terms().size());
  std::vector<double> c(r);
  for (int t = 0; t < r; ++t) {
    const int d = s.terms()[t].dim;
    auto it = base_log_values.find(d);
    if (it == base_log_values.end())
      throw SemiringError("missing base log value for dim " + std::to_string(d));
    c[t] = it->second + alpha * std::log2(static_cast<double>(d));
  }
  const std::vector<Distribution> grid = type_distributions(n, r);
  const std::size_t total = grid.size();
  const std::size_t nw = std::min<std::size_t>(workers, total);

  std::vector<std::pair<double, std::size_t>> best(nw, {0.0, total});
  auto scan = [&](std::size_t w, std::size_t lo, std::size_t hi) {
    double bv = 0.0;
    std::size_t bi = total;
    for (std::size_t i = lo; i < hi; ++i) {
      double v = entropy_bits(grid[i].weights);
      for (int t = 0; t < r; ++t)
        if (!grid[i].weights[t].is_zero()) v += to_double(grid[i].weights[t]) * c[t];
      if (bi == total || v > bv) {
        bv = v;
        bi = i;
      }
    }
    best[w] = {bv, bi};
  };
  if (nw <= 1) {
    scan(0, 0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + nw - 1) / nw;
    for (std::size_t w = 0; w < nw; ++w)
      pool.emplace_back(scan, w, w * chunk, std::min(total, (w + 1) * chunk));
    for (auto& th : pool) th.join();
  }
  std::pair<double, std::size_t> win = best[0];
  for (std::size_t w = 1; w < nw; ++w)
    if (best[w].second < total && (win.second == total || best[w].first > win.first)) win = best[w];
  return GridMaxResult{win.first, grid[win.second]};
}

}  // namespace zest
