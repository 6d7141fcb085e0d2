#include "balance/oracle.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "balance/errors.hpp"
#include "balance/objective.hpp"
#include "balance/selection.hpp"

namespace balance {
namespace {

constexpr double kCompareTolerance = 1e-9;

std::size_t enumeration_limit(CascadeModel model) {
  return model == CascadeModel::kCorrelated ? kExactCorrelatedEdgeLimit
                                            : kExactHeterogeneousEdgeLimit;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::string instance_text(const SmallInstance& inst) {
  std::string out = std::string(to_string(inst.model)) + " n=" +
                    std::to_string(inst.graph.num_vertices()) + " edges=[";
  for (const Edge& e : inst.graph.edges()) {
    out += std::to_string(e.src) + "->" + std::to_string(e.dst) + "(" + std::to_string(e.p1) +
           "," + std::to_string(e.p2) + ") ";
  }
  return out + "] I1=" + set_text(inst.i1) + " I2=" + set_text(inst.i2) +
         " k=" + std::to_string(inst.k);
}

// Calls fn(s1, s2) for every pair with |s1| + |s2| <= k, by increasing size
// over the ground set V x {1, 2} (element e < n is (e, 1), else (e - n, 2)).
void for_each_assignment(std::size_t n, std::size_t k,
                         const std::function<void(const VertexSet&, const VertexSet&)>& fn) {
  VertexSet s1(n);
  VertexSet s2(n);
  const std::size_t ground = 2 * n;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t next, std::size_t left) {
    fn(s1, s2);
    if (left == 0) return;
    for (std::size_t e = next; e < ground; ++e) {
      VertexSet& side = e < n ? s1 : s2;
      const auto v = static_cast<VertexId>(e < n ? e : e - n);
      side.insert(v);
      rec(e + 1, left - 1);
      side.erase(v);
    }
  };
  rec(0, k);
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

double approximation_ratio() { return (1.0 - 1.0 / std::exp(1.0)) / 2.0; }

std::uint64_t count_assignments(std::size_t n, std::size_t k) {
  // Σ_{j <= k} C(2n, j), saturating.
  const std::uint64_t ground = 2 * n;
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (std::uint64_t j = 0; j <= k && j <= ground; ++j) {
    total += term;
    if (total > kMaxBruteForceAssignments * 16) return total;
    term = term * (ground - j) / (j + 1);
  }
  return total;
}

OracleReport brute_force_opt(const Graph& g, CascadeModel model, const VertexSet& i1,
                             const VertexSet& i2, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (count_assignments(n, k) > kMaxBruteForceAssignments) {
    throw LimitExceeded("brute force over more than " + std::to_string(kMaxBruteForceAssignments) +
                        " assignments");
  }
  const ExactEvaluator exact(g, model);
  OracleReport report;
  report.opt_value = -1.0;
  for_each_assignment(n, k, [&](const VertexSet& s1, const VertexSet& s2) {
    const double value = exact.phi(i1 | s1, i2 | s2);
    ++report.instances_checked;
    if (value > report.opt_value + kCompareTolerance) {
      report.opt_value = value;
      report.opt_assignments.clear();
    }
    if (value >= report.opt_value - kCompareTolerance) report.opt_assignments.emplace_back(s1, s2);
  });
  return report;
}

RatioCheck check_cover_ratio(const Graph& g, CascadeModel model, const VertexSet& i1,
                             const VertexSet& i2, std::size_t k) {
  const OracleReport opt = brute_force_opt(g, model, i1, i2, k);
  const WorldEnsemble worlds = enumerate_worlds(g, model, enumeration_limit(model));
  const SelectionResult cover = run_cover(worlds, g, i1, i2, k);
  const ExactEvaluator exact(g, model);
  const double value =
      std::max(exact.phi(i1 | cover.s1, i2 | cover.s2), exact.phi(i1, i2));
  RatioCheck check;
  check.achieved = value;
  check.opt = opt.opt_value;
  check.holds = value >= approximation_ratio() * opt.opt_value - kCompareTolerance;
  return check;
}

RatioCheck check_hedge_common_ratio(const Graph& g, const VertexSet& i1, const VertexSet& i2,
                                    std::size_t k) {
  if (k % 2 != 0) throw std::invalid_argument("the Hedge/Common guarantee needs an even budget");
  if (!validate_correlated(g)) {
    throw std::invalid_argument("the Hedge/Common guarantee needs the correlated model");
  }
  constexpr CascadeModel model = CascadeModel::kCorrelated;
  const OracleReport opt = brute_force_opt(g, model, i1, i2, k);
  const WorldEnsemble worlds = enumerate_worlds(g, model, enumeration_limit(model));
  const ExactEvaluator exact(g, model);
  const SelectionResult hedge = run_hedge(worlds, g, i1, i2, k);
  const SelectionResult common = run_common(worlds, g, i1, i2, k);
  const double value = std::min(exact.phi(i1 | hedge.s1, i2 | hedge.s2),
                                exact.phi(i1 | common.s1, i2 | common.s2));
  RatioCheck check;
  check.achieved = value;
  check.opt = opt.opt_value;
  check.holds = value >= approximation_ratio() * opt.opt_value - kCompareTolerance;
  return check;
}

bool check_halving_lemma(const ExactEvaluator& exact, const VertexSet& i1, const VertexSet& i2,
                         const VertexSet& s1, const VertexSet& s2) {
  if (exact.model() != CascadeModel::kCorrelated) {
    throw std::invalid_argument("the halving lemma concerns the correlated model");
  }
  const std::size_t total = s1.count() + s2.count();
  if (total % 2 != 0) throw std::invalid_argument("the halving lemma needs |S1| + |S2| even");
  const double target = exact.phi(i1 | s1, i2 | s2) / 2.0;
  const auto pool = (s1 | s2).to_vector();
  const std::size_t half = total / 2;

  VertexSet common(s1.universe());
  bool found = false;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t next, std::size_t left) {
    if (found) return;
    if (left == 0) {
      found = exact.phi(i1 | common, i2 | common) >= target - kCompareTolerance;
      return;
    }
    for (std::size_t i = next; i + left <= pool.size() && !found; ++i) {
      common.insert(pool[i]);
      rec(i + 1, left - 1);
      common.erase(pool[i]);
    }
  };
  rec(0, half);
  return found;
}

bool check_halving_lemma(const Graph& g, const VertexSet& i1, const VertexSet& i2,
                         const VertexSet& s1, const VertexSet& s2) {
  return check_halving_lemma(ExactEvaluator(g, CascadeModel::kCorrelated), i1, i2, s1, s2);
}

SmallInstance random_small_instance(Rng& rng, const SmallInstanceShape& shape) {
  const auto pick = [&](std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(uniform_below(rng, hi - lo + 1));
  };
  const std::size_t n = pick(shape.min_vertices, shape.max_vertices);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back(std::to_string(v));

  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) slots.emplace_back(u, v);
    }
  }
  const std::size_t m = pick(0, std::min(shape.max_edges, slots.size()));
  for (std::size_t i = 0; i < m; ++i) {
    std::swap(slots[i], slots[i + uniform_below(rng, slots.size() - i)]);
  }
  const auto draw_probability = [&] {
    if (uniform01(rng) < shape.certain_fraction) return 1.0;
    return shape.min_probability + (shape.max_probability - shape.min_probability) * uniform01(rng);
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const double p1 = draw_probability();
    const double p2 = shape.model == CascadeModel::kCorrelated ? p1 : draw_probability();
    edges.push_back(Edge{slots[i].first, slots[i].second, p1, p2});
  }

  SmallInstance inst;
  inst.graph = Graph(std::move(names), std::move(edges));
  inst.model = shape.model;
  inst.i1 = VertexSet(n);
  inst.i2 = VertexSet(n);
  inst.i1.insert(static_cast<VertexId>(uniform_below(rng, n)));
  inst.i2.insert(static_cast<VertexId>(uniform_below(rng, n)));
  for (VertexId v = 0; v < n; ++v) {
    if (uniform01(rng) < 0.15) inst.i1.insert(v);
    if (uniform01(rng) < 0.15) inst.i2.insert(v);
  }
  inst.k = pick(shape.min_k, shape.max_k);
  if (shape.even_k && inst.k % 2 != 0) inst.k = inst.k + 1 <= shape.max_k ? inst.k + 1 : inst.k - 1;
  return inst;
}

SweepSummary sweep_omega_properties(std::size_t graphs, std::size_t max_set_size,
                                    std::size_t submodular_checks, std::size_t n_worlds,
                                    std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.name = "omega monotone + submodular";
  for (std::size_t gi = 0; gi < graphs; ++gi) {
    Rng rng(derive_stream_seed(seed, gi));
    SmallInstanceShape shape;
    shape.min_vertices = 2;
    shape.max_vertices = 8;
    shape.max_edges = 10;
    shape.model = gi % 2 == 0 ? CascadeModel::kHeterogeneous : CascadeModel::kCorrelated;
    const SmallInstance inst = random_small_instance(rng, shape);
    const std::size_t n = inst.graph.num_vertices();
    const WorldEnsemble ens = build_ensemble(inst.graph, inst.model, n_worlds, rng());
    ++summary.instances;

    const auto omega = [&](const VertexSet& s1, const VertexSet& s2) {
      SeedAssignment a = SeedAssignment::initial(inst.i1, inst.i2);
      a.s1 = s1;
      a.s2 = s2;
      return estimate_omega(ens, a);
    };
    const auto record = [&](bool ok, const std::string& what) {
      ++summary.checks;
      if (ok) return;
      if (summary.violations++ == 0) summary.first_violation = what + " on " + instance_text(inst);
    };

    for_each_assignment(n, max_set_size, [&](const VertexSet& s1, const VertexSet& s2) {
      const double base = omega(s1, s2);
      for (VertexId v = 0; v < n; ++v) {
        if (!s1.contains(v)) {
          VertexSet t = s1;
          t.insert(v);
          record(omega(t, s2) >= base - kCompareTolerance,
                 "monotonicity S1=" + set_text(s1) + " S2=" + set_text(s2) + " +(" +
                     std::to_string(v) + ",1)");
        }
        if (!s2.contains(v)) {
          VertexSet t = s2;
          t.insert(v);
          record(omega(s1, t) >= base - kCompareTolerance,
                 "monotonicity S1=" + set_text(s1) + " S2=" + set_text(s2) + " +(" +
                     std::to_string(v) + ",2)");
        }
      }
    });

    for (std::size_t check = 0; check < submodular_checks; ++check) {
      // Larger pair (T1, T2), smaller pair (S1, S2) ⊆ (T1, T2), element x
      // outside the larger pair.
      VertexSet t1(n), t2(n), s1(n), s2(n);
      for (VertexId v = 0; v < n; ++v) {
        if (uniform01(rng) < 0.4) {
          t1.insert(v);
          if (uniform01(rng) < 0.5) s1.insert(v);
        }
        if (uniform01(rng) < 0.4) {
          t2.insert(v);
          if (uniform01(rng) < 0.5) s2.insert(v);
        }
      }
      std::vector<std::pair<VertexId, int>> outside;
      for (VertexId v = 0; v < n; ++v) {
        if (!t1.contains(v)) outside.emplace_back(v, 1);
        if (!t2.contains(v)) outside.emplace_back(v, 2);
      }
      if (outside.empty()) continue;
      const auto [x, side] = outside[uniform_below(rng, outside.size())];
      const auto with = [&](VertexSet a, VertexSet b) {
        (side == 1 ? a : b).insert(x);
        return omega(a, b);
      };
      const double small_gain = with(s1, s2) - omega(s1, s2);
      const double large_gain = with(t1, t2) - omega(t1, t2);
      record(small_gain >= large_gain - kCompareTolerance,
             "submodularity S=(" + set_text(s1) + "," + set_text(s2) + ") T=(" + set_text(t1) +
                 "," + set_text(t2) + ") x=(" + std::to_string(x) + "," + std::to_string(side) +
                 ")");
    }
  }
  summary.seconds = elapsed_since(start);
  return summary;
}

SweepSummary sweep_cover_ratio(std::size_t instances, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.name = "cover ratio";
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(derive_stream_seed(seed, i));
    SmallInstanceShape shape;
    shape.model = i % 2 == 0 ? CascadeModel::kHeterogeneous : CascadeModel::kCorrelated;
    shape.max_edges = shape.model == CascadeModel::kCorrelated ? 8 : 5;
    const SmallInstance inst = random_small_instance(rng, shape);
    ++summary.instances;
    ++summary.checks;
    const RatioCheck check = check_cover_ratio(inst.graph, inst.model, inst.i1, inst.i2, inst.k);
    if (!check.holds && summary.violations++ == 0) {
      summary.first_violation = "cover " + std::to_string(check.achieved) + " vs OPT " +
                                std::to_string(check.opt) + " on " + instance_text(inst);
    }
  }
  summary.seconds = elapsed_since(start);
  return summary;
}

SweepSummary sweep_hedge_common_ratio(std::size_t instances, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.name = "hedge/common ratio";
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(derive_stream_seed(seed, i));
    SmallInstanceShape shape;
    shape.model = CascadeModel::kCorrelated;
    shape.min_k = 2;
    shape.max_k = 4;
    shape.even_k = true;
    const SmallInstance inst = random_small_instance(rng, shape);
    ++summary.instances;
    ++summary.checks;
    const RatioCheck check = check_hedge_common_ratio(inst.graph, inst.i1, inst.i2, inst.k);
    if (!check.holds && summary.violations++ == 0) {
      summary.first_violation = "min(hedge, common) " + std::to_string(check.achieved) +
                                " vs OPT " + std::to_string(check.opt) + " on " +
                                instance_text(inst);
    }
  }
  summary.seconds = elapsed_since(start);
  return summary;
}

SweepSummary sweep_halving_lemma(std::size_t instances, const std::vector<std::size_t>& budgets,
                                 std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.name = "halving lemma";
  std::size_t max_budget = 0;
  for (std::size_t b : budgets) max_budget = std::max(max_budget, b);
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(derive_stream_seed(seed, i));
    SmallInstanceShape shape;
    shape.model = CascadeModel::kCorrelated;
    const SmallInstance inst = random_small_instance(rng, shape);
    const ExactEvaluator exact(inst.graph, inst.model);
    ++summary.instances;
    for_each_assignment(inst.graph.num_vertices(), max_budget,
                        [&](const VertexSet& s1, const VertexSet& s2) {
                          const std::size_t used = s1.count() + s2.count();
                          if (std::find(budgets.begin(), budgets.end(), used) == budgets.end()) {
                            return;
                          }
                          ++summary.checks;
                          if (!check_halving_lemma(exact, inst.i1, inst.i2, s1, s2) &&
                              summary.violations++ == 0) {
                            summary.first_violation = "S1=" + set_text(s1) + " S2=" +
                                                      set_text(s2) + " on " + instance_text(inst);
                          }
                        });
  }
  summary.seconds = elapsed_since(start);
  return summary;
}

SweepSummary sweep_reduction(std::size_t max_universe, std::size_t max_sets, std::size_t max_k) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.name = "set-cover reduction";
  for (const SetCoverInstance& inst : enumerate_set_cover_instances(max_universe, max_sets, max_k)) {
    const ReducedInstance reduced = reduction_from_set_cover(inst);
    const OracleReport opt = brute_force_opt(reduced.graph, CascadeModel::kCorrelated, reduced.i1,
                                             reduced.i2, reduced.budget);
    const auto n = static_cast<double>(reduced.graph.num_vertices());
    const bool zero_imbalance = opt.opt_value >= n - kCompareTolerance;
    const bool coverable = is_k_coverable(inst);
    ++summary.instances;
    ++summary.checks;
    if (zero_imbalance != coverable && summary.violations++ == 0) {
      std::string text = "|U|=" + std::to_string(inst.universe_size) + " k=" +
                         std::to_string(inst.k) + " sets=";
      for (const auto& set : inst.sets) {
        text += "{";
        for (auto e : set) text += std::to_string(e) + " ";
        text += "}";
      }
      summary.first_violation = text + " coverable=" + (coverable ? "yes" : "no") +
                                " OPT=" + std::to_string(opt.opt_value);
    }
  }
  summary.seconds = elapsed_since(start);
  return summary;
}

SweepSummary sweep_mc_consistency(const Graph& g, CascadeModel model, const VertexSet& i1,
                                  const VertexSet& i2, const VertexSet& s1, const VertexSet& s2,
                                  std::size_t n_worlds, std::size_t trials, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.name = "monte carlo consistency";
  SeedAssignment assign = SeedAssignment::initial(i1, i2);
  assign.s1 = s1;
  assign.s2 = s2;
  const double exact = exact_phi(g, model, assign);
  summary.instances = 1;
  for (std::size_t t = 0; t < trials; ++t) {
    const WorldEnsemble ens = build_ensemble(g, model, n_worlds, derive_stream_seed(seed, t));
    const ObjectiveBreakdown est = estimate_phi(ens, assign);
    ++summary.checks;
    if (std::abs(est.phi - exact) > 3.0 * est.std_err + kCompareTolerance &&
        summary.violations++ == 0) {
      summary.first_violation = "trial " + std::to_string(t) + ": estimate " +
                                std::to_string(est.phi) + " exact " + std::to_string(exact) +
                                " std_err " + std::to_string(est.std_err);
    }
  }
  summary.seconds = elapsed_since(start);
  return summary;
}

}  // namespace balance
