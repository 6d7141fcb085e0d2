#include "balance/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "balance/errors.hpp"

namespace balance {
namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

ExactEvaluator::ExactEvaluator(const Graph& g, CascadeModel model)
    : n_(g.num_vertices()), model_(model) {
  if (model == CascadeModel::kCorrelated && !validate_correlated(g)) {
    throw std::invalid_argument("correlated model requires p1 == p2 on every edge");
  }
  const std::size_t limit = model == CascadeModel::kCorrelated ? kExactCorrelatedEdgeLimit
                                                               : kExactHeterogeneousEdgeLimit;
  auto enumerate = [&](bool first) {
    std::vector<std::pair<VertexId, VertexId>> certain;
    std::vector<const Edge*> uncertain;
    for (const Edge& e : g.edges()) {
      const double p = first ? e.p1 : e.p2;
      if (p >= 1.0) {
        certain.emplace_back(e.src, e.dst);
      } else if (p > 0.0) {
        uncertain.push_back(&e);
      }
    }
    if (uncertain.size() > limit) {
      throw LimitExceeded("exact evaluation supports at most " + std::to_string(limit) +
                          " uncertain edges in the " + std::string(to_string(model)) +
                          " model; got " + std::to_string(uncertain.size()));
    }
    std::vector<Realization> out;
    const std::size_t masks = std::size_t{1} << uncertain.size();
    out.reserve(masks);
    for (std::size_t mask = 0; mask < masks; ++mask) {
      Realization r{1.0, certain};
      for (std::size_t j = 0; j < uncertain.size(); ++j) {
        const double p = first ? uncertain[j]->p1 : uncertain[j]->p2;
        if ((mask >> j) & 1U) {
          r.probability *= p;
          r.live.emplace_back(uncertain[j]->src, uncertain[j]->dst);
        } else {
          r.probability *= 1.0 - p;
        }
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  first_ = enumerate(true);
  if (model == CascadeModel::kHeterogeneous) second_ = enumerate(false);
}

VertexSet ExactEvaluator::closure(const Realization& r, const VertexSet& seeds) const {
  VertexSet reached = seeds;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [u, v] : r.live) {
      if (reached.contains(u) && !reached.contains(v)) {
        reached.insert(v);
        changed = true;
      }
    }
  }
  return reached;
}

double ExactEvaluator::phi(const SeedAssignment& assign) const {
  return phi(assign.seeds1(), assign.seeds2());
}

double ExactEvaluator::phi(const VertexSet& seeds1, const VertexSet& seeds2) const {
  CompensatedSum total;
  const auto balanced = [&](const VertexSet& r1, const VertexSet& r2) {
    return static_cast<double>(n_ - symmetric_difference_size(r1, r2));
  };
  if (model_ == CascadeModel::kCorrelated) {
    for (const Realization& r : first_) {
      if (r.probability == 0.0) continue;
      total.add(r.probability * balanced(closure(r, seeds1), closure(r, seeds2)));
    }
    return total.value();
  }
  std::vector<VertexSet> reach2;
  reach2.reserve(second_.size());
  for (const Realization& r : second_) reach2.push_back(closure(r, seeds2));
  for (const Realization& r1 : first_) {
    if (r1.probability == 0.0) continue;
    const VertexSet reach1 = closure(r1, seeds1);
    for (std::size_t j = 0; j < second_.size(); ++j) {
      const double p = r1.probability * second_[j].probability;
      if (p == 0.0) continue;
      total.add(p * balanced(reach1, reach2[j]));
    }
  }
  return total.value();
}

double exact_phi(const Graph& g, CascadeModel model, const SeedAssignment& assign) {
  return ExactEvaluator(g, model).phi(assign);
}

}  // namespace balance
