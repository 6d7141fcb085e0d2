#include "balance/probability.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "balance/errors.hpp"
#include "balance/graph_io.hpp"

namespace balance {
namespace {

std::uint64_t edge_key(VertexId u, VertexId v) { return (std::uint64_t{u} << 32) | v; }

VertexId lookup(const Graph& g, std::string_view label, std::size_t line_no) {
  const auto id = g.find(label);
  if (!id) {
    throw InputError("unknown vertex '" + std::string(label) + "' at line " +
                     std::to_string(line_no));
  }
  return *id;
}

}  // namespace

Graph estimate_probabilities(const Graph& topology, const std::vector<InteractionRecord>& interactions,
                             const std::vector<SidePrior>& priors, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  const std::size_t n = topology.num_vertices();
  std::vector<std::optional<SidePrior>> prior_of(n);
  for (const SidePrior& p : priors) prior_of.at(p.v) = p;

  std::unordered_map<std::uint64_t, const InteractionRecord*> counts;
  counts.reserve(interactions.size());
  for (const InteractionRecord& r : interactions) counts.emplace(edge_key(r.u, r.v), &r);

  std::vector<Edge> edges(topology.edges().begin(), topology.edges().end());
  for (Edge& e : edges) {
    const auto& prior = prior_of[e.dst];
    if (!prior) throw InputError("missing side prior for vertex " + topology.name(e.dst));
    std::uint64_t r_uv = 0;
    std::uint64_t r_v = 0;
    if (const auto it = counts.find(edge_key(e.src, e.dst)); it != counts.end()) {
      r_uv = it->second->retweets_uv;
      r_v = it->second->total_retweets_v;
    }
    const double smooth =
        (static_cast<double>(r_uv) + 1.0) / (static_cast<double>(r_v) + 2.0);
    e.p1 = alpha * prior->q1 + (1.0 - alpha) * smooth;
    e.p2 = alpha * prior->q2 + (1.0 - alpha) * smooth;
  }
  return Graph(std::vector<std::string>(topology.names().begin(), topology.names().end()),
               std::move(edges));
}

std::vector<InteractionRecord> parse_interactions(std::istream& in, const Graph& g) {
  std::unordered_map<std::uint64_t, bool> is_edge;
  for (const Edge& e : g.edges()) is_edge.emplace(edge_key(e.src, e.dst), false);

  std::vector<InteractionRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_skippable(line)) continue;
    const auto fields = detail::split_fields(line);
    if (fields.size() != 4) {
      throw InputError("expected 4 fields at line " + std::to_string(line_no));
    }
    InteractionRecord r;
    r.u = lookup(g, fields[0], line_no);
    r.v = lookup(g, fields[1], line_no);
    r.retweets_uv = detail::parse_count(fields[2], line_no, "count");
    r.total_retweets_v = detail::parse_count(fields[3], line_no, "count");
    if (r.retweets_uv > r.total_retweets_v) {
      throw InputError("R(u,v) exceeds R(v) at line " + std::to_string(line_no));
    }
    const auto it = is_edge.find(edge_key(r.u, r.v));
    if (it == is_edge.end()) {
      throw InputError("interaction for a non-edge at line " + std::to_string(line_no));
    }
    if (it->second) {
      throw InputError("duplicate interaction at line " + std::to_string(line_no));
    }
    it->second = true;
    records.push_back(r);
  }
  return records;
}

std::vector<InteractionRecord> load_interactions(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_interactions(in, g);
}

std::vector<SidePrior> parse_priors(std::istream& in, const Graph& g) {
  std::vector<SidePrior> priors;
  std::vector<bool> seen(g.num_vertices(), false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_skippable(line)) continue;
    const auto fields = detail::split_fields(line);
    if (fields.size() != 3) {
      throw InputError("expected 3 fields at line " + std::to_string(line_no));
    }
    SidePrior p;
    p.v = lookup(g, fields[0], line_no);
    p.q1 = detail::parse_double(fields[1], line_no, "prior");
    p.q2 = detail::parse_double(fields[2], line_no, "prior");
    if (p.q1 < 0.0 || p.q1 > 1.0 || p.q2 < 0.0 || p.q2 > 1.0) {
      throw InputError("prior out of range at line " + std::to_string(line_no));
    }
    if (seen[p.v]) throw InputError("duplicate prior at line " + std::to_string(line_no));
    seen[p.v] = true;
    priors.push_back(p);
  }
  return priors;
}

std::vector<SidePrior> load_priors(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_priors(in, g);
}

}  // namespace balance
