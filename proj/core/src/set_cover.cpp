#include "balance/set_cover.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "balance/errors.hpp"
#include "balance/graph_io.hpp"

namespace balance {

SetCoverInstance parse_set_cover(std::istream& in) {
  SetCoverInstance inst;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_skippable(line)) continue;
    const auto fields = detail::split_fields(line);
    if (!have_header) {
      if (fields.size() != 2) throw InputError("expected '|U| k' at line " + std::to_string(line_no));
      inst.universe_size = detail::parse_count(fields[0], line_no, "universe size");
      inst.k = detail::parse_count(fields[1], line_no, "k");
      have_header = true;
      continue;
    }
    std::vector<std::uint32_t> set;
    for (std::string_view f : fields) {
      const auto e = detail::parse_count(f, line_no, "element");
      if (e >= inst.universe_size) {
        throw InputError("element out of range at line " + std::to_string(line_no));
      }
      set.push_back(static_cast<std::uint32_t>(e));
    }
    if (set.empty()) throw InputError("empty set at line " + std::to_string(line_no));
    inst.sets.push_back(std::move(set));
  }
  if (!have_header) throw InputError("set-cover file has no header line");
  return inst;
}

SetCoverInstance load_set_cover(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_set_cover(in);
}

void write_set_cover(std::ostream& out, const SetCoverInstance& inst) {
  out << inst.universe_size << ' ' << inst.k << '\n';
  for (const auto& set : inst.sets) {
    for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
    out << '\n';
  }
}

bool is_k_coverable(const SetCoverInstance& inst) {
  const std::size_t l = inst.sets.size();
  std::vector<std::uint64_t> masks;
  for (const auto& set : inst.sets) {
    std::uint64_t m = 0;
    for (auto e : set) m |= std::uint64_t{1} << e;
    masks.push_back(m);
  }
  if (inst.universe_size > 63 || l > 30) throw LimitExceeded("set-cover instance too large");
  const std::uint64_t full = (std::uint64_t{1} << inst.universe_size) - 1;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << l); ++choice) {
    if (static_cast<std::size_t>(std::popcount(choice)) > inst.k) continue;
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if ((choice >> i) & 1U) covered |= masks[i];
    }
    if (covered == full) return true;
  }
  return false;
}

ReducedInstance reduction_from_set_cover(const SetCoverInstance& inst) {
  if (inst.k == 0 || inst.sets.empty()) {
    throw std::invalid_argument("reduction needs k >= 1 and at least one set");
  }
  const std::size_t u = inst.universe_size;
  const std::size_t l = inst.sets.size();
  const std::size_t k = inst.k;
  std::vector<std::string> names;
  for (std::size_t e = 0; e < u; ++e) names.push_back("u" + std::to_string(e));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < l; ++i) {
      names.push_back("c" + std::to_string(j) + "_" + std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < k; ++j) names.push_back("b" + std::to_string(j));

  std::vector<Edge> edges;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < l; ++i) {
      const auto set_vertex = static_cast<VertexId>(u + j * l + i);
      for (auto e : inst.sets[i]) edges.push_back(Edge{set_vertex, e, 1.0, 1.0});
      edges.push_back(Edge{set_vertex, static_cast<VertexId>(u + k * l + j), 1.0, 1.0});
    }
  }

  ReducedInstance out;
  const std::size_t n = names.size();
  out.graph = Graph(std::move(names), std::move(edges));
  out.i1 = VertexSet(n);
  out.i2 = VertexSet(n);
  for (std::size_t e = 0; e < u; ++e) out.i2.insert(static_cast<VertexId>(e));
  for (std::size_t j = 0; j < k; ++j) out.i2.insert(static_cast<VertexId>(u + k * l + j));
  out.budget = 2 * k;
  return out;
}

std::vector<SetCoverInstance> enumerate_set_cover_instances(std::size_t max_universe,
                                                            std::size_t max_sets,
                                                            std::size_t max_k) {
  std::vector<SetCoverInstance> out;
  for (std::size_t u = 1; u <= max_universe; ++u) {
    const std::uint32_t full = (1U << u) - 1;
    // Families of distinct non-empty subsets, as increasing mask sequences.
    std::vector<std::uint32_t> family;
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t next_mask) {
      if (!family.empty()) {
        std::uint32_t covered = 0;
        for (auto m : family) covered |= m;
        if (covered == full) {
          for (std::size_t k = 1; k <= max_k; ++k) {
            SetCoverInstance inst;
            inst.universe_size = u;
            inst.k = k;
            for (auto m : family) {
              std::vector<std::uint32_t> set;
              for (std::uint32_t e = 0; e < u; ++e) {
                if ((m >> e) & 1U) set.push_back(e);
              }
              inst.sets.push_back(std::move(set));
            }
            out.push_back(std::move(inst));
          }
        }
      }
      if (family.size() == max_sets) return;
      for (std::uint32_t m = next_mask; m <= full; ++m) {
        family.push_back(m);
        extend(m + 1);
        family.pop_back();
      }
    };
    extend(1);
  }
  return out;
}

}  // namespace balance
