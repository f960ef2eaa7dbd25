#include "treeramsey/ramsey_bridge.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace treeramsey {
namespace {

[[noreturn]] void bad(const std::string& message) { throw std::invalid_argument(message); }

void check_tuple(const std::vector<int>& tuple, int arity, int domain) {
  if (static_cast<int>(tuple.size()) != arity) bad("tuple size must equal the coloring arity");
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= domain) bad("tuple entries must lie in the domain");
    if (i > 0 && tuple[i - 1] >= tuple[i]) bad("tuple entries must strictly increase");
  }
}

/// Emits every strictly increasing arity-tuple from {0, ..., top} in
/// lexicographic order.
template <typename Fn>
void each_tuple(int arity, int top, Fn&& fn) {
  std::vector<int> tuple(arity);
  auto walk = [&](auto&& self, int at, int from) -> void {
    if (at == arity) {
      fn(tuple);
      return;
    }
    for (int v = from; v <= top; ++v) {
      tuple[at] = v;
      self(self, at + 1, v + 1);
    }
  };
  walk(walk, 0, 0);
}

}  // namespace

struct IntTupleColoring::Impl {
  Kind kind = Kind::Table;
  uint64_t seed = 0;
  std::map<std::vector<int>, int> table;
};

IntTupleColoring::IntTupleColoring(int arity, int colors, int domain,
                                   std::shared_ptr<const Impl> impl)
    : arity_(arity), colors_(colors), domain_(domain), impl_(std::move(impl)) {
  if (arity_ < 1) bad("tuple coloring arity must be at least 1");
  if (colors_ < 1) bad("tuple coloring needs at least one color");
  if (domain_ < 1) bad("tuple coloring needs a nonempty domain");
}

IntTupleColoring IntTupleColoring::seeded(int arity, int colors, int domain, uint64_t seed) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Seeded;
  impl->seed = seed;
  return IntTupleColoring(arity, colors, domain, std::move(impl));
}

IntTupleColoring IntTupleColoring::table(int arity, int colors, int domain,
                                         std::vector<std::pair<std::vector<int>, int>> entries) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Table;
  for (auto& entry : entries) {
    check_tuple(entry.first, arity, domain);
    if (entry.second < 0 || entry.second >= colors) bad("table value must be a valid color");
    impl->table[std::move(entry.first)] = entry.second;
  }
  return IntTupleColoring(arity, colors, domain, std::move(impl));
}

int IntTupleColoring::eval(const std::vector<int>& tuple) const {
  check_tuple(tuple, arity_, domain_);
  if (impl_->kind == Kind::Seeded)
    return static_cast<int>(mix64(impl_->seed ^ tuple_code(tuple)) %
                            static_cast<uint64_t>(colors_));
  auto it = impl_->table.find(tuple);
  if (it == impl_->table.end()) bad("table coloring has no entry for this tuple");
  return it->second;
}

IntTupleColoring::Kind IntTupleColoring::kind() const { return impl_->kind; }

uint64_t IntTupleColoring::seed() const {
  if (impl_->kind != Kind::Seeded) bad("only seeded colorings carry a seed");
  return impl_->seed;
}

std::vector<std::pair<std::vector<int>, int>> IntTupleColoring::table_entries() const {
  if (impl_->kind != Kind::Table) bad("only table colorings enumerate entries");
  std::vector<std::pair<std::vector<int>, int>> out;
  out.reserve(impl_->table.size());
  for (const auto& entry : impl_->table) out.emplace_back(entry.first, entry.second);
  return out;
}

ChainColoring lift_length_coloring(const IntTupleColoring& f, int tree_depth) {
  if (tree_depth < 0) bad("tree depth must be nonnegative");
  if (tree_depth >= f.domain())
    bad("tree depth must stay below the tuple coloring's domain");
  std::vector<std::pair<std::vector<int>, int>> entries;
  each_tuple(f.arity(), tree_depth,
             [&](const std::vector<int>& tuple) { entries.emplace_back(tuple, f.eval(tuple)); });
  return ChainColoring::length_profile_table(f.arity(), f.colors(), tree_depth,
                                             std::move(entries));
}

std::vector<int> extract_homogeneous_set(const Embedding& witness, int m) {
  if (m < 1) bad("a homogeneous set needs at least one element");
  if (witness.depth() < m - 1)
    bad("witness depth must be at least one less than the set size");
  std::vector<int> lengths;
  BitString index = BitString::root();
  for (int j = 0; j < m; ++j) {
    lengths.push_back(witness.image(index).length());
    index = index.child(0);
  }
  return lengths;
}

RtResult rt_solve(const IntTupleColoring& f, int m, int tree_depth, const SolveOptions& options) {
  if (m < 1) bad("rt_solve needs a set size of at least 1");
  const ChainColoring lifted = lift_length_coloring(f, tree_depth);
  SolveResult solved = tt_solve(lifted, tree_depth, m - 1, options);
  std::vector<int> homogeneous = extract_homogeneous_set(solved.witness, m);

  if (f.arity() <= m) {
    std::vector<int> tuple(f.arity());
    auto walk = [&](auto&& self, int at, int from) -> void {
      if (at == f.arity()) {
        if (f.eval(tuple) != solved.color)
          throw std::logic_error("extracted set is not homogeneous");
        return;
      }
      for (int i = from; i < m; ++i) {
        tuple[at] = homogeneous[i];
        self(self, at + 1, i + 1);
      }
    };
    walk(walk, 0, 0);
  }
  return {solved.color, std::move(homogeneous), std::move(solved)};
}

RtBruteResult brute_force_rt(const IntTupleColoring& f, int m, uint64_t cap) {
  if (m < 1) bad("a homogeneous set needs at least one element");
  if (m > f.domain())
    throw DepthExhausted("the domain has fewer elements than the requested set");
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  uint64_t used = 0;
  while (true) {
    if (++used > cap) throw CapExceeded("subset search exceeded its cap");
    int color = -1;
    bool uniform = true;
    if (f.arity() <= m) {
      std::vector<int> tuple(f.arity());
      auto walk = [&](auto&& self, int at, int from) -> bool {
        if (at == f.arity()) {
          const int c = f.eval(tuple);
          if (color < 0) color = c;
          return c == color;
        }
        for (int i = from; i < m; ++i) {
          tuple[at] = pick[i];
          if (!self(self, at + 1, i + 1)) return false;
        }
        return true;
      };
      uniform = walk(walk, 0, 0);
    }
    if (uniform) return {std::max(color, 0), pick};

    int at = m - 1;
    while (at >= 0 && pick[at] == f.domain() - m + at) --at;
    if (at < 0) break;
    ++pick[at];
    for (int j = at + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  throw DepthExhausted("no homogeneous set of the requested size exists in the domain");
}

}  // namespace treeramsey
