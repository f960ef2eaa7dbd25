#include "treeramsey/reduction.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treeramsey {
namespace {

[[noreturn]] void bad(const std::string& message) { throw std::invalid_argument(message); }

constexpr int kNoValue = INT_MAX;

/// A finite subtree of the ambient tree with explicit adjacency. Nodes are in
/// canonical order, nodes[0] is the region root, and children lists hold
/// ascending indices, so index order and canonical order coincide everywhere.
struct Region {
  std::vector<BitString> nodes;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;

  int size() const { return static_cast<int>(nodes.size()); }
};

Region region_from_sorted(std::vector<BitString> sorted) {
  Region r;
  r.nodes = std::move(sorted);
  r.parent.assign(r.nodes.size(), -1);
  r.children.assign(r.nodes.size(), {});
  std::unordered_map<BitString, int, BitString::Hash> at;
  at.reserve(r.nodes.size() * 2);
  for (int i = 0; i < r.size(); ++i) at.emplace(r.nodes[i], i);
  const int root_len = r.nodes.empty() ? 0 : r.nodes[0].length();
  for (int i = 1; i < r.size(); ++i) {
    int p = -1;
    BitString walk = r.nodes[i];
    while (walk.length() > root_len) {
      walk = walk.parent();
      auto it = at.find(walk);
      if (it != at.end()) {
        p = it->second;
        break;
      }
    }
    if (p < 0) bad("region members must all extend the region root");
    r.parent[i] = p;
    r.children[p].push_back(i);
  }
  return r;
}

/// Stage value table: every node strictly above the region root is assigned
/// the rank of its induced value among the distinct values seen this stage,
/// ranks ascending in code order. Length-profile colorings induce values that
/// depend only on node length, so those are computed once per length.
struct StageValues {
  std::vector<int> rank;
  std::vector<FinsetCode> uniques;
};

StageValues stage_values(const Region& region, const AncestorRecord& ancestors,
                         const ChainColoring& f) {
  const bool by_length = f.kind() == ChainColoring::Kind::LengthProfileTable ||
                         f.kind() == ChainColoring::Kind::LengthProfileSeeded;
  std::vector<FinsetCode> code(region.nodes.size());
  if (by_length) {
    std::map<int, FinsetCode> per_length;
    for (int i = 1; i < region.size(); ++i) {
      const int len = region.nodes[i].length();
      auto it = per_length.find(len);
      if (it == per_length.end())
        it = per_length.emplace(len, induced_value(ancestors, f, region.nodes[i])).first;
      code[i] = it->second;
    }
  } else {
    for (int i = 1; i < region.size(); ++i)
      code[i] = induced_value(ancestors, f, region.nodes[i]);
  }
  std::map<FinsetCode, int, CodeLess> dict;
  for (int i = 1; i < region.size(); ++i) dict.emplace(code[i], 0);
  int next = 0;
  for (auto& entry : dict) entry.second = next++;
  StageValues values;
  values.uniques.resize(dict.size());
  for (const auto& entry : dict) values.uniques[entry.second] = entry.first;
  values.rank.assign(region.nodes.size(), -1);
  for (int i = 1; i < region.size(); ++i) values.rank[i] = dict.at(code[i]);
  return values;
}

/// min_above[i] = least value rank strictly above node i, kNoValue at leaves.
std::vector<int> min_above(const Region& region, const std::vector<int>& rank) {
  std::vector<int> mv(region.nodes.size(), kNoValue);
  for (int i = region.size() - 1; i >= 0; --i) {
    for (int c : region.children[i]) {
      mv[i] = std::min(mv[i], rank[c]);
      if (mv[c] != kNoValue) mv[i] = std::min(mv[i], mv[c]);
    }
  }
  return mv;
}

void gather_rank(const Region& region, int at, int wanted, const std::vector<int>& rank,
                 std::vector<int>& out) {
  for (int c : region.children[at]) {
    if (rank[c] == wanted) out.push_back(c);
    gather_rank(region, c, wanted, rank, out);
  }
}

void gather_flag(const Region& region, int at, const std::vector<char>& flag,
                 std::vector<int>& out) {
  for (int c : region.children[at]) {
    if (flag[c]) out.push_back(c);
    gather_flag(region, c, flag, out);
  }
}

/// split[i] = the flagged nodes strictly above i contain an incomparable
/// pair. Inside a tree such a pair never involves a subtree's own root, so a
/// split is either two distinct flagged branches or a split deeper down.
std::vector<char> split_above(const Region& region, const std::vector<char>& flag) {
  std::vector<char> split(region.nodes.size(), 0);
  std::vector<int> cnt(region.nodes.size(), 0);
  for (int i = region.size() - 1; i >= 0; --i) {
    int branches = 0;
    for (int c : region.children[i]) {
      if (split[c]) split[i] = 1;
      if (cnt[c] > 0) ++branches;
      cnt[i] += cnt[c];
    }
    if (branches >= 2) split[i] = 1;
    if (flag[i]) ++cnt[i];
  }
  return split;
}

std::vector<char> exists_above(const Region& region, const std::vector<char>& flag) {
  std::vector<char> out(region.nodes.size(), 0);
  for (int i = region.size() - 1; i >= 0; --i)
    for (int c : region.children[i])
      if (out[c] || flag[c]) out[i] = 1;
  return out;
}

/// Remaining-structure tables for one candidate value. A stage with r levels
/// left places a witness, then an incomparable pair above it, and each pair
/// half repeats with r - 1 levels, all on wanted-value nodes; node_ok[i] says
/// node i carries the wanted value and can head such a ladder of levels - 1
/// levels, and witness_ok[i] says an incomparable node_ok pair sits strictly
/// above i, the least wanted-value shape a committed witness must still hold.
struct StageShape {
  std::vector<char> node_ok;
  std::vector<char> witness_ok;
};

StageShape shape_tables(const Region& region, const std::vector<int>& rank, int wanted,
                        int levels) {
  std::vector<char> value(region.nodes.size(), 0);
  for (int i = 1; i < region.size(); ++i) value[i] = rank[i] == wanted;
  std::vector<char> cap = value;
  for (int r = 1; r < levels; ++r) {
    const std::vector<char> paired = split_above(region, cap);
    std::vector<char> wit(region.nodes.size(), 0);
    for (int i = 1; i < region.size(); ++i) wit[i] = value[i] && paired[i];
    const std::vector<char> reach = exists_above(region, wit);
    for (int i = 1; i < region.size(); ++i) cap[i] = value[i] && reach[i];
  }
  StageShape out;
  out.witness_ok = split_above(region, cap);
  out.node_ok = std::move(cap);
  return out;
}

/// The region a committed stage hands one successor: the successor itself
/// plus every committed-value node strictly above it. Later output nodes must
/// carry the committed value of each enclosing stage and nothing else is
/// required of them, so this is the largest region the next stage may search.
Region value_region(const Region& region, const std::vector<int>& rank, int wanted, int at) {
  std::vector<int> picked;
  gather_rank(region, at, wanted, rank, picked);
  std::vector<BitString> members;
  members.reserve(picked.size() + 1);
  members.push_back(region.nodes[at]);
  for (int i : picked) members.push_back(region.nodes[i]);
  std::sort(members.begin(), members.end());
  return region_from_sorted(std::move(members));
}

struct PlacedNode {
  BitString index;
  BitString node;
};

/// One completed stage subtree: its stage entries in discovery order and the
/// output node placed at every index strictly below the subtree's own index.
struct SubtreeResult {
  std::vector<StageChoice> entries;
  std::vector<PlacedNode> placed;
};

struct BudgetExhausted {};

/// Depth-first canonical search over stage choices. Each stage ranks its
/// candidates with values code-descending, witnesses canonical-ascending and
/// successor pairs ascending, prunes candidates whose committed-value nodes
/// no longer hold the remaining ladder of witnesses and pairs, and commits to
/// the first candidate under which both successor stages complete, so the
/// whole search returns the canonically first completion. `fail_*` remember
/// the deepest stage that ran out of candidates and the tentative choices
/// that led there; `budget` caps the total number of stage visits.
struct Search {
  const ChainColoring& f;
  const int depth;
  long budget = 200000;

  std::vector<StageChoice> path;
  int fail_len = -1;
  BitString fail_index;
  std::vector<StageChoice> fail_path;

  void note_failure(const BitString& sigma) {
    if (sigma.length() > fail_len) {
      fail_len = sigma.length();
      fail_index = sigma;
      fail_path = path;
    }
  }

  std::optional<SubtreeResult> solve(const BitString& sigma, const Region& region,
                                     const AncestorRecord& ancestors) {
    if (budget-- <= 0) {
      note_failure(sigma);
      throw BudgetExhausted{};
    }
    const int remaining = depth - sigma.length();
    const StageValues values = stage_values(region, ancestors, f);
    const std::vector<int> mv = min_above(region, values.rank);
    int top = -1;
    for (int i = 1; i < region.size(); ++i)
      if (mv[i] != kNoValue) top = std::max(top, mv[i]);
    std::vector<int> mv_count(values.uniques.size(), 0);
    for (int i = 1; i < region.size(); ++i)
      if (mv[i] != kNoValue) ++mv_count[mv[i]];
    for (int v = top; v >= 0; --v) {
      if (mv_count[v] == 0) continue;
      const StageShape tables = shape_tables(region, values.rank, v, remaining);
      for (int i = 1; i < region.size(); ++i) {
        if (mv[i] != v || !tables.witness_ok[i]) continue;
        std::vector<int> cands;
        gather_flag(region, i, tables.node_ok, cands);
        std::sort(cands.begin(), cands.end());
        const StageChoice entry{sigma, region.nodes[0], values.uniques[v], region.nodes[i],
                                ChoiceClass::Sigma2};
        for (size_t ai = 0; ai < cands.size(); ++ai)
          for (size_t bi = ai + 1; bi < cands.size(); ++bi) {
            if (region.nodes[cands[ai]].comparable_with(region.nodes[cands[bi]])) continue;
            path.push_back(entry);
            std::optional<SubtreeResult> done =
                descend(sigma, region, values.rank, ancestors, v, cands[ai], cands[bi]);
            path.pop_back();
            if (done) {
              done->entries.insert(done->entries.begin(), entry);
              return done;
            }
          }
      }
    }
    note_failure(sigma);
    return std::nullopt;
  }

  std::optional<SubtreeResult> descend(const BitString& sigma, const Region& region,
                                       const std::vector<int>& rank,
                                       const AncestorRecord& ancestors, int v, int a, int b) {
    SubtreeResult out;
    out.placed.push_back({sigma.child(0), region.nodes[a]});
    out.placed.push_back({sigma.child(1), region.nodes[b]});
    if (sigma.length() + 1 >= depth) return out;
    for (const int half : {a, b}) {
      const BitString index = sigma.child(half == a ? 0 : 1);
      std::optional<SubtreeResult> sub =
          solve(index, value_region(region, rank, v, half), ancestors.push(region.nodes[half]));
      if (!sub) return std::nullopt;
      out.entries.insert(out.entries.end(), std::make_move_iterator(sub->entries.begin()),
                         std::make_move_iterator(sub->entries.end()));
      out.placed.insert(out.placed.end(), sub->placed.begin(), sub->placed.end());
    }
    return out;
  }
};

}  // namespace

std::string to_string(ChoiceClass c) {
  return c == ChoiceClass::Sigma1 ? "sigma-1" : "sigma-2";
}

bool operator==(const StageChoice& a, const StageChoice& b) {
  return a.index == b.index && a.base == b.base && a.color == b.color &&
         a.witness_root == b.witness_root && a.klass == b.klass;
}

ReduceDepthExhausted::ReduceDepthExhausted(const std::string& what, const BitString& failed_index,
                                           ReductionLedger completed)
    : DepthExhausted(what), failed_index_(failed_index), completed_(std::move(completed)) {}

SelectResult select_color_and_root(const TruncatedTree& region, const BitString& base,
                                   const AncestorRecord& ancestors, const ChainColoring& f) {
  if (f.arity() < 2) bad("color selection needs a coloring of arity at least 2");
  if (!region.contains(base)) bad("base node must belong to the region");
  if (ancestors.empty() || ancestors.back() != base)
    bad("ancestor record must end at the base node");
  const std::vector<BitString> ext = region.members_strictly_above(base);
  if (ext.empty())
    throw DepthExhausted("no region node lies strictly above the base");

  std::vector<FinsetCode> code(ext.size());
  for (size_t i = 0; i < ext.size(); ++i) code[i] = induced_value(ancestors, f, ext[i]);
  std::map<FinsetCode, int, CodeLess> dict;
  for (const FinsetCode& c : code) dict.emplace(c, 0);
  int next = 0;
  for (auto& entry : dict) entry.second = next++;
  std::vector<FinsetCode> uniques(dict.size());
  for (const auto& entry : dict) uniques[entry.second] = entry.first;

  std::vector<int> mv(ext.size(), -1);
  for (size_t i = 0; i < ext.size(); ++i)
    for (size_t j = i + 1; j < ext.size(); ++j)
      if (ext[i].is_proper_prefix_of(ext[j])) {
        const int r = dict.at(code[j]);
        if (mv[i] < 0 || r < mv[i]) mv[i] = r;
      }

  int best = -1;
  size_t at = 0;
  for (size_t i = 0; i < ext.size(); ++i)
    if (mv[i] > best) {
      best = mv[i];
      at = i;
    }
  if (best < 0)
    throw DepthExhausted("no node above the base still has an extension in the region");
  return {uniques[best], ext[at]};
}

std::pair<BitString, BitString> standard_subtree_successors(const TruncatedTree& region,
                                                            const BitString& parent,
                                                            const FinsetCode& color,
                                                            const AncestorRecord& ancestors,
                                                            const ChainColoring& f) {
  if (f.arity() < 2) bad("successor selection needs a coloring of arity at least 2");
  if (!region.contains(parent)) bad("parent node must belong to the region");
  std::vector<BitString> cands;
  for (const BitString& node : region.members_strictly_above(parent))
    if (induced_value(ancestors, f, node) == color) cands.push_back(node);
  for (size_t i = 0; i < cands.size(); ++i)
    for (size_t j = i + 1; j < cands.size(); ++j)
      if (!cands[i].comparable_with(cands[j])) return {cands[i], cands[j]};
  throw DepthExhausted("no incomparable pair of the committed value lies above the parent");
}

ReduceResult reduce_step(const Embedding& host, const ChainColoring& f, int depth) {
  if (depth < 0) bad("reduce_step needs a nonnegative output depth");
  if (f.arity() < 2) bad("reduce_step needs a coloring of arity at least 2");
  if (f.depth() < host.max_image_length())
    bad("coloring depth must cover the host's images");
  if (!verify_embedding(host)) bad("host must be a verified embedding");

  std::map<BitString, BitString> rho;
  rho.emplace(BitString::root(), host.image(BitString::root()));
  ReductionLedger ledger;
  ledger.jump_levels = 2;

  if (depth > 0) {
    Search search{f, depth};
    std::optional<SubtreeResult> done;
    bool budget_out = false;
    try {
      done = search.solve(BitString::root(), region_from_sorted(host.image_nodes()),
                          AncestorRecord(std::vector<BitString>{host.image(BitString::root())}));
    } catch (const BudgetExhausted&) {
      budget_out = true;
    }
    if (!done) {
      ReductionLedger partial;
      partial.jump_levels = 2;
      partial.stages = std::move(search.fail_path);
      const std::string what = budget_out
                                   ? "the stage search exceeded its visit budget"
                                   : "every stage candidate runs out of tree below the truncation";
      throw ReduceDepthExhausted(what + " (stage \"" + search.fail_index.str() + "\")",
                                 search.fail_index, std::move(partial));
    }
    for (const PlacedNode& placed : done->placed) rho.emplace(placed.index, placed.node);
    ledger.stages = std::move(done->entries);
    std::sort(ledger.stages.begin(), ledger.stages.end(),
              [](const StageChoice& x, const StageChoice& y) { return x.index < y.index; });
  }

  Embedding tree(depth, rho);
  const int out_arity = f.arity() - 1;
  std::vector<std::pair<Chain, int>> entries;
  const TruncatedTree indices = TruncatedTree::full(depth);
  for (const Chain& index_chain : enumerate_chains(indices, out_arity)) {
    if (index_chain.back().length() >= depth) continue;
    Chain ambient;
    for (const BitString& sigma : index_chain) ambient.push_back(rho.at(sigma));
    Chain probe = ambient;
    probe.push_back(rho.at(index_chain.back().child(0)));
    entries.emplace_back(std::move(ambient), f.eval(probe));
  }
  ChainColoring induced =
      ChainColoring::table(out_arity, f.colors(), f.depth(), std::move(entries));
  return {std::move(tree), std::move(induced), std::move(ledger)};
}

}  // namespace treeramsey
