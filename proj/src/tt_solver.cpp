#include "treeramsey/tt_solver.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treeramsey {
namespace {

[[noreturn]] void bad(const std::string& message) { throw std::invalid_argument(message); }

Embedding cached_identity(int depth) {
  static std::mutex lock;
  static std::map<int, Embedding> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(depth);
  if (it == cache.end()) it = cache.emplace(depth, Embedding::identity(depth)).first;
  return it->second;
}

}  // namespace

SolveResult tt1_solve(const Embedding& host, const ChainColoring& f, int depth) {
  if (f.arity() != 1) bad("tt1_solve needs a coloring of single nodes");
  if (depth < 0) bad("tt1_solve needs a nonnegative output depth");
  if (f.depth() < host.max_image_length()) bad("coloring depth must cover the host's images");
  if (!verify_embedding(host)) bad("host must be a verified embedding");

  const std::vector<BitString> idx = TruncatedTree::full(host.depth()).members();
  const int count = static_cast<int>(idx.size());
  std::vector<int> col(count);
  for (int i = 0; i < count; ++i) col[i] = f.eval({host.image(idx[i])});

  std::vector<int> freq(f.colors(), 0);
  for (int c : col) ++freq[c];
  std::vector<int> order(f.colors());
  for (int c = 0; c < f.colors(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return freq[a] > freq[b]; });

  std::vector<std::vector<int>> desc(count);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (idx[i].is_proper_prefix_of(idx[j])) desc[i].push_back(j);

  for (int c : order) {
    std::vector<std::vector<char>> feas(depth + 1, std::vector<char>(count, 0));
    for (int i = 0; i < count; ++i) feas[0][i] = col[i] == c ? 1 : 0;
    for (int r = 1; r <= depth; ++r) {
      for (int i = 0; i < count; ++i) {
        if (col[i] != c) continue;
        int prev = -1;
        for (int j : desc[i]) {
          if (!feas[r - 1][j]) continue;
          if (prev >= 0 && !idx[prev].comparable_with(idx[j])) {
            feas[r][i] = 1;
            break;
          }
          prev = j;
        }
      }
    }
    int root = -1;
    for (int i = 0; i < count && root < 0; ++i)
      if (feas[depth][i]) root = i;
    if (root < 0) continue;

    std::map<BitString, BitString> mapping;
    struct Item {
      BitString tau;
      int at;
      int r;
    };
    std::vector<Item> stack{{BitString::root(), root, depth}};
    while (!stack.empty()) {
      const Item item = stack.back();
      stack.pop_back();
      mapping.emplace(item.tau, host.image(idx[item.at]));
      if (item.r == 0) continue;
      std::vector<int> pool;
      for (int j : desc[item.at])
        if (feas[item.r - 1][j]) pool.push_back(j);
      int a = -1, b = -1;
      for (size_t p = 0; p < pool.size() && a < 0; ++p)
        for (size_t q = p + 1; q < pool.size(); ++q)
          if (!idx[pool[p]].comparable_with(idx[pool[q]])) {
            a = pool[p];
            b = pool[q];
            break;
          }
      if (a < 0) throw std::logic_error("tt1 reconstruction lost a feasible pair");
      stack.push_back({item.tau.child(0), a, item.r - 1});
      stack.push_back({item.tau.child(1), b, item.r - 1});
    }
    return {c, Embedding(depth, std::move(mapping)), ReductionLedger{}, {}};
  }
  throw DepthExhausted("no color admits a full subtree of the requested depth in the host");
}

SolveResult tt_solve(const ChainColoring& f, int host_depth, int depth,
                     const SolveOptions& options) {
  if (host_depth < 0) bad("tt_solve needs a nonnegative host depth");
  if (depth < 0) bad("tt_solve needs a nonnegative output depth");
  const int arity = f.arity();
  std::vector<int> schedule;
  if (options.stage_depths) {
    schedule = *options.stage_depths;
    if (static_cast<int>(schedule.size()) != arity - 1)
      bad("stage_depths must hold exactly arity - 1 entries");
    for (int t : schedule)
      if (t < 1) bad("stage_depths entries must be at least 1");
  } else {
    for (int i = 0; i < arity - 1; ++i) schedule.push_back(depth + arity - i);
  }

  Embedding host = cached_identity(host_depth);
  ChainColoring current = f;
  ReductionLedger ledger;
  std::vector<Embedding> stages;
  for (int i = 0; i + 1 < arity; ++i) {
    ReduceResult step = reduce_step(host, current, schedule[i]);
    ledger.jump_levels += step.ledger.jump_levels;
    for (StageChoice& choice : step.ledger.stages) ledger.stages.push_back(std::move(choice));
    stages.push_back(step.tree);
    host = step.tree.truncated(schedule[i] - 1);
    current = step.coloring;
  }

  SolveResult out = tt1_solve(host, current, depth);
  out.ledger.stages = std::move(ledger.stages);
  out.ledger.jump_levels += ledger.jump_levels;
  out.stage_embeddings = std::move(stages);
  return out;
}

bool verify_monochromatic(const Embedding& witness, const ChainColoring& f, int color) {
  for (const Chain& chain : enumerate_chains(witness, f.arity()))
    if (f.eval(chain) != color) return false;
  return true;
}

namespace {

struct BruteSearch {
  const std::vector<BitString>& ambient;
  const ChainColoring& f;
  int color;
  uint64_t cap;
  uint64_t& used;
  const std::vector<int>& slot_parent;
  const std::vector<int>& slot_sibling;
  const std::vector<std::vector<int>>& slot_ancestors;
  std::vector<int> chosen;

  bool chains_stay_monochromatic(int slot, const BitString& image) {
    const std::vector<int>& anc = slot_ancestors[slot];
    const int pick = f.arity() - 1;
    if (pick > static_cast<int>(anc.size())) return true;
    std::vector<int> comb(pick);
    return try_combinations(anc, comb, 0, 0, image);
  }

  bool try_combinations(const std::vector<int>& anc, std::vector<int>& comb, int at, int from,
                        const BitString& image) {
    if (at == static_cast<int>(comb.size())) {
      Chain chain;
      for (int slot : comb) chain.push_back(ambient[chosen[slot]]);
      chain.push_back(image);
      return f.eval(chain) == color;
    }
    for (int i = from; i < static_cast<int>(anc.size()); ++i) {
      comb[at] = anc[i];
      if (!try_combinations(anc, comb, at + 1, i + 1, image)) return false;
    }
    return true;
  }

  bool place(int slot) {
    if (slot == static_cast<int>(chosen.size())) {
      if (++used > cap) throw CapExceeded("brute-force search exceeded its attempt cap");
      return true;
    }
    int start = 0;
    if (slot_sibling[slot] >= 0) start = chosen[slot_sibling[slot]] + 1;
    for (int cand = start; cand < static_cast<int>(ambient.size()); ++cand) {
      if (++used > cap) throw CapExceeded("brute-force search exceeded its attempt cap");
      const BitString& image = ambient[cand];
      if (slot_parent[slot] >= 0) {
        const BitString& parent = ambient[chosen[slot_parent[slot]]];
        if (!parent.is_proper_prefix_of(image)) continue;
      }
      if (slot_sibling[slot] >= 0 &&
          ambient[chosen[slot_sibling[slot]]].comparable_with(image))
        continue;
      if (!chains_stay_monochromatic(slot, image)) continue;
      chosen[slot] = cand;
      if (place(slot + 1)) return true;
      chosen[slot] = -1;
    }
    return false;
  }
};

}  // namespace

SolveResult brute_force_tt(const ChainColoring& f, int host_depth, int depth, uint64_t cap) {
  if (host_depth < 0) bad("brute_force_tt needs a nonnegative host depth");
  if (depth < 0) bad("brute_force_tt needs a nonnegative output depth");
  if (f.depth() < host_depth) bad("coloring depth must cover the host");

  const std::vector<BitString> ambient = TruncatedTree::full(host_depth).members();
  const std::vector<BitString> pos = TruncatedTree::full(depth).members();
  const int slots = static_cast<int>(pos.size());
  std::unordered_map<BitString, int, BitString::Hash> slot_of;
  for (int s = 0; s < slots; ++s) slot_of.emplace(pos[s], s);
  std::vector<int> slot_parent(slots, -1), slot_sibling(slots, -1);
  std::vector<std::vector<int>> slot_ancestors(slots);
  for (int s = 1; s < slots; ++s) {
    slot_parent[s] = slot_of.at(pos[s].parent());
    if (pos[s].bit(pos[s].length() - 1) == 1)
      slot_sibling[s] = slot_of.at(pos[s].parent().child(0));
    slot_ancestors[s] = slot_ancestors[slot_parent[s]];
    slot_ancestors[s].push_back(slot_parent[s]);
  }

  uint64_t used = 0;
  int best_color = -1;
  std::vector<int> best;
  for (int c = 0; c < f.colors(); ++c) {
    BruteSearch search{ambient,      f,    c,           cap,           used,
                       slot_parent,  slot_sibling,      slot_ancestors,
                       std::vector<int>(slots, -1)};
    if (!search.place(0)) continue;
    if (best_color < 0 ||
        std::lexicographical_compare(search.chosen.begin(), search.chosen.end(), best.begin(),
                                     best.end())) {
      best_color = c;
      best = search.chosen;
    }
  }
  if (best_color < 0)
    throw DepthExhausted("no color admits a monochromatic embedding at this depth");
  std::map<BitString, BitString> mapping;
  for (int s = 0; s < slots; ++s) mapping.emplace(pos[s], ambient[best[s]]);
  return {best_color, Embedding(depth, std::move(mapping)), ReductionLedger{}, {}};
}

}  // namespace treeramsey
