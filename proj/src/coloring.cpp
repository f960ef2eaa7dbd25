#include "treeramsey/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace treeramsey {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

bool pair_less(const FinsetCode::Pair& a, const FinsetCode::Pair& b) {
  if (a.first != b.first) return chain_less(a.first, b.first);
  return a.second < b.second;
}

}  // namespace

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

uint64_t node_code(const BitString& node) {
  if (node.length() > 63) bad("node too long to code");
  return (uint64_t{1} << node.length()) | node.packed();
}

uint64_t chain_code(const Chain& chain) {
  uint64_t acc = 0;
  for (const auto& v : chain) acc = mix64(acc ^ node_code(v));
  return acc;
}

uint64_t tuple_code(const std::vector<int>& xs) {
  uint64_t acc = 0;
  for (int x : xs) {
    if (x < 0) bad("tuple entries must be nonnegative");
    acc = mix64(acc ^ (static_cast<uint64_t>(x) + 1));
  }
  return acc;
}

FinsetCode FinsetCode::of_pairs(std::vector<Pair> pairs) {
  for (const auto& [chain, color] : pairs) {
    if (!is_chain(chain)) bad("finset entries must pair a chain with a color");
    if (color < 0) bad("colors must be nonnegative");
  }
  std::sort(pairs.begin(), pairs.end(), pair_less);
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  FinsetCode out;
  out.pairs_ = std::move(pairs);
  return out;
}

std::string FinsetCode::to_canonical_string() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [chain, color] : pairs_) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& v : chain) nodes.push_back(v.str());
    arr.push_back(nlohmann::json::array({nodes, color}));
  }
  return arr.dump();
}

FinsetCode FinsetCode::from_canonical_string(const std::string& s) {
  nlohmann::json arr = nlohmann::json::parse(s);
  if (!arr.is_array()) bad("finset text must be a JSON array");
  std::vector<Pair> pairs;
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() ||
        !entry[1].is_number_integer())
      bad("finset entries must be [[nodes...], color] pairs");
    Chain chain;
    for (const auto& node : entry[0]) chain.push_back(BitString::parse(node.get<std::string>()));
    pairs.emplace_back(std::move(chain), entry[1].get<int>());
  }
  return of_pairs(std::move(pairs));
}

bool code_less(const FinsetCode& a, const FinsetCode& b) {
  if (a.pairs().size() != b.pairs().size()) return a.pairs().size() < b.pairs().size();
  for (size_t i = 0; i < a.pairs().size(); ++i) {
    if (a.pairs()[i] != b.pairs()[i]) return pair_less(a.pairs()[i], b.pairs()[i]);
  }
  return false;
}

AncestorRecord::AncestorRecord(std::vector<BitString> nodes) : nodes_(std::move(nodes)) {
  for (size_t i = 0; i + 1 < nodes_.size(); ++i)
    if (!nodes_[i].is_proper_prefix_of(nodes_[i + 1]))
      bad("ancestor bases must strictly increase in the prefix order");
}

AncestorRecord AncestorRecord::push(const BitString& node) const {
  if (!nodes_.empty() && !nodes_.back().is_proper_prefix_of(node))
    bad("ancestor bases must strictly increase in the prefix order");
  AncestorRecord out;
  out.nodes_ = nodes_;
  out.nodes_.push_back(node);
  return out;
}

struct ChainColoring::Impl {
  Kind kind;
  uint64_t seed = 0;
  std::map<Chain, int, bool (*)(const Chain&, const Chain&)> table{chain_less};
  std::map<std::vector<int>, int> profile;
};

ChainColoring::ChainColoring(int arity, int colors, int depth, std::shared_ptr<const Impl> impl)
    : arity_(arity), colors_(colors), depth_(depth), impl_(std::move(impl)) {
  if (arity_ < 1) bad("coloring arity must be positive");
  if (colors_ < 1) bad("coloring must use at least one color");
  if (depth_ < 0) bad("coloring depth must be nonnegative");
}

ChainColoring ChainColoring::seeded(int arity, int colors, int depth, uint64_t seed) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Seeded;
  impl->seed = seed;
  return ChainColoring(arity, colors, depth, std::move(impl));
}

ChainColoring ChainColoring::table(int arity, int colors, int depth,
                                   std::vector<std::pair<Chain, int>> entries) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Table;
  for (auto& [chain, color] : entries) {
    if (!is_chain(chain) || static_cast<int>(chain.size()) != arity)
      bad("table keys must be chains of the stated arity");
    for (const auto& v : chain)
      if (v.length() > depth) bad("table chain deeper than the stated depth");
    if (color < 0 || color >= colors) bad("table color out of range");
    auto [it, fresh] = impl->table.emplace(chain, color);
    if (!fresh && it->second != color) bad("table assigns two colors to one chain");
  }
  return ChainColoring(arity, colors, depth, std::move(impl));
}

ChainColoring ChainColoring::length_profile_seeded(int arity, int colors, int depth,
                                                   uint64_t seed) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::LengthProfileSeeded;
  impl->seed = seed;
  return ChainColoring(arity, colors, depth, std::move(impl));
}

ChainColoring ChainColoring::length_profile_table(
    int arity, int colors, int depth, std::vector<std::pair<std::vector<int>, int>> entries) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::LengthProfileTable;
  for (auto& [lengths, color] : entries) {
    if (static_cast<int>(lengths.size()) != arity) bad("length profiles must have the stated arity");
    for (size_t i = 0; i < lengths.size(); ++i) {
      if (lengths[i] < 0 || lengths[i] > depth) bad("profile length out of range");
      if (i > 0 && lengths[i] <= lengths[i - 1]) bad("profile lengths must strictly increase");
    }
    if (color < 0 || color >= colors) bad("table color out of range");
    auto [it, fresh] = impl->profile.emplace(lengths, color);
    if (!fresh && it->second != color) bad("table assigns two colors to one profile");
  }
  return ChainColoring(arity, colors, depth, std::move(impl));
}

ChainColoring ChainColoring::constant(int arity, int colors, int depth, int color) {
  if (color < 0 || color >= colors) bad("constant color out of range");
  std::vector<std::pair<std::vector<int>, int>> entries;
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int from) {
    if (static_cast<int>(cur.size()) == arity) {
      entries.emplace_back(cur, color);
      return;
    }
    for (int len = from; len <= depth; ++len) {
      cur.push_back(len);
      extend(len + 1);
      cur.pop_back();
    }
  };
  extend(0);
  return length_profile_table(arity, colors, depth, std::move(entries));
}

ChainColoring::Kind ChainColoring::kind() const { return impl_->kind; }

uint64_t ChainColoring::seed() const {
  if (impl_->kind != Kind::Seeded && impl_->kind != Kind::LengthProfileSeeded)
    bad("only seeded colorings carry a seed");
  return impl_->seed;
}

std::vector<std::pair<Chain, int>> ChainColoring::table_entries() const {
  if (impl_->kind != Kind::Table) bad("only table colorings carry chain entries");
  return {impl_->table.begin(), impl_->table.end()};
}

std::vector<std::pair<std::vector<int>, int>> ChainColoring::profile_entries() const {
  if (impl_->kind != Kind::LengthProfileTable) bad("only profile tables carry profile entries");
  return {impl_->profile.begin(), impl_->profile.end()};
}

int ChainColoring::eval(const Chain& chain) const {
  if (static_cast<int>(chain.size()) != arity_) bad("chain has the wrong arity");
  if (!is_chain(chain)) bad("coloring applied to a non-chain");
  for (const auto& v : chain)
    if (v.length() > depth_) bad("chain node deeper than the coloring's depth");
  switch (impl_->kind) {
    case Kind::Seeded:
      return static_cast<int>(mix64(impl_->seed ^ chain_code(chain)) %
                              static_cast<uint64_t>(colors_));
    case Kind::Table: {
      auto it = impl_->table.find(chain);
      if (it == impl_->table.end()) bad("table coloring has no entry for this chain");
      return it->second;
    }
    case Kind::LengthProfileSeeded:
    case Kind::LengthProfileTable: {
      std::vector<int> lengths;
      lengths.reserve(chain.size());
      for (const auto& v : chain) lengths.push_back(v.length());
      if (impl_->kind == Kind::LengthProfileSeeded)
        return static_cast<int>(mix64(impl_->seed ^ tuple_code(lengths)) %
                                static_cast<uint64_t>(colors_));
      auto it = impl_->profile.find(lengths);
      if (it == impl_->profile.end()) bad("table coloring has no entry for this length profile");
      return it->second;
    }
  }
  bad("unreachable coloring kind");
}

FinsetCode induced_value(const AncestorRecord& ancestors, const ChainColoring& f,
                         const BitString& tau) {
  if (f.arity() < 2) bad("only colorings of arity at least 2 induce lower-arity values");
  if (!ancestors.empty() && !ancestors.back().is_proper_prefix_of(tau))
    bad("the evaluation point must properly extend the last ancestor base");
  int n = f.arity() - 1;
  const auto& pool = ancestors.nodes();
  std::vector<FinsetCode::Pair> pairs;
  Chain cur;
  std::function<void(size_t)> extend = [&](size_t start) {
    if (static_cast<int>(cur.size()) == n) {
      Chain full = cur;
      full.push_back(tau);
      pairs.emplace_back(cur, f.eval(full));
      return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      extend(i + 1);
      cur.pop_back();
    }
  };
  extend(0);
  return FinsetCode::of_pairs(std::move(pairs));
}

}  // namespace treeramsey
