#include "irrenum/suffix_tree.hpp"

#include <algorithm>
#include <limits>

#include "irrenum/errors.hpp"

namespace irrenum {

SymbolOrder SymbolOrder::from_sequence(const std::vector<Symbol>& ascending) {
  SymbolOrder order;
  const auto size = ascending.size();
  if (size < 2) throw ValidationError("symbol order needs at least two symbols");
  order.rank_.assign(size, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t r = 0; r < size; ++r) {
    Symbol s = ascending[r];
    if (s >= size || order.rank_[s] != std::numeric_limits<std::uint32_t>::max()) {
      throw ValidationError("symbol order is not a permutation");
    }
    order.rank_[s] = static_cast<std::uint32_t>(r);
  }
  return order;
}

SymbolOrder SymbolOrder::sentinel_min(std::uint32_t q) {
  std::vector<Symbol> seq{q};
  for (Symbol s = 0; s < q; ++s) seq.push_back(s);
  return from_sequence(seq);
}

SymbolOrder SymbolOrder::sentinel_max(std::uint32_t q) {
  std::vector<Symbol> seq;
  for (Symbol s = 0; s <= q; ++s) seq.push_back(s);
  return from_sequence(seq);
}

// ---------------------------------------------------------------------------
// Construction

namespace {

constexpr std::size_t kOpenEnd = std::numeric_limits<std::size_t>::max();

class UkkonenBuilder {
 public:
  UkkonenBuilder(std::vector<Symbol>& text, std::vector<SuffixTree::Node>& nodes)
      : text_(text), nodes_(nodes) {
    nodes_.clear();
    new_node(0, 0);
  }

  void run() {
    for (std::size_t i = 0; i < text_.size(); ++i) extend(i);
    finish();
  }

 private:
  std::size_t new_node(std::size_t start, std::size_t end) {
    nodes_.push_back(SuffixTree::Node{start, end, 0, {}, -1});
    links_.push_back(SuffixTree::kRoot);
    return nodes_.size() - 1;
  }

  std::size_t edge_end(std::size_t v, std::size_t pos) const {
    return nodes_[v].end == kOpenEnd ? pos + 1 : nodes_[v].end;
  }

  // Suffix link of the internal node created last in this phase, if any.
  void close_pending_link(std::size_t target) {
    if (last_new_ != 0) links_[last_new_] = target;
    last_new_ = 0;
  }

  void extend(std::size_t pos) {
    last_new_ = 0;
    ++remainder_;
    const Symbol c = text_[pos];
    while (remainder_ > 0) {
      if (active_length_ == 0) active_edge_ = pos;
      auto it = nodes_[active_node_].children.find(text_[active_edge_]);
      if (it == nodes_[active_node_].children.end()) {
        std::size_t leaf = new_node(pos, kOpenEnd);
        nodes_[active_node_].children[text_[active_edge_]] = leaf;
        close_pending_link(active_node_);
      } else {
        const std::size_t next = it->second;
        const std::size_t len = edge_end(next, pos) - nodes_[next].start;
        if (active_length_ >= len) {
          active_edge_ += len;
          active_length_ -= len;
          active_node_ = next;
          continue;
        }
        if (text_[nodes_[next].start + active_length_] == c) {
          ++active_length_;
          close_pending_link(active_node_);
          break;
        }
        const std::size_t split_start = nodes_[next].start;
        std::size_t split = new_node(split_start, split_start + active_length_);
        nodes_[active_node_].children[text_[active_edge_]] = split;
        std::size_t leaf = new_node(pos, kOpenEnd);
        nodes_[split].children[c] = leaf;
        nodes_[next].start += active_length_;
        nodes_[split].children[text_[nodes_[next].start]] = next;
        close_pending_link(split);
        last_new_ = split;
      }
      --remainder_;
      if (active_node_ == SuffixTree::kRoot && active_length_ > 0) {
        --active_length_;
        active_edge_ = pos - remainder_ + 1;
      } else {
        active_node_ = links_[active_node_];
      }
    }
  }

  // Close open leaf edges and fill in string depths and suffix starts.
  void finish() {
    const std::size_t size = text_.size();
    std::vector<std::size_t> stack{SuffixTree::kRoot};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto& [sym, child] : nodes_[v].children) {
        auto& node = nodes_[child];
        if (node.end == kOpenEnd) node.end = size;
        node.depth = nodes_[v].depth + (node.end - node.start);
        if (node.children.empty()) node.suffix_start = static_cast<std::ptrdiff_t>(size - node.depth);
        stack.push_back(child);
      }
    }
  }

  std::vector<Symbol>& text_;
  std::vector<SuffixTree::Node>& nodes_;
  std::vector<std::size_t> links_;
  std::size_t active_node_ = SuffixTree::kRoot;
  std::size_t active_edge_ = 0;
  std::size_t active_length_ = 0;
  std::size_t remainder_ = 0;
  std::size_t last_new_ = 0;
};

}  // namespace

SuffixTree build_suffix_tree(const Word& s, Symbol sentinel) {
  if (s.empty() || s.back() != sentinel) throw ValidationError("suffix tree input must end with the sentinel");
  if (std::count(s.begin(), s.end(), sentinel) != 1) {
    throw ValidationError("sentinel must occur exactly once");
  }
  SuffixTree t;
  t.text_.assign(s.begin(), s.end());
  UkkonenBuilder(t.text_, t.nodes_).run();
  return t;
}

std::vector<std::size_t> SuffixTree::leaf_starts() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 1; v < nodes_.size(); ++v) {
    if (nodes_[v].is_leaf()) out.push_back(static_cast<std::size_t>(nodes_[v].suffix_start));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> SuffixTree::leaf_words() const {
  std::vector<Word> out;
  for (std::size_t start : leaf_starts()) {
    out.emplace_back(std::vector<Symbol>(text_.begin() + static_cast<std::ptrdiff_t>(start), text_.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pruning and minimum

SuffixTree prune_min_length(const SuffixTree& t, std::size_t m, std::size_t* visited) {
  const auto& nodes = t.nodes_;
  const std::size_t size = t.text_.size();

  // Pre-order listing; reversed it is a valid post-order.
  std::vector<std::size_t> order;
  order.reserve(nodes.size());
  std::vector<std::size_t> stack{SuffixTree::kRoot};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const auto& [sym, child] : nodes[v].children) stack.push_back(child);
  }
  if (visited) *visited += order.size();

  std::vector<bool> keep(nodes.size(), false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& node = nodes[*it];
    if (node.is_leaf()) {
      keep[*it] = size - static_cast<std::size_t>(node.suffix_start) >= m;
    } else {
      for (const auto& [sym, child] : node.children) keep[*it] = keep[*it] || keep[child];
    }
  }

  SuffixTree out;
  out.text_ = t.text_;
  std::vector<std::size_t> remap(nodes.size(), 0);
  out.nodes_.push_back(nodes[SuffixTree::kRoot]);
  out.nodes_.front().children.clear();
  for (std::size_t v : order) {
    if (v == SuffixTree::kRoot || !keep[v]) continue;
    remap[v] = out.nodes_.size();
    out.nodes_.push_back(nodes[v]);
    out.nodes_.back().children.clear();
  }
  for (std::size_t v : order) {
    if (v != SuffixTree::kRoot && !keep[v]) continue;
    for (const auto& [sym, child] : nodes[v].children) {
      if (keep[child]) out.nodes_[remap[v]].children.emplace(sym, remap[child]);
    }
  }
  return out;
}

namespace {

std::size_t min_child(const SuffixTree::Node& node, const SymbolOrder& order) {
  std::size_t best = 0;
  std::uint32_t best_rank = std::numeric_limits<std::uint32_t>::max();
  for (const auto& [sym, child] : node.children) {
    std::uint32_t r = order.rank(sym);
    if (r < best_rank) {
      best_rank = r;
      best = child;
    }
  }
  return best;
}

}  // namespace

Word min_word(const SuffixTree& t, const SymbolOrder& order, std::size_t* visited) {
  if (t.empty()) throw ContractViolation("Min of an empty suffix tree");
  std::size_t v = SuffixTree::kRoot;
  std::size_t steps = 1;
  while (!t.node(v).children.empty()) {
    v = min_child(t.node(v), order);
    ++steps;
  }
  if (visited) *visited += steps;
  auto text = t.text();
  auto start = static_cast<std::size_t>(t.node(v).suffix_start);
  return Word(std::vector<Symbol>(text.begin() + static_cast<std::ptrdiff_t>(start), text.end()));
}

std::vector<Word> ordered_suffixes(const SuffixTree& t, const SymbolOrder& order) {
  // Taking Min and deleting it repeatedly visits the leaves in a depth-first
  // walk whose children are sorted by `order`.
  std::vector<Word> out;
  auto text = t.text();
  std::vector<std::size_t> stack{SuffixTree::kRoot};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    const auto& node = t.node(v);
    if (node.is_leaf()) {
      auto start = static_cast<std::size_t>(node.suffix_start);
      out.emplace_back(std::vector<Symbol>(text.begin() + static_cast<std::ptrdiff_t>(start), text.end()));
      continue;
    }
    std::vector<std::size_t> kids;
    for (const auto& [sym, child] : node.children) kids.push_back(child);
    std::sort(kids.begin(), kids.end(), [&](std::size_t a, std::size_t b) {
      return order.rank(text[t.node(a).start]) > order.rank(text[t.node(b).start]);
    });
    stack.insert(stack.end(), kids.begin(), kids.end());
  }
  return out;
}

bool is_lyndon_suffix_tree(const Word& sigma, std::size_t n, std::uint32_t q, MembershipStats* stats) {
  if (sigma.size() != n || n == 0) throw ContractViolation("membership word length must equal n >= 1");
  validate(sigma, Alphabet(q));

  std::vector<Symbol> doubled;
  doubled.reserve(2 * n + 1);
  doubled.insert(doubled.end(), sigma.begin(), sigma.end());
  doubled.insert(doubled.end(), sigma.begin(), sigma.end());
  doubled.push_back(q);
  Word text(std::move(doubled));

  SuffixTree full = build_suffix_tree(text, q);
  std::size_t visited = 0;
  SuffixTree pruned = prune_min_length(full, n + 2, &visited);
  Word smallest = min_word(pruned, SymbolOrder::sentinel_min(q), &visited);
  if (stats) {
    stats->nodes_built += full.nodes().size();
    stats->nodes_visited += visited;
  }
  return smallest == text;
}

}  // namespace irrenum
