#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "irrenum/words.hpp"

namespace irrenum {

/// Total order on the symbols 0..q-1 plus the sentinel, which is encoded as
/// the value q.
class SymbolOrder {
 public:
  /// Symbols listed from smallest to largest; must be a permutation of 0..q.
  static SymbolOrder from_sequence(const std::vector<Symbol>& ascending);
  /// $ < 0 < 1 < ... < q-1 (the order the membership test needs).
  static SymbolOrder sentinel_min(std::uint32_t q);
  /// 0 < 1 < ... < q-1 < $.
  static SymbolOrder sentinel_max(std::uint32_t q);

  std::uint32_t rank(Symbol s) const { return rank_.at(s); }
  std::uint32_t sentinel() const { return static_cast<std::uint32_t>(rank_.size() - 1); }

 private:
  std::vector<std::uint32_t> rank_;
};

/// Path-compressed suffix tree of a string that ends in a unique sentinel.
/// Built online (Ukkonen) with ordered child maps, O(|s| log q).
class SuffixTree {
 public:
  struct Node {
    std::size_t start = 0;  // edge label is text[start, end)
    std::size_t end = 0;
    std::size_t depth = 0;  // string depth at the lower end of the edge
    std::map<Symbol, std::size_t> children;
    // Start index of the suffix spelled by a leaf; unset on internal nodes.
    std::ptrdiff_t suffix_start = -1;

    bool is_leaf() const { return children.empty() && suffix_start >= 0; }
  };

  static constexpr std::size_t kRoot = 0;

  std::span<const Symbol> text() const { return text_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  bool empty() const { return nodes_[kRoot].children.empty(); }

  /// Suffix start indices of all leaves, ascending.
  std::vector<std::size_t> leaf_starts() const;
  /// Every root-to-leaf string, one per leaf.
  std::vector<Word> leaf_words() const;

 private:
  friend SuffixTree build_suffix_tree(const Word& s, Symbol sentinel);
  friend SuffixTree prune_min_length(const SuffixTree& t, std::size_t m, std::size_t* visited);

  std::vector<Symbol> text_;
  std::vector<Node> nodes_;
};

/// `s` must end with `sentinel` and contain it nowhere else; ValidationError
/// otherwise.
SuffixTree build_suffix_tree(const Word& s, Symbol sentinel);

/// Keeps only the suffixes of length >= m. Unary internal nodes left behind
/// are kept as they are; they do not change any root-to-leaf string.
/// `visited`, when given, is incremented by the number of nodes walked.
SuffixTree prune_min_length(const SuffixTree& t, std::size_t m, std::size_t* visited = nullptr);

/// Root-to-leaf word taking the order-minimal edge at every node.
/// ContractViolation on an empty tree.
Word min_word(const SuffixTree& t, const SymbolOrder& order, std::size_t* visited = nullptr);

/// All suffixes in the order obtained by repeatedly taking Min and removing
/// it from the tree.
std::vector<Word> ordered_suffixes(const SuffixTree& t, const SymbolOrder& order);

struct MembershipStats {
  std::size_t nodes_built = 0;
  std::size_t nodes_visited = 0;
  std::size_t total() const { return nodes_built + nodes_visited; }
};

/// Lyndon membership through the suffix tree of sigma sigma $: sigma is a
/// Lyndon word iff the minimal word among suffixes of length >= n+2 (with $
/// smallest) is sigma sigma $ itself.
bool is_lyndon_suffix_tree(const Word& sigma, std::size_t n, std::uint32_t q,
                           MembershipStats* stats = nullptr);

}  // namespace irrenum
