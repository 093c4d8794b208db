#include <algorithm>
#include <random>

#include "doctest.h"
#include "irrenum/errors.hpp"
#include "irrenum/suffix_tree.hpp"
#include "oracles.hpp"

using namespace irrenum;

namespace {

constexpr Symbol kDollar = 2;  // sentinel for binary text

// "1010110$" style literal; '$' maps to the sentinel value q.
Word text(std::string_view s, std::uint32_t q = 2) {
  Word out;
  for (char c : s) out.push_back(c == '$' ? q : static_cast<Symbol>(c - '0'));
  return out;
}

std::vector<Word> all_suffixes(const Word& s) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.emplace_back(std::vector<Symbol>(s.begin() + static_cast<std::ptrdiff_t>(i), s.end()));
  }
  return out;
}

std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_structure(const SuffixTree& t) {
  for (const auto& node : t.nodes()) {
    // children are keyed by the first symbol of their edge
    for (const auto& [first, child] : node.children) {
      REQUIRE(t.node(child).end > t.node(child).start);
      REQUIRE(t.text()[t.node(child).start] == first);
    }
  }
}

}  // namespace

TEST_CASE("root-to-leaf strings are the suffixes") {
  const Word s = text("1010110$");
  auto t = build_suffix_tree(s, kDollar);
  check_structure(t);
  CHECK(sorted(t.leaf_words()) == sorted(all_suffixes(s)));
  CHECK(t.leaf_starts() == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});

  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t q = 2 + trial % 3;
    std::uniform_int_distribution<Symbol> sym(0, q - 1);
    Word r;
    for (int i = 0, len = 1 + trial % 40; i < len; ++i) r.push_back(sym(rng));
    r.push_back(q);
    auto tr = build_suffix_tree(r, q);
    check_structure(tr);
    REQUIRE(sorted(tr.leaf_words()) == sorted(all_suffixes(r)));
  }
}

TEST_CASE("sentinel must be unique and final") {
  CHECK_THROWS_AS(build_suffix_tree(text("101"), kDollar), ValidationError);
  CHECK_THROWS_AS(build_suffix_tree(text("1$0$"), kDollar), ValidationError);
  CHECK_THROWS_AS(build_suffix_tree(Word{}, kDollar), ValidationError);
}

TEST_CASE("min_word under the two orders of the worked example") {
  auto t = build_suffix_tree(text("1010110$"), kDollar);
  CHECK(min_word(t, SymbolOrder::from_sequence({1, 0, kDollar})) == text("110$"));
  CHECK(min_word(t, SymbolOrder::from_sequence({0, 1, kDollar})) == text("010110$"));
  CHECK(min_word(t, SymbolOrder::sentinel_min(2)) == text("$"));
  CHECK_THROWS_AS(SymbolOrder::from_sequence({0, 0, 1}), ValidationError);
}

TEST_CASE("ordered_suffixes") {
  auto t = build_suffix_tree(text("1010110$"), kDollar);
  std::vector<Word> expected;
  for (auto s : {"010110$", "0110$", "0$", "1010110$", "10110$", "10$", "110$", "$"}) expected.push_back(text(s));
  CHECK(ordered_suffixes(t, SymbolOrder::sentinel_max(2)) == expected);
}

TEST_CASE("prune_min_length") {
  const Word s = text("01100110$");
  auto t = build_suffix_tree(s, kDollar);
  for (std::size_t m = 0; m <= s.size() + 1; ++m) {
    std::size_t visited = 0;
    auto pruned = prune_min_length(t, m, &visited);
    auto leaves = pruned.leaf_words();
    for (const auto& leaf : leaves) REQUIRE(leaf.size() >= m);
    const std::size_t expected = m == 0 ? s.size() : m <= s.size() ? s.size() - m + 1 : 0;
    REQUIRE(leaves.size() == expected);
    REQUIRE(pruned.empty() == (expected == 0));
    if (expected > 0) check_structure(pruned);
    CHECK(visited > 0);
  }
  auto empty = prune_min_length(t, s.size() + 1);
  CHECK_THROWS_AS(min_word(empty, SymbolOrder::sentinel_min(2)), ContractViolation);
}

TEST_CASE("membership examples") {
  auto w = [](std::string_view s) { return parse_word(s, Alphabet(2)); };
  CHECK(is_lyndon_suffix_tree(w("001011"), 6, 2));
  CHECK_FALSE(is_lyndon_suffix_tree(w("010101"), 6, 2));
  CHECK_FALSE(is_lyndon_suffix_tree(w("100110"), 6, 2));
  CHECK(is_lyndon_suffix_tree(w("1"), 1, 2));
  CHECK_THROWS_AS(is_lyndon_suffix_tree(w("0011"), 5, 2), ContractViolation);
  CHECK_THROWS_AS(is_lyndon_suffix_tree(Word{0, 2}, 2, 2), ValidationError);
}

TEST_CASE("membership agrees with the rotation-sort oracle") {
  oracle::for_each_word(12, 2, [](const oracle::Symbols& s) {
    REQUIRE(is_lyndon_suffix_tree(Word(s), 12, 2) == oracle::is_lyndon(s));
  });
  std::mt19937 rng(99);
  std::uniform_int_distribution<Symbol> sym(0, 2);
  std::uniform_int_distribution<std::size_t> len(5, 50);
  for (int t = 0; t < 10000; ++t) {
    oracle::Symbols s(len(rng));
    for (auto& x : s) x = sym(rng);
    // Bias toward Lyndon inputs: every other trial uses the minimal rotation
    // of s, which is Lyndon whenever s is aperiodic.
    if (t % 2) {
      oracle::Symbols best = s;
      for (std::size_t r = 1; r < s.size(); ++r) best = std::min(best, oracle::rotate_left(s, r));
      s = best;
    }
    REQUIRE(is_lyndon_suffix_tree(Word(s), s.size(), 3) == oracle::is_lyndon(s));
  }
}

TEST_CASE("membership cost is linear") {
  constexpr double kCost = 13.0;
  std::mt19937 rng(3);
  double worst = 0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    std::uniform_int_distribution<Symbol> sym(0, q - 1);
    for (std::size_t n : {1u, 2u, 5u, 10u, 50u, 200u, 1000u}) {
      for (int t = 0; t < 20; ++t) {
        Word s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(t <= 1 ? 0 : sym(rng));
        if (t == 1 && n > 1) s[n - 1] = q - 1;  // 0...0(q-1) is Lyndon
        MembershipStats stats;
        is_lyndon_suffix_tree(s, n, q, &stats);
        const double ratio = static_cast<double>(stats.total()) / static_cast<double>(n);
        worst = std::max(worst, ratio);
        REQUIRE(ratio <= kCost);
      }
    }
  }
  MESSAGE("worst membership cost per symbol: " << worst);
}
