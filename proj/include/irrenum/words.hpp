#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace irrenum {

using Symbol = std::uint32_t;

/// Ordered alphabet {0, 1, ..., q-1}.
struct Alphabet {
  std::uint32_t q;

  explicit Alphabet(std::uint32_t size);

  Symbol max_symbol() const { return q - 1; }
  bool contains(Symbol s) const { return s < q; }
};

/// A finite sequence of symbols. Ordering is lexicographic with a strict
/// prefix comparing less.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol& operator[](std::size_t i) { return symbols_[i]; }

  std::span<const Symbol> symbols() const { return symbols_; }
  std::vector<Symbol>& mutable_symbols() { return symbols_; }

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void pop_back() { symbols_.pop_back(); }
  Symbol back() const { return symbols_.back(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
};

/// Throws ValidationError if any symbol of `w` lies outside `alphabet`.
void validate(const Word& w, const Alphabet& alphabet);

/// Text form: concatenated digits when q <= 10, comma-separated otherwise.
std::string to_string(const Word& w, std::uint32_t q = 10);
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// R_i(w) = w_i ... w_m w_1 ... w_{i-1}, 1-based; rotate(w, 1) == w.
Word rotate(const Word& w, std::size_t i);

std::strong_ordering lex_compare(const Word& a, const Word& b);

/// O(m^2) reference test: every nontrivial rotation is strictly greater.
bool is_lyndon_naive(const Word& w);

/// All rotations pairwise distinct, i.e. the smallest period is |w|.
bool is_aperiodic(const Word& w);

/// Run-length form v^(0) [q-1]^{i_1} v^(1) ... v^(t-1) [q-1]^{i_t}, stored as
/// a flat array of cells. Each cell is either one non-maximal symbol or the
/// length of a maximal run of the symbol q-1. A trailing empty run is not
/// stored.
class CompressedWord {
 public:
  struct Cell {
    enum class Kind : std::uint8_t { Symbol, Run };
    Kind kind;
    std::uint32_t value;  // symbol, or run length (>= 1)

    static Cell symbol(Symbol s) { return {Kind::Symbol, s}; }
    static Cell run(std::uint32_t len) { return {Kind::Run, len}; }
    bool is_run() const { return kind == Kind::Run; }
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  explicit CompressedWord(std::uint32_t q) : q_(q) {}

  /// Build from blocks and run lengths: blocks[j] is v^(j), runs[j] is
  /// i_{j+1}. runs.size() is blocks.size() or blocks.size() - 1 (absent
  /// trailing run). Throws ValidationError on an empty block, a block holding
  /// q-1, or a zero run anywhere but the trailing slot. blocks[0] may be empty
  /// when the word starts with q-1.
  static CompressedWord from_blocks(std::uint32_t q, const std::vector<Word>& blocks,
                                    const std::vector<std::uint32_t>& runs);

  /// Build from raw cells; checks the same invariants as from_blocks.
  static CompressedWord from_cells(std::uint32_t q, std::vector<Cell> cells);

  std::uint32_t q() const { return q_; }
  std::span<const Cell> cells() const { return cells_; }
  std::size_t length() const;  // decompressed length

  /// Blocks v^(j) and runs i_j, the inverse of from_blocks.
  std::vector<Word> blocks() const;
  std::vector<std::uint32_t> runs() const;

  /// "(0,3,0,2)"-style rendering: blocks as digit strings, runs as numbers.
  std::string to_string() const;

  friend bool operator==(const CompressedWord&, const CompressedWord&) = default;

 private:
  friend class LyndonEnumerator;
  void check_invariants() const;

  std::uint32_t q_;
  std::vector<Cell> cells_;
};

CompressedWord compress(const Word& w, std::uint32_t q);
Word decompress(const CompressedWord& c);

/// Number of stored cells: sum of block lengths plus the number of stored
/// (nonzero) runs.
std::size_t compressed_length(const CompressedWord& c);

}  // namespace irrenum
