#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "irrenum/words.hpp"

namespace irrenum {

using BigInt = boost::multiprecision::cpp_int;

// Plain-array successor operators of Duval's algorithm.

/// D(w, n): w repeated and truncated to exactly n symbols.
Word duval_extend(const Word& w, std::size_t n);

/// P(v) for v = u b [q-1]^t with b != q-1: returns u [b+1]. Empty optional when
/// v consists only of the symbol q-1.
std::optional<Word> increment_last(const Word& v, std::uint32_t q);

/// N(w) = P(D(w)): the next Lyndon word of length <= n, or nullopt once D(w)
/// is all maximal symbols.
std::optional<Word> duval_next(const Word& w, std::size_t n, std::uint32_t q);

struct PlainStep {
  std::optional<Word> next;
  std::uint64_t updates = 0;
};

/// Repeats duval_next on a plain symbol array until a word of length n shows
/// up, counting symbol writes (each appended symbol of D and each increment
/// of P). Reference for the benchmark only.
PlainStep duval_plain_next_instrumented(const Word& w, std::size_t n, std::uint32_t q);

/// Per-step update counts of one enumeration. per_step[0] is the start word
/// and is always 0.
struct UpdateTally {
  std::vector<std::uint64_t> per_step;
  std::uint64_t total = 0;

  std::uint64_t words() const { return per_step.size(); }
  double amortized() const {
    return per_step.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(per_step.size());
  }
  std::uint64_t max_step() const;
};

/// Enumeration cursor over the Lyndon words of length exactly n, kept in
/// compressed form. Each call to advance() runs the successor chain
/// u(1) = N(v), u(i+1) = N(u(i)) directly on the cell array until the length
/// reaches n again.
///
/// Cost model: one update is one write to a cell of the compressed array (a
/// symbol write, a run-counter write, or a cell removal). Reads and index
/// arithmetic are free.
class LyndonEnumerator {
 public:
  /// Starts at 0^{n-1} 1 (or at 0 when n == 1).
  LyndonEnumerator(std::size_t n, std::uint32_t q);

  /// Starts at an arbitrary Lyndon word of length n. Throws ContractViolation
  /// if `start` is not one.
  static LyndonEnumerator from_word(const Word& start, std::uint32_t q);

  /// Moves to the next Lyndon word of length n. Returns false (and leaves the
  /// cursor exhausted) after the lexicographically last one.
  bool advance();

  bool exhausted() const { return exhausted_; }
  std::size_t n() const { return n_; }
  std::uint32_t q() const { return q_; }

  const CompressedWord& current() const { return current_; }
  Word word() const { return decompress(current_); }

  std::uint64_t update_counter() const { return update_counter_; }
  /// Words emitted so far, the start word included.
  std::uint64_t step_counter() const { return step_counter_; }
  std::uint64_t last_step_updates() const { return last_step_updates_; }

 private:
  using Cell = CompressedWord::Cell;

  LyndonEnumerator(CompressedWord start, std::size_t n, std::uint32_t q);

  // P on the cell array: drop a trailing run, bump the last symbol, merging
  // into the previous run when it becomes q-1. Returns false if no symbol cell
  // is left.
  bool strip_and_increment();
  // D on the cell array: append cells of the current word cyclically until
  // the length would reach n. A run that would end at or beyond n is left
  // out since the following P strips it anyway.
  void extend_to_n();

  std::vector<Cell>& cells() { return current_.cells_; }
  void write() { ++step_updates_; }

  CompressedWord current_;
  std::size_t n_;
  std::uint32_t q_;
  std::size_t length_ = 0;
  bool exhausted_ = false;
  // Length-1 words are emitted as 0, 1, ..., q-1 without the chain.
  bool single_symbol_ = false;

  std::uint64_t update_counter_ = 0;
  std::uint64_t step_counter_ = 1;
  std::uint64_t step_updates_ = 0;
  std::uint64_t last_step_updates_ = 0;
};

/// Free-function form of LyndonEnumerator::advance.
std::optional<CompressedWord> next_lyndon_of_length_n(LyndonEnumerator& state);

/// All Lyndon words of length n in increasing order, with the update tally.
struct Enumeration {
  std::vector<Word> words;
  UpdateTally tally;
};
Enumeration enumerate_all(std::size_t n, std::uint32_t q);

/// Number of Lyndon words of length n: (1/n) sum_{d | n} mu(d) q^{n/d}.
BigInt count_lyndon(std::size_t n, std::uint32_t q);

}  // namespace irrenum
