#include "irrenum/lyndon_enum.hpp"

#include <algorithm>

#include "irrenum/errors.hpp"

namespace irrenum {

Word duval_extend(const Word& w, std::size_t n) {
  if (w.empty() || w.size() > n) throw ContractViolation("duval_extend needs 1 <= |w| <= n");
  std::vector<Symbol> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(w[i % w.size()]);
  return Word(std::move(out));
}

std::optional<Word> increment_last(const Word& v, std::uint32_t q) {
  const Symbol top = q - 1;
  std::vector<Symbol> out(v.begin(), v.end());
  while (!out.empty() && out.back() == top) out.pop_back();
  if (out.empty()) return std::nullopt;
  ++out.back();
  return Word(std::move(out));
}

std::optional<Word> duval_next(const Word& w, std::size_t n, std::uint32_t q) {
  return increment_last(duval_extend(w, n), q);
}

PlainStep duval_plain_next_instrumented(const Word& w, std::size_t n, std::uint32_t q) {
  if (w.empty() || w.size() > n) throw ContractViolation("plain successor needs 1 <= |w| <= n");
  PlainStep step;
  const Symbol top = q - 1;
  std::vector<Symbol> buf(w.begin(), w.end());
  buf.reserve(n);
  do {
    // D: extend in place by copying from one period back.
    const std::size_t period = buf.size();
    while (buf.size() < n) {
      buf.push_back(buf[buf.size() - period]);
      ++step.updates;
    }
    // P: truncate the maximal tail, then bump one symbol.
    while (!buf.empty() && buf.back() == top) buf.pop_back();
    if (buf.empty()) return step;
    ++buf.back();
    ++step.updates;
  } while (buf.size() < n);
  step.next = Word(std::move(buf));
  return step;
}

std::uint64_t UpdateTally::max_step() const {
  return per_step.empty() ? 0 : *std::max_element(per_step.begin(), per_step.end());
}

// ---------------------------------------------------------------------------
// LyndonEnumerator

LyndonEnumerator::LyndonEnumerator(CompressedWord start, std::size_t n, std::uint32_t q)
    : current_(std::move(start)), n_(n), q_(q), length_(n), single_symbol_(n == 1) {}

namespace {

Word first_word(std::size_t n) {
  if (n == 0) throw ContractViolation("Lyndon enumeration needs n >= 1");
  std::vector<Symbol> w(n, 0);
  if (n > 1) w.back() = 1;
  return Word(std::move(w));
}

}  // namespace

LyndonEnumerator::LyndonEnumerator(std::size_t n, std::uint32_t q)
    : LyndonEnumerator(compress(first_word(n), Alphabet(q).q), n, q) {}

LyndonEnumerator LyndonEnumerator::from_word(const Word& start, std::uint32_t q) {
  validate(start, Alphabet(q));
  if (start.empty() || !is_lyndon_naive(start)) {
    throw ContractViolation("enumeration must start from a Lyndon word");
  }
  return LyndonEnumerator(compress(start, q), start.size(), q);
}

bool LyndonEnumerator::strip_and_increment() {
  auto& c = cells();
  if (!c.empty() && c.back().is_run()) {
    length_ -= c.back().value;
    c.pop_back();
    write();
  }
  if (c.empty()) return false;
  Cell& last = c.back();
  if (last.value + 1 < q_ - 1) {
    ++last.value;
    write();
  } else if (c.size() >= 2 && c[c.size() - 2].is_run()) {
    // merge into the preceding run
    c.pop_back();
    write();
    ++c.back().value;
    write();
  } else {
    last = Cell::run(1);
    write();
  }
  return true;
}

void LyndonEnumerator::extend_to_n() {
  auto& c = cells();
  const std::size_t period = c.size();
  for (std::size_t j = period; length_ < n_; ++j) {
    const Cell src = c[j - period];
    if (src.is_run()) {
      if (length_ + src.value >= n_) break;
      length_ += src.value;
    } else {
      ++length_;
    }
    c.push_back(src);
    write();
  }
}

bool LyndonEnumerator::advance() {
  if (exhausted_) return false;
  step_updates_ = 0;
  auto& c = cells();

  if (single_symbol_) {
    Cell& only = c.front();
    if (only.is_run()) {
      exhausted_ = true;
    } else {
      only = only.value + 1 < q_ - 1 ? Cell::symbol(only.value + 1) : Cell::run(1);
      write();
    }
  } else if (!strip_and_increment()) {
    exhausted_ = true;
  } else {
    while (length_ < n_) {
      // The only Lyndon word starting with q-1 is q-1 itself, whose
      // extension is all maximal symbols.
      if (c.front().is_run()) {
        exhausted_ = true;
        break;
      }
      extend_to_n();
      strip_and_increment();
    }
  }

  update_counter_ += step_updates_;
  last_step_updates_ = step_updates_;
  if (exhausted_) return false;
  ++step_counter_;
  return true;
}

std::optional<CompressedWord> next_lyndon_of_length_n(LyndonEnumerator& state) {
  if (!state.advance()) return std::nullopt;
  return state.current();
}

Enumeration enumerate_all(std::size_t n, std::uint32_t q) {
  Enumeration out;
  LyndonEnumerator cursor(n, q);
  out.words.push_back(cursor.word());
  out.tally.per_step.push_back(0);
  while (cursor.advance()) {
    out.words.push_back(cursor.word());
    out.tally.per_step.push_back(cursor.last_step_updates());
    out.tally.total += cursor.last_step_updates();
  }
  return out;
}

namespace {

int mobius(std::size_t d) {
  int sign = 1;
  for (std::size_t f = 2; f * f <= d; ++f) {
    if (d % f == 0) {
      d /= f;
      if (d % f == 0) return 0;
      sign = -sign;
    }
  }
  if (d > 1) sign = -sign;
  return sign;
}

}  // namespace

BigInt count_lyndon(std::size_t n, std::uint32_t q) {
  if (n == 0) throw ContractViolation("count_lyndon needs n >= 1");
  static_cast<void>(Alphabet{q});
  BigInt sum = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n / d));
    if (mu > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / n;
}

}  // namespace irrenum
