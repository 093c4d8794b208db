#include "irrenum/words.hpp"

#include <charconv>
#include <sstream>

#include "irrenum/errors.hpp"

namespace irrenum {

Alphabet::Alphabet(std::uint32_t size) : q(size) {
  if (size < 2) throw ValidationError("alphabet size must be at least 2");
}

void validate(const Word& w, const Alphabet& alphabet) {
  for (Symbol s : w) {
    if (!alphabet.contains(s)) {
      throw ValidationError("symbol " + std::to_string(s) + " outside alphabet of size " +
                            std::to_string(alphabet.q));
    }
  }
}

std::string to_string(const Word& w, std::uint32_t q) {
  std::string out;
  if (q <= 10) {
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Symbol> symbols;
  if (alphabet.q <= 10 && text.find(',') == std::string_view::npos) {
    symbols.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') throw ValidationError("invalid symbol character in word");
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      auto token = text.substr(pos, comma - pos);
      Symbol s{};
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), s);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ValidationError("invalid symbol in word");
      }
      symbols.push_back(s);
      pos = comma + 1;
    }
  }
  Word w(std::move(symbols));
  validate(w, alphabet);
  return w;
}

Word rotate(const Word& w, std::size_t i) {
  if (i < 1 || i > w.size()) throw ContractViolation("rotation index out of range");
  std::vector<Symbol> out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i - 1), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return Word(std::move(out));
}

std::strong_ordering lex_compare(const Word& a, const Word& b) { return a <=> b; }

namespace {

// Compares R_i(w) against w without materializing the rotation.
std::strong_ordering compare_rotation(const Word& w, std::size_t i) {
  const std::size_t m = w.size();
  for (std::size_t k = 0; k < m; ++k) {
    Symbol r = w[(i - 1 + k) % m];
    if (r != w[k]) return r <=> w[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace

bool is_lyndon_naive(const Word& w) {
  if (w.empty()) throw ContractViolation("Lyndon test on an empty word");
  for (std::size_t i = 2; i <= w.size(); ++i) {
    if (compare_rotation(w, i) != std::strong_ordering::greater) return false;
  }
  return true;
}

bool is_aperiodic(const Word& w) {
  if (w.empty()) throw ContractViolation("aperiodicity test on an empty word");
  for (std::size_t i = 2; i <= w.size(); ++i) {
    if (compare_rotation(w, i) == std::strong_ordering::equal) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// CompressedWord

void CompressedWord::check_invariants() const {
  if (q_ < 2) throw ValidationError("alphabet size must be at least 2");
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    const Cell& c = cells_[k];
    if (c.is_run()) {
      if (c.value == 0) throw ValidationError("compressed word holds an empty interior run");
      if (k > 0 && cells_[k - 1].is_run()) {
        throw ValidationError("compressed word holds an empty block between runs");
      }
    } else if (c.value >= q_ - 1) {
      throw ValidationError("compressed block holds a maximal or out-of-range symbol");
    }
  }
}

CompressedWord CompressedWord::from_cells(std::uint32_t q, std::vector<Cell> cells) {
  CompressedWord c(q);
  c.cells_ = std::move(cells);
  c.check_invariants();
  return c;
}

CompressedWord CompressedWord::from_blocks(std::uint32_t q, const std::vector<Word>& blocks,
                                           const std::vector<std::uint32_t>& runs) {
  if (blocks.empty()) {
    if (!runs.empty()) throw ValidationError("runs without blocks");
    return CompressedWord(q);
  }
  if (runs.size() != blocks.size() && runs.size() + 1 != blocks.size()) {
    throw ValidationError("block/run count mismatch");
  }
  std::vector<Cell> cells;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty() && !(j == 0 && !runs.empty() && runs[0] > 0)) {
      throw ValidationError("compressed word holds an empty block");
    }
    for (Symbol s : blocks[j]) cells.push_back(Cell::symbol(s));
    if (j < runs.size()) {
      bool trailing = j + 1 == blocks.size();
      if (runs[j] == 0) {
        if (!trailing) throw ValidationError("compressed word holds an empty interior run");
        continue;
      }
      cells.push_back(Cell::run(runs[j]));
    }
  }
  return from_cells(q, std::move(cells));
}

std::size_t CompressedWord::length() const {
  std::size_t len = 0;
  for (const Cell& c : cells_) len += c.is_run() ? c.value : 1;
  return len;
}

std::vector<Word> CompressedWord::blocks() const {
  std::vector<Word> out;
  bool open = false;
  for (const Cell& c : cells_) {
    if (c.is_run()) {
      if (!open) out.emplace_back();  // leading run: empty v^(0)
      open = false;
    } else {
      if (!open) out.emplace_back();
      out.back().push_back(c.value);
      open = true;
    }
  }
  return out;
}

std::vector<std::uint32_t> CompressedWord::runs() const {
  std::vector<std::uint32_t> out;
  for (const Cell& c : cells_) {
    if (c.is_run()) out.push_back(c.value);
  }
  return out;
}

std::string CompressedWord::to_string() const {
  std::ostringstream os;
  os << '(';
  bool in_block = false;
  bool first = true;
  for (const Cell& c : cells_) {
    if (c.is_run()) {
      if (!first) os << ',';
      os << c.value;
      in_block = false;
    } else {
      if (!in_block && !first) os << ',';
      if (q_ <= 10) {
        os << c.value;
      } else {
        if (in_block) os << ' ';
        os << c.value;
      }
      in_block = true;
    }
    first = false;
  }
  os << ')';
  return os.str();
}

CompressedWord compress(const Word& w, std::uint32_t q) {
  validate(w, Alphabet(q));
  const Symbol top = q - 1;
  std::vector<CompressedWord::Cell> cells;
  for (Symbol s : w) {
    if (s != top) {
      cells.push_back(CompressedWord::Cell::symbol(s));
    } else if (!cells.empty() && cells.back().is_run()) {
      ++cells.back().value;
    } else {
      cells.push_back(CompressedWord::Cell::run(1));
    }
  }
  return CompressedWord::from_cells(q, std::move(cells));
}

Word decompress(const CompressedWord& c) {
  std::vector<Symbol> out;
  out.reserve(c.length());
  const Symbol top = c.q() - 1;
  for (const auto& cell : c.cells()) {
    if (cell.is_run()) {
      out.insert(out.end(), cell.value, top);
    } else {
      out.push_back(cell.value);
    }
  }
  return Word(std::move(out));
}

std::size_t compressed_length(const CompressedWord& c) { return c.cells().size(); }

}  // namespace irrenum
