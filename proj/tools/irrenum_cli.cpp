// irrenum: Lyndon word and irreducible polynomial enumeration from the shell.
//
// Exit codes: 0 success / member, 1 not a member, 2 usage error,
// 3 internal consistency failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "irrenum/errors.hpp"
#include "irrenum/lyndon_enum.hpp"
#include "irrenum/pipeline.hpp"
#include "irrenum/suffix_tree.hpp"

namespace {

using namespace irrenum;

constexpr int kExitOk = 0;
constexpr int kExitNotMember = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint32_t q = 2;
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::optional<std::uint64_t> limit;
  std::uint64_t seed = 0;
  std::string mode = "polynomials";
  std::string format = "text";
  std::string basis = "normal";
  std::string word;
  std::string modulus;
  std::string alpha;
  std::size_t k = 10;
  bool verify = false;
  bool quiet = false;
};

// Per-record latency statistics for --quiet.
class LatencyStats {
 public:
  void start() { last_ = Clock::now(); }
  void tick() {
    auto now = Clock::now();
    double us = std::chrono::duration<double, std::micro>(now - last_).count();
    last_ = now;
    ++count_;
    total_ += us;
    max_ = std::max(max_, us);
  }
  void print(std::ostream& os) const {
    os << "records=" << count_ << std::fixed << std::setprecision(3)
       << " mean_us=" << (count_ ? total_ / static_cast<double>(count_) : 0.0) << " max_us=" << max_ << '\n';
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point last_;
  std::uint64_t count_ = 0;
  double total_ = 0;
  double max_ = 0;
};

void emit(const std::string& line) { std::cout << line << '\n' << std::flush; }

void require_format(const Options& o, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end()) {
    throw UsageError("unsupported --format '" + o.format + "' for this command");
  }
}

void require_prime(std::uint32_t p) {
  if (!PrimeField::is_prime(p)) throw UsageError("--p " + std::to_string(p) + " is not prime");
}

// ---------------------------------------------------------------------------
// lyndon

int lyndon_list(const Options& o) {
  require_format(o, {"text", "jsonl"});
  LyndonEnumerator cursor(o.n, o.q);
  LatencyStats stats;
  stats.start();
  std::uint64_t emitted = 0;
  do {
    if (o.limit && emitted >= *o.limit) break;
    ++emitted;
    const std::string text = to_string(cursor.word(), o.q);
    if (o.quiet) {
      stats.tick();
    } else if (o.format == "jsonl") {
      emit(nlohmann::json{{"word", text}}.dump());
    } else {
      emit(text);
    }
  } while (cursor.advance());
  if (o.quiet) stats.print(std::cout);
  return kExitOk;
}

int lyndon_next(const Options& o) {
  Alphabet alphabet(o.q);
  Word w = parse_word(o.word, alphabet);
  if (w.empty() || !is_lyndon_naive(w)) throw UsageError("input word is not a Lyndon word");
  const std::size_t n = o.n ? o.n : w.size();
  if (w.size() > n) throw UsageError("input word is longer than --n");

  std::optional<Word> next;
  if (w.size() == n) {
    auto cursor = LyndonEnumerator::from_word(w, o.q);
    if (cursor.advance()) next = cursor.word();
  } else {
    next = w;
    do {
      next = duval_next(*next, n, o.q);
    } while (next && next->size() < n);
  }
  emit(next ? to_string(*next, o.q) : std::string("exhausted"));
  return kExitOk;
}

int lyndon_count(const Options& o) {
  emit(count_lyndon(o.n, o.q).str());
  return kExitOk;
}

int lyndon_check(const Options& o) {
  Alphabet alphabet(o.q);
  Word w = parse_word(o.word, alphabet);
  if (w.empty()) throw UsageError("empty word");
  if (o.n && o.n != w.size()) throw UsageError("word length differs from --n");
  const bool member = is_lyndon_suffix_tree(w, w.size(), o.q);
  if (o.verify && member != is_lyndon_naive(w)) {
    std::cerr << "suffix-tree and rotation tests disagree\n";
    return kExitInternal;
  }
  emit(member ? "lyndon" : "not-lyndon");
  return member ? kExitOk : kExitNotMember;
}

// ---------------------------------------------------------------------------
// irred

EnumConfig make_config(const Options& o) {
  require_prime(o.p);
  PrimeField field(o.p);
  EnumConfig cfg;
  cfg.p = o.p;
  cfg.n = o.n;
  cfg.mode = parse_output_mode(o.mode);
  cfg.limit = o.limit;
  cfg.seed = o.seed;
  cfg.root_basis = parse_root_basis(o.basis);
  if (!o.modulus.empty()) cfg.modulus = parse_poly(o.modulus, field);
  if (!o.alpha.empty()) cfg.alpha = parse_poly(o.alpha, field);
  return cfg;
}

int irred_list(const Options& o) {
  require_format(o, {"text", "jsonl"});
  EnumConfig cfg = make_config(o);
  IrreducibleEnumerator stream(cfg);
  LatencyStats stats;
  stats.start();
  while (auto rec = stream.next()) {
    if (o.quiet) {
      stats.tick();
    } else {
      emit(o.format == "jsonl" ? format_record_json(*rec, o.p) : format_record_text(*rec, o.p));
    }
  }
  if (o.quiet) stats.print(std::cout);
  return kExitOk;
}

int irred_count(const Options& o) {
  require_prime(o.p);
  emit(count_lyndon(o.n, o.p).str());
  return kExitOk;
}

int irred_verify(const Options& o) {
  EnumConfig cfg = make_config(o);
  cfg.mode = OutputMode::PolynomialsAndRoots;
  IrreducibleEnumerator stream(cfg);
  std::vector<EnumRecord> records;
  while (auto rec = stream.next()) records.push_back(std::move(*rec));
  VerifyReport report = verify_stream(records, stream.context(), !cfg.limit.has_value());
  emit(report.summary());
  for (std::size_t i = 1; i < report.failures.size(); ++i) std::cerr << report.failures[i] << '\n';
  return report.ok ? kExitOk : kExitInternal;
}

// ---------------------------------------------------------------------------
// bench

int bench_cat(const Options& o) {
  require_format(o, {"text", "csv"});
  auto started = std::chrono::steady_clock::now();
  Enumeration e = enumerate_all(o.n, o.q);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  const double q = o.q;
  const double bound = 1.0 + 3.0 * q / ((q - 1.0) * (q - 1.0));
  std::ostringstream os;
  os << std::fixed << std::setprecision(4);
  if (o.format == "csv") {
    os << "n,q,words,total_updates,amortized,bound\n"
       << o.n << ',' << o.q << ',' << e.tally.words() << ',' << e.tally.total << ',' << e.tally.amortized() << ','
       << bound;
  } else {
    os << "n=" << o.n << " q=" << o.q << " words=" << e.tally.words() << " total_updates=" << e.tally.total
       << " amortized=" << e.tally.amortized() << " bound=" << bound << " max_step=" << e.tally.max_step()
       << " seconds=" << seconds;
  }
  emit(os.str());
  return kExitOk;
}

int bench_pathological(const Options& o) {
  require_format(o, {"text", "csv"});
  // 0 1^k 0 1^{k+1}
  std::vector<Symbol> symbols{0};
  symbols.insert(symbols.end(), o.k, 1);
  symbols.push_back(0);
  symbols.insert(symbols.end(), o.k + 1, 1);
  Word start(std::move(symbols));
  const std::size_t n = start.size();

  PlainStep plain = duval_plain_next_instrumented(start, n, 2);
  auto cursor = LyndonEnumerator::from_word(start, 2);
  cursor.advance();
  if (!plain.next || *plain.next != cursor.word()) {
    std::cerr << "plain and compressed successors disagree\n";
    return kExitInternal;
  }
  std::ostringstream os;
  if (o.format == "csv") {
    os << "k,n,plain_updates,compressed_updates\n"
       << o.k << ',' << n << ',' << plain.updates << ',' << cursor.last_step_updates();
  } else {
    os << "k=" << o.k << " n=" << n << " plain_updates=" << plain.updates
       << " compressed_updates=" << cursor.last_step_updates() << " next=" << to_string(cursor.word(), 2);
  }
  emit(os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate Lyndon words and irreducible polynomials over prime fields"};
  app.require_subcommand(1);
  Options o;

  auto add_q = [&](CLI::App* cmd) {
    cmd->add_option("--q", o.q, "alphabet size")->check(CLI::Range(2u, 1u << 30));
  };
  auto add_n = [&](CLI::App* cmd, bool required) {
    auto opt = cmd->add_option("--n", o.n, "word length / degree")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* cmd, const std::string& help) { cmd->add_option("--format", o.format, help); };

  int (*handler)(const Options&) = nullptr;

  auto* lyndon = app.add_subcommand("lyndon", "Lyndon words of length n")->require_subcommand(1);
  {
    auto* list = lyndon->add_subcommand("list", "stream all Lyndon words of length n in order");
    add_q(list);
    add_n(list, true);
    list->add_option("--limit", o.limit, "stop after this many words");
    add_format(list, "text|jsonl");
    list->add_flag("--quiet", o.quiet, "print only latency statistics");
    list->callback([&] { handler = lyndon_list; });

    auto* next = lyndon->add_subcommand("next", "successor of a Lyndon word among words of length n");
    next->add_option("word", o.word)->required();
    add_q(next);
    add_n(next, false);
    next->callback([&] { handler = lyndon_next; });

    auto* count = lyndon->add_subcommand("count", "number of Lyndon words of length n");
    add_q(count);
    add_n(count, true);
    count->callback([&] { handler = lyndon_count; });

    auto* check = lyndon->add_subcommand("check", "Lyndon membership (exit 0 yes, 1 no)");
    check->add_option("word", o.word)->required();
    add_q(check);
    add_n(check, false);
    check->add_flag("--verify", o.verify, "cross-check against the rotation test");
    check->callback([&] { handler = lyndon_check; });
  }

  auto* irred = app.add_subcommand("irred", "monic irreducible polynomials of degree n over F_p")->require_subcommand(1);
  {
    auto add_field = [&](CLI::App* cmd) {
      cmd->add_option("--p", o.p, "prime field size")->check(CLI::Range(2u, 0xFFFFFFFFu));
      add_n(cmd, true);
    };
    auto add_search = [&](CLI::App* cmd) {
      cmd->add_option("--seed", o.seed, "seed for the preprocessing searches");
      cmd->add_option("--modulus", o.modulus, "pin the field modulus, ascending coefficients");
      cmd->add_option("--alpha", o.alpha, "pin the normal element, ascending coefficients in beta");
      cmd->add_option("--limit", o.limit, "stop after this many records");
    };

    auto* list = irred->add_subcommand("list", "stream polynomials and/or roots");
    add_field(list);
    add_search(list);
    list->add_option("--mode", o.mode, "polynomials|polynomials_and_roots|roots_only");
    list->add_option("--basis", o.basis, "root coordinates: normal|poly");
    add_format(list, "text|jsonl");
    list->add_flag("--quiet", o.quiet, "print only latency statistics");
    list->callback([&] { handler = irred_list; });

    auto* count = irred->add_subcommand("count", "number of monic irreducible polynomials of degree n");
    add_field(count);
    count->callback([&] { handler = irred_count; });

    auto* verify = irred->add_subcommand("verify", "enumerate everything and self-check the stream");
    add_field(verify);
    add_search(verify);
    verify->callback([&] { handler = irred_verify; });
  }

  auto* bench = app.add_subcommand("bench", "update-count benchmarks")->require_subcommand(1);
  {
    auto* cat = bench->add_subcommand("cat", "amortized updates over a full enumeration");
    add_q(cat);
    add_n(cat, true);
    add_format(cat, "text|csv");
    cat->callback([&] { handler = bench_cat; });

    auto* patho = bench->add_subcommand("pathological", "plain vs compressed successor from 0 1^k 0 1^(k+1)");
    patho->add_option("--k", o.k, "run length k")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 16));
    add_format(patho, "text|csv");
    patho->callback([&] { handler = bench_pathological; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return handler(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
