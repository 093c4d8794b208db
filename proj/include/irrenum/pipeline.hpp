#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "irrenum/finite_field.hpp"
#include "irrenum/lyndon_enum.hpp"

namespace irrenum {

enum class OutputMode { Polynomials, PolynomialsAndRoots, RootsOnly };
enum class RootBasis { Normal, Poly };

std::string to_string(OutputMode mode);
std::string to_string(RootBasis basis);
OutputMode parse_output_mode(std::string_view text);
RootBasis parse_root_basis(std::string_view text);

struct EnumConfig {
  std::uint32_t p = 2;
  std::size_t n = 1;
  OutputMode mode = OutputMode::Polynomials;
  std::optional<std::uint64_t> limit;
  std::uint64_t seed = 0;
  RootBasis root_basis = RootBasis::Normal;
  // Pin the preprocessing choices instead of searching for them.
  std::optional<Poly> modulus;
  std::optional<Poly> alpha;  // as a polynomial in beta
};

/// Preprocessing output: the field F_p[beta]/(f), a normal basis of it and
/// the first Lyndon word. Immutable once built.
struct PipelineCtx {
  ExtField field;
  NormalBasis basis;
  Word start;
};

/// Searches (or takes pinned) f and alpha. Deterministic in cfg.seed.
PipelineCtx preprocess(const EnumConfig& cfg);

struct EnumRecord {
  Word lyndon;
  std::optional<Poly> polynomial;
  // gamma, gamma^p, ..., gamma^{p^{n-1}} (only gamma in roots-only mode), as
  // coordinate vectors in `basis`.
  std::optional<std::vector<std::vector<Coeff>>> roots;
  RootBasis basis = RootBasis::Normal;

  friend bool operator==(const EnumRecord&, const EnumRecord&) = default;
};

/// Pull-based stream of records, one per Lyndon word of length n in
/// increasing order.
class IrreducibleEnumerator {
 public:
  explicit IrreducibleEnumerator(const EnumConfig& cfg);
  IrreducibleEnumerator(std::shared_ptr<const PipelineCtx> ctx, const EnumConfig& cfg);

  /// nullopt once the words (or the limit) run out.
  std::optional<EnumRecord> next();

  const PipelineCtx& context() const { return *ctx_; }
  std::uint64_t emitted() const { return emitted_; }

 private:
  EnumRecord make_record(const Word& lambda) const;

  std::shared_ptr<const PipelineCtx> ctx_;
  EnumConfig cfg_;
  LyndonEnumerator cursor_;
  bool started_ = false;
  std::uint64_t emitted_ = 0;
};

/// Collects the whole stream.
std::vector<EnumRecord> run(const EnumConfig& cfg);

struct VerifyReport {
  bool ok = true;
  std::uint64_t count = 0;
  bool count_checked = false;
  std::vector<std::string> failures;

  /// "OK count=N" or "FAIL count=N: <first failure>".
  std::string summary() const;
};

/// Self-check of a finished (`complete`) or truncated stream: distinct
/// irreducible monic degree-n polynomials, n distinct roots, g(root) = 0 on a
/// sample, and the total against count_lyndon when complete. Never throws on
/// bad records; problems go into the report.
VerifyReport verify_stream(const std::vector<EnumRecord>& records, const PipelineCtx& ctx, bool complete);

// Line-oriented text form:
//   lyndon=<word> [poly=<coeffs>] [roots=<vec;vec;...> basis=<normal|poly>]
// and the equivalent JSON object per line.
std::string format_record_text(const EnumRecord& rec, std::uint32_t p);
std::string format_record_json(const EnumRecord& rec, std::uint32_t p);
EnumRecord parse_record_text(std::string_view line, std::uint32_t p);
EnumRecord parse_record_json(std::string_view line, std::uint32_t p);

}  // namespace irrenum
