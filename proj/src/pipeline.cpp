#include "irrenum/pipeline.hpp"

#include <algorithm>
#include <set>

#include "irrenum/errors.hpp"

namespace irrenum {

std::string to_string(OutputMode mode) {
  switch (mode) {
    case OutputMode::Polynomials: return "polynomials";
    case OutputMode::PolynomialsAndRoots: return "polynomials_and_roots";
    case OutputMode::RootsOnly: return "roots_only";
  }
  return "?";
}

std::string to_string(RootBasis basis) { return basis == RootBasis::Normal ? "normal" : "poly"; }

OutputMode parse_output_mode(std::string_view text) {
  if (text == "polynomials") return OutputMode::Polynomials;
  if (text == "polynomials_and_roots") return OutputMode::PolynomialsAndRoots;
  if (text == "roots_only") return OutputMode::RootsOnly;
  throw ValidationError("unknown output mode '" + std::string(text) + "'");
}

RootBasis parse_root_basis(std::string_view text) {
  if (text == "normal") return RootBasis::Normal;
  if (text == "poly") return RootBasis::Poly;
  throw ValidationError("unknown root basis '" + std::string(text) + "'");
}

PipelineCtx preprocess(const EnumConfig& cfg) {
  if (cfg.n == 0) throw ValidationError("degree must be at least 1");
  PrimeField base(cfg.p);
  Rng rng(cfg.seed);

  Poly modulus = cfg.modulus ? *cfg.modulus : find_irreducible(cfg.n, base, rng);
  if (modulus.degree() != static_cast<std::ptrdiff_t>(cfg.n)) {
    throw ValidationError("pinned modulus must have degree n");
  }
  ExtField field(base, modulus);

  std::optional<NormalBasis> basis;
  if (cfg.alpha) {
    basis = NormalBasis::try_from(field, field.from_poly(*cfg.alpha));
    if (!basis) throw ValidationError("pinned alpha does not generate a normal basis");
  } else {
    basis = find_normal_basis(field, rng);
  }

  LyndonEnumerator first(cfg.n, cfg.p);
  return PipelineCtx{std::move(field), std::move(*basis), first.word()};
}

// ---------------------------------------------------------------------------
// Streaming

IrreducibleEnumerator::IrreducibleEnumerator(const EnumConfig& cfg)
    : IrreducibleEnumerator(std::make_shared<const PipelineCtx>(preprocess(cfg)), cfg) {}

IrreducibleEnumerator::IrreducibleEnumerator(std::shared_ptr<const PipelineCtx> ctx, const EnumConfig& cfg)
    : ctx_(std::move(ctx)), cfg_(cfg), cursor_(cfg.n, cfg.p) {
  if (ctx_->field.degree() != cfg.n || ctx_->field.base().p() != cfg.p) {
    throw ValidationError("pipeline context does not match the configuration");
  }
}

EnumRecord IrreducibleEnumerator::make_record(const Word& lambda) const {
  const auto& field = ctx_->field;
  const auto& nb = ctx_->basis;
  const std::size_t n = field.degree();
  EnumRecord rec;
  rec.lyndon = lambda;
  // The basis tag only means something when roots are present.
  if (cfg_.mode != OutputMode::Polynomials) rec.basis = cfg_.root_basis;

  auto in_output_basis = [&](std::vector<Coeff> normal) {
    return cfg_.root_basis == RootBasis::Normal ? normal : nb.to_poly_coords(normal).coords;
  };

  if (cfg_.mode == OutputMode::RootsOnly) {
    // One root, read straight off the normal coordinates.
    rec.roots = std::vector<std::vector<Coeff>>{in_output_basis(
        std::vector<Coeff>(lambda.begin(), lambda.end()))};
    return rec;
  }

  // Conjugates are rotations of lambda in normal coordinates.
  std::vector<std::vector<Coeff>> normal_roots;
  normal_roots.reserve(n);
  for (std::size_t k = 0; k < n; ++k) normal_roots.push_back(frobenius_normal(lambda.symbols(), k));

  std::vector<ExtElement> poly_roots;
  poly_roots.reserve(n);
  for (const auto& r : normal_roots) poly_roots.push_back(nb.to_poly_coords(r));
  rec.polynomial = minimal_polynomial_from_conjugates(poly_roots, field);

  if (cfg_.mode == OutputMode::PolynomialsAndRoots) {
    std::vector<std::vector<Coeff>> roots;
    roots.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      roots.push_back(cfg_.root_basis == RootBasis::Normal ? normal_roots[k] : poly_roots[k].coords);
    }
    rec.roots = std::move(roots);
  }
  return rec;
}

std::optional<EnumRecord> IrreducibleEnumerator::next() {
  if (cfg_.limit && emitted_ >= *cfg_.limit) return std::nullopt;
  if (started_) {
    if (!cursor_.advance()) return std::nullopt;
  }
  started_ = true;
  ++emitted_;
  return make_record(cursor_.word());
}

std::vector<EnumRecord> run(const EnumConfig& cfg) {
  IrreducibleEnumerator stream(cfg);
  std::vector<EnumRecord> out;
  while (auto rec = stream.next()) out.push_back(std::move(*rec));
  return out;
}

// ---------------------------------------------------------------------------
// Verification

std::string VerifyReport::summary() const {
  std::string s = (ok ? "OK count=" : "FAIL count=") + std::to_string(count);
  if (!ok && !failures.empty()) s += ": " + failures.front();
  return s;
}

VerifyReport verify_stream(const std::vector<EnumRecord>& records, const PipelineCtx& ctx, bool complete) {
  VerifyReport report;
  report.count = records.size();
  const auto& field = ctx.field;
  const auto& base = field.base();
  const std::size_t n = field.degree();
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.failures.push_back(std::move(msg));
  };

  std::set<Poly> seen;
  const std::size_t stride = std::max<std::size_t>(1, records.size() / 64);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    const std::string where = "record " + std::to_string(i) + " (" + to_string(rec.lyndon, base.p()) + ")";
    try {
      if (rec.lyndon.size() != n || !is_lyndon_naive(rec.lyndon)) fail(where + ": word is not a Lyndon word of length n");

      std::vector<ExtElement> roots;
      if (rec.roots) {
        for (const auto& r : *rec.roots) {
          ExtElement e = rec.basis == RootBasis::Normal ? ctx.basis.to_poly_coords(r) : ExtElement{r};
          field.check(e);
          roots.push_back(std::move(e));
        }
        auto sorted = roots;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(where + ": repeated root");
        if (rec.polynomial && roots.size() != n) fail(where + ": expected " + std::to_string(n) + " roots");
      }

      if (rec.polynomial) {
        const Poly& g = *rec.polynomial;
        if (!seen.insert(g).second) fail(where + ": duplicate polynomial " + to_string(g));
        if (!g.is_monic() || g.degree() != static_cast<std::ptrdiff_t>(n)) {
          fail(where + ": polynomial is not monic of degree n");
        } else if (!is_irreducible(g, base)) {
          fail(where + ": polynomial " + to_string(g) + " is reducible");
        } else if (i % stride == 0) {
          // Without roots in the record, test gamma(lambda) itself.
          if (roots.empty() && rec.lyndon.size() == n) {
            roots.push_back(gamma_from_word(rec.lyndon, ctx.basis, field));
          }
          for (const auto& r : roots) {
            if (field.eval(g, r) != field.zero()) {
              fail(where + ": root does not annihilate the polynomial");
              break;
            }
          }
        }
      }
    } catch (const std::exception& e) {
      fail(where + ": " + e.what());
    }
  }

  if (complete) {
    report.count_checked = true;
    BigInt expected = count_lyndon(n, base.p());
    if (BigInt(records.size()) != expected) {
      fail("count " + std::to_string(records.size()) + " differs from expected " + expected.str());
    }
  }
  return report;
}

}  // namespace irrenum
