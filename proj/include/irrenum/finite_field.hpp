#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irrenum/words.hpp"

namespace irrenum {

using Rng = std::mt19937_64;
using Coeff = std::uint32_t;

/// Arithmetic modulo a prime p < 2^32.
class PrimeField {
 public:
  /// Throws ValidationError unless p is prime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Coeff add(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} + b) % p_); }
  Coeff sub(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} + p_ - b) % p_); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>(std::uint64_t{a} * b % p_); }
  Coeff pow(Coeff a, std::uint64_t e) const;
  /// std::domain_error on zero.
  Coeff inv(Coeff a) const;

  static bool is_prime(std::uint64_t n);

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs);
  Poly(std::initializer_list<Coeff> coeffs) : Poly(std::vector<Coeff>(coeffs)) {}

  static Poly monomial(std::size_t degree, Coeff c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Coeff leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend auto operator<=>(const Poly& a, const Poly& b) { return a.coeffs_ <=> b.coeffs_; }

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

/// "1,1,0,0,1,1,1" (ascending degree); the zero polynomial prints as "0".
std::string to_string(const Poly& f);
Poly parse_poly(std::string_view text, const PrimeField& field);

Poly poly_add(const Poly& a, const Poly& b, const PrimeField& F);
Poly poly_sub(const Poly& a, const Poly& b, const PrimeField& F);
Poly poly_mul(const Poly& a, const Poly& b, const PrimeField& F);
Poly poly_scale(const Poly& a, Coeff c, const PrimeField& F);
/// (quotient, remainder); std::domain_error when dividing by zero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, const PrimeField& F);
Poly poly_mod(const Poly& a, const Poly& b, const PrimeField& F);
/// Monic gcd (zero only if both inputs are zero).
Poly poly_gcd(Poly a, Poly b, const PrimeField& F);
Poly make_monic(const Poly& a, const PrimeField& F);
/// a^e mod f by square-and-multiply.
Poly poly_powmod(const Poly& a, std::uint64_t e, const Poly& f, const PrimeField& F);
Coeff poly_eval(const Poly& a, Coeff x, const PrimeField& F);

/// Rabin's test: x^{p^n} = x (mod f) and gcd(x^{p^{n/r}} - x, f) = 1 for
/// every prime r | n. ValidationError unless f is monic of degree >= 1.
bool is_irreducible(const Poly& f, const PrimeField& F);

/// Random monic degree-n polynomials until one passes is_irreducible.
/// SearchFailed after the iteration cap.
Poly find_irreducible(std::size_t n, const PrimeField& F, Rng& rng);

// ---------------------------------------------------------------------------
// Extension field F_p[beta]/(f)

/// Polynomial-basis coordinates: coords[i] is the coefficient of beta^i.
struct ExtElement {
  std::vector<Coeff> coords;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
  friend auto operator<=>(const ExtElement& a, const ExtElement& b) { return a.coords <=> b.coords; }
};

/// Per-thread counters of extension-field operations, for cost assertions.
struct FieldOpCounts {
  std::uint64_t ext_mul = 0;
  std::uint64_t ext_inv = 0;
};
FieldOpCounts& field_op_counts();
void reset_field_op_counts();

class ExtField {
 public:
  /// Throws ValidationError unless `modulus` is monic and irreducible.
  ExtField(PrimeField base, Poly modulus);

  const PrimeField& base() const { return base_; }
  std::size_t degree() const { return n_; }
  const Poly& modulus() const { return modulus_; }

  ExtElement zero() const { return {std::vector<Coeff>(n_, 0)}; }
  ExtElement one() const;
  /// The class of x, i.e. beta (for n == 1, the root of the linear modulus).
  ExtElement generator() const;
  /// Embeds c in F_p as a constant.
  ExtElement constant(Coeff c) const;
  ExtElement from_poly(const Poly& a) const;
  Poly to_poly(const ExtElement& a) const;
  ExtElement random(Rng& rng) const;

  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement neg(const ExtElement& a) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement pow(const ExtElement& a, std::uint64_t e) const;
  /// std::domain_error on zero.
  ExtElement inv(const ExtElement& a) const;
  /// a^p.
  ExtElement frobenius(const ExtElement& a) const;
  /// True iff a lies in the prime subfield (only coordinate 0 may be nonzero).
  bool in_base_field(const ExtElement& a) const;
  /// Evaluates g (coefficients in F_p) at x.
  ExtElement eval(const Poly& g, const ExtElement& x) const;

  void check(const ExtElement& a) const;

 private:
  PrimeField base_;
  Poly modulus_;
  std::size_t n_;
};

/// Row-major square matrix over F_p.
struct Matrix {
  std::size_t dim = 0;
  std::vector<Coeff> data;

  Coeff& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
  static Matrix identity(std::size_t dim);
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix mat_mul(const Matrix& a, const Matrix& b, const PrimeField& F);
std::vector<Coeff> mat_vec(const Matrix& a, std::span<const Coeff> v, const PrimeField& F);
/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> mat_inverse(const Matrix& a, const PrimeField& F);

/// Normal basis {alpha, alpha^p, ..., alpha^{p^{n-1}}} with its change of
/// basis matrices. Column k of to_poly holds alpha^{p^k}.
class NormalBasis {
 public:
  /// nullopt unless the conjugates of alpha are linearly independent.
  static std::optional<NormalBasis> try_from(const ExtField& field, const ExtElement& alpha);

  const ExtElement& alpha() const { return alpha_; }
  const Matrix& to_poly() const { return to_poly_; }
  const Matrix& to_normal() const { return to_normal_; }

  /// Normal coordinates -> polynomial-basis element.
  ExtElement to_poly_coords(std::span<const Coeff> normal) const;
  /// Polynomial-basis element -> normal coordinates.
  std::vector<Coeff> to_normal_coords(const ExtElement& a) const;

 private:
  NormalBasis(ExtElement alpha, Matrix to_poly, Matrix to_normal, PrimeField base)
      : alpha_(std::move(alpha)), to_poly_(std::move(to_poly)), to_normal_(std::move(to_normal)), base_(base) {}

  ExtElement alpha_;
  Matrix to_poly_;
  Matrix to_normal_;
  PrimeField base_;
};

/// Rejection sampling, at most 64 n trials; SearchFailed past the cap.
NormalBasis find_normal_basis(const ExtField& field, Rng& rng);

/// gamma(lambda) = sum_k lambda_k alpha^{p^{k-1}}, in polynomial coordinates.
ExtElement gamma_from_word(const Word& lambda, const NormalBasis& nb, const ExtField& field);

/// Normal coordinates of gamma^{p^k} given those of gamma: a cyclic shift
/// toward higher indices by k (index i takes coordinate i - k mod n).
std::vector<Coeff> frobenius_normal(std::span<const Coeff> coords, std::size_t k);

/// gamma, gamma^p, ..., gamma^{p^{n-1}} by repeated Frobenius.
std::vector<ExtElement> conjugates(const ExtElement& gamma, const ExtField& field);

/// prod_k (x - gamma^{p^k}). DegreeCollapse if the conjugates repeat;
/// ConsistencyError if a coefficient falls outside F_p.
Poly minimal_polynomial(const ExtElement& gamma, const ExtField& field);
/// Same product from precomputed (distinct) conjugates.
Poly minimal_polynomial_from_conjugates(std::span<const ExtElement> roots, const ExtField& field);

}  // namespace irrenum
