#include "irrenum/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "irrenum/errors.hpp"

namespace irrenum {

// ---------------------------------------------------------------------------
// PrimeField

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(std::size_t degree, Coeff c) {
  std::vector<Coeff> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(f.coeffs()[i]);
  }
  return out;
}

Poly parse_poly(std::string_view text, const PrimeField& field) {
  std::vector<Coeff> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    Coeff c{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), c);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || c >= field.p()) {
      throw ValidationError("invalid polynomial coefficient '" + std::string(token) + "'");
    }
    coeffs.push_back(c);
    pos = comma + 1;
  }
  return Poly(std::move(coeffs));
}

Poly poly_add(const Poly& a, const Poly& b, const PrimeField& F) {
  std::vector<Coeff> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a[i], b[i]);
  return Poly(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b, const PrimeField& F) {
  std::vector<Coeff> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a[i], b[i]);
  return Poly(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b, const PrimeField& F) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<Coeff> out(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(ac[i], bc[j]));
  }
  return Poly(std::move(out));
}

Poly poly_scale(const Poly& a, Coeff c, const PrimeField& F) {
  std::vector<Coeff> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = F.mul(x, c);
  return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, const PrimeField& F) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Coeff> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Coeff lead_inv = F.inv(bc.back());
  std::vector<Coeff> quot(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    Coeff c = F.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, bc[j]));
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b, const PrimeField& F) { return poly_divmod(a, b, F).second; }

Poly make_monic(const Poly& a, const PrimeField& F) {
  if (a.is_zero()) return a;
  return poly_scale(a, F.inv(a.leading()), F);
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& F) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, F);
}

Poly poly_powmod(const Poly& a, std::uint64_t e, const Poly& f, const PrimeField& F) {
  Poly result = poly_mod(Poly{1}, f, F);
  Poly base = poly_mod(a, f, F);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, F), f, F);
    e >>= 1;
    if (e) base = poly_mod(poly_mul(base, base, F), f, F);
  }
  return result;
}

Coeff poly_eval(const Poly& a, Coeff x, const PrimeField& F) {
  Coeff acc = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.coeffs()[i]);
  return acc;
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(const Poly& f, const PrimeField& F) {
  if (!f.is_monic() || f.degree() < 1) throw ValidationError("irreducibility test needs a monic polynomial of degree >= 1");
  const auto n = static_cast<std::size_t>(f.degree());
  if (n == 1) return true;

  // frob[k] = x^{p^k} mod f
  const Poly x = Poly::monomial(1);
  std::vector<Poly> frob{poly_mod(x, f, F)};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(poly_powmod(frob.back(), F.p(), f, F));

  if (frob[n] != poly_mod(x, f, F)) return false;
  for (std::size_t r : prime_factors(n)) {
    Poly g = poly_gcd(f, poly_sub(frob[n / r], x, F), F);
    if (g.degree() != 0) return false;
  }
  return true;
}

Poly find_irreducible(std::size_t n, const PrimeField& F, Rng& rng) {
  if (n == 0) throw ContractViolation("irreducible search needs degree >= 1");
  std::uniform_int_distribution<Coeff> coeff(0, F.p() - 1);
  const std::size_t cap = 64 * n + 64;
  for (std::size_t trial = 0; trial < cap; ++trial) {
    std::vector<Coeff> c(n + 1);
    for (std::size_t i = 0; i < n; ++i) c[i] = coeff(rng);
    c[n] = 1;
    Poly f(std::move(c));
    if (is_irreducible(f, F)) return f;
  }
  throw SearchFailed("no irreducible polynomial found within the iteration cap");
}

// ---------------------------------------------------------------------------
// ExtField

FieldOpCounts& field_op_counts() {
  thread_local FieldOpCounts counts;
  return counts;
}

void reset_field_op_counts() { field_op_counts() = {}; }

ExtField::ExtField(PrimeField base, Poly modulus)
    : base_(base), modulus_(std::move(modulus)), n_(0) {
  if (!modulus_.is_monic() || modulus_.degree() < 1 || !is_irreducible(modulus_, base_)) {
    throw ValidationError("extension modulus must be monic and irreducible");
  }
  n_ = static_cast<std::size_t>(modulus_.degree());
}

void ExtField::check(const ExtElement& a) const {
  if (a.coords.size() != n_) throw ValidationError("extension element has the wrong length");
  for (Coeff c : a.coords) {
    if (c >= base_.p()) throw ValidationError("extension coordinate outside F_p");
  }
}

ExtElement ExtField::one() const { return constant(1); }

ExtElement ExtField::constant(Coeff c) const {
  ExtElement e = zero();
  e.coords[0] = c % base_.p();
  return e;
}

ExtElement ExtField::generator() const { return from_poly(Poly::monomial(1)); }

ExtElement ExtField::from_poly(const Poly& a) const {
  Poly r = poly_mod(a, modulus_, base_);
  ExtElement e = zero();
  std::copy(r.coeffs().begin(), r.coeffs().end(), e.coords.begin());
  return e;
}

Poly ExtField::to_poly(const ExtElement& a) const { return Poly(a.coords); }

ExtElement ExtField::random(Rng& rng) const {
  std::uniform_int_distribution<Coeff> coeff(0, base_.p() - 1);
  ExtElement e = zero();
  for (auto& c : e.coords) c = coeff(rng);
  return e;
}

ExtElement ExtField::add(const ExtElement& a, const ExtElement& b) const {
  ExtElement out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coords[i] = base_.add(a.coords[i], b.coords[i]);
  return out;
}

ExtElement ExtField::sub(const ExtElement& a, const ExtElement& b) const {
  ExtElement out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coords[i] = base_.sub(a.coords[i], b.coords[i]);
  return out;
}

ExtElement ExtField::neg(const ExtElement& a) const {
  ExtElement out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coords[i] = base_.neg(a.coords[i]);
  return out;
}

ExtElement ExtField::mul(const ExtElement& a, const ExtElement& b) const {
  ++field_op_counts().ext_mul;
  return from_poly(poly_mul(to_poly(a), to_poly(b), base_));
}

ExtElement ExtField::pow(const ExtElement& a, std::uint64_t e) const {
  ExtElement result = one();
  ExtElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

ExtElement ExtField::inv(const ExtElement& a) const {
  ++field_op_counts().ext_inv;
  Poly a_poly = to_poly(a);
  if (a_poly.is_zero()) throw std::domain_error("inverse of zero in the extension field");
  // Extended Euclid on (modulus, a), tracking the coefficient of a.
  Poly r0 = modulus_, r1 = a_poly;
  Poly t0{}, t1{1};
  while (!r1.is_zero()) {
    auto [quot, rem] = poly_divmod(r0, r1, base_);
    Poly t2 = poly_sub(t0, poly_mul(quot, t1, base_), base_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  return from_poly(poly_scale(t0, base_.inv(r0.leading()), base_));
}

ExtElement ExtField::frobenius(const ExtElement& a) const { return pow(a, base_.p()); }

bool ExtField::in_base_field(const ExtElement& a) const {
  return std::all_of(a.coords.begin() + 1, a.coords.end(), [](Coeff c) { return c == 0; });
}

ExtElement ExtField::eval(const Poly& g, const ExtElement& x) const {
  ExtElement acc = zero();
  for (std::size_t i = g.coeffs().size(); i-- > 0;) acc = add(mul(acc, x), constant(g.coeffs()[i]));
  return acc;
}

// ---------------------------------------------------------------------------
// Matrices

Matrix Matrix::identity(std::size_t dim) {
  Matrix m{dim, std::vector<Coeff>(dim * dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const PrimeField& F) {
  Matrix out{a.dim, std::vector<Coeff>(a.dim * a.dim, 0)};
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t k = 0; k < a.dim; ++k) {
      Coeff aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.dim; ++j) out.at(i, j) = F.add(out.at(i, j), F.mul(aik, b.at(k, j)));
    }
  }
  return out;
}

std::vector<Coeff> mat_vec(const Matrix& a, std::span<const Coeff> v, const PrimeField& F) {
  std::vector<Coeff> out(a.dim, 0);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Coeff acc = 0;
    for (std::size_t j = 0; j < a.dim; ++j) acc = F.add(acc, F.mul(a.at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

std::optional<Matrix> mat_inverse(const Matrix& a, const PrimeField& F) {
  const std::size_t n = a.dim;
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Coeff scale = F.inv(work.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) = F.mul(work.at(col, j), scale);
      inv.at(col, j) = F.mul(inv.at(col, j), scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Coeff factor = work.at(r, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) = F.sub(work.at(r, j), F.mul(factor, work.at(col, j)));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Normal basis

std::vector<ExtElement> conjugates(const ExtElement& gamma, const ExtField& field) {
  field.check(gamma);
  std::vector<ExtElement> out{gamma};
  for (std::size_t k = 1; k < field.degree(); ++k) out.push_back(field.frobenius(out.back()));
  return out;
}

std::optional<NormalBasis> NormalBasis::try_from(const ExtField& field, const ExtElement& alpha) {
  const std::size_t n = field.degree();
  auto conj = conjugates(alpha, field);
  Matrix to_poly{n, std::vector<Coeff>(n * n, 0)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) to_poly.at(i, k) = conj[k].coords[i];
  }
  auto to_normal = mat_inverse(to_poly, field.base());
  if (!to_normal) return std::nullopt;
  return NormalBasis(alpha, std::move(to_poly), std::move(*to_normal), field.base());
}

ExtElement NormalBasis::to_poly_coords(std::span<const Coeff> normal) const {
  if (normal.size() != to_poly_.dim) throw ValidationError("normal coordinate vector has the wrong length");
  return {mat_vec(to_poly_, normal, base_)};
}

std::vector<Coeff> NormalBasis::to_normal_coords(const ExtElement& a) const {
  if (a.coords.size() != to_normal_.dim) throw ValidationError("extension element has the wrong length");
  return mat_vec(to_normal_, a.coords, base_);
}

NormalBasis find_normal_basis(const ExtField& field, Rng& rng) {
  const std::size_t cap = 64 * field.degree();
  for (std::size_t trial = 0; trial < cap; ++trial) {
    auto nb = NormalBasis::try_from(field, field.random(rng));
    if (nb) return std::move(*nb);
  }
  throw SearchFailed("no normal element found within the iteration cap");
}

ExtElement gamma_from_word(const Word& lambda, const NormalBasis& nb, const ExtField& field) {
  if (lambda.size() != field.degree()) throw ValidationError("word length must equal the extension degree");
  validate(lambda, Alphabet(std::max<std::uint32_t>(field.base().p(), 2)));
  return nb.to_poly_coords(lambda.symbols());
}

std::vector<Coeff> frobenius_normal(std::span<const Coeff> coords, std::size_t k) {
  const std::size_t n = coords.size();
  std::vector<Coeff> out(n);
  if (n == 0) return out;
  k %= n;
  for (std::size_t i = 0; i < n; ++i) out[(i + k) % n] = coords[i];
  return out;
}

Poly minimal_polynomial_from_conjugates(std::span<const ExtElement> roots, const ExtField& field) {
  // coeffs[i] is the coefficient of x^i of the running product.
  std::vector<ExtElement> coeffs{field.one()};
  for (const ExtElement& r : roots) {
    std::vector<ExtElement> next(coeffs.size() + 1, field.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], coeffs[i]);
      next[i] = field.sub(next[i], field.mul(r, coeffs[i]));
    }
    coeffs = std::move(next);
  }
  std::vector<Coeff> out;
  out.reserve(coeffs.size());
  for (const ExtElement& c : coeffs) {
    if (!field.in_base_field(c)) {
      throw ConsistencyError("minimal polynomial coefficient does not lie in F_p");
    }
    out.push_back(c.coords[0]);
  }
  return Poly(std::move(out));
}

Poly minimal_polynomial(const ExtElement& gamma, const ExtField& field) {
  auto roots = conjugates(gamma, field);
  auto sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DegreeCollapse("conjugates are not distinct; minimal polynomial has degree < n");
  }
  return minimal_polynomial_from_conjugates(roots, field);
}

}  // namespace irrenum
