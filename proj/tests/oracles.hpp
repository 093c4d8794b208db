#pragma once

// Brute-force oracles for the tests. Nothing here calls into the library's
// algorithms; words and polynomials are plain vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Symbols = std::vector<std::uint32_t>;
using Coeffs = std::vector<std::uint32_t>;

inline Symbols rotate_left(const Symbols& w, std::size_t shift) {
  Symbols out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + shift) % w.size()];
  return out;
}

/// w is Lyndon iff it is the strict unique minimum of its sorted rotations.
inline bool is_lyndon(const Symbols& w) {
  std::vector<Symbols> rots;
  for (std::size_t s = 0; s < w.size(); ++s) rots.push_back(rotate_left(w, s));
  std::sort(rots.begin(), rots.end());
  return rots.front() == w && (rots.size() == 1 || rots[1] != w);
}

inline bool is_aperiodic(const Symbols& w) {
  std::set<Symbols> rots;
  for (std::size_t s = 0; s < w.size(); ++s) rots.insert(rotate_left(w, s));
  return rots.size() == w.size();
}

/// Calls f on every word of length n over {0..q-1} in lexicographic order.
inline void for_each_word(std::size_t n, std::uint32_t q, const std::function<void(const Symbols&)>& f) {
  Symbols w(n, 0);
  while (true) {
    f(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

inline std::vector<Symbols> lyndon_words(std::size_t n, std::uint32_t q) {
  std::vector<Symbols> out;
  for_each_word(n, q, [&](const Symbols& w) {
    if (is_lyndon(w)) out.push_back(w);
  });
  return out;
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

inline std::vector<Coeffs> monic_polys(std::size_t degree, std::uint32_t p) {
  std::vector<Coeffs> out;
  for_each_word(degree, p, [&](const Symbols& low) {
    Coeffs c(low.begin(), low.end());
    c.push_back(1);
    out.push_back(c);
  });
  return out;
}

/// Monic irreducibles of degree n over F_p as the complement of all products
/// of two monic factors of lower degree.
inline std::set<Coeffs> monic_irreducibles(std::size_t n, std::uint32_t p) {
  std::set<Coeffs> reducible;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    for (const auto& a : monic_polys(d, p)) {
      for (const auto& b : monic_polys(n - d, p)) reducible.insert(poly_mul(a, b, p));
    }
  }
  std::set<Coeffs> out;
  for (const auto& f : monic_polys(n, p)) {
    if (!reducible.count(f)) out.insert(f);
  }
  return out;
}

}  // namespace oracle
