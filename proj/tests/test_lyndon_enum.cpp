#include <random>
#include <set>

#include "doctest.h"
#include "irrenum/errors.hpp"
#include "irrenum/lyndon_enum.hpp"
#include "oracles.hpp"

using namespace irrenum;

namespace {

Word w(std::string_view text) { return parse_word(text, Alphabet(10)); }

Word from(const oracle::Symbols& s) { return Word(s); }

// 0 1^k 0 1^{k+1}
Word pathological(std::size_t k) {
  Word out{0};
  for (std::size_t i = 0; i < k; ++i) out.push_back(1);
  out.push_back(0);
  for (std::size_t i = 0; i <= k; ++i) out.push_back(1);
  return out;
}

}  // namespace

TEST_CASE("duval_extend") {
  CHECK(duval_extend(w("0222"), 7) == w("0222022"));
  CHECK(duval_extend(w("0222"), 4) == w("0222"));
  CHECK(duval_extend(w("01"), 6) == w("010101"));
  CHECK_THROWS_AS(duval_extend(w("0101"), 3), ContractViolation);
  CHECK_THROWS_AS(duval_extend(Word{}, 3), ContractViolation);
}

TEST_CASE("increment_last") {
  CHECK(increment_last(w("0222022"), 3) == w("02221"));
  CHECK(increment_last(w("000010"), 2) == w("000011"));
  CHECK_FALSE(increment_last(w("111111"), 2).has_value());
}

TEST_CASE("duval_next") {
  CHECK(duval_next(w("0222"), 7, 3) == w("02221"));
  CHECK(duval_next(w("02221"), 7, 3) == w("022211"));
  CHECK(duval_next(w("000001"), 6, 2) == w("00001"));
  CHECK_FALSE(duval_next(w("1"), 6, 2).has_value());
}

TEST_CASE("successor growth below length n") {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      for (const auto& s : oracle::lyndon_words(m, 2)) {
        auto next = duval_next(from(s), n, 2);
        if (!next) continue;
        REQUIRE(next->size() > s.size());
      }
    }
  }
}

TEST_CASE("compressed length under increment") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::uint32_t> qdist(2, 4);
  std::uniform_int_distribution<std::size_t> len(1, 20);
  int ends_max = 0, ends_other = 0;
  for (int t = 0; t < 20000; ++t) {
    const std::uint32_t q = qdist(rng);
    std::uniform_int_distribution<std::uint32_t> sym(0, q - 1);
    std::vector<Symbol> s(len(rng));
    for (auto& x : s) x = sym(rng);
    Word v(s);
    auto pv = increment_last(v, q);
    if (!pv) continue;
    const auto before = compressed_length(compress(v, q));
    const auto after = compressed_length(compress(*pv, q));
    if (v.back() != q - 1) {
      ++ends_other;
      REQUIRE(after + 1 >= before);
      REQUIRE(after <= before);
    } else {
      // The trailing run goes first, then the increment.
      ++ends_max;
      REQUIRE(after + 2 >= before);
      REQUIRE(after + 1 <= before);
    }
  }
  CHECK(ends_max > 1000);
  CHECK(ends_other > 1000);
}

TEST_CASE("LyndonEnumerator steps") {
  SUBCASE("from 000001") {
    auto e = LyndonEnumerator::from_word(w("000001"), 2);
    REQUIRE(e.advance());
    CHECK(e.word() == w("000011"));
    auto plain = duval_plain_next_instrumented(w("000001"), 6, 2);
    CHECK(plain.next == w("000011"));
  }
  SUBCASE("from 001011") {
    auto e = LyndonEnumerator::from_word(w("001011"), 2);
    auto next = next_lyndon_of_length_n(e);
    REQUIRE(next.has_value());
    CHECK(decompress(*next) == w("001101"));
  }
  SUBCASE("from 011111") {
    auto e = LyndonEnumerator::from_word(w("011111"), 2);
    CHECK_FALSE(e.advance());
    CHECK(e.exhausted());
    CHECK_FALSE(next_lyndon_of_length_n(e).has_value());
  }
  SUBCASE("non-Lyndon start is rejected") {
    CHECK_THROWS_AS(LyndonEnumerator::from_word(w("010101"), 2), ContractViolation);
    CHECK_THROWS_AS(LyndonEnumerator::from_word(w("0102"), 2), ValidationError);
  }
  SUBCASE("counters") {
    LyndonEnumerator e(6, 2);
    CHECK(e.word() == w("000001"));
    std::uint64_t sum = 0;
    while (e.advance()) sum += e.last_step_updates();
    CHECK(e.step_counter() == 9);
    CHECK(e.update_counter() >= sum);
  }
}

TEST_CASE("enumerate_all") {
  auto words_of = [](std::size_t n, std::uint32_t q) { return enumerate_all(n, q).words; };
  CHECK(words_of(6, 2) == std::vector<Word>{w("000001"), w("000011"), w("000101"), w("000111"), w("001011"),
                                            w("001101"), w("001111"), w("010111"), w("011111")});
  CHECK(words_of(1, 2) == std::vector<Word>{w("0"), w("1")});
  CHECK(words_of(1, 3) == std::vector<Word>{w("0"), w("1"), w("2")});
  CHECK(words_of(4, 2) == std::vector<Word>{w("0001"), w("0011"), w("0111")});

  SUBCASE("matches the rotation-sort oracle") {
    for (std::uint32_t q : {2u, 3u}) {
      for (std::size_t n = 1; n <= (q == 2 ? 14u : 8u); ++n) {
        auto result = enumerate_all(n, q);
        auto expected = oracle::lyndon_words(n, q);
        REQUIRE(result.words.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) REQUIRE(result.words[i] == from(expected[i]));
        REQUIRE(BigInt(result.words.size()) == count_lyndon(n, q));
        REQUIRE(result.tally.words() == result.words.size());
        std::uint64_t sum = 0;
        for (auto u : result.tally.per_step) sum += u;
        REQUIRE(result.tally.total == sum);
        REQUIRE(result.tally.per_step.front() == 0);
      }
    }
  }
}

TEST_CASE("linear delay") {
  constexpr double kDelay = 2.0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (std::size_t n = 2; n <= (q == 2 ? 16u : q == 3 ? 10u : 6u); ++n) {
      auto tally = enumerate_all(n, q).tally;
      REQUIRE(static_cast<double>(tally.max_step()) <= kDelay * static_cast<double>(n));
    }
  }
  for (std::size_t k : {1u, 2u, 5u, 8u, 16u, 32u, 64u}) {
    const Word start = pathological(k);
    auto e = LyndonEnumerator::from_word(start, 2);
    REQUIRE(e.advance());
    REQUIRE(static_cast<double>(e.last_step_updates()) <= kDelay * static_cast<double>(start.size()));
  }
}

TEST_CASE("pathological family") {
  // Plain Duval rewrites every intermediate word of the chain.
  for (std::size_t k : {8u, 10u, 16u, 32u, 64u}) {
    const Word start = pathological(k);
    const std::size_t n = start.size();
    auto plain = duval_plain_next_instrumented(start, n, 2);
    auto e = LyndonEnumerator::from_word(start, 2);
    REQUIRE(e.advance());
    REQUIRE(plain.next == e.word());
    CHECK(plain.updates >= (k + 2) * (k + 3) / 2);
    CHECK(e.last_step_updates() <= 2 * n);
  }
  auto plain10 = duval_plain_next_instrumented(pathological(10), 23, 2);
  CHECK(plain10.updates >= 78);
}

TEST_CASE("plain and compressed successors agree") {
  for (std::size_t n : {7u, 10u}) {
    for (std::uint32_t q : {2u, 3u}) {
      if (q == 3 && n > 7) continue;
      for (const auto& s : oracle::lyndon_words(n, q)) {
        auto plain = duval_plain_next_instrumented(from(s), n, q);
        auto e = LyndonEnumerator::from_word(from(s), q);
        const bool more = e.advance();
        REQUIRE(more == plain.next.has_value());
        if (more) REQUIRE(e.word() == *plain.next);
      }
    }
  }
}

TEST_CASE("amortized updates") {
  auto bound = [](double q) { return 1.0 + 3.0 * q / ((q - 1.0) * (q - 1.0)); };
  CHECK(enumerate_all(16, 2).tally.amortized() <= bound(2) + 0.5);
  CHECK(enumerate_all(10, 3).tally.amortized() <= bound(3) + 0.5);
  CHECK(enumerate_all(6, 5).tally.amortized() <= bound(5) + 0.5);
}

TEST_CASE("count_lyndon") {
  CHECK(count_lyndon(6, 2) == 9);
  CHECK(count_lyndon(1, 7) == 7);
  CHECK(count_lyndon(12, 2) == 335);
  CHECK(count_lyndon(4, 3) == 18);
  CHECK(count_lyndon(100, 2) > BigInt(1) << 90);
  CHECK(count_lyndon(64, 2) * 64 == (BigInt(1) << 64) - (BigInt(1) << 32));

  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (std::size_t n = 11; n <= 40; ++n) {
      // q^n/n (1 - q/((q-1) q^{n/2})) <= l_n <= q^n/n. With A = n l_n and
      // Q = q^n the lower bound is (Q - A)(q-1) q^{n/2} <= q Q; both sides are
      // nonnegative, so square to stay in integers.
      const BigInt Q = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
      const BigInt A = count_lyndon(n, q) * n;
      REQUIRE(A <= Q);
      const BigInt gap = Q - A;
      REQUIRE(gap * gap * (q - 1) * (q - 1) * Q <= Q * Q * q * q);
    }
  }
}
