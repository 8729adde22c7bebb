#include "vfree/words.hpp"

#include <random>

#include "doctest.h"

using namespace vfree;

namespace {

alphabet two_pairs() {
  alphabet a;
  a.add_pair("x", "X");
  a.add_pair("y", "Y");
  return a;
}

word random_word(const alphabet& a, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, a.size() - 1);
  word w(len(rng));
  for (auto& l : w) l = pick(rng);
  return w;
}

}  // namespace

TEST_CASE("formal inverse") {
  alphabet inv;
  inv.add_involution("a");
  CHECK(formal_inverse(inv, {}).empty());
  CHECK(formal_inverse(inv, parse_word(inv, "a")) == parse_word(inv, "a"));

  alphabet a = two_pairs();
  CHECK(formal_inverse(a, parse_word(a, "x y")) == parse_word(a, "Y X"));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    word w = random_word(a, rng, 12);
    word ww = formal_inverse(a, w);
    CHECK(ww.size() == w.size());
    CHECK(formal_inverse(a, ww) == w);
  }
}

TEST_CASE("subwords enumeration") {
  alphabet a = two_pairs();
  word abab = parse_word(a, "x y x y");
  auto s = subwords(abab, 2);
  REQUIRE(s.size() == 7);
  CHECK(s[0] == parse_word(a, "x"));
  CHECK(s[4] == parse_word(a, "x y"));
  CHECK(s[5] == parse_word(a, "y x"));

  CHECK(subwords(parse_word(a, "x"), 3).size() == 1);
  CHECK(subwords({}, 2).empty());

  // Count formula: sum over j = 1..min(k, n) of (n - j + 1).
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    word w = random_word(a, rng, 10);
    int n = static_cast<int>(w.size());
    for (int k = 0; k <= 12; ++k) {
      std::size_t expect = 0;
      for (int j = 1; j <= std::min(k, n); ++j) expect += n - j + 1;
      CHECK(subwords(w, k).size() == expect);
    }
  }
}

TEST_CASE("shortlex order") {
  alphabet a;
  a.add_involution("a");
  a.add_involution("b");
  CHECK(shortlex_compare(parse_word(a, "b"), parse_word(a, "a a")) ==
        std::strong_ordering::less);
  CHECK(shortlex_compare(parse_word(a, "a b"), parse_word(a, "b a")) ==
        std::strong_ordering::less);
  CHECK(shortlex_compare(parse_word(a, "a"), parse_word(a, "a")) ==
        std::strong_ordering::equal);

  // Total order: antisymmetric, transitive, total.
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    word u = random_word(a, rng, 6);
    word v = random_word(a, rng, 6);
    word w = random_word(a, rng, 6);
    auto uv = shortlex_compare(u, v);
    auto vu = shortlex_compare(v, u);
    CHECK(uv == (vu == std::strong_ordering::less ? std::strong_ordering::greater
                 : vu == std::strong_ordering::greater
                     ? std::strong_ordering::less
                     : std::strong_ordering::equal));
    if (uv == std::strong_ordering::equal) CHECK(u == v);
    if (uv != std::strong_ordering::greater &&
        shortlex_compare(v, w) != std::strong_ordering::greater)
      CHECK(shortlex_compare(u, w) != std::strong_ordering::greater);
  }
}

TEST_CASE("word syntax round trip") {
  alphabet a = two_pairs();
  CHECK(parse_word(a, "").empty());
  CHECK(format_word(a, parse_word(a, "  x   Y x ")) == "x Y x");
  CHECK_THROWS_AS(parse_word(a, "x z"), spec_error);
}
