#include "vfree/normal_form.hpp"

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "vfree/graph_of_groups.hpp"

using namespace vfree;

namespace {

word random_word(const alphabet& a, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, a.size() - 1);
  word w(len(rng));
  for (auto& l : w) l = pick(rng);
  return w;
}

// Splices u into w at a random position.
word splice(const word& w, const word& u, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> at(0, w.size());
  word out = w;
  std::size_t p = at(rng);
  out.insert(out.begin() + p, u.begin(), u.end());
  return out;
}

}  // namespace

TEST_CASE("identity and inverse laws") {
  for (const char* name : {"dinf", "c2c3", "c4c2c4", "hnn_c2", "z"}) {
    CAPTURE(name);
    auto g = fixtures::group(name);
    const auto& l = *g.gens.top;
    group_elem id = l.identity();
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1000; ++i) {
      group_elem e = g.gens.evaluate(random_word(g.gens.x, rng, 10));
      CHECK(l.equal(l.mul(id, e), e));
      CHECK(l.equal(l.mul(e, id), e));
      CHECK(l.equal(l.mul(e, l.inverse(e)), id));
      CHECK(l.equal(l.mul(l.inverse(e), e), id));
      l.check(e);
    }
  }
}

TEST_CASE("associativity on random triples") {
  for (const char* name : {"c2c3", "c4c2c4", "hnn_c2"}) {
    CAPTURE(name);
    auto g = fixtures::group(name);
    const auto& l = *g.gens.top;
    std::mt19937_64 rng(22);
    for (int i = 0; i < 1000; ++i) {
      group_elem a = g.gens.evaluate(random_word(g.gens.x, rng, 8));
      group_elem b = g.gens.evaluate(random_word(g.gens.x, rng, 8));
      group_elem c = g.gens.evaluate(random_word(g.gens.x, rng, 8));
      CHECK(l.equal(l.mul(l.mul(a, b), c), l.mul(a, l.mul(b, c))));
    }
  }
}

TEST_CASE("amalgam syllable growth in C2 * C2") {
  auto g = fixtures::group("dinf");
  auto am = std::dynamic_pointer_cast<const amalgam_layer>(g.gens.top);
  REQUIRE(am);
  group_elem ab = g.gens.evaluate("a b");
  group_elem acc = g.gens.top->identity();
  for (int n = 1; n <= 10; ++n) {
    acc = g.gens.top->mul(acc, ab);
    CHECK(am->syllable_length(acc) == 2 * n);
  }
  // Involutions: (a b)^-1 = b a.
  CHECK(g.gens.top->equal(g.gens.top->inverse(ab), g.gens.evaluate("b a")));
}

TEST_CASE("HNN defining relation") {
  auto g = fixtures::group("hnn_c2");
  const auto& l = *g.gens.top;
  // t a t^-1 = phi(a) = a.
  CHECK(l.equal(g.gens.evaluate("t1 a T1"), g.gens.evaluate("a")));
  // (t a)(t^-1 a) = phi(a) a = 1.
  CHECK(l.is_identity(g.gens.evaluate("t1.g T1.g")));
  CHECK(l.is_identity(g.gens.evaluate("a a")));
  // t has infinite order: t^n never trivial for n = 1..12.
  group_elem t = g.gens.evaluate("t1");
  group_elem acc = l.identity();
  for (int n = 1; n <= 12; ++n) {
    acc = l.mul(acc, t);
    CHECK(!l.is_identity(acc));
  }
}

TEST_CASE("equality is structural and stable under relator splicing") {
  struct sample {
    const char* fixture;
    std::vector<const char*> relators;
  };
  for (const auto& s : std::vector<sample>{
           {"dinf", {"a a", "b b"}},
           {"c2c3", {"a a", "b b b", "b B"}},
           {"hnn_c2", {"a a", "t1 a T1 a", "t1.g T1.g"}},
       }) {
    CAPTURE(s.fixture);
    auto g = fixtures::group(s.fixture);
    const auto& l = *g.gens.top;
    for (const char* r : s.relators)
      REQUIRE(l.is_identity(g.gens.evaluate(r)));
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, s.relators.size() - 1);
    std::uniform_int_distribution<int> letter_pick(0, g.gens.x.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      word w = random_word(g.gens.x, rng, 10);
      word v = splice(w, parse_word(g.gens.x, s.relators[pick(rng)]), rng);
      // A free cancellation x x^-1 as well.
      letter x = letter_pick(rng);
      v = splice(v, {x, g.gens.x.inverse(x)}, rng);
      group_elem ew = g.gens.evaluate(w);
      group_elem ev = g.gens.evaluate(v);
      CHECK(l.equal(ew, ev));
      CHECK(l.hash(ew) == l.hash(ev));
      CHECK(l.compare(ew, ev) == std::strong_ordering::equal);
    }
  }
}

TEST_CASE("syllable length is an invariant of the element") {
  auto g = fixtures::group("hnn_c2");
  auto hn = std::dynamic_pointer_cast<const hnn_layer>(g.gens.top);
  REQUIRE(hn);
  std::mt19937_64 rng(24);
  for (int i = 0; i < 500; ++i) {
    word w = random_word(g.gens.x, rng, 10);
    word v = splice(w, parse_word(g.gens.x, "t1 a T1 a"), rng);
    CHECK(hn->syllable_length(g.gens.evaluate(w)) ==
          hn->syllable_length(g.gens.evaluate(v)));
  }
}

TEST_CASE("structural scan after random multiplies") {
  for (const char* name : {"c4c2c4", "hnn_c2"}) {
    CAPTURE(name);
    auto g = fixtures::group(name);
    const auto& l = *g.gens.top;
    std::mt19937_64 rng(25);
    group_elem acc = l.identity();
    for (int i = 0; i < 500; ++i) {
      acc = l.mul(acc, g.gens.evaluate(random_word(g.gens.x, rng, 6)));
      l.check(acc);  // alternation / Britton / canonical reps
    }
  }
}

TEST_CASE("canonical coset representatives") {
  base_layer c4(finite_group::cyclic(4));
  std::vector<group_elem> sub{c4.element(0), c4.element(2)};  // {1, g2}

  // h in sub -> (h, identity).
  auto [a0, c0] = canonical_coset_rep(c4, c4.element(2), sub);
  CHECK(c4.equal(a0, c4.element(2)));
  CHECK(c4.is_identity(c0));

  // h = g3: candidates {g3, g2^-1 g3 = g}; least name is g.
  auto [a1, c1] = canonical_coset_rep(c4, c4.element(3), sub);
  CHECK(c4.equal(a1, c4.element(2)));
  CHECK(c4.equal(c1, c4.element(1)));

  // Trivial subgroup: (1, h).
  auto [a2, c2] = canonical_coset_rep(c4, c4.element(3), {c4.element(0)});
  CHECK(c4.is_identity(a2));
  CHECK(c4.equal(c2, c4.element(3)));
}

TEST_CASE("debug serialization is stable") {
  auto g = fixtures::group("dinf");
  CHECK(g.gens.top->debug(g.gens.evaluate("a b a")) ==
        g.gens.top->debug(g.gens.evaluate("a b b b a")));
  auto g2 = fixtures::group("dinf");
  CHECK(g.gens.top->debug(g.gens.evaluate("a b")) ==
        g2.gens.top->debug(g2.gens.evaluate("a b")));
}
