#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ssm/combinations.hpp"
#include "ssm/io.hpp"
#include "ssm/ssc.hpp"
#include "test_support.hpp"

using namespace ssm;
using namespace ssm::testing;

namespace {

QaryCode code(std::size_t q, std::vector<std::vector<Symbol>> words) {
  const std::size_t t = words.front().size();
  return QaryCode(t, q, std::move(words));
}

// Random duplicate-free code, or nullopt when the draw repeats a word.
std::optional<QaryCode> random_reduced_code(Rng& rng, std::size_t t, std::size_t n, std::size_t q) {
  std::vector<std::vector<Symbol>> words(n, std::vector<Symbol>(t));
  for (auto& w : words)
    for (auto& v : w) v = static_cast<Symbol>(uniform_below(rng, q));
  QaryCode c(t, q, words);
  if (c.has_duplicates()) return std::nullopt;
  return c;
}

// Symbol sets of a word subset given as a bitmask.
std::vector<std::set<Symbol>> symbol_sets(const QaryCode& c, unsigned mask) {
  std::vector<std::set<Symbol>> sets(c.length());
  for (std::size_t j = 0; j < c.size(); ++j)
    if ((mask >> j) & 1U)
      for (std::size_t i = 0; i < c.length(); ++i) sets[i].insert(c.symbol(j, i));
  return sets;
}

SupportSet from_mask(unsigned mask) {
  std::vector<std::size_t> items;
  for (std::size_t j = 0; j < 32; ++j)
    if ((mask >> j) & 1U) items.push_back(j + 1);
  return SupportSet(items);
}

// Every frame of `base`, then the frames with no proper subset that is a frame.
std::vector<SupportSet> oracle_minimal_frames(const QaryCode& c, unsigned base) {
  const auto target = symbol_sets(c, base);
  std::vector<unsigned> frames;
  for (unsigned f = 1; f < (1U << c.size()); ++f)
    if (symbol_sets(c, f) == target) frames.push_back(f);
  std::vector<SupportSet> minimal;
  for (unsigned f : frames) {
    const bool has_sub = std::any_of(frames.begin(), frames.end(), [&](unsigned g) { return g != f && (g & ~f) == 0; });
    if (!has_sub) minimal.push_back(from_mask(f));
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

// Definition of a d-bar-SSC: frames of each C0 with |C0| <= d intersect in C0.
bool oracle_ssc(const QaryCode& c, std::size_t d) {
  const unsigned all = (1U << c.size()) - 1;
  for (unsigned base = 1; base <= all; ++base) {
    if (static_cast<std::size_t>(__builtin_popcount(base)) > d) continue;
    const auto target = symbol_sets(c, base);
    unsigned inter = all;
    for (unsigned f = 1; f <= all; ++f)
      if (symbol_sets(c, f) == target) inter &= f;
    if (inter != base) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("descendant codes") {
  auto desc = descendant(code(2, {{0, 1}, {1, 1}}), {1, 2});
  CHECK(desc.sets == std::vector<std::uint64_t>{0b11, 0b10});
  CHECK(desc.cardinality() == 2);

  const auto c = code(3, {{2, 0, 1}, {1, 1, 1}});
  desc = descendant(c, {1});
  CHECK(desc.sets == std::vector<std::uint64_t>{0b100, 0b001, 0b010});
  CHECK(desc.cardinality() == 1);
  const std::vector<Symbol> w = {2, 0, 1};
  CHECK(desc.contains(w));

  desc = descendant(code(2, {{0, 0}, {1, 1}}), {1, 2});
  CHECK(desc.cardinality() == 4);
  const std::vector<Symbol> mixed = {0, 1};
  CHECK(desc.contains(mixed));

  CHECK_THROWS_WITH_AS(descendant(c, SupportSet{}), "empty support", Error);
  CHECK_THROWS_WITH_AS(descendant(c, {3}), "bad index", Error);
}

TEST_CASE("descendant cardinality saturates") {
  std::vector<Symbol> zeros(70, 0), ones(70, 1);
  const QaryCode c(70, 2, {zeros, ones});
  CHECK(descendant(c, {1, 2}).cardinality() == UINT64_MAX);
}

TEST_CASE("code validation") {
  CHECK_THROWS_AS(QaryCode(2, 1, {{0, 0}}), Error);
  CHECK_THROWS_AS(QaryCode(2, 65, {{0, 0}}), Error);
  CHECK_THROWS_AS(QaryCode(2, 2, {{0, 2}}), Error);
  CHECK_THROWS_AS(QaryCode(2, 2, {{0}}), Error);
  CHECK_THROWS_AS(QaryCode(2, 2, {}), Error);
  CHECK(code(2, {{0, 1}, {0, 1}}).has_duplicates());
}

TEST_CASE("is_ssc examples") {
  CHECK(is_ssc(code(3, {{0}, {1}, {2}}), 2).holds);
  CHECK(is_ssc(code(2, {{0, 1}, {1, 0}, {1, 1}}), 2).holds);
  CHECK_THROWS_WITH_AS(is_ssc(code(2, {{0, 1}, {0, 1}}), 2), "code not reduced", Error);
  CHECK_THROWS_AS(is_ssc(code(2, {{0, 1}, {1, 1}}), 3), Error);
  CHECK(is_ssc(code(2, {{0, 1}, {1, 1}}), 2).property == Property::strongly_separable_code);

  // (0,0) and (1,1) have descendant {0,1}^2, which also contains (0,1) and (1,0).
  const auto square = code(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
  const auto rep = is_ssc(square, 2);
  REQUIRE_FALSE(rep.holds);
  const auto& w = *rep.witness;
  CHECK(w.subset.contains(*w.item));
  CHECK_FALSE(w.other->contains(*w.item));
  CHECK(is_frame(square, w.subset, *w.other));
}

TEST_CASE("fast and brute-force code checks match the definition") {
  Rng rng(8);
  int checked = 0;
  for (int trial = 0; trial < 2500; ++trial) {
    const std::size_t t = 1 + uniform_below(rng, 3), n = 1 + uniform_below(rng, 8), q = 2 + uniform_below(rng, 2);
    const auto c = random_reduced_code(rng, t, n, q);
    if (!c) continue;
    ++checked;
    for (std::size_t d = 1; d <= std::min<std::size_t>(n, 3); ++d) {
      const bool expected = oracle_ssc(*c, d);
      const auto fast = is_ssc(*c, d);
      const auto brute = is_ssc_bruteforce(*c, d);
      CHECK(fast.holds == expected);
      CHECK(brute.holds == expected);
      for (const auto* rep : {&fast, &brute}) {
        if (rep->holds) continue;
        const auto& w = *rep->witness;
        CHECK(w.subset.size() <= d);
        CHECK(w.subset.contains(*w.item));
        CHECK_FALSE(w.other->contains(*w.item));
        CHECK(is_frame(*c, w.subset, *w.other));
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("binary frame test agrees with descendant equality") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t t = 1 + uniform_below(rng, 4), n = 2 + uniform_below(rng, 6);
    const auto c = random_reduced_code(rng, t, n, 2);
    if (!c) continue;
    const unsigned all = (1U << n) - 1;
    const auto base = from_mask(1 + static_cast<unsigned>(uniform_below(rng, all)));
    for (unsigned f = 1; f <= all; ++f) CHECK(is_frame(*c, base, from_mask(f)) == is_frame_binary(*c, base, from_mask(f)));
  }
  CHECK_THROWS_AS(is_frame_binary(code(3, {{0}, {2}}), {1}, {2}), Error);
}

TEST_CASE("minimal frames on the example matrix") {
  const auto c = columns_as_code(example1());
  CHECK(is_frame(c, {1, 3}, {1, 2, 3}));
  const auto fs = minimal_frames(c, {1, 3});
  CHECK(fs.minimal_only);
  CHECK(fs.base == SupportSet{1, 3});
  REQUIRE(fs.frames.size() == 1);
  CHECK(fs.frames[0] == SupportSet{1, 3});
}

TEST_CASE("minimal frame of a singleton is itself") {
  const auto c = code(3, {{0, 1}, {2, 2}, {1, 0}});
  for (std::size_t j = 1; j <= 3; ++j) {
    const auto fs = minimal_frames(c, {j});
    REQUIRE(fs.frames.size() == 1);
    CHECK(fs.frames[0] == SupportSet{j});
  }
}

TEST_CASE("minimal frames match the brute-force enumeration") {
  Rng rng(31);
  std::size_t nontrivial = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t t = 1 + uniform_below(rng, 3), n = 2 + uniform_below(rng, 8), q = 2 + uniform_below(rng, 2);
    const auto c = random_reduced_code(rng, t, n, q);
    if (!c) continue;
    const unsigned all = (1U << n) - 1;
    const unsigned base = 1 + static_cast<unsigned>(uniform_below(rng, all));
    const auto fs = minimal_frames(*c, from_mask(base));
    CHECK(fs.frames == oracle_minimal_frames(*c, base));
    if (fs.frames.size() > 1) ++nontrivial;
    const std::size_t d = from_mask(base).size();
    for (const auto& f : fs.frames) {
      CHECK(is_frame(*c, from_mask(base), f));
      CHECK(f.size() <= t * d - t + 1);
      for (std::size_t drop : f) {
        std::vector<std::size_t> rest;
        for (std::size_t j : f)
          if (j != drop) rest.push_back(j);
        if (!rest.empty()) CHECK_FALSE(is_frame(*c, from_mask(base), SupportSet(rest)));
      }
    }
  }
  CHECK(nontrivial > 10);
}

TEST_CASE("minimal frame node limit") {
  std::vector<std::vector<Symbol>> words;
  for (Symbol a = 0; a < 4; ++a)
    for (Symbol b = 0; b < 4; ++b)
      for (Symbol c = 0; c < 4; ++c) words.push_back({a, b, c});
  const QaryCode full(3, 4, words);
  CHECK_THROWS_AS(minimal_frames(full, {1, 64}, 10), Error);
}

TEST_CASE("columns_as_code") {
  const auto c = columns_as_code(example1());
  CHECK(c.length() == 7);
  CHECK(c.size() == 8);
  CHECK(c.alphabet() == 2);
  CHECK(is_ssc(c, 2).holds);
  CHECK(is_ssc(columns_as_code(BinaryMatrix::identity(5)), 2).holds);
  CHECK_THROWS_AS(columns_as_code(from_columns({"10", "10"})), Error);
}

TEST_CASE("concatenate") {
  CHECK(concatenate(code(3, {{0}, {1}, {2}})) == BinaryMatrix::identity(3));
  const auto m = concatenate(code(2, {{0, 1}, {1, 0}, {1, 1}}));
  CHECK(m == from_columns({"1001", "0110", "0101"}));
  CHECK(is_ssm(m, 2).holds);
}

TEST_CASE("concatenation has one 1 per block") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t t = 1 + uniform_below(rng, 6), n = 1 + uniform_below(rng, 10), q = 2 + uniform_below(rng, 7);
    std::vector<std::vector<Symbol>> words(n, std::vector<Symbol>(t));
    for (auto& w : words)
      for (auto& v : w) v = static_cast<Symbol>(uniform_below(rng, q));
    const QaryCode c(t, q, words);
    const auto m = concatenate(c);
    REQUIRE(m.tests() == t * q);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < t; ++i) {
        std::size_t ones = 0;
        for (std::size_t v = 0; v < q; ++v) ones += m.entry(i * q + v, j);
        CHECK(ones == 1);
        CHECK(m.entry(i * q + c.symbol(j, i), j));
      }
  }
}

TEST_CASE("bridges between matrices and codes") {
  Rng rng(77);
  int ssm_found = 0, ssc_found = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t t = 3 + uniform_below(rng, 4), n = 2 + uniform_below(rng, 6);
    const auto m = random_matrix(rng, t, n);
    if (is_ssm(m, 2).holds) {
      ++ssm_found;
      CHECK(is_ssc(columns_as_code(m), 2).holds);
    }
    const std::size_t ct = 1 + uniform_below(rng, 4), cn = 2 + uniform_below(rng, 7), q = 2 + uniform_below(rng, 3);
    const auto c = random_reduced_code(rng, ct, cn, q);
    if (c && is_ssc(*c, 2).holds) {
      ++ssc_found;
      CHECK(is_ssm(concatenate(*c), 2).holds);
    }
  }
  CHECK(ssm_found > 100);
  CHECK(ssc_found > 100);
}

TEST_CASE("code text and JSON formats") {
  const auto c = code(3, {{0, 2}, {1, 1}});
  CHECK(write_code(c) == "2 2 3\n0 2\n1 1\n");
  CHECK(read_code(write_code(c)) == c);
  CHECK(code_from_json(nlohmann::json::parse(code_to_json(c).dump())) == c);
  CHECK_THROWS_AS(read_code("2 2 3\n0 3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(read_code("2 2 3\n0  2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(read_code("2 2 1\n0 0\n0 0\n"), ParseError);
  CHECK_THROWS_AS(read_code("2 2 3\n0 2\n"), ParseError);
}
