#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssm/combinations.hpp"
#include "ssm/decoder.hpp"
#include "test_support.hpp"

using namespace ssm;
using namespace ssm::testing;

namespace {

BooleanVector outcome(const char* s) { return BooleanVector::from_string(s); }

bool same_report(const CampaignReport& a, const CampaignReport& b) {
  if (a.trials != b.trials || a.successes != b.successes || a.exhaustive != b.exhaustive || a.mean_ops != b.mean_ops ||
      a.failure_examples.size() != b.failure_examples.size())
    return false;
  for (std::size_t k = 0; k < a.failure_examples.size(); ++k)
    if (a.failure_examples[k].planted != b.failure_examples[k].planted) return false;
  return true;
}

}  // namespace

TEST_CASE("decode_ssm on the example matrix") {
  const auto m = example1();
  auto r = decode_ssm(m, outcome("1111000"), 2);
  CHECK(r.identified());
  CHECK(r.positives == SupportSet{1, 3});
  // 3 zero rows probe all 8 columns; 4 one-rows probe the survivors {1,2,3}.
  CHECK(r.ops == 3 * 8 + 4 * 3);

  r = decode_ssm(m, outcome("0000011"), 2);
  CHECK(r.positives == SupportSet{5});

  r = decode_ssm(m, outcome("0110010"), 2);
  CHECK(r.positives == SupportSet{2, 6});
}

TEST_CASE("decode_ssm edge cases") {
  CHECK_THROWS_AS(decode_ssm(example1(), outcome("111"), 2), Error);
  const auto r = decode_ssm(BinaryMatrix::identity(4), outcome("0000"), 2);
  CHECK(r.identified());
  CHECK(r.positives.empty());
  // Three positives on the identity: every one is isolated, so P overflows.
  CHECK_FALSE(decode_ssm(BinaryMatrix::identity(4), outcome("1110"), 2).identified());
}

TEST_CASE("decode_dm") {
  auto r = decode_dm(BinaryMatrix::identity(4), outcome("1010"), 2);
  CHECK(r.positives == SupportSet{1, 3});
  CHECK_FALSE(decode_dm(example1(), outcome("1111000"), 2).identified());
  r = decode_dm(example1(), outcome("0000000"), 2);
  CHECK(r.identified());
  CHECK(r.positives.empty());
  // An all-zero column is covered by every outcome.
  r = decode_dm(from_columns({"10", "00"}), outcome("00"), 2);
  CHECK(r.positives == SupportSet{2});
  CHECK_THROWS_AS(decode_dm(example1(), outcome("1"), 2), Error);
}

TEST_CASE("decode_sm_table") {
  const auto m = example1();
  CHECK(decode_sm_table(m, outcome("1111000"), 2).positives == SupportSet{1, 3});
  CHECK_FALSE(decode_sm_table(m, outcome("1111111"), 2).identified());
  CHECK_THROWS_WITH_AS(decode_sm_table(from_columns({"101", "101", "010"}), outcome("101"), 2), "not separable", Error);
  CHECK(decode_sm_table(m, outcome("0000000"), 2).positives.empty());
  CHECK_THROWS_AS(decode_sm_table(BinaryMatrix::identity(400), BooleanVector(400), 4), Error);
}

TEST_CASE("exact recovery on every small strongly separable matrix found") {
  Rng rng(17);
  int matrices = 0;
  for (int trial = 0; trial < 4000 && matrices < 150; ++trial) {
    const std::size_t t = 3 + uniform_below(rng, 5), n = 2 + uniform_below(rng, 9);
    const auto m = random_matrix(rng, t, n);
    for (std::size_t d = 2; d <= std::min<std::size_t>(3, n); ++d) {
      if (!is_ssm(m, d).holds) continue;
      ++matrices;
      for_each_subset_up_to(n, 1, d, [&](std::span<const std::size_t> s) {
        const auto planted = SupportSet::from_zero_based({s.begin(), s.end()});
        const auto r = boolean_sum(m, planted);
        const auto got = decode_ssm(m, r, d);
        CHECK(got.identified());
        CHECK(got.positives == planted);
        CHECK(got.ops <= t * n);
        // Every d-SSM is a d-bar-SM, so the table decoder must agree.
        CHECK(decode_sm_table(m, r, d).positives == got.positives);
        return true;
      });
    }
  }
  CHECK(matrices >= 100);
}

TEST_CASE("ops never exceed t*n") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t t = 1 + uniform_below(rng, 40), n = 1 + uniform_below(rng, 60);
    const auto m = random_matrix(rng, t, n);
    BooleanVector r(t);
    for (std::size_t i = 0; i < t; ++i) r.set(i, uniform_below(rng, 2));
    CHECK(decode_ssm(m, r, 2).ops <= t * n);
    CHECK(decode_dm(m, r, 2).ops <= t * n);
  }
}

TEST_CASE("campaign on the example matrix is exhaustive") {
  CampaignOptions o;
  o.d = 2;
  o.trials = 1000;
  const auto rep = run_campaign(example1(), o);
  CHECK(rep.exhaustive);
  CHECK(rep.trials == 36);
  CHECK(rep.successes == 36);
  CHECK(rep.failure_examples.empty());
}

TEST_CASE("campaign on a matrix that is not strongly separable") {
  CampaignOptions o;
  o.d = 2;
  o.exhaustive = true;
  o.fixed_size = 2;
  const auto rep = run_campaign(from_columns({"110", "011", "101"}), o);
  CHECK(rep.trials == 3);
  CHECK(rep.successes < rep.trials);
  CHECK_FALSE(rep.failure_examples.empty());
}

TEST_CASE("empty campaign") {
  CampaignOptions o;
  o.trials = 0;
  const auto rep = run_campaign(example1(), o);
  CHECK(rep.trials == 0);
  CHECK(rep.successes == 0);
  CHECK(rep.mean_ops == 0.0);
}

TEST_CASE("sampled campaigns are deterministic and independent of workers") {
  const auto m = BinaryMatrix::identity(60);
  for (auto sampler : {PositiveSampler::uniform_subset, PositiveSampler::uniform_size}) {
    CampaignOptions o;
    o.d = 3;
    o.trials = 500;
    o.seed = 42;
    o.sampler = sampler;
    const auto a = run_campaign(m, o);
    o.workers = 4;
    const auto b = run_campaign(m, o);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.trials == 500);
    CHECK(a.successes == 500);
    CHECK(same_report(a, b));
    o.seed = 43;
    CHECK(run_campaign(m, o).mean_ops != a.mean_ops);
  }
}

TEST_CASE("uniform_size sampler covers every size") {
  // On an identity each positive costs one probe per positive row, so
  // mean ops reveals the size mix: (t - k) * n + k * k probes for size k.
  const std::size_t n = 30;
  CampaignOptions o;
  o.d = 3;
  o.trials = 3000;
  o.seed = 1;
  o.sampler = PositiveSampler::uniform_size;
  const auto rep = run_campaign(BinaryMatrix::identity(n), o);
  double expected = 0;
  for (std::size_t k = 1; k <= 3; ++k) expected += static_cast<double>((n - k) * n + k * k) / 3.0;
  CHECK(rep.mean_ops == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("campaign argument errors") {
  CampaignOptions o;
  o.fixed_size = 9;
  CHECK_THROWS_AS(run_campaign(example1(), o), Error);
  o.fixed_size = 0;
  CHECK_THROWS_AS(run_campaign(example1(), o), Error);
}
