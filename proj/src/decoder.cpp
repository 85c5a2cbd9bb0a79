#include "ssm/decoder.hpp"

#include <algorithm>
#include <thread>

#include "ssm/combinations.hpp"
#include "ssm/random.hpp"

namespace ssm {
namespace {

void check_outcome(const BinaryMatrix& m, const BooleanVector& r) {
  if (r.size() != m.tests())
    throw Error("outcome length " + std::to_string(r.size()) + " does not match t = " + std::to_string(m.tests()));
}

// Phase 1 shared by the SSM and DM decoders: the columns with no 1 in a
// negative test, i.e. the columns covered by r.
std::vector<bool> covered_columns(const BinaryMatrix& m, const BooleanVector& r, std::uint64_t& ops) {
  std::vector<bool> alive(m.items(), true);
  for (std::size_t i = 0; i < m.tests(); ++i) {
    if (r.test(i)) continue;
    for (std::size_t j = 0; j < m.items(); ++j) {
      ++ops;
      if (m.entry(i, j)) alive[j] = false;
    }
  }
  return alive;
}

DecodeResult finish(std::vector<std::size_t> positives, std::size_t d, std::uint64_t ops) {
  DecodeResult out;
  out.ops = ops;
  if (positives.size() > d) {
    out.outcome = DecodeResult::Outcome::too_many;
    return out;
  }
  out.positives = SupportSet::from_zero_based(positives);
  return out;
}

}  // namespace

DecodeResult decode_ssm(const BinaryMatrix& m, const BooleanVector& r, std::size_t d) {
  check_outcome(m, r);
  std::uint64_t ops = 0;
  const auto alive = covered_columns(m, r, ops);
  std::vector<std::size_t> survivors;
  for (std::size_t j = 0; j < m.items(); ++j)
    if (alive[j]) survivors.push_back(j);

  std::vector<bool> positive(m.items(), false);
  for (std::size_t i = 0; i < m.tests(); ++i) {
    if (!r.test(i)) continue;
    std::size_t ones = 0, owner = 0;
    for (std::size_t j : survivors) {
      ++ops;
      if (m.entry(i, j)) {
        ++ones;
        owner = j;
      }
    }
    if (ones == 1) positive[owner] = true;
  }
  std::vector<std::size_t> found;
  for (std::size_t j = 0; j < m.items(); ++j)
    if (positive[j]) found.push_back(j);
  return finish(std::move(found), d, ops);
}

DecodeResult decode_dm(const BinaryMatrix& m, const BooleanVector& r, std::size_t d) {
  check_outcome(m, r);
  std::uint64_t ops = 0;
  const auto alive = covered_columns(m, r, ops);
  std::vector<std::size_t> found;
  for (std::size_t j = 0; j < m.items(); ++j)
    if (alive[j]) found.push_back(j);
  return finish(std::move(found), d, ops);
}

DecodeResult decode_sm_table(const BinaryMatrix& m, const BooleanVector& r, std::size_t d) {
  check_outcome(m, r);
  const std::size_t n = m.items();
  const std::size_t hi = std::min(d, n);
  std::uint64_t candidates = 0;
  for (std::size_t k = 0; k <= hi; ++k) {
    candidates += binomial(n, k);
    if (candidates > kTableDecodeLimit) throw Error("table decode scale guard exceeded");
  }

  // The empty set explains the all-zero outcome, so it is a candidate too.
  std::uint64_t ops = 0;
  std::optional<std::vector<std::size_t>> match;
  std::vector<Word> acc(m.words_per_column());
  for_each_subset_up_to(n, 0, hi, [&](std::span<const std::size_t> s) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t j : s) bits::or_into(acc, m.column_words(j));
    ops += s.size() * m.tests();
    if (!bits::equal(acc, r.words())) return true;
    if (match) throw Error("not separable");
    match.emplace(s.begin(), s.end());
    return true;
  });
  if (!match) {
    DecodeResult out;
    out.outcome = DecodeResult::Outcome::too_many;
    out.ops = ops;
    return out;
  }
  return finish(std::move(*match), d, ops);
}

namespace {

struct TrialOutcome {
  bool success = false;
  std::uint64_t ops = 0;
  std::optional<CampaignFailure> failure;
};

inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

std::vector<std::size_t> sample_k_subset(Rng& rng, std::size_t n, std::size_t k) {
  // Floyd's algorithm.
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  for (std::size_t j = n - k; j < n; ++j) {
    const auto v = static_cast<std::size_t>(uniform_below(rng, j + 1));
    if (std::find(chosen.begin(), chosen.end(), v) == chosen.end())
      chosen.push_back(v);
    else
      chosen.push_back(j);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

CampaignReport run_campaign(const BinaryMatrix& m, const CampaignOptions& options) {
  const std::size_t n = m.items();
  if (options.d < 1) throw Error("campaign needs d >= 1");
  std::size_t lo = 1, hi = std::min(options.d, n);
  if (options.fixed_size) {
    if (*options.fixed_size < 1 || *options.fixed_size > n) throw Error("positive set size out of range");
    lo = hi = *options.fixed_size;
  }
  std::vector<std::uint64_t> per_size(hi + 1, 0);
  std::uint64_t candidates = 0;
  for (std::size_t k = lo; k <= hi; ++k) {
    per_size[k] = binomial(n, k);
    candidates = (UINT64_MAX - candidates < per_size[k]) ? UINT64_MAX : candidates + per_size[k];
  }

  CampaignReport report;
  report.exhaustive = options.exhaustive || candidates <= options.trials;
  std::vector<std::vector<std::size_t>> plan;
  if (report.exhaustive) {
    if (candidates > kExhaustiveLimit) throw Error("too many positive sets for an exhaustive campaign");
    plan.reserve(candidates);
    for_each_subset_up_to(n, lo, hi, [&](std::span<const std::size_t> s) {
      plan.emplace_back(s.begin(), s.end());
      return true;
    });
    report.trials = plan.size();
  } else {
    if (options.sampler == PositiveSampler::uniform_subset && candidates == UINT64_MAX)
      throw Error("too many positive sets for the uniform_subset sampler; use uniform_size");
    report.trials = options.trials;
  }

  auto positives_for = [&](std::uint64_t trial) {
    if (report.exhaustive) return plan[trial];
    Rng rng = stream_rng(options.seed, trial);
    std::size_t k = lo;
    if (options.sampler == PositiveSampler::uniform_size) {
      k = lo + static_cast<std::size_t>(uniform_below(rng, hi - lo + 1));
    } else {
      std::uint64_t x = uniform_below(rng, candidates);
      while (x >= per_size[k]) x -= per_size[k++];
    }
    return sample_k_subset(rng, n, k);
  };

  std::vector<TrialOutcome> outcomes(report.trials);
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      const auto planted = SupportSet::from_zero_based(positives_for(trial));
      const auto r = boolean_sum(m, planted);
      auto decoded = decode_ssm(m, r, options.d);
      TrialOutcome& out = outcomes[trial];
      out.ops = decoded.ops;
      out.success = decoded.identified() && decoded.positives == planted;
      if (!out.success) out.failure = CampaignFailure{planted, std::move(decoded)};
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::uint64_t>(report.trials, 1))));
  if (workers == 1) {
    run_range(0, report.trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (report.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(report.trials, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(report.trials, begin + chunk);
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  long double total_ops = 0;
  for (auto& out : outcomes) {
    total_ops += out.ops;
    if (out.success) {
      ++report.successes;
    } else if (report.failure_examples.size() < options.max_failure_examples) {
      report.failure_examples.push_back(std::move(*out.failure));
    }
  }
  report.mean_ops = report.trials ? static_cast<double>(total_ops / report.trials) : 0.0;
  return report;
}

}  // namespace ssm
