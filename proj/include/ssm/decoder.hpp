#pragma once

// Identification of positive items from a noiseless test outcome, plus a
// seeded campaign simulator.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ssm/matrix.hpp"

namespace ssm {

struct DecodeResult {
  enum class Outcome { identified, too_many };

  Outcome outcome = Outcome::identified;
  SupportSet positives;     // meaningful when outcome == identified
  std::uint64_t ops = 0;    // matrix-entry probes

  bool identified() const { return outcome == Outcome::identified; }
};

/// Two-phase O(tn) decoder for d-SSM matrices.
///
/// Phase 1 drops every column with a 1 in a negative test, leaving the set S
/// of columns covered by `r`. Phase 2 scans positive tests: a test in which
/// exactly one column of S has a 1 marks that column positive. Returns
/// too_many when more than d columns are marked.
///
/// Exact recovery is guaranteed only when `m` is a d-SSM and `r` is the sum
/// of at most d columns. Other inputs still produce a result per the rules
/// above. Throws on length mismatch.
DecodeResult decode_ssm(const BinaryMatrix& m, const BooleanVector& r, std::size_t d);

/// Cover decoder for d-DM matrices: every column covered by `r` is positive.
/// An all-zero column is covered by every outcome and therefore always
/// reported positive.
DecodeResult decode_dm(const BinaryMatrix& m, const BooleanVector& r, std::size_t d);

/// Largest number of subsets decode_sm_table will enumerate.
inline constexpr std::uint64_t kTableDecodeLimit = 10'000'000;

/// Exhaustive lookup over every nonempty set of at most d columns. Throws
/// Error("not separable") when two sets explain `r`, and an error when the
/// number of candidate sets exceeds kTableDecodeLimit.
DecodeResult decode_sm_table(const BinaryMatrix& m, const BooleanVector& r, std::size_t d);

enum class PositiveSampler {
  uniform_subset,  // every nonempty set of size <= d equally likely
  uniform_size,    // size uniform in 1..d, then a uniform set of that size
};

struct CampaignOptions {
  std::size_t d = 2;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::optional<std::size_t> fixed_size;  // draw sets of exactly this size
  bool exhaustive = false;                // enumerate every candidate set
  PositiveSampler sampler = PositiveSampler::uniform_subset;
  unsigned workers = 1;
  std::size_t max_failure_examples = 10;
};

struct CampaignFailure {
  SupportSet planted;
  DecodeResult decoded;
};

struct CampaignReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  bool exhaustive = false;
  std::vector<CampaignFailure> failure_examples;
  double mean_ops = 0.0;
};

/// Plants positive sets, forms their outcome vectors and decodes them with
/// decode_ssm. Runs exhaustively when `exhaustive` is set or when the number
/// of candidate sets does not exceed `trials`. Trial k draws from its own
/// generator seeded from (seed, k), so reports do not depend on `workers`.
CampaignReport run_campaign(const BinaryMatrix& m, const CampaignOptions& options);

}  // namespace ssm
