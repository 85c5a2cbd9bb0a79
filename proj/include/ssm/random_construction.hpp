#pragma once

// Random coding with expurgation: draw a random q-ary code, delete words
// until it is a 2-bar-SSC, and expand it one-hot into a 2-SSM with tq rows.
// Also evaluates the analytic lower bound on the 2-SSM rate that this
// construction achieves, and tabulates the known rate bounds.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssm/matrix.hpp"
#include "ssm/ssc.hpp"

namespace ssm {

/// Each symbol drawn independently and uniformly from {0..q-1}; duplicates
/// are possible. Deterministic in (t, n, q, seed).
QaryCode random_code(std::size_t t, std::size_t n, std::size_t q, std::uint64_t seed);

struct Removal {
  enum class Reason { duplicate, ssc_violation };

  std::size_t word = 0;  // 1-based index in the input code
  Reason reason = Reason::duplicate;
  // For ssc_violation: the subset C0 and a frame of C0 that omits `word`,
  // both in 1-based input indices. For duplicate: `subset` is {kept copy, word}.
  SupportSet subset;
  std::optional<SupportSet> frame;
};

struct ExpurgationLog {
  std::size_t t = 0;
  std::size_t q = 0;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  std::size_t initial_n = 0;
  std::size_t final_n = 0;
  std::vector<Removal> removed;
  std::vector<std::size_t> kept;  // 1-based input indices of surviving words
};

struct Expurgated {
  QaryCode code;
  ExpurgationLog log;
};

/// Removes duplicate words (keeping the first copy), then repeatedly takes
/// the first d-bar-SSC violation in (size, lexicographic) order and removes
/// the member of C0 that the violating frame omits. The result always passes
/// is_ssc(., d). A subset that passes keeps passing after removals, so the
/// scan resumes where it stopped instead of restarting.
Expurgated expurgate_to_ssc(const QaryCode& code, std::size_t d = 2);

struct Construction {
  BinaryMatrix matrix;
  QaryCode code;
  ExpurgationLog log;
  double rate = 0.0;  // log2(final_n) / (t q)
};

/// concatenate(expurgate_to_ssc(random_code(t, n, q, seed))).
Construction build_2ssm(std::size_t t, std::size_t n, std::size_t q, std::uint64_t seed);

/// (2^m - 1) q - (2^m - 2), exact. Requires m <= 60.
std::uint64_t penalty_kernel(std::size_t q, std::size_t m);

/// log2((2^m - 1) q - (2^m - 2)) / ((m + 1) q), evaluated without overflow.
double penalty_term(std::size_t q, std::size_t m);

struct RateBoundReport {
  std::size_t q = 0;
  std::size_t m_cap = 0;
  std::vector<double> terms;        // terms[m-1] = penalty_term(q, m)
  std::optional<std::size_t> m_star; // unset when the m -> infinity limit dominates
  double max_term = 0.0;            // supremum of the penalty over all m >= 1
  double asymptotic_term = 0.0;     // 1/q, the limit of the penalty as m grows
  double bound = 0.0;               // log2(q)/q - max_term
};

/// Lower bound log2(q)/q - sup_m penalty_term(q, m) on the 2-SSM rate.
/// The supremum is the larger of the best term for m <= m_cap and the limit
/// 1/q. Requires q >= 2 and m_cap >= 1.
RateBoundReport rate_bound(std::size_t q, std::size_t m_cap = 64);

struct KnownBound {
  std::string name;  // "R_D(2)", "R_S(2bar)", "R(2)"
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> improved_lower;
  std::string note;
};

/// Published constants for d = 2, with the random-coding lower bound on R(2).
std::vector<KnownBound> known_bounds();

}  // namespace ssm
