#pragma once

// Branch-and-bound search for the largest number of columns a t-row matrix
// can have while staying d-DM, d-SSM or d-bar-SM.
//
// Columns are distinct nonzero vectors, explored in increasing canonical
// order of their canonical integers, where bit i holds row i + 1 (so the
// unit columns come out as an identity). Every family is closed under
// column deletion, so a node keeps only the candidates that extend it
// validly and the remaining count bounds the subtree.
//
// For column sets smaller than the parameters require (n < d, or n <= d
// for DM) the checks use the "at most d" forms of the definitions, which
// agree with the usual definitions whenever those apply.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ssm/matrix.hpp"

namespace ssm {

enum class SearchProperty { dm, ssm, sm };

/// Candidate pools are enumerated explicitly, so t is capped.
inline constexpr std::size_t kSearchMaxTests = 16;

struct SearchOptions {
  SearchProperty property = SearchProperty::ssm;
  std::size_t d = 2;
  std::size_t t = 3;
  /// Maximum number of incremental sub-checks; 0 means unlimited.
  std::uint64_t budget = 0;
  /// Columns known to be feasible together (e.g. a published example),
  /// used as the starting incumbent. Bit i is row i + 1.
  std::vector<std::uint64_t> seed_columns;
};

struct SearchResult {
  SearchProperty property = SearchProperty::ssm;
  std::size_t d = 0;
  std::size_t t = 0;
  std::size_t max_n = 0;
  BinaryMatrix certificate{1, 1};
  bool exhaustive = false;
  std::uint64_t checks = 0;
  bool seeded = false;  // certificate came from seed_columns
};

/// Throws for t outside [1, kSearchMaxTests], d < 2, or infeasible seed columns.
SearchResult search_max(const SearchOptions& options);

/// Column-set test used by the search; columns are canonical integers.
bool column_set_has_property(SearchProperty property, std::size_t d, std::span<const std::uint64_t> columns);

/// Canonical integers of the columns of `m` (t <= 64).
std::vector<std::uint64_t> canonical_columns(const BinaryMatrix& m);
BinaryMatrix matrix_from_canonical(std::size_t t, std::span<const std::uint64_t> columns);

struct RateEntry {
  std::size_t t = 0;
  std::size_t max_n = 0;
  double rate = 0.0;  // log2(max_n) / t
  bool exhaustive = false;
};

RateEntry rate_entry(std::size_t t, std::size_t max_n, bool exhaustive);

/// Runs search_max for each t and reports log2(max_n)/t; entries that did not
/// finish within the budget are lower bounds.
std::vector<RateEntry> rate_table(SearchProperty property, std::size_t d, std::span<const std::size_t> t_values,
                                  std::uint64_t budget = 0);

}  // namespace ssm
