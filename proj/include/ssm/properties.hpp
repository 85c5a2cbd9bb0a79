#pragma once

// Verifiers for the classical group-testing properties (disjunct,
// bar-separable) and for strong separability.
//
// Each verifier returns a PropertyReport. When the property fails, the
// report carries a witness: the lexicographically first violation, ordered
// by subset size and then by column index.

#include <cstddef>
#include <optional>
#include <string_view>

#include "ssm/matrix.hpp"

namespace ssm {

enum class Property {
  disjunct,                 // d-DM
  bar_separable,            // d-bar-SM
  strongly_separable,       // d-SSM
  bar_strongly_separable,   // d-bar-SSM
  strongly_separable_code,  // d-bar-SSC (q-ary codes)
};

std::string_view property_name(Property p);

/// Violation record. Field meaning depends on the property:
///   disjunct:      `subset` is S, `item` is the column covered by OR(S).
///   bar_separable: `subset` and `other` are distinct sets with equal sums.
///   (bar_)strongly_separable / code:
///                  `subset` is F0, `item` is a member of F0 absent from the
///                  frame `other`, which has the same sum (descendant) as F0.
struct Witness {
  SupportSet subset;
  std::optional<SupportSet> other;
  std::optional<std::size_t> item;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyReport {
  Property property;
  std::size_t d = 0;
  bool holds = true;
  std::optional<Witness> witness;
};

/// d-DM: OR of any d columns covers no other column. Requires 1 <= d <= n-1.
PropertyReport is_disjunct(const BinaryMatrix& m, std::size_t d);

/// d-bar-SM: ORs of nonempty sets of at most d columns are pairwise distinct.
/// Requires 1 <= d <= n.
PropertyReport is_bar_separable(const BinaryMatrix& m, std::size_t d);

/// d-SSM via the private-row test: for every d-set F0 with r = OR(F0) and
/// F_S the columns covered by r, each member of F0 has a row where it is the
/// only 1 inside F_S. Requires 2 <= d <= n.
PropertyReport is_ssm(const BinaryMatrix& m, std::size_t d);

/// Largest n accepted by is_ssm_bruteforce.
inline constexpr std::size_t kBruteforceMaxItems = 20;

/// Definition-level check: enumerates every nonempty column subset, groups
/// subsets by Boolean sum and intersects each group. With `bar` the sets F0
/// range over sizes 1..d instead of exactly d. Requires n <= 20 and
/// 1 <= d <= n (2 <= d when `bar` is false).
PropertyReport is_ssm_bruteforce(const BinaryMatrix& m, std::size_t d, bool bar);

}  // namespace ssm
