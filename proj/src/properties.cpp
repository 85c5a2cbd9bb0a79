#include "ssm/properties.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "ssm/combinations.hpp"

namespace ssm {
namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<Word>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Word w : v) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

std::vector<Word> sum_of(const BinaryMatrix& m, std::span<const std::size_t> cols) {
  std::vector<Word> acc(m.words_per_column(), 0);
  for (std::size_t c : cols) bits::or_into(acc, m.column_words(c));
  return acc;
}

PropertyReport violation(Property p, std::size_t d, Witness w) {
  return PropertyReport{p, d, false, std::move(w)};
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::disjunct: return "dm";
    case Property::bar_separable: return "sm";
    case Property::strongly_separable: return "ssm";
    case Property::bar_strongly_separable: return "ssm-bar";
    case Property::strongly_separable_code: return "ssc";
  }
  return "unknown";
}

PropertyReport is_disjunct(const BinaryMatrix& m, std::size_t d) {
  const std::size_t n = m.items();
  require(d >= 1 && d + 1 <= n, "d out of range: disjunct check needs 1 <= d <= n-1");
  std::optional<Witness> found;
  for_each_combination(n, d, [&](std::span<const std::size_t> s) {
    const auto r = sum_of(m, s);
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (k < s.size() && s[k] == j) {
        ++k;
        continue;
      }
      if (bits::covers(r, m.column_words(j))) {
        found = Witness{SupportSet::from_zero_based(s), std::nullopt, j + 1};
        return false;
      }
    }
    return true;
  });
  if (found) return violation(Property::disjunct, d, std::move(*found));
  return {Property::disjunct, d, true, std::nullopt};
}

PropertyReport is_bar_separable(const BinaryMatrix& m, std::size_t d) {
  const std::size_t n = m.items();
  require(d >= 1 && d <= n, "d out of range: separability check needs 1 <= d <= n");
  std::unordered_map<std::vector<Word>, SupportSet, WordsHash> seen;
  std::optional<Witness> found;
  for_each_subset_up_to(n, 1, d, [&](std::span<const std::size_t> s) {
    auto [it, inserted] = seen.try_emplace(sum_of(m, s), SupportSet::from_zero_based(s));
    if (!inserted) {
      found = Witness{it->second, SupportSet::from_zero_based(s), std::nullopt};
      return false;
    }
    return true;
  });
  if (found) return violation(Property::bar_separable, d, std::move(*found));
  return {Property::bar_separable, d, true, std::nullopt};
}

PropertyReport is_ssm(const BinaryMatrix& m, std::size_t d) {
  const std::size_t n = m.items();
  const std::size_t stride = m.words_per_column();
  require(d >= 2 && d <= n, "d out of range: SSM check needs 2 <= d <= n");

  std::vector<Word> once(stride), twice(stride);
  std::vector<std::size_t> covered;
  std::optional<Witness> found;
  for_each_combination(n, d, [&](std::span<const std::size_t> f0) {
    const auto r = sum_of(m, f0);
    std::fill(once.begin(), once.end(), 0);
    std::fill(twice.begin(), twice.end(), 0);
    covered.clear();
    for (std::size_t j = 0; j < n; ++j) {
      auto c = m.column_words(j);
      if (!bits::covers(r, c)) continue;
      covered.push_back(j);
      for (std::size_t w = 0; w < stride; ++w) {
        twice[w] |= once[w] & c[w];
        once[w] |= c[w];
      }
    }
    for (std::size_t j : f0) {
      auto c = m.column_words(j);
      bool has_private = false;
      for (std::size_t w = 0; w < stride && !has_private; ++w) has_private = (c[w] & ~twice[w]) != 0;
      if (!has_private) {
        std::vector<std::size_t> frame;
        for (std::size_t k : covered)
          if (k != j) frame.push_back(k);
        found = Witness{SupportSet::from_zero_based(f0), SupportSet::from_zero_based(frame), j + 1};
        return false;
      }
    }
    return true;
  });
  if (found) return violation(Property::strongly_separable, d, std::move(*found));
  return {Property::strongly_separable, d, true, std::nullopt};
}

PropertyReport is_ssm_bruteforce(const BinaryMatrix& m, std::size_t d, bool bar) {
  const std::size_t n = m.items();
  if (n > kBruteforceMaxItems) throw Error("oracle scale exceeded");
  require(d >= 1 && d <= n, "d out of range: brute-force SSM check needs 1 <= d <= n");
  const Property prop = bar ? Property::bar_strongly_separable : Property::strongly_separable;

  const std::size_t stride = m.words_per_column();
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  const std::size_t count = std::size_t{full} + 1;

  // Boolean sum of every subset, indexed by bitmask.
  std::vector<Word> sums(count * stride, 0);
  auto sum_at = [&](std::uint32_t mask) { return std::span<const Word>(sums.data() + mask * stride, stride); };
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const std::uint32_t rest = mask & (mask - 1);
    const auto col = m.column_words(static_cast<std::size_t>(std::countr_zero(mask)));
    for (std::size_t w = 0; w < stride; ++w) sums[mask * stride + w] = sums[rest * stride + w] | col[w];
  }

  // Group nonempty subsets by their sum; each group is U(F0) for its members.
  std::vector<std::uint32_t> order(full);
  for (std::uint32_t i = 0; i < full; ++i) order[i] = i + 1;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto x = sum_at(a), y = sum_at(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::vector<std::uint32_t> group_of(count, 0);
  std::vector<std::uint32_t> group_start;
  std::vector<std::uint32_t> intersection;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || !bits::equal(sum_at(order[k]), sum_at(order[k - 1]))) {
      group_start.push_back(static_cast<std::uint32_t>(k));
      intersection.push_back(full);
    }
    group_of[order[k]] = static_cast<std::uint32_t>(intersection.size() - 1);
    intersection.back() &= order[k];
  }

  auto mask_to_set = [](std::uint32_t mask) {
    std::vector<std::size_t> items;
    for (std::size_t j = 0; mask; ++j, mask >>= 1)
      if (mask & 1U) items.push_back(j + 1);
    return SupportSet(std::move(items));
  };

  std::optional<Witness> found;
  const std::size_t lo = bar ? 1 : d;
  for_each_subset_up_to(n, lo, d, [&](std::span<const std::size_t> f0) {
    std::uint32_t mask = 0;
    for (std::size_t j : f0) mask |= std::uint32_t{1} << j;
    const std::uint32_t g = group_of[mask];
    if (intersection[g] == mask) return true;
    const std::uint32_t missing_bit = mask & ~intersection[g] & (~(mask & ~intersection[g]) + 1);
    const std::size_t missing = static_cast<std::size_t>(std::countr_zero(missing_bit));
    std::uint32_t frame = 0;
    for (std::size_t k = group_start[g]; k < order.size() && group_of[order[k]] == g; ++k) {
      if (!(order[k] & missing_bit)) {
        frame = order[k];
        break;
      }
    }
    found = Witness{mask_to_set(mask), mask_to_set(frame), missing + 1};
    return false;
  });
  if (found) return violation(prop, d, std::move(*found));
  return {prop, d, true, std::nullopt};
}

}  // namespace ssm
