#include "ssm/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssm/combinations.hpp"

namespace ssm {
namespace {

using Column = std::uint64_t;

bool covers(Column a, Column b) { return (b & ~a) == 0; }

struct BudgetExhausted {};

// Incremental membership tests. `extends(A, y)` assumes A already has the
// property and decides whether A + {y} does, re-testing only the
// configurations that involve y.
class Checker {
 public:
  Checker(SearchProperty property, std::size_t d, std::uint64_t budget)
      : property_(property), d_(d), budget_(budget) {}

  std::uint64_t checks() const { return checks_; }

  /// Called once per search node before extends() is used on it.
  void prepare(std::span<const Column> a) {
    if (property_ != SearchProperty::sm) return;
    if (sums_.size() <= a.size()) sums_.resize(a.size() + 1);
    auto& sums = sums_[a.size()];
    sums.clear();
    for_each_subset_up_to(a.size(), 1, std::min(d_, a.size()), [&](std::span<const std::size_t> s) {
      sums.push_back(sum(a, s));
      return true;
    });
    std::sort(sums.begin(), sums.end());
  }

  bool extends(std::span<const Column> a, Column y) {
    switch (property_) {
      case SearchProperty::ssm: return extends_ssm(a, y);
      case SearchProperty::dm: return extends_dm(a, y);
      case SearchProperty::sm: return extends_sm(a, y);
    }
    return false;
  }

 private:
  void tick() {
    ++checks_;
    if (budget_ && checks_ > budget_) throw BudgetExhausted{};
  }

  static Column sum(std::span<const Column> a, std::span<const std::size_t> s) {
    Column r = 0;
    for (std::size_t k : s) r |= a[k];
    return r;
  }

  // Every member of f0 keeps a row where it is the only 1 among the columns
  // of a + {y} covered by OR(f0).
  bool private_rows(std::span<const Column> a, Column y, std::span<const Column> f0) {
    tick();
    Column r = 0;
    for (Column c : f0) r |= c;
    Column once = 0, twice = 0;
    auto add = [&](Column c) {
      if (!covers(r, c)) return;
      twice |= once & c;
      once |= c;
    };
    for (Column c : a) add(c);
    add(y);
    for (Column c : f0)
      if (!(c & ~twice)) return false;
    return true;
  }

  bool extends_ssm(std::span<const Column> a, Column y) {
    std::vector<Column> f0;
    // Sets containing y.
    bool ok = for_each_subset_up_to(a.size(), 0, std::min(d_ - 1, a.size()), [&](std::span<const std::size_t> s) {
      f0.clear();
      for (std::size_t k : s) f0.push_back(a[k]);
      f0.push_back(y);
      return private_rows(a, y, f0);
    });
    if (!ok) return false;
    // Sets without y whose sum covers y; y joins their covered columns.
    return for_each_subset_up_to(a.size(), 1, std::min(d_, a.size()), [&](std::span<const std::size_t> s) {
      if (!covers(sum(a, s), y)) return true;
      f0.clear();
      for (std::size_t k : s) f0.push_back(a[k]);
      return private_rows(a, y, f0);
    });
  }

  // Covering is monotone in the covering set, so only the largest sets matter.
  bool extends_dm(std::span<const Column> a, Column y) {
    if (a.empty()) return true;
    bool ok = for_each_combination(a.size(), std::min(d_, a.size()), [&](std::span<const std::size_t> s) {
      tick();
      return !covers(sum(a, s), y);
    });
    if (!ok) return false;
    std::vector<Column> others;
    for (std::size_t j = 0; j < a.size(); ++j) {
      others.clear();
      for (std::size_t k = 0; k < a.size(); ++k)
        if (k != j) others.push_back(a[k]);
      ok = for_each_combination(others.size(), std::min(d_ - 1, others.size()), [&](std::span<const std::size_t> s) {
        tick();
        return !covers(sum(others, s) | y, a[j]);
      });
      if (!ok) return false;
    }
    return true;
  }

  bool extends_sm(std::span<const Column> a, Column y) {
    const auto& old_sums = sums_.at(a.size());
    std::vector<Column> fresh;
    bool ok = for_each_subset_up_to(a.size(), 0, std::min(d_ - 1, a.size()), [&](std::span<const std::size_t> s) {
      tick();
      const Column v = sum(a, s) | y;
      if (std::binary_search(old_sums.begin(), old_sums.end(), v)) return false;
      fresh.push_back(v);
      return true;
    });
    if (!ok) return false;
    std::sort(fresh.begin(), fresh.end());
    return std::adjacent_find(fresh.begin(), fresh.end()) == fresh.end();
  }

  SearchProperty property_;
  std::size_t d_;
  std::uint64_t budget_;
  std::uint64_t checks_ = 0;
  std::vector<std::vector<Column>> sums_;
};

class Search {
 public:
  Search(const SearchOptions& o) : checker_(o.property, o.d, o.budget) {}

  void set_incumbent(std::vector<Column> columns) {
    best_ = std::move(columns);
  }

  // Every entry of `candidates` extends `chosen_` validly.
  void expand(const std::vector<Column>& candidates) {
    std::vector<Column> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (chosen_.size() + (candidates.size() - i) <= best_.size()) return;
      chosen_.push_back(candidates[i]);
      if (chosen_.size() > best_.size()) best_ = chosen_;
      checker_.prepare(chosen_);
      next.clear();
      for (std::size_t k = i + 1; k < candidates.size(); ++k)
        if (checker_.extends(chosen_, candidates[k])) next.push_back(candidates[k]);
      expand(next);
      chosen_.pop_back();
    }
  }

  const std::vector<Column>& best() const { return best_; }
  std::uint64_t checks() const { return checker_.checks(); }
  Checker& checker() { return checker_; }

 private:
  Checker checker_;
  std::vector<Column> chosen_;
  std::vector<Column> best_;
};

}  // namespace

bool column_set_has_property(SearchProperty property, std::size_t d, std::span<const std::uint64_t> columns) {
  if (d < 2) throw Error("search properties need d >= 2");
  Checker checker(property, d, 0);
  std::vector<Column> prefix;
  for (Column c : columns) {
    checker.prepare(prefix);
    if (!checker.extends(prefix, c)) return false;
    prefix.push_back(c);
  }
  return true;
}

std::vector<std::uint64_t> canonical_columns(const BinaryMatrix& m) {
  if (m.tests() > 64) throw Error("canonical columns need t <= 64");
  std::vector<std::uint64_t> out(m.items(), 0);
  for (std::size_t j = 0; j < m.items(); ++j)
    for (std::size_t i = 0; i < m.tests(); ++i)
      if (m.entry(i, j)) out[j] |= std::uint64_t{1} << i;
  return out;
}

BinaryMatrix matrix_from_canonical(std::size_t t, std::span<const std::uint64_t> columns) {
  if (t == 0 || t > 64) throw Error("canonical columns need 1 <= t <= 64");
  BinaryMatrix m(t, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < t; ++i)
      if ((columns[j] >> i) & 1U) m.set(i, j);
  return m;
}

SearchResult search_max(const SearchOptions& options) {
  if (options.t < 1 || options.t > kSearchMaxTests)
    throw Error("search needs 1 <= t <= " + std::to_string(kSearchMaxTests));
  if (options.d < 2) throw Error("search needs d >= 2");

  const Column limit = Column{1} << options.t;
  std::vector<Column> pool;
  for (Column c = 1; c < limit; ++c) pool.push_back(c);

  Search search(options);
  bool seeded = false;
  if (!options.seed_columns.empty()) {
    std::vector<Column> seed = options.seed_columns;
    std::sort(seed.begin(), seed.end());
    for (Column c : seed)
      if (c == 0 || c >= limit) throw Error("seed column outside the candidate pool");
    if (std::adjacent_find(seed.begin(), seed.end()) != seed.end()) throw Error("seed columns must be distinct");
    if (!column_set_has_property(options.property, options.d, seed)) throw Error("seed columns lack the property");
    search.set_incumbent(std::move(seed));
    seeded = true;
  }

  bool exhaustive = true;
  const std::size_t seed_size = search.best().size();
  try {
    search.checker().prepare({});
    std::vector<Column> roots;
    for (Column c : pool)
      if (search.checker().extends({}, c)) roots.push_back(c);
    search.expand(roots);
  } catch (const BudgetExhausted&) {
    exhaustive = false;
  }

  SearchResult result;
  result.property = options.property;
  result.d = options.d;
  result.t = options.t;
  result.max_n = search.best().size();
  result.certificate = matrix_from_canonical(options.t, search.best());
  result.exhaustive = exhaustive;
  result.checks = search.checks();
  result.seeded = seeded && result.max_n == seed_size;
  return result;
}

RateEntry rate_entry(std::size_t t, std::size_t max_n, bool exhaustive) {
  if (t == 0 || max_n == 0) throw Error("rate entry needs t >= 1 and max_n >= 1");
  return RateEntry{t, max_n, std::log2(static_cast<double>(max_n)) / static_cast<double>(t), exhaustive};
}

std::vector<RateEntry> rate_table(SearchProperty property, std::size_t d, std::span<const std::size_t> t_values,
                                  std::uint64_t budget) {
  std::vector<RateEntry> table;
  for (std::size_t t : t_values) {
    SearchOptions o;
    o.property = property;
    o.d = d;
    o.t = t;
    o.budget = budget;
    const auto r = search_max(o);
    table.push_back(rate_entry(t, r.max_n, r.exhaustive));
  }
  return table;
}

}  // namespace ssm
