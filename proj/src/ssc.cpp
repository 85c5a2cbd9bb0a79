#include "ssm/ssc.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ssm/combinations.hpp"
#include "ssm/detail/code_index.hpp"

namespace ssm {
namespace {

std::uint64_t bit_of(Symbol v) { return std::uint64_t{1} << v; }

void check_support(const QaryCode& code, const SupportSet& s) {
  if (s.empty()) throw Error("empty support");
  if (s.items().back() > code.size()) throw Error("bad index");
}

std::vector<std::uint64_t> symbol_sets(const QaryCode& code, std::span<const std::size_t> words) {
  std::vector<std::uint64_t> sets(code.length(), 0);
  for (std::size_t j : words)
    for (std::size_t i = 0; i < code.length(); ++i) sets[i] |= bit_of(code.symbol(j, i));
  return sets;
}

std::vector<std::size_t> zero_based(const SupportSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (std::size_t item : s) out.push_back(item - 1);
  return out;
}

}  // namespace

QaryCode::QaryCode(std::size_t length, std::size_t alphabet, std::vector<std::vector<Symbol>> words)
    : length_(length), alphabet_(alphabet), size_(words.size()) {
  if (length == 0) throw Error("code length must be >= 1");
  if (alphabet < 2 || alphabet > kMaxAlphabet)
    throw Error("alphabet size must be in [2, " + std::to_string(kMaxAlphabet) + "]");
  if (words.empty()) throw Error("code must contain at least one word");
  symbols_.reserve(size_ * length_);
  for (std::size_t j = 0; j < words.size(); ++j) {
    if (words[j].size() != length) throw Error("word " + std::to_string(j + 1) + " has wrong length");
    for (Symbol v : words[j]) {
      if (v >= alphabet) throw Error("word " + std::to_string(j + 1) + " has a symbol outside the alphabet");
      symbols_.push_back(v);
    }
  }
}

std::vector<std::vector<Symbol>> QaryCode::words() const {
  std::vector<std::vector<Symbol>> out;
  out.reserve(size_);
  for (std::size_t j = 0; j < size_; ++j) out.emplace_back(word(j).begin(), word(j).end());
  return out;
}

bool QaryCode::has_duplicates() const {
  auto w = words();
  std::sort(w.begin(), w.end());
  return std::adjacent_find(w.begin(), w.end()) != w.end();
}

QaryCode QaryCode::select(std::span<const std::size_t> words) const {
  std::vector<std::vector<Symbol>> out;
  out.reserve(words.size());
  for (std::size_t j : words) out.emplace_back(word(j).begin(), word(j).end());
  return QaryCode(length_, alphabet_, std::move(out));
}

std::uint64_t DescendantCode::cardinality() const {
  unsigned __int128 total = 1;
  for (std::uint64_t s : sets) {
    total *= static_cast<unsigned>(std::popcount(s));
    if (total > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(total);
}

bool DescendantCode::contains(std::span<const Symbol> word) const {
  if (word.size() != sets.size()) return false;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (word[i] >= kMaxAlphabet || !(sets[i] & bit_of(word[i]))) return false;
  return true;
}

DescendantCode descendant(const QaryCode& code, const SupportSet& s) {
  check_support(code, s);
  return DescendantCode{symbol_sets(code, zero_based(s))};
}

bool is_frame(const QaryCode& code, const SupportSet& base, const SupportSet& candidate) {
  if (candidate.empty()) return false;
  return descendant(code, base) == descendant(code, candidate);
}

bool is_frame_binary(const QaryCode& code, const SupportSet& base, const SupportSet& candidate) {
  if (code.alphabet() != 2) throw Error("binary frame test needs q = 2");
  if (candidate.empty()) return false;
  check_support(code, base);
  check_support(code, candidate);
  auto or_and = [&](const SupportSet& s) {
    std::vector<bool> any(code.length(), false), all(code.length(), true);
    for (std::size_t item : s)
      for (std::size_t i = 0; i < code.length(); ++i) {
        const bool one = code.symbol(item - 1, i) == 1;
        any[i] = any[i] || one;
        all[i] = all[i] && one;
      }
    return std::make_pair(any, all);
  };
  return or_and(base) == or_and(candidate);
}

PropertyReport is_ssc(const QaryCode& code, std::size_t d) {
  const std::size_t n = code.size();
  if (code.has_duplicates()) throw Error("code not reduced");
  if (d < 1 || d > n) throw Error("d out of range: SSC check needs 1 <= d <= n");

  const detail::CodeIndex index(code);
  const auto alive = index.all_words();
  std::vector<Word> pool;
  std::optional<Witness> found;
  for_each_subset_up_to(n, 1, d, [&](std::span<const std::size_t> c0) {
    index.pool(c0, alive, pool);
    for (std::size_t w : c0) {
      if (index.has_private(w, pool)) continue;
      std::vector<std::size_t> frame;
      for (std::size_t k : detail::CodeIndex::members(pool))
        if (k != w) frame.push_back(k);
      found = Witness{SupportSet::from_zero_based(c0), SupportSet::from_zero_based(frame), w + 1};
      return false;
    }
    return true;
  });
  if (found) return PropertyReport{Property::strongly_separable_code, d, false, std::move(found)};
  return {Property::strongly_separable_code, d, true, std::nullopt};
}

PropertyReport is_ssc_bruteforce(const QaryCode& code, std::size_t d) {
  const std::size_t n = code.size();
  const std::size_t t = code.length();
  if (n > kBruteforceMaxItems) throw Error("oracle scale exceeded");
  if (code.has_duplicates()) throw Error("code not reduced");
  if (d < 1 || d > n) throw Error("d out of range: SSC check needs 1 <= d <= n");

  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> desc((std::size_t{full} + 1) * t, 0);
  auto desc_at = [&](std::uint32_t mask) { return std::span<const std::uint64_t>(desc.data() + mask * t, t); };
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t rest = mask & (mask - 1);
    const auto j = static_cast<std::size_t>(std::countr_zero(mask));
    for (std::size_t i = 0; i < t; ++i) desc[mask * t + i] = desc[rest * t + i] | bit_of(code.symbol(j, i));
  }

  std::vector<std::uint32_t> order(full);
  for (std::uint32_t i = 0; i < full; ++i) order[i] = i + 1;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto x = desc_at(a), y = desc_at(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::vector<std::uint32_t> group_of(std::size_t{full} + 1, 0), group_start, intersection;
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto cur = desc_at(order[k]);
    if (k == 0 || !std::equal(cur.begin(), cur.end(), desc_at(order[k - 1]).begin())) {
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
  for_each_subset_up_to(n, 1, d, [&](std::span<const std::size_t> c0) {
    std::uint32_t mask = 0;
    for (std::size_t j : c0) mask |= std::uint32_t{1} << j;
    const std::uint32_t g = group_of[mask];
    if (intersection[g] == mask) return true;
    const std::uint32_t lost = mask & ~intersection[g];
    const std::uint32_t missing_bit = lost & (~lost + 1);
    std::uint32_t frame = 0;
    for (std::size_t k = group_start[g]; k < order.size() && group_of[order[k]] == g; ++k)
      if (!(order[k] & missing_bit)) {
        frame = order[k];
        break;
      }
    found = Witness{mask_to_set(mask), mask_to_set(frame),
                    static_cast<std::size_t>(std::countr_zero(missing_bit)) + 1};
    return false;
  });
  if (found) return PropertyReport{Property::strongly_separable_code, d, false, std::move(found)};
  return {Property::strongly_separable_code, d, true, std::nullopt};
}

FrameSet minimal_frames(const QaryCode& code, const SupportSet& s, std::uint64_t node_limit) {
  check_support(code, s);
  const std::size_t t = code.length();
  const auto target = symbol_sets(code, zero_based(s));

  // Candidate words: those whose every symbol appears in the target sets.
  std::vector<std::size_t> pool;
  for (std::size_t j = 0; j < code.size(); ++j) {
    bool inside = true;
    for (std::size_t i = 0; i < t && inside; ++i) inside = (target[i] & bit_of(code.symbol(j, i))) != 0;
    if (inside) pool.push_back(j);
  }

  std::vector<std::size_t> chosen;
  std::vector<bool> excluded(pool.size(), false);
  std::vector<SupportSet> frames;
  std::uint64_t nodes = 0;

  // Every chosen word must keep a (coordinate, symbol) pair that no other
  // chosen word shares; otherwise no extension can be minimal.
  auto irredundant = [&]() {
    for (std::size_t a : chosen) {
      bool has_private = false;
      for (std::size_t i = 0; i < t && !has_private; ++i) {
        bool shared = false;
        for (std::size_t b : chosen)
          if (b != a && code.symbol(b, i) == code.symbol(a, i)) {
            shared = true;
            break;
          }
        has_private = !shared;
      }
      if (!has_private) return false;
    }
    return true;
  };

  auto extend = [&](auto&& self, std::vector<std::uint64_t>& covered) -> void {
    if (++nodes > node_limit) throw Error("minimal frame search exceeded node limit");
    // First uncovered (coordinate, symbol) pair, by coordinate then symbol.
    std::size_t coord = t;
    Symbol value = 0;
    for (std::size_t i = 0; i < t; ++i) {
      const std::uint64_t missing = target[i] & ~covered[i];
      if (missing) {
        coord = i;
        value = static_cast<Symbol>(std::countr_zero(missing));
        break;
      }
    }
    if (coord == t) {
      frames.push_back(SupportSet::from_zero_based(chosen));
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      const std::size_t w = pool[p];
      if (excluded[p] || code.symbol(w, coord) != value) continue;
      if (std::find(chosen.begin(), chosen.end(), w) != chosen.end()) continue;
      chosen.push_back(w);
      if (irredundant()) {
        std::vector<std::uint64_t> next = covered;
        for (std::size_t i = 0; i < t; ++i) next[i] |= bit_of(code.symbol(w, i));
        self(self, next);
      }
      chosen.pop_back();
      excluded[p] = true;
      tried.push_back(p);
    }
    for (std::size_t p : tried) excluded[p] = false;
  };

  std::vector<std::uint64_t> covered(t, 0);
  extend(extend, covered);
  std::sort(frames.begin(), frames.end());
  return FrameSet{s, std::move(frames), true};
}

QaryCode columns_as_code(const BinaryMatrix& m) {
  std::vector<std::vector<Symbol>> words;
  words.reserve(m.items());
  for (std::size_t j = 0; j < m.items(); ++j) {
    std::vector<Symbol> w(m.tests());
    for (std::size_t i = 0; i < m.tests(); ++i) w[i] = m.entry(i, j) ? 1 : 0;
    words.push_back(std::move(w));
  }
  QaryCode code(m.tests(), 2, std::move(words));
  if (code.has_duplicates()) throw Error("matrix has duplicate columns");
  return code;
}

BinaryMatrix concatenate(const QaryCode& code) {
  const std::size_t q = code.alphabet();
  BinaryMatrix m(code.length() * q, code.size());
  for (std::size_t j = 0; j < code.size(); ++j)
    for (std::size_t i = 0; i < code.length(); ++i) m.set(i * q + code.symbol(j, i), j);
  return m;
}

}  // namespace ssm
