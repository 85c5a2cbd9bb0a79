#pragma once

#include <bit>
#include <cstddef>
#include <span>
#include <vector>

#include "ssm/ssc.hpp"

namespace ssm::detail {

/// For every (coordinate, symbol) pair, the bitset of words carrying that
/// symbol at that coordinate. Lets the SSC tests run word-parallel over the
/// code instead of word by word.
class CodeIndex {
 public:
  explicit CodeIndex(const QaryCode& code)
      : code_(code), stride_(words_for(code.size())),
        by_symbol_(code.length() * code.alphabet() * stride_, 0) {
    for (std::size_t j = 0; j < code.size(); ++j)
      for (std::size_t i = 0; i < code.length(); ++i)
        slot(i, code.symbol(j, i))[j / kWordBits] |= Word{1} << (j % kWordBits);
  }

  std::size_t stride() const { return stride_; }

  std::vector<Word> all_words() const {
    std::vector<Word> out(stride_, ~Word{0});
    if (const std::size_t tail = code_.size() % kWordBits) out.back() = (Word{1} << tail) - 1;
    return out;
  }

  /// Words of `alive` whose every symbol appears among the words of `c0`.
  void pool(std::span<const std::size_t> c0, std::span<const Word> alive, std::vector<Word>& out) const {
    out.assign(alive.begin(), alive.end());
    std::vector<Word> column(stride_);
    for (std::size_t i = 0; i < code_.length(); ++i) {
      std::fill(column.begin(), column.end(), 0);
      std::uint64_t seen = 0;
      for (std::size_t w : c0) {
        const Symbol v = code_.symbol(w, i);
        if (seen & (std::uint64_t{1} << v)) continue;
        seen |= std::uint64_t{1} << v;
        bits::or_into(column, slot(i, v));
      }
      for (std::size_t k = 0; k < stride_; ++k) out[k] &= column[k];
    }
  }

  /// True when some coordinate value of word `w` is carried by no other word of `pool`.
  bool has_private(std::size_t w, std::span<const Word> pool) const {
    for (std::size_t i = 0; i < code_.length(); ++i) {
      auto same = slot(i, code_.symbol(w, i));
      std::size_t count = 0;
      for (std::size_t k = 0; k < stride_ && count < 2; ++k)
        count += static_cast<std::size_t>(std::popcount(same[k] & pool[k]));
      if (count == 1) return true;
    }
    return false;
  }

  static std::vector<std::size_t> members(std::span<const Word> set) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < set.size(); ++k)
      for (Word w = set[k]; w; w &= w - 1) out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    return out;
  }

 private:
  std::span<Word> slot(std::size_t i, Symbol v) {
    return {by_symbol_.data() + (i * code_.alphabet() + v) * stride_, stride_};
  }
  std::span<const Word> slot(std::size_t i, Symbol v) const {
    return {by_symbol_.data() + (i * code_.alphabet() + v) * stride_, stride_};
  }

  const QaryCode& code_;
  std::size_t stride_;
  std::vector<Word> by_symbol_;
};

}  // namespace ssm::detail
