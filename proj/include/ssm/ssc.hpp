#pragma once

// q-ary strongly separable codes.
//
// A (t, n, q) code is a list of n words of length t over {0..q-1}. For a
// subset C0 of the code, its descendant code is the product of the symbol
// sets C0(i) seen at each coordinate; a frame of C0 is any nonempty subset
// with the same descendant code. The code is a d-bar-SSC when, for every
// C0 with 1 <= |C0| <= d, the frames of C0 intersect exactly in C0.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ssm/matrix.hpp"
#include "ssm/properties.hpp"

namespace ssm {

using Symbol = std::uint16_t;

/// Alphabets are limited to 64 symbols so that per-coordinate symbol sets
/// fit in one machine word.
inline constexpr std::size_t kMaxAlphabet = 64;

class QaryCode {
 public:
  QaryCode(std::size_t length, std::size_t alphabet, std::vector<std::vector<Symbol>> words);

  std::size_t length() const { return length_; }
  std::size_t alphabet() const { return alphabet_; }
  std::size_t size() const { return size_; }

  /// 0-based word access.
  std::span<const Symbol> word(std::size_t j) const { return {symbols_.data() + j * length_, length_}; }
  Symbol symbol(std::size_t j, std::size_t coord) const { return symbols_[j * length_ + coord]; }

  std::vector<std::vector<Symbol>> words() const;
  bool has_duplicates() const;

  /// Code made of the listed 0-based words, in order.
  QaryCode select(std::span<const std::size_t> words) const;

  friend bool operator==(const QaryCode&, const QaryCode&) = default;

 private:
  std::size_t length_;
  std::size_t alphabet_;
  std::size_t size_;
  std::vector<Symbol> symbols_;
};

/// Per-coordinate symbol sets; bit v of sets[i] is set iff v is in C(i).
/// The product set itself is never materialised.
struct DescendantCode {
  std::vector<std::uint64_t> sets;

  /// Number of descendants, saturating at UINT64_MAX.
  std::uint64_t cardinality() const;
  bool contains(std::span<const Symbol> word) const;

  friend bool operator==(const DescendantCode&, const DescendantCode&) = default;
};

/// Throws Error("empty support") or Error("bad index").
DescendantCode descendant(const QaryCode& code, const SupportSet& s);

/// True iff `candidate` is a nonempty subset with the same descendant code as `base`.
bool is_frame(const QaryCode& code, const SupportSet& base, const SupportSet& candidate);

/// Binary alphabets only: frame test through equal OR and equal AND of the
/// words, which coincides with descendant equality when q = 2.
bool is_frame_binary(const QaryCode& code, const SupportSet& base, const SupportSet& candidate);

/// Fast d-bar-SSC check. For each C0 with |C0| <= d let F_S be the words whose
/// every symbol lies in C0's symbol set at that coordinate; every word of C0
/// must own a coordinate value no other word of F_S shares.
/// Throws Error("code not reduced") on duplicate words; requires 1 <= d <= n.
PropertyReport is_ssc(const QaryCode& code, std::size_t d);

/// Definition-level d-bar-SSC check enumerating all nonempty subsets.
/// Requires n <= 20.
PropertyReport is_ssc_bruteforce(const QaryCode& code, std::size_t d);

struct FrameSet {
  SupportSet base;
  std::vector<SupportSet> frames;
  bool minimal_only = true;
};

/// Enumerates every minimal frame of `s`, in lexicographic order.
/// Throws when more than `node_limit` search nodes would be visited.
FrameSet minimal_frames(const QaryCode& code, const SupportSet& s, std::uint64_t node_limit = 10'000'000);

/// Columns of a binary matrix read as a (t, n, 2) code. Throws on duplicate columns.
QaryCode columns_as_code(const BinaryMatrix& m);

/// One-hot expansion: symbol v at coordinate i becomes a 1 in row i*q + v
/// (0-based) of a tq x n matrix.
BinaryMatrix concatenate(const QaryCode& code);

}  // namespace ssm
