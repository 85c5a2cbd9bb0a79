#pragma once

// Binary testing matrices and the Boolean-vector algebra used by every
// checker, decoder and search routine in this library.
//
// Columns are items and rows are tests. Each column is stored as a run of
// packed 64-bit words so that OR and cover tests are word-parallel.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

namespace bits {

// Word-span helpers. Callers guarantee equal lengths and zeroed padding bits.

inline void or_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

/// True when every 1 of `b` is also a 1 of `a`.
inline bool covers(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (b[w] & ~a[w]) return false;
  return true;
}

inline bool any(std::span<const Word> a) {
  for (Word w : a)
    if (w) return true;
  return false;
}

inline bool equal(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] != b[w]) return false;
  return true;
}

}  // namespace bits

/// A 0/1 vector of fixed length t >= 1. Position i is 0-based here; reports
/// and file formats number tests from 1.
class BooleanVector {
 public:
  explicit BooleanVector(std::size_t length);

  /// Parses a string over {0,1}; position 0 is the first character.
  static BooleanVector from_string(std::string_view text);
  static BooleanVector from_words(std::size_t length, std::span<const Word> words);

  std::size_t size() const { return length_; }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true);

  std::size_t count() const;
  bool none() const { return !bits::any(words_); }

  std::span<const Word> words() const { return words_; }

  BooleanVector& operator|=(const BooleanVector& other);
  BooleanVector& operator&=(const BooleanVector& other);
  friend BooleanVector operator|(BooleanVector a, const BooleanVector& b) { return a |= b; }
  friend BooleanVector operator&(BooleanVector a, const BooleanVector& b) { return a &= b; }
  friend bool operator==(const BooleanVector&, const BooleanVector&) = default;

  std::string to_string() const;

 private:
  std::size_t length_;
  std::vector<Word> words_;
};

/// True iff support(b) is a subset of support(a). Throws on length mismatch.
bool covers(const BooleanVector& a, const BooleanVector& b);

/// Sorted set of distinct 1-based item indices.
class SupportSet {
 public:
  SupportSet() = default;
  SupportSet(std::initializer_list<std::size_t> items);
  explicit SupportSet(std::vector<std::size_t> items);

  /// Builds a support set from 0-based column positions.
  static SupportSet from_zero_based(std::span<const std::size_t> positions);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(std::size_t item) const;
  const std::vector<std::size_t>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
  friend auto operator<=>(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<std::size_t> items_;
};

/// A t x n matrix over {0,1}. Duplicate and all-zero columns are allowed;
/// the property checkers report them as violations.
class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t tests, std::size_t items);
  explicit BinaryMatrix(std::span<const BooleanVector> columns);

  /// Builds from row strings; row i character j is the entry of item j in test i.
  static BinaryMatrix from_rows(std::span<const std::string> rows);
  static BinaryMatrix identity(std::size_t n);

  std::size_t tests() const { return tests_; }
  std::size_t items() const { return items_; }
  std::size_t words_per_column() const { return stride_; }

  bool entry(std::size_t row, std::size_t col) const {
    return (data_[col * stride_ + row / kWordBits] >> (row % kWordBits)) & 1U;
  }
  void set(std::size_t row, std::size_t col, bool value = true);

  /// 0-based column access.
  std::span<const Word> column_words(std::size_t col) const {
    return {data_.data() + col * stride_, stride_};
  }
  BooleanVector column(std::size_t col) const;

  /// Copy of this matrix restricted to the given 0-based columns, in order.
  BinaryMatrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::span<Word> mutable_column(std::size_t col) { return {data_.data() + col * stride_, stride_}; }

  std::size_t tests_;
  std::size_t items_;
  std::size_t stride_;
  std::vector<Word> data_;
};

/// Coordinate-wise OR of the columns named by `s`.
/// Throws Error("empty support") or Error("bad index").
BooleanVector boolean_sum(const BinaryMatrix& m, const SupportSet& s);

}  // namespace ssm
