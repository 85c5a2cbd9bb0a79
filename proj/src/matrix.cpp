#include "ssm/matrix.hpp"

#include <algorithm>
#include <bit>

namespace ssm {

BooleanVector::BooleanVector(std::size_t length) : length_(length), words_(words_for(length), 0) {
  if (length == 0) throw Error("boolean vector must have length >= 1");
}

BooleanVector BooleanVector::from_string(std::string_view text) {
  BooleanVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      v.set(i);
    else if (text[i] != '0')
      throw Error("boolean vector: character '" + std::string(1, text[i]) + "' at position " +
                  std::to_string(i + 1) + " is not 0 or 1");
  }
  return v;
}

BooleanVector BooleanVector::from_words(std::size_t length, std::span<const Word> words) {
  BooleanVector v(length);
  if (words.size() != v.words_.size()) throw Error("boolean vector: word count mismatch");
  std::copy(words.begin(), words.end(), v.words_.begin());
  return v;
}

void BooleanVector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

std::size_t BooleanVector::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BooleanVector& BooleanVector::operator|=(const BooleanVector& other) {
  if (other.length_ != length_) throw Error("boolean vector: length mismatch");
  bits::or_into(words_, other.words_);
  return *this;
}

BooleanVector& BooleanVector::operator&=(const BooleanVector& other) {
  if (other.length_ != length_) throw Error("boolean vector: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::string BooleanVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

bool covers(const BooleanVector& a, const BooleanVector& b) {
  if (a.size() != b.size()) throw Error("covers: length mismatch");
  return bits::covers(a.words(), b.words());
}

SupportSet::SupportSet(std::initializer_list<std::size_t> items)
    : SupportSet(std::vector<std::size_t>(items)) {}

SupportSet::SupportSet(std::vector<std::size_t> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  if (!items_.empty() && items_.front() == 0) throw Error("bad index: item indices are 1-based");
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end())
    throw Error("support set: duplicate index");
}

SupportSet SupportSet::from_zero_based(std::span<const std::size_t> positions) {
  std::vector<std::size_t> items(positions.begin(), positions.end());
  for (auto& i : items) ++i;
  return SupportSet(std::move(items));
}

bool SupportSet::contains(std::size_t item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

BinaryMatrix::BinaryMatrix(std::size_t tests, std::size_t items)
    : tests_(tests), items_(items), stride_(words_for(tests)), data_(stride_ * items, 0) {
  if (tests == 0 || items == 0) throw Error("matrix must have t >= 1 and n >= 1");
}

BinaryMatrix::BinaryMatrix(std::span<const BooleanVector> columns)
    : BinaryMatrix(columns.empty() ? 0 : columns.front().size(), columns.size()) {
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != tests_) throw Error("matrix columns must share one length");
    std::copy(columns[j].words().begin(), columns[j].words().end(), mutable_column(j).begin());
  }
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const std::string> rows) {
  if (rows.empty()) throw Error("matrix must have t >= 1 and n >= 1");
  BinaryMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.items_) throw Error("inconsistent row lengths");
    for (std::size_t j = 0; j < m.items_; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw Error("matrix entries must be 0 or 1");
      if (c == '1') m.set(i, j);
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set(j, j);
  return m;
}

void BinaryMatrix::set(std::size_t row, std::size_t col, bool value) {
  const Word mask = Word{1} << (row % kWordBits);
  Word& w = data_[col * stride_ + row / kWordBits];
  w = value ? (w | mask) : (w & ~mask);
}

BooleanVector BinaryMatrix::column(std::size_t col) const {
  return BooleanVector::from_words(tests_, column_words(col));
}

BinaryMatrix BinaryMatrix::select_columns(std::span<const std::size_t> cols) const {
  BinaryMatrix out(tests_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    auto src = column_words(cols[k]);
    std::copy(src.begin(), src.end(), out.mutable_column(k).begin());
  }
  return out;
}

BooleanVector boolean_sum(const BinaryMatrix& m, const SupportSet& s) {
  if (s.empty()) throw Error("empty support");
  std::vector<Word> acc(m.words_per_column(), 0);
  for (std::size_t item : s) {
    if (item > m.items()) throw Error("bad index");
    bits::or_into(acc, m.column_words(item - 1));
  }
  return BooleanVector::from_words(m.tests(), acc);
}

}  // namespace ssm
