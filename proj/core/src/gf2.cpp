#include "bicycle/gf2.hpp"

#include <algorithm>
#include <utility>

#include "bicycle/errors.hpp"

namespace bicycle {

namespace {

using word_type = BitVector::word_type;

void mask_tail(std::span<word_type> words, std::size_t length) {
  if (const std::size_t r = length % BitVector::kWordBits; r != 0 && !words.empty()) {
    words.back() &= (word_type{1} << r) - 1;
  }
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InputError("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  if (index >= length) throw InputError("unit vector index out of range");
  BitVector v(length);
  v.set(index);
  return v;
}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  std::fill(v.words_.begin(), v.words_.end(), ~word_type{0});
  mask_tail(v.words_, length);
  return v;
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

std::size_t BitVector::find_next(std::size_t from) const noexcept {
  if (from >= length_) return length_;
  std::size_t w = from / kWordBits;
  word_type word = words_[w] & (~word_type{0} << (from % kWordBits));
  while (true) {
    if (word != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
    }
    if (++w == words_.size()) return length_;
    word = words_[w];
  }
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_first(); i < length_; i = find_next(i + 1)) out.push_back(i);
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector v = *this;
  for (auto& w : v.words_) w = ~w;
  mask_tail(v.words_, length_);
  return v;
}

std::size_t intersection_count(const BitVector& a, const BitVector& b) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  const std::size_t n = std::min(wa.size(), wb.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  }
  return total;
}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows)
    : cols_(cols), rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != cols_) {
      throw InputError("row " + std::to_string(i) + " has " + std::to_string(rows_[i].size()) +
                       " entries, expected " + std::to_string(cols_));
    }
  }
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (auto r : rows) parsed.push_back(BitVector::from_string(r));
  const std::size_t cols = parsed.empty() ? 0 : parsed.front().size();
  return BitMatrix(cols, std::move(parsed));
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows, std::size_t cols) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  return BitMatrix(cols, std::move(parsed));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) throw InputError("appended row has the wrong length");
  rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    const BitVector& r = rows_[i];
    for (std::size_t j = r.find_first(); j < cols_; j = r.find_next(j + 1)) t.set(j, i);
  }
  return t;
}

bool BitMatrix::is_symmetric() const noexcept {
  if (rows() != cols_) return false;
  for (std::size_t i = 0; i < cols_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RowEchelon rref(const BitMatrix& m) {
  std::vector<BitVector> rows = m.row_vectors();
  std::vector<std::size_t> pivots;
  const std::size_t cols = m.cols();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t p = top;
    while (p < rows.size() && !rows[p].test(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[top], rows[p]);
    const std::size_t first_word = c / BitVector::kWordBits;
    const auto pivot_words = rows[top].words();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || !rows[r].test(c)) continue;
      auto w = rows[r].words();
      for (std::size_t k = first_word; k < w.size(); ++k) w[k] ^= pivot_words[k];
    }
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  return {BitMatrix(cols, std::move(rows)), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) {
  // Forward elimination only; the echelon form itself is discarded.
  std::vector<BitVector> rows = m.row_vectors();
  std::size_t top = 0;
  for (std::size_t c = 0; c < m.cols() && top < rows.size(); ++c) {
    std::size_t p = top;
    while (p < rows.size() && !rows[p].test(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[top], rows[p]);
    const std::size_t first_word = c / BitVector::kWordBits;
    const auto pivot_words = rows[top].words();
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      if (!rows[r].test(c)) continue;
      auto w = rows[r].words();
      for (std::size_t k = first_word; k < w.size(); ++k) w[k] ^= pivot_words[k];
    }
    ++top;
  }
  return top;
}

BitMatrix kernel_basis(const BitMatrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  BitMatrix basis(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector x(cols);
    x.set(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.reduced(i, f)) x.set(e.pivots[i]);
    }
    basis.append_row(std::move(x));
  }
  return basis;
}

BitMatrix gram(const BitMatrix& a) {
  const std::size_t k = a.rows();
  BitMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    g.set(i, i, a.row(i).count() & 1u);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (dot(a.row(i), a.row(j))) {
        g.set(i, j);
        g.set(j, i);
      }
    }
  }
  return g;
}

BitVector apply(const BitMatrix& m, const BitVector& x) {
  if (x.size() != m.cols()) {
    throw InputError("apply: vector length " + std::to_string(x.size()) +
                     " does not match matrix width " + std::to_string(m.cols()));
  }
  BitVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) y.set(i, dot(m.row(i), x));
  return y;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("multiply: inner dimensions differ");
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const BitVector& r = a.row(i);
    for (std::size_t k = r.find_first(); k < r.size(); k = r.find_next(k + 1)) {
      c.row(i) ^= b.row(k);
    }
  }
  return c;
}

BitVector combine(const BitMatrix& m, const BitVector& coefficients) {
  BitVector out(m.cols());
  for (std::size_t i = coefficients.find_first(); i < coefficients.size();
       i = coefficients.find_next(i + 1)) {
    out ^= m.row(i);
  }
  return out;
}

}  // namespace bicycle
