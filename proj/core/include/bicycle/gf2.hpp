#pragma once

// Bit-packed vectors and matrices over GF(2).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bicycle {

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length)
      : length_(length), words_(word_count(length), 0) {}

  /// Parses a string of '0'/'1' characters; throws InputError otherwise.
  static BitVector from_string(std::string_view bits);
  static BitVector unit(std::size_t length, std::size_t index);
  static BitVector ones(std::size_t length);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept {
    words_[i / kWordBits] ^= word_type{1} << (i % kWordBits);
  }

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }

  std::vector<std::size_t> support() const;
  std::string to_string() const;

  BitVector& operator^=(const BitVector& other) noexcept;
  BitVector& operator&=(const BitVector& other) noexcept;
  BitVector& operator|=(const BitVector& other) noexcept;

  friend BitVector operator^(BitVector a, const BitVector& b) noexcept { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) noexcept { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) noexcept { return a |= b; }
  BitVector operator~() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  std::span<const word_type> words() const noexcept { return words_; }
  std::span<word_type> words() noexcept { return words_; }

  static constexpr std::size_t word_count(std::size_t length) noexcept {
    return (length + kWordBits - 1) / kWordBits;
  }

 private:
  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

/// |supp(a) ∩ supp(b)|.
std::size_t intersection_count(const BitVector& a, const BitVector& b) noexcept;

/// Standard inner product over GF(2).
inline bool dot(const BitVector& a, const BitVector& b) noexcept {
  return intersection_count(a, b) & 1u;
}

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}
  /// Throws InputError if some row does not have `cols` entries.
  BitMatrix(std::size_t cols, std::vector<BitVector> rows);

  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix from_strings(std::span<const std::string> rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const BitVector& row(std::size_t i) const noexcept { return rows_[i]; }
  BitVector& row(std::size_t i) noexcept { return rows_[i]; }
  const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

  bool operator()(std::size_t i, std::size_t j) const noexcept { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept { rows_[i].set(j, value); }

  /// Throws InputError on a length mismatch.
  void append_row(BitVector row);

  BitMatrix transpose() const;
  bool is_symmetric() const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RowEchelon {
  BitMatrix reduced;                // zero rows removed
  std::vector<std::size_t> pivots;  // strictly increasing

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form. Pivot search takes the leftmost column and the
/// topmost available row, so the result is canonical for the row space.
RowEchelon rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Rows form a basis of {x : Mx = 0}.
BitMatrix kernel_basis(const BitMatrix& m);

/// A Aᵀ.
BitMatrix gram(const BitMatrix& a);

/// M x; throws InputError unless x.size() == m.cols().
BitVector apply(const BitMatrix& m, const BitVector& x);

/// A B; throws InputError on a shape mismatch.
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

/// Sum of the rows of `m` selected by `coefficients`.
BitVector combine(const BitMatrix& m, const BitVector& coefficients);

}  // namespace bicycle
