#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bicycle {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element re + im·ι of ℤ[ι].
class GaussianInteger {
 public:
  GaussianInteger() = default;
  GaussianInteger(BigInt re, BigInt im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianInteger(long long re, long long im = 0) : re_(re), im_(im) {}
  GaussianInteger(int re, int im = 0) : re_(re), im_(im) {}

  static GaussianInteger i() { return {0, 1}; }

  const BigInt& re() const noexcept { return re_; }
  const BigInt& im() const noexcept { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  GaussianInteger conj() const { return {re_, -im_}; }
  /// re² + im², the squared modulus.
  BigInt norm() const { return re_ * re_ + im_ * im_; }

  GaussianInteger& operator+=(const GaussianInteger& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianInteger& operator-=(const GaussianInteger& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianInteger& operator*=(const GaussianInteger& o) {
    BigInt re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }

  friend GaussianInteger operator+(GaussianInteger a, const GaussianInteger& b) { return a += b; }
  friend GaussianInteger operator-(GaussianInteger a, const GaussianInteger& b) { return a -= b; }
  friend GaussianInteger operator*(GaussianInteger a, const GaussianInteger& b) { return a *= b; }
  GaussianInteger operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "a+bi" style: "0", "-1", "i", "-1+i", "3-2i".
  std::string to_string() const;

 private:
  BigInt re_ = 0;
  BigInt im_ = 0;
};

GaussianInteger pow(GaussianInteger base, unsigned exponent);

/// ι^k for any integer k.
GaussianInteger i_pow(long long k);

/// √2^d · e^{ιπ·octant/4} when d + octant is even (the value then lies in
/// ℤ[ι]); std::nullopt otherwise.
std::optional<GaussianInteger> sqrt2_polar(unsigned d, unsigned octant);

}  // namespace bicycle
