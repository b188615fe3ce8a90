#include "bicycle/gaussian.hpp"

namespace bicycle {

std::string GaussianInteger::to_string() const {
  if (im_ == 0) return re_.str();
  std::string out;
  if (re_ != 0) out = re_.str();
  const BigInt mag = im_ < 0 ? BigInt(-im_) : im_;
  if (im_ < 0) {
    out += '-';
  } else if (re_ != 0) {
    out += '+';
  }
  if (mag != 1) out += mag.str();
  out += 'i';
  return out;
}

GaussianInteger pow(GaussianInteger base, unsigned exponent) {
  GaussianInteger result(1);
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

GaussianInteger i_pow(long long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::optional<GaussianInteger> sqrt2_polar(unsigned d, unsigned octant) {
  octant %= 8;
  if ((d + octant) % 2 != 0) return std::nullopt;
  if (octant % 2 == 0) {
    return GaussianInteger(BigInt(1) << (d / 2)) * i_pow(octant / 2);
  }
  // e^{ιπk/4} = (1 + ι) ι^{(k-1)/2} / √2 for odd k.
  return GaussianInteger(BigInt(1) << ((d - 1) / 2)) * GaussianInteger(1, 1) *
         i_pow((octant - 1) / 2);
}

}  // namespace bicycle
