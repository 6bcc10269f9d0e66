#include "riscf/rng.hpp"

#include <cmath>

namespace riscf {

Rng make_rng(std::uint64_t seed) { return Rng(seed); }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer on the combined word
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Complex standard_complex_gaussian(Rng& rng) {
  static constexpr double kInvSqrt2 = 0.7071067811865475244;
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return Complex(re * kInvSqrt2, im * kInvSqrt2);
}

CVector complex_gaussian_vector(int n, Rng& rng) {
  CVector out(n);
  fill_complex_gaussian(out, rng);
  return out;
}

void fill_complex_gaussian(CVector& out, Rng& rng) {
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out(i) = standard_complex_gaussian(rng);
  }
}

}  // namespace riscf
