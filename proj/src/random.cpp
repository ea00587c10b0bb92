#include "freelp/random.hpp"

#include <random>

#include "freelp/error.hpp"

namespace freelp {

CoeffTensor random_tensor(int n, int d, int m, Alphabet alphabet, std::uint64_t seed,
                          double density, std::uint64_t index_cap) {
  if (!(density > 0.0 && density <= 1.0)) {
    fail(ErrorKind::invalid_argument, "density must lie in (0, 1]");
  }
  CoeffTensor t(n, d, m, alphabet);
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= static_cast<std::uint64_t>(t.alphabet_size());
    if (count > index_cap) fail(ErrorKind::too_large, "tensor has too many indices");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  for (const auto& index : all_indices(t.alphabet_size(), d)) {
    if (density < 1.0 && uniform(rng) >= density) continue;
    Matrix a(m, m);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        const double re = normal(rng);
        const double im = normal(rng);
        a(r, c) = Complex(re, im);
      }
    }
    t.set(index, a);
  }
  if (alphabet == Alphabet::signed_letters) t = apply_projection_Q(t);
  return t;
}

}  // namespace freelp
