#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hopfelim/elimination.hpp"
#include "hopfelim/free_lie.hpp"
#include "hopfelim/tensor.hpp"

namespace hopfelim {

// Seeded generator of random algebra elements for property checks.
// Coefficients are small nonzero rationals.
class RandomElements {
 public:
  explicit RandomElements(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational coefficient();
  Word word(std::span<const LetterId> letters, int min_len, int max_len);

  // Sum of `terms` random words with lengths in [0, max_degree].
  TensorElement element(const AlphabetPtr& alphabet, std::span<const LetterId> letters, int max_degree,
                        int terms);
  // Random combination of Lyndon words of degree in [1, max_degree].
  LiePolynomial lie(const AlphabetPtr& alphabet, int max_degree, int terms);
  // Random pairs (U-word, W-word) whose total degree is at most max_degree.
  SmashElement smash(const MixedAlgebra& alg, int max_degree, int terms);

 private:
  std::mt19937_64 rng_;
};

std::vector<LetterId> all_letters(const Alphabet& a);
std::vector<LetterId> w_letters(const MixedAlgebra& alg);

// Every word over `letters` of length <= max_len, shortest first.
std::vector<Word> all_words(std::span<const LetterId> letters, int max_len);

}  // namespace hopfelim
