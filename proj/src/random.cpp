#include "hopfelim/random.hpp"

#include <map>

namespace hopfelim {

Rational RandomElements::coefficient() {
  static constexpr int kDenominators[] = {1, 1, 1, 2, 3};
  int num = uniform(1, 3) * (uniform(0, 1) == 0 ? -1 : 1);
  int den = kDenominators[uniform(0, 4)];
  return Rational(num, den);
}

Word RandomElements::word(std::span<const LetterId> letters, int min_len, int max_len) {
  Word w;
  if (letters.empty()) return w;
  const int len = uniform(min_len, max_len);
  for (int i = 0; i < len; ++i) w.push_back(letters[static_cast<std::size_t>(uniform(0, static_cast<int>(letters.size()) - 1))]);
  return w;
}

TensorElement RandomElements::element(const AlphabetPtr& alphabet, std::span<const LetterId> letters,
                                      int max_degree, int terms) {
  TensorElement x(alphabet);
  for (int i = 0; i < terms; ++i) x.add(word(letters, 0, max_degree), coefficient());
  return x;
}

LiePolynomial RandomElements::lie(const AlphabetPtr& alphabet, int max_degree, int terms) {
  std::map<int, std::vector<Word>> by_degree;
  for (auto& w : lyndon_words(*alphabet, max_degree)) by_degree[alphabet->degree(w)].push_back(std::move(w));
  LinComb<Word> body;
  for (int i = 0; i < terms; ++i) {
    auto it = by_degree.begin();
    std::advance(it, uniform(0, static_cast<int>(by_degree.size()) - 1));
    const auto& words = it->second;
    body.add(words[static_cast<std::size_t>(uniform(0, static_cast<int>(words.size()) - 1))], coefficient());
  }
  return LiePolynomial(alphabet, std::move(body));
}

SmashElement RandomElements::smash(const MixedAlgebra& alg, int max_degree, int terms) {
  const std::vector<LetterId> ws = w_letters(alg);
  SmashElement p;
  for (int i = 0; i < terms; ++i) {
    const int total = uniform(0, max_degree);
    const int w_len = alg.v_count() == 0 ? total : uniform(0, total);
    int budget = total - w_len;
    Word u_word;
    while (budget > 0) {
      const int m = ws.empty() ? 0 : uniform(0, budget - 1);
      const Word alpha = word(ws, m, m);
      const auto v = alg.v_letter(static_cast<std::size_t>(uniform(0, static_cast<int>(alg.v_count()) - 1)));
      u_word.push_back(alg.u_letter(alpha, v));
      budget -= m + 1;
    }
    p.add(WordPair{std::move(u_word), word(ws, w_len, w_len)}, coefficient());
  }
  return p;
}

std::vector<LetterId> all_letters(const Alphabet& a) {
  std::vector<LetterId> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<LetterId>(i);
  return out;
}

std::vector<LetterId> w_letters(const MixedAlgebra& alg) {
  std::vector<LetterId> out;
  for (std::size_t i = 0; i < alg.w_count(); ++i) out.push_back(alg.w_letter(i));
  return out;
}

std::vector<Word> all_words(std::span<const LetterId> letters, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (LetterId l : letters) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace hopfelim
