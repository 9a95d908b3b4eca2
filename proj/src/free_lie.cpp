#include "hopfelim/free_lie.hpp"

namespace hopfelim {

LiePolynomial::LiePolynomial(AlphabetPtr alphabet, LinComb<Word> body)
    : alphabet_(std::move(alphabet)), body_(std::move(body)) {
  for (const auto& [w, c] : body_) {
    if (w.empty() || !alphabet_->contains(w) || !is_lyndon(w)) {
      throw Error(ErrorKind::InvalidArgument, "Lie polynomial keys must be Lyndon words");
    }
  }
}

LiePolynomial LiePolynomial::generator(AlphabetPtr alphabet, LetterId id, const Rational& c) {
  return lyndon(std::move(alphabet), Word{id}, c);
}

LiePolynomial LiePolynomial::lyndon(AlphabetPtr alphabet, Word w, const Rational& c) {
  return LiePolynomial(std::move(alphabet), LinComb<Word>::term(std::move(w), c));
}

LiePolynomial& LiePolynomial::operator+=(const LiePolynomial& o) {
  require_same_alphabet(alphabet_, o.alphabet_);
  body_ += o.body_;
  return *this;
}

LiePolynomial& LiePolynomial::operator-=(const LiePolynomial& o) {
  require_same_alphabet(alphabet_, o.alphabet_);
  body_ -= o.body_;
  return *this;
}

namespace {

using ExpansionCache = std::map<Word, LinComb<Word>>;

const LinComb<Word>& expand_cached(const Word& w, ExpansionCache& cache) {
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  LinComb<Word> out;
  if (w.size() == 1) {
    out.add(w, 1);
  } else {
    auto [u, v] = standard_factorization(w);
    const LinComb<Word>& eu = expand_cached(u, cache);
    const LinComb<Word>& ev = expand_cached(v, cache);
    for (const auto& [a, ca] : eu) {
      for (const auto& [b, cb] : ev) {
        out.add(a + b, ca * cb);
        out.add(b + a, -(ca * cb));
      }
    }
  }
  return cache.emplace(w, std::move(out)).first->second;
}

}  // namespace

TensorElement expand_lyndon(const AlphabetPtr& alphabet, const Word& w) {
  if (w.empty() || !is_lyndon(w)) throw Error(ErrorKind::InvalidArgument, "expand_lyndon needs a Lyndon word");
  ExpansionCache cache;
  return TensorElement(alphabet, expand_cached(w, cache));
}

TensorElement expand(const LiePolynomial& x) {
  ExpansionCache cache;
  LinComb<Word> out;
  for (const auto& [w, c] : x) out.add_scaled(expand_cached(w, cache), c);
  return TensorElement(x.alphabet(), std::move(out));
}

LiePolynomial lie_extract(const TensorElement& t) {
  ExpansionCache cache;
  LinComb<Word> remaining = t.body();
  LinComb<Word> coords;
  TensorElement residual(t.alphabet());
  while (!remaining.is_zero()) {
    const Word lead = remaining.begin()->first;
    const Rational c = remaining.begin()->second;
    if (!lead.empty() && is_lyndon(lead)) {
      coords.add(lead, c);
      remaining.add_scaled(expand_cached(lead, cache), -c);
    } else {
      // Later subtractions only touch words larger than some Lyndon word
      // that is itself larger than `lead`, so this term is final.
      residual.add(lead, c);
      remaining.erase(lead);
    }
  }
  if (!residual.is_zero()) throw NotALieElementError(std::move(residual));
  return LiePolynomial(t.alphabet(), std::move(coords));
}

LiePolynomial bracket(const LiePolynomial& x, const LiePolynomial& y) {
  require_same_alphabet(x.alphabet(), y.alphabet());
  const TensorElement ex = expand(x);
  const TensorElement ey = expand(y);
  return lie_extract(ex * ey - ey * ex);
}

bool is_primitive(const TensorElement& t) {
  const TensorElement one = TensorElement::one(t.alphabet());
  return coproduct(t) == tensor(t, one) + tensor(one, t);
}

}  // namespace hopfelim
