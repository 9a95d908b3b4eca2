#pragma once

#include <map>

#include "hopfelim/error.hpp"
#include "hopfelim/lincomb.hpp"
#include "hopfelim/tensor.hpp"
#include "hopfelim/words.hpp"

namespace hopfelim {

/// Element of a free Lie algebra in the Lyndon basis. Each key is a Lyndon
/// word and stands for its standard bracketing.
class LiePolynomial {
 public:
  explicit LiePolynomial(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  // Throws InvalidArgument if a key is not a Lyndon word.
  LiePolynomial(AlphabetPtr alphabet, LinComb<Word> body);

  static LiePolynomial generator(AlphabetPtr alphabet, LetterId id, const Rational& c = 1);
  static LiePolynomial lyndon(AlphabetPtr alphabet, Word w, const Rational& c = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const LinComb<Word>& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  std::size_t size() const { return body_.size(); }
  auto begin() const { return body_.begin(); }
  auto end() const { return body_.end(); }
  Rational coefficient(const Word& w) const { return body_.coefficient(w); }

  LiePolynomial& operator+=(const LiePolynomial& o);
  LiePolynomial& operator-=(const LiePolynomial& o);
  LiePolynomial& operator*=(const Rational& c) {
    body_ *= c;
    return *this;
  }
  friend LiePolynomial operator+(LiePolynomial a, const LiePolynomial& b) { return a += b; }
  friend LiePolynomial operator-(LiePolynomial a, const LiePolynomial& b) { return a -= b; }
  friend LiePolynomial operator-(LiePolynomial a) { return a *= Rational(-1); }
  friend LiePolynomial operator*(const Rational& c, LiePolynomial a) { return a *= c; }
  friend bool operator==(const LiePolynomial& a, const LiePolynomial& b) {
    return same_alphabet(a.alphabet_, b.alphabet_) && a.body_ == b.body_;
  }

 private:
  AlphabetPtr alphabet_;
  LinComb<Word> body_;
};

/// Raised by lie_extract when its input is not in the free Lie algebra.
class NotALieElementError : public Error {
 public:
  explicit NotALieElementError(TensorElement residual)
      : Error(ErrorKind::NotALieElement, "element is not a Lie polynomial"), residual_(std::move(residual)) {}

  // The part left after eliminating every Lyndon leading term.
  const TensorElement& residual() const { return residual_; }

 private:
  TensorElement residual_;
};

// Commutator expansion of a single Lyndon word's standard bracketing.
TensorElement expand_lyndon(const AlphabetPtr& alphabet, const Word& w);

TensorElement expand(const LiePolynomial& x);

/// Lyndon-basis coordinates of t, read off by triangular elimination: the
/// expansion of a Lyndon word w is w plus lexicographically larger words of
/// the same multidegree. Throws NotALieElementError with the residual.
LiePolynomial lie_extract(const TensorElement& t);

LiePolynomial bracket(const LiePolynomial& x, const LiePolynomial& y);

/// True iff Delta(t) = t (x) 1 + 1 (x) t.
bool is_primitive(const TensorElement& t);

}  // namespace hopfelim
