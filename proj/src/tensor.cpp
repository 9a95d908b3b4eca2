#include "hopfelim/tensor.hpp"

#include <algorithm>
#include <string>

#include "hopfelim/error.hpp"

namespace hopfelim {

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw Error(ErrorKind::AlphabetMismatch, "operands use different alphabets");
}

TensorElement::TensorElement(AlphabetPtr alphabet, LinComb<Word> body)
    : alphabet_(std::move(alphabet)), body_(std::move(body)) {
  for (const auto& [w, c] : body_) {
    if (!alphabet_->contains(w)) throw Error(ErrorKind::InvalidArgument, "word uses letters outside its alphabet");
  }
}

TensorElement TensorElement::scalar(AlphabetPtr alphabet, const Rational& c) {
  TensorElement r(std::move(alphabet));
  r.add(Word{}, c);
  return r;
}

TensorElement TensorElement::letter(AlphabetPtr alphabet, LetterId id, const Rational& c) {
  if (id >= alphabet->size()) throw Error(ErrorKind::InvalidArgument, "letter id out of range");
  TensorElement r(std::move(alphabet));
  r.add(Word{id}, c);
  return r;
}

TensorElement TensorElement::word(AlphabetPtr alphabet, Word w, const Rational& c) {
  if (!alphabet->contains(w)) throw Error(ErrorKind::InvalidArgument, "word uses letters outside its alphabet");
  TensorElement r(std::move(alphabet));
  r.add(std::move(w), c);
  return r;
}

TensorElement TensorElement::word(AlphabetPtr alphabet, std::string_view text, const Rational& c) {
  Word w = alphabet->word(text);
  return word(std::move(alphabet), std::move(w), c);
}

int TensorElement::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : body_) d = std::max(d, alphabet_->degree(w));
  return d;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_same_alphabet(alphabet_, o.alphabet_);
  body_ += o.body_;
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_same_alphabet(alphabet_, o.alphabet_);
  body_ -= o.body_;
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) { return concat_product(a, b); }

TensorPair& TensorPair::operator+=(const TensorPair& o) {
  require_same_alphabet(alphabet_, o.alphabet_);
  body_ += o.body_;
  return *this;
}

TensorPair& TensorPair::operator-=(const TensorPair& o) {
  require_same_alphabet(alphabet_, o.alphabet_);
  body_ -= o.body_;
  return *this;
}

TensorPair operator*(const TensorPair& a, const TensorPair& b) {
  require_same_alphabet(a.alphabet_, b.alphabet_);
  TensorPair out(a.alphabet_);
  for (const auto& [p, c] : a.body_) {
    for (const auto& [q, d] : b.body_) out.add(WordPair{p.first + q.first, p.second + q.second}, c * d);
  }
  return out;
}

TensorPair tensor(const TensorElement& x, const TensorElement& y) {
  require_same_alphabet(x.alphabet(), y.alphabet());
  TensorPair out(x.alphabet());
  for (const auto& [u, c] : x) {
    for (const auto& [v, d] : y) out.add(WordPair{u, v}, c * d);
  }
  return out;
}

TensorElement concat_product(const TensorElement& x, const TensorElement& y, Exec exec) {
  require_same_alphabet(x.alphabet(), y.alphabet());
  return sum_over_terms(
      x.body(),
      [&](const Word& u, const Rational& c) {
        TensorElement part(x.alphabet());
        for (const auto& [v, d] : y) part.add(u + v, c * d);
        return part;
      },
      TensorElement(x.alphabet()), exec);
}

namespace {

// Calls f(left, right) for each of the 2^n splittings of w into the
// subword on a subset of positions and the subword on its complement.
template <class F>
void for_each_unshuffle(const Word& w, F&& f) {
  const std::size_t n = w.size();
  if (n >= 63) throw Error(ErrorKind::DegreeCapExceeded, "word too long for unshuffle enumeration");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Word left, right;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        left.push_back(w[i]);
      } else {
        right.push_back(w[i]);
      }
    }
    f(std::move(left), std::move(right));
  }
}

}  // namespace

TensorPair coproduct(const TensorElement& x, Exec exec) {
  return sum_over_terms(
      x.body(),
      [&](const Word& w, const Rational& c) {
        TensorPair part(x.alphabet());
        for_each_unshuffle(w, [&](Word l, Word r) { part.add(WordPair{std::move(l), std::move(r)}, c); });
        return part;
      },
      TensorPair(x.alphabet()), exec);
}

Rational counit(const TensorElement& x) { return x.coefficient(Word{}); }

TensorElement antipode(const TensorElement& x) {
  TensorElement out(x.alphabet());
  for (const auto& [w, c] : x) out.add(w.reversed(), w.size() % 2 == 0 ? c : -c);
  return out;
}

LinComb<WordTuple> n_fold_diagonal(const TensorElement& x, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n-fold diagonal needs n >= 1");
  const std::size_t slots = static_cast<std::size_t>(n) + 1;
  LinComb<WordTuple> out;
  for (const auto& [w, c] : x) {
    // Enumerate assignments of positions to slots as base-(n+1) counters.
    std::vector<std::size_t> colour(w.size(), 0);
    while (true) {
      WordTuple tuple(slots);
      for (std::size_t i = 0; i < w.size(); ++i) tuple[colour[i]].push_back(w[i]);
      out.add(std::move(tuple), c);
      std::size_t i = 0;
      while (i < colour.size() && ++colour[i] == slots) colour[i++] = 0;
      if (i == colour.size()) break;
    }
  }
  return out;
}

bool in_hopf_subalgebra(const TensorElement& h) {
  const Alphabet& a = *h.alphabet();
  for (const auto& [w, c] : h) {
    for (LetterId l : w) {
      if (a.part(l) != Part::W) return false;
    }
  }
  return true;
}

TensorElement adjoint_action(const TensorElement& h, const TensorElement& c, Exec exec) {
  require_same_alphabet(h.alphabet(), c.alphabet());
  if (!in_hopf_subalgebra(h)) {
    throw Error(ErrorKind::NotInHopfSubalgebra, "adjoint action needs an element of the W-letter subalgebra");
  }
  return sum_over_terms(
      h.body(),
      [&](const Word& hw, const Rational& hc) {
        TensorElement part(c.alphabet());
        for_each_unshuffle(hw, [&](Word first, Word second) {
          // h1 c S(h2) with S(h2) = (-1)^|h2| reverse(h2)
          const Rational sign = second.size() % 2 == 0 ? hc : -hc;
          const Word tail = second.reversed();
          for (const auto& [cw, cc] : c) part.add(first + cw + tail, sign * cc);
        });
        return part;
      },
      TensorElement(c.alphabet()), exec);
}

TensorElement multiply_slots(const TensorPair& p) {
  TensorElement out(p.alphabet());
  for (const auto& [pair, c] : p) out.add(pair.first + pair.second, c);
  return out;
}

}  // namespace hopfelim
