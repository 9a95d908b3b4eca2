#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfelim/exec.hpp"
#include "hopfelim/free_lie.hpp"
#include "hopfelim/lincomb.hpp"
#include "hopfelim/tensor.hpp"
#include "hopfelim/words.hpp"

namespace hopfelim {

// Elements of A(T(W), V), represented inside T(V + W).
using MixedElement = TensorElement;

/// A mixed word h1 v1 h2 v2 ... hn vn h(n+1) split at its V-letters.
/// blocks.size() == v_letters.size() + 1; blocks hold W-letters only.
struct BlockForm {
  std::vector<Word> blocks;
  std::vector<LetterId> v_letters;
};

/// Basis element h1 (x) v (x) h2 of H (x) V (x) H.
struct Triple {
  Word left;
  LetterId v = 0;
  Word right;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

using TripleComb = LinComb<Triple>;

/// Free module generator u = alpha . v of T(W) . V.
struct UGenerator {
  LetterId id = 0;
  Word alpha;
  LetterId v = 0;
  int degree = 1;
  TensorElement expansion;
};

/// Element of T(T(W).V) # T(W): pairs (U-word, W-word). U-words use
/// U-letter ids of the owning MixedAlgebra; W-words use mixed-alphabet ids.
class SmashElement {
 public:
  SmashElement() = default;
  explicit SmashElement(LinComb<WordPair> body) : body_(std::move(body)) {}

  const LinComb<WordPair>& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  std::size_t size() const { return body_.size(); }
  auto begin() const { return body_.begin(); }
  auto end() const { return body_.end(); }
  Rational coefficient(const WordPair& p) const { return body_.coefficient(p); }
  void add(const WordPair& p, const Rational& c) { body_.add(p, c); }
  void add(WordPair&& p, const Rational& c) { body_.add(std::move(p), c); }

  SmashElement& operator+=(const SmashElement& o) {
    body_ += o.body_;
    return *this;
  }
  SmashElement& operator-=(const SmashElement& o) {
    body_ -= o.body_;
    return *this;
  }
  friend SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
  friend SmashElement operator-(SmashElement a, const SmashElement& b) { return a -= b; }
  friend bool operator==(const SmashElement&, const SmashElement&) = default;

 private:
  LinComb<WordPair> body_;
};

/// The algebra A(T(W), V) ~ T(V + W) for fixed generator sets, together
/// with the graded alphabet U of free generators u = alpha . v.
///
/// U-letters are numbered by (degree, alpha lexicographic, v order); the id
/// is computed arithmetically, so U-words of any degree can be formed. A
/// materialized U Alphabet (needed for Lyndon machinery over U) is built
/// lazily up to `u_degree_cap`.
class MixedAlgebra {
 public:
  MixedAlgebra(const std::vector<std::string>& v_symbols, const std::vector<std::string>& w_symbols,
               int u_degree_cap = 8);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t v_count() const { return v_count_; }
  std::size_t w_count() const { return w_count_; }
  LetterId v_letter(std::size_t i) const { return static_cast<LetterId>(i); }
  LetterId w_letter(std::size_t i) const { return static_cast<LetterId>(v_count_ + i); }
  bool is_v(LetterId l) const { return l < v_count_; }
  bool is_w(LetterId l) const { return l >= v_count_ && l < v_count_ + w_count_; }

  // Number of V-letters in w: the grading of A.
  int grade(const Word& w) const;
  BlockForm blocks(const Word& w) const;
  Word join(const BlockForm& b) const;

  LetterId u_letter(const Word& alpha, LetterId v) const;
  std::pair<Word, LetterId> u_definition(LetterId u) const;
  int u_degree(LetterId u) const;
  std::string u_symbol(LetterId u) const;
  // Reads "u[alpha]" or "u[alpha;v]"; nullopt if text is not a U symbol.
  std::optional<LetterId> parse_u_symbol(std::string_view text) const;
  // Number of U-letters of degree <= d.
  std::uint64_t u_count_up_to(int d) const;

  int u_degree_cap() const { return u_degree_cap_; }
  // Materialized U alphabet covering degree <= u_degree_cap. Requests for
  // a larger degree throw DegreeCapExceeded.
  AlphabetPtr u_alphabet(int needed_degree) const;
  AlphabetPtr u_alphabet() const { return u_alphabet(u_degree_cap_); }

  // alpha . v computed by the adjoint action.
  TensorElement u_expansion(LetterId u) const;

 private:
  struct Lazy;

  AlphabetPtr alphabet_;
  std::size_t v_count_ = 0;
  std::size_t w_count_ = 0;
  int u_degree_cap_ = 8;
  bool compact_alpha_ = true;
  std::shared_ptr<Lazy> lazy_;
};

/// i(h (x) v) = sum h_(1) v S(h_(2)), an element of grade 1.
MixedElement map_i(const MixedAlgebra& alg, const TensorElement& h, LetterId v);

/// i1(h1 (x) v (x) h2) = sum h1_(1) v S(h1_(2)) h2.
MixedElement map_i1(const MixedAlgebra& alg, const TensorElement& h1, LetterId v, const TensorElement& h2);

/// j1(h1 (x) v (x) h2) = sum h1_(1) (x) v (x) h1_(2) h2, kept as triples.
TripleComb map_j1(const MixedAlgebra& alg, const TensorElement& h1, LetterId v, const TensorElement& h2);

// The identification of grade-1 elements with H (x) V (x) H.
TripleComb to_triples(const MixedAlgebra& alg, const MixedElement& x);
MixedElement from_triples(const MixedAlgebra& alg, const TripleComb& t);

/// The graded automorphism: on h1 v1 ... hn vn h(n+1) it returns
/// (h1 . v1)(h2 . v2)...(hn . vn) h(n+1). Identity on grade 0.
MixedElement map_I(const MixedAlgebra& alg, const MixedElement& x, Exec exec = Exec::parallel);

/// Two-sided inverse of map_I, built from j1 applied block by block from
/// the left.
MixedElement map_J(const MixedAlgebra& alg, const MixedElement& x, Exec exec = Exec::parallel);

/// All u = alpha . v with |alpha| + 1 <= max_degree, in U-letter order.
std::vector<UGenerator> free_generators(const MixedAlgebra& alg, int max_degree);

/// Coordinates of x in the basis {u-word * W-word}.
SmashElement smash_normal_form(const MixedAlgebra& alg, const MixedElement& x, Exec exec = Exec::parallel);

/// Multiplies out U-expansions and the trailing W-word; inverse of
/// smash_normal_form.
MixedElement embed_smash(const MixedAlgebra& alg, const SmashElement& p, Exec exec = Exec::parallel);

// Embedding of T(U) into A; `t` is over alg.u_alphabet(...).
MixedElement embed_u(const MixedAlgebra& alg, const TensorElement& t);

/// Action of a W-word on a U-word inside T(T(W).V): the diagonal of the
/// W-word distributes over the U-letters and beta . u(alpha, v) = u(beta alpha, v).
LinComb<Word> smash_act(const MixedAlgebra& alg, const Word& beta, const Word& u_word);

/// (a1 # b1)(a2 # b2) = sum a1 (b1_(1) . a2) # b1_(2) b2.
SmashElement smash_multiply(const MixedAlgebra& alg, const SmashElement& p, const SmashElement& q);

struct Elimination {
  LiePolynomial x_u;  // over alg.u_alphabet()
  LiePolynomial x_w;  // over alg.alphabet(), W-letters only
};

/// Splits x in F(V + W) as embed(x_u) + x_w with x_u in F(T(W).V) and
/// x_w in F(W). Throws DecompositionFailure if the split cannot be formed,
/// which would indicate a bug.
Elimination eliminate_lie(const MixedAlgebra& alg, const LiePolynomial& x);

struct DimensionRow {
  int degree = 0;
  std::int64_t lhs = 0;  // dim F(V + W)_n
  std::int64_t f_w = 0;  // dim F(W)_n
  std::int64_t f_u = 0;  // dim F(U)_n
  std::int64_t rhs() const { return f_w + f_u; }
};

/// Degree-by-degree comparison of dim F(V + W) with dim F(W) + dim F(U).
std::vector<DimensionRow> bigraded_dimension_audit(int v_count, int w_count, int max_total_degree,
                                                   Exec exec = Exec::parallel);

}  // namespace hopfelim
