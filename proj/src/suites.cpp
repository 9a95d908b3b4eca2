#include "hopfelim/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "hopfelim/elimination.hpp"
#include "hopfelim/free_lie.hpp"
#include "hopfelim/random.hpp"
#include "hopfelim/tensor.hpp"

namespace hopfelim {

namespace {

// Runs pred(i) for i in [0, n) and records the first failure.
void check_each(SuiteResult& r, std::size_t n, const std::function<bool(std::size_t)>& pred, Exec exec,
                const std::string& what) {
  const auto ok = map_indices(n, [&](std::size_t i) { return pred(i) ? 1 : 0; }, exec);
  r.checks += n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ok[i]) {
      if (r.passed) r.detail = what + ": case " + std::to_string(i) + " of " + std::to_string(n) + " failed";
      r.passed = false;
      return;
    }
  }
}

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void note(SuiteResult& r, const std::string& text) {
  if (!r.passed) return;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += text;
}

MixedAlgebra two_by_two() { return MixedAlgebra({"v1", "v2"}, {"w1", "w2"}); }

std::vector<LetterId> v_letters(const MixedAlgebra& alg) {
  std::vector<LetterId> out;
  for (std::size_t i = 0; i < alg.v_count(); ++i) out.push_back(alg.v_letter(i));
  return out;
}

TensorElement word_of(const AlphabetPtr& a, const Word& w) { return TensorElement::word(a, w); }

// M (1 (x) S) Delta and M (S (x) 1) Delta.
std::pair<TensorElement, TensorElement> antipode_contractions(const TensorElement& x) {
  const AlphabetPtr& a = x.alphabet();
  TensorElement left(a), right(a);
  for (const auto& [pair, c] : coproduct(x, Exec::serial)) {
    left += c * concat_product(word_of(a, pair.first), antipode(word_of(a, pair.second)), Exec::serial);
    right += c * concat_product(antipode(word_of(a, pair.first)), word_of(a, pair.second), Exec::serial);
  }
  return {left, right};
}

bool coassociative(const TensorElement& x) {
  const AlphabetPtr& a = x.alphabet();
  LinComb<WordTuple> left, right;
  for (const auto& [pair, c] : coproduct(x, Exec::serial)) {
    for (const auto& [inner, d] : coproduct(word_of(a, pair.first), Exec::serial)) {
      left.add(WordTuple{inner.first, inner.second, pair.second}, c * d);
    }
    for (const auto& [inner, d] : coproduct(word_of(a, pair.second), Exec::serial)) {
      right.add(WordTuple{pair.first, inner.first, inner.second}, c * d);
    }
  }
  return left == right;
}

// Adjoint action of a single W-word with the serial kernel.
TensorElement act(const AlphabetPtr& a, const Word& h, const TensorElement& c) {
  return adjoint_action(word_of(a, h), c, Exec::serial);
}

// All U-words of total degree <= max_degree (including the empty word).
std::vector<Word> all_u_words(const MixedAlgebra& alg, int max_degree) {
  std::vector<Word> out;
  const std::uint64_t n = alg.u_count_up_to(max_degree);
  Word current;
  std::function<void(int)> rec = [&](int budget) {
    out.push_back(current);
    for (std::uint64_t u = 0; u < n; ++u) {
      const int d = alg.u_degree(static_cast<LetterId>(u));
      if (d > budget) continue;
      current.push_back(static_cast<LetterId>(u));
      rec(budget - d);
      current.pop_back();
    }
  };
  rec(max_degree);
  return out;
}

}  // namespace

SuiteResult suite_hopf_axioms(const SuiteConfig& cfg) {
  SuiteResult r = named("hopf-axioms");
  const int d = std::min(5, cfg.degree_cap);
  const MixedAlgebra alg = two_by_two();
  const AlphabetPtr a = alg.alphabet();
  const std::vector<LetterId> letters = all_letters(*a);
  const std::vector<Word> basis = all_words(letters, d);

  RandomElements rnd(cfg.seed);
  std::vector<TensorElement> randoms;
  for (int i = 0; i < 200; ++i) randoms.push_back(rnd.element(a, letters, d, rnd.uniform(1, 4)));
  std::vector<std::pair<TensorElement, TensorElement>> pairs;
  for (int i = 0; i < 100; ++i) {
    const int half = std::max(1, d / 2 + 1);
    pairs.emplace_back(rnd.element(a, letters, half, rnd.uniform(1, 3)),
                       rnd.element(a, letters, half, rnd.uniform(1, 3)));
  }

  auto antipode_ok = [&](const TensorElement& x) {
    const TensorElement unit = TensorElement::scalar(a, counit(x));
    const auto [left, right] = antipode_contractions(x);
    return left == unit && right == unit;
  };

  check_each(r, basis.size(), [&](std::size_t i) { return antipode_ok(word_of(a, basis[i])); }, cfg.exec,
             "antipode axiom on basis words");
  check_each(r, randoms.size(), [&](std::size_t i) { return antipode_ok(randoms[i]); }, cfg.exec,
             "antipode axiom on random elements");
  check_each(r, basis.size(), [&](std::size_t i) { return coassociative(word_of(a, basis[i])); }, cfg.exec,
             "coassociativity on basis words");
  check_each(r, randoms.size(), [&](std::size_t i) { return coassociative(randoms[i]); }, cfg.exec,
             "coassociativity on random elements");
  check_each(
      r, pairs.size(),
      [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        const TensorElement xy = concat_product(x, y, Exec::serial);
        return coproduct(xy, Exec::serial) == coproduct(x, Exec::serial) * coproduct(y, Exec::serial) &&
               counit(xy) == counit(x) * counit(y) &&
               antipode(xy) == concat_product(antipode(y), antipode(x), Exec::serial);
      },
      cfg.exec, "bialgebra compatibility and antimorphism");
  note(r, std::to_string(basis.size()) + " basis words of degree <= " + std::to_string(d) + ", " +
              std::to_string(randoms.size()) + " random elements, " + std::to_string(pairs.size()) + " random pairs");
  return r;
}

SuiteResult suite_inverse_maps(const SuiteConfig& cfg) {
  SuiteResult r = named("inverse-maps");
  const int d_triple = std::min(5, cfg.degree_cap);
  const int d_words = std::min(6, cfg.degree_cap);
  const MixedAlgebra alg = two_by_two();
  const AlphabetPtr a = alg.alphabet();
  const std::vector<LetterId> ws = w_letters(alg);
  const std::vector<LetterId> vs = v_letters(alg);

  std::vector<Triple> triples;
  for (const Word& h1 : all_words(ws, d_triple - 1)) {
    for (LetterId v : vs) {
      for (const Word& h2 : all_words(ws, d_triple - 1 - static_cast<int>(h1.size()))) triples.push_back({h1, v, h2});
    }
  }

  check_each(
      r, triples.size(),
      [&](std::size_t i) {
        const Triple& t = triples[i];
        const MixedElement image = map_i1(alg, word_of(a, t.left), t.v, word_of(a, t.right));
        TripleComb back;
        for (const auto& [tr, c] : to_triples(alg, image)) {
          back.add_scaled(map_j1(alg, word_of(a, tr.left), tr.v, word_of(a, tr.right)), c);
        }
        return back == TripleComb::term(t);
      },
      cfg.exec, "j1 after i1");
  check_each(
      r, triples.size(),
      [&](std::size_t i) {
        const Triple& t = triples[i];
        MixedElement back(a);
        for (const auto& [tr, c] : map_j1(alg, word_of(a, t.left), t.v, word_of(a, t.right))) {
          back += c * map_i1(alg, word_of(a, tr.left), tr.v, word_of(a, tr.right));
        }
        return back == from_triples(alg, TripleComb::term(t));
      },
      cfg.exec, "i1 after j1");

  const std::vector<Word> words = all_words(all_letters(*a), d_words);
  check_each(
      r, words.size(),
      [&](std::size_t i) {
        const MixedElement w = word_of(a, words[i]);
        return map_J(alg, map_I(alg, w, Exec::serial), Exec::serial) == w &&
               map_I(alg, map_J(alg, w, Exec::serial), Exec::serial) == w;
      },
      cfg.exec, "J after I and I after J");
  note(r, std::to_string(triples.size()) + " triples of degree <= " + std::to_string(d_triple) + ", " +
              std::to_string(words.size()) + " mixed words of degree <= " + std::to_string(d_words));
  return r;
}

SuiteResult suite_module_algebra(const SuiteConfig& cfg) {
  SuiteResult r = named("module-algebra");
  const int d = std::min(4, cfg.degree_cap);
  const MixedAlgebra alg = two_by_two();
  const AlphabetPtr a = alg.alphabet();
  const std::vector<LetterId> ws = w_letters(alg);
  const std::vector<LetterId> letters = all_letters(*a);

  struct Sample {
    TensorElement h, c1, c2;
  };
  RandomElements rnd(cfg.seed + 3);
  std::vector<Sample> samples;
  for (int i = 0; i < 200; ++i) {
    samples.push_back({rnd.element(a, ws, d, rnd.uniform(1, 3)), rnd.element(a, letters, d, rnd.uniform(1, 3)),
                       rnd.element(a, letters, d, rnd.uniform(1, 3))});
  }

  check_each(
      r, samples.size(),
      [&](std::size_t i) {
        const auto& [h, c1, c2] = samples[i];
        const TensorPair dh = coproduct(h, Exec::serial);
        // h . (c1 c2) = sum (h1 . c1)(h2 . c2)
        TensorElement rhs(a);
        for (const auto& [p, k] : dh) rhs += k * concat_product(act(a, p.first, c1), act(a, p.second, c2), Exec::serial);
        if (adjoint_action(h, concat_product(c1, c2, Exec::serial), Exec::serial) != rhs) return false;
        // h . 1 = eps(h) 1
        if (adjoint_action(h, TensorElement::one(a), Exec::serial) != TensorElement::scalar(a, counit(h))) return false;
        // h c = sum (h1 . c) h2
        TensorElement straightened(a);
        for (const auto& [p, k] : dh) straightened += k * concat_product(act(a, p.first, c1), word_of(a, p.second), Exec::serial);
        return concat_product(h, c1, Exec::serial) == straightened;
      },
      cfg.exec, "module-algebra laws");
  note(r, std::to_string(samples.size()) + " random triples of degree <= " + std::to_string(d));
  return r;
}

SuiteResult suite_smash(const SuiteConfig& cfg) {
  SuiteResult r = named("smash-product");
  const int d = std::min(5, cfg.degree_cap);
  const MixedAlgebra alg = two_by_two();
  const AlphabetPtr a = alg.alphabet();
  const std::vector<LetterId> letters = all_letters(*a);

  RandomElements rnd(cfg.seed + 4);
  std::vector<std::pair<MixedElement, MixedElement>> mixed_pairs;
  std::vector<std::pair<SmashElement, SmashElement>> smash_pairs;
  for (int i = 0; i < 100; ++i) {
    mixed_pairs.emplace_back(rnd.element(a, letters, d, rnd.uniform(1, 3)), rnd.element(a, letters, d, rnd.uniform(1, 3)));
    smash_pairs.emplace_back(rnd.smash(alg, d, rnd.uniform(1, 3)), rnd.smash(alg, d, rnd.uniform(1, 3)));
  }
  std::vector<std::array<SmashElement, 3>> triples;
  for (int i = 0; i < 50; ++i) {
    triples.push_back({rnd.smash(alg, d, rnd.uniform(1, 2)), rnd.smash(alg, d, rnd.uniform(1, 2)),
                       rnd.smash(alg, d, rnd.uniform(1, 2))});
  }

  check_each(
      r, mixed_pairs.size(),
      [&](std::size_t i) {
        const auto& [x, y] = mixed_pairs[i];
        const SmashElement nx = smash_normal_form(alg, x, Exec::serial);
        const SmashElement ny = smash_normal_form(alg, y, Exec::serial);
        return embed_smash(alg, nx, Exec::serial) == x &&
               smash_multiply(alg, nx, ny) == smash_normal_form(alg, concat_product(x, y, Exec::serial), Exec::serial);
      },
      cfg.exec, "normal form round trip and transported product");
  check_each(
      r, smash_pairs.size(),
      [&](std::size_t i) {
        const auto& [p, q] = smash_pairs[i];
        const MixedElement ep = embed_smash(alg, p, Exec::serial);
        return smash_normal_form(alg, ep, Exec::serial) == p &&
               embed_smash(alg, smash_multiply(alg, p, q), Exec::serial) ==
                   concat_product(ep, embed_smash(alg, q, Exec::serial), Exec::serial);
      },
      cfg.exec, "embedding is multiplicative");
  check_each(
      r, triples.size(),
      [&](std::size_t i) {
        const auto& [p, q, s] = triples[i];
        return smash_multiply(alg, smash_multiply(alg, p, q), s) == smash_multiply(alg, p, smash_multiply(alg, q, s));
      },
      cfg.exec, "smash associativity");
  note(r, "100 mixed pairs, 100 smash pairs, 50 smash triples of degree <= " + std::to_string(d));
  return r;
}

SuiteResult suite_dimensions(const SuiteConfig& cfg) {
  SuiteResult r = named("dimension-audit");
  const int d = std::min(8, cfg.degree_cap);
  // Lyndon words on two letters per degree, by brute-force enumeration.
  static constexpr std::array<std::int64_t, 8> kTwoLetters = {2, 1, 2, 3, 6, 9, 18, 30};
  for (auto [nv, nw] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
    const auto rows = bigraded_dimension_audit(nv, nw, d, cfg.exec);
    for (const auto& row : rows) {
      ++r.checks;
      bool ok = row.lhs == row.rhs();
      if (nv + nw == 2) ok = ok && row.lhs == kTwoLetters[static_cast<std::size_t>(row.degree - 1)];
      if (!ok && r.passed) {
        r.passed = false;
        r.detail = "(|V|,|W|)=(" + std::to_string(nv) + "," + std::to_string(nw) + ") degree " +
                   std::to_string(row.degree) + ": " + std::to_string(row.lhs) + " != " + std::to_string(row.f_w) +
                   " + " + std::to_string(row.f_u);
      }
    }
  }
  note(r, "(|V|,|W|) in {(1,1),(1,2),(2,1)} up to degree " + std::to_string(d));
  return r;
}

SuiteResult suite_elimination(const SuiteConfig& cfg) {
  SuiteResult r = named("elimination");
  const int d = std::min(6, cfg.degree_cap);
  RandomElements rnd(cfg.seed + 6);

  for (const auto& ws : {std::vector<std::string>{"s"}, std::vector<std::string>{"s", "t"}}) {
    const MixedAlgebra alg({"v"}, ws, d);
    const AlphabetPtr a = alg.alphabet();
    std::vector<LiePolynomial> xs;
    for (int i = 0; i < 100; ++i) xs.push_back(rnd.lie(a, d, rnd.uniform(1, 3)));
    check_each(
        r, xs.size(),
        [&](std::size_t i) {
          const Elimination e = eliminate_lie(alg, xs[i]);
          return embed_u(alg, expand(e.x_u)) + expand(e.x_w) == expand(xs[i]) &&
                 e.x_w == lie_extract(expand(e.x_w));
        },
        cfg.exec, "eliminate_lie round trip with |W| = " + std::to_string(ws.size()));
  }

  // [v,s] = -u[s]
  const MixedAlgebra alg({"v"}, {"s"}, 2);
  const AlphabetPtr a = alg.alphabet();
  const Word vs = a->word("vs");
  const Elimination e = eliminate_lie(alg, LiePolynomial::lyndon(a, vs));
  const LetterId u_s = alg.u_letter(a->word("s"), alg.v_letter(0));
  ++r.checks;
  if (!(e.x_u == LiePolynomial::generator(alg.u_alphabet(), u_s, -1) && e.x_w.is_zero()) && r.passed) {
    r.passed = false;
    r.detail = "[v,s] did not eliminate to (-u[s], 0)";
  }
  note(r, "200 random Lie polynomials of degree <= " + std::to_string(d) + " and [v,s] -> (-u[s], 0)");
  return r;
}

SuiteResult suite_freeness(const SuiteConfig& cfg) {
  SuiteResult r = named("freeness");
  const int d = std::min(5, cfg.degree_cap);
  const MixedAlgebra alg = two_by_two();
  const std::vector<Word> u_words = all_u_words(alg, d);
  const auto rows = map_indices(
      u_words.size(),
      [&](std::size_t i) {
        SmashElement p;
        p.add(WordPair{u_words[i], Word{}}, 1);
        return embed_smash(alg, p, Exec::serial).body();
      },
      cfg.exec);
  ++r.checks;
  const std::size_t rk = rank(rows);
  if (rk != u_words.size()) {
    r.passed = false;
    r.detail = "rank " + std::to_string(rk) + " of " + std::to_string(u_words.size()) + " U-monomial expansions";
    return r;
  }

  for (auto [nv, nw] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    std::vector<std::string> vs, ws;
    for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i < nw; ++i) ws.push_back("w" + std::to_string(i + 1));
    const MixedAlgebra sized(vs, ws);
    const auto gens = free_generators(sized, 5);
    for (int m = 0; m <= 4; ++m) {
      ++r.checks;
      const auto count = std::count_if(gens.begin(), gens.end(), [&](const UGenerator& g) { return g.degree == m + 1; });
      std::int64_t expected = nv;
      for (int i = 0; i < m; ++i) expected *= nw;
      if (count != expected && r.passed) {
        r.passed = false;
        r.detail = "generator count mismatch at degree " + std::to_string(m + 1);
      }
    }
  }
  note(r, "full rank on " + std::to_string(u_words.size()) + " U-monomials of degree <= " + std::to_string(d) +
              "; generator counts |V||W|^m for m <= 4");
  return r;
}

SuiteResult suite_free_lie(const SuiteConfig& cfg) {
  SuiteResult r = named("free-lie");
  const int d_round = std::min(6, cfg.degree_cap);
  const int d_jacobi = std::min(4, cfg.degree_cap);
  const int d_count = std::min(8, cfg.degree_cap);

  const MixedAlgebra alg = two_by_two();
  const AlphabetPtr a = alg.alphabet();
  const std::vector<Word> lyndon = lyndon_words(*a, d_round);
  check_each(
      r, lyndon.size(),
      [&](std::size_t i) {
        const LiePolynomial x = LiePolynomial::lyndon(a, lyndon[i]);
        return lie_extract(expand(x)) == x;
      },
      cfg.exec, "lie_extract after expand");

  const AlphabetPtr abc = Alphabet::plain({"a", "b", "c"});
  RandomElements rnd(cfg.seed + 8);
  std::vector<std::array<LiePolynomial, 3>> triples;
  for (int i = 0; i < 100; ++i) {
    triples.push_back({rnd.lie(abc, d_jacobi, rnd.uniform(1, 2)), rnd.lie(abc, d_jacobi, rnd.uniform(1, 2)),
                       rnd.lie(abc, d_jacobi, rnd.uniform(1, 2))});
  }
  check_each(
      r, triples.size(),
      [&](std::size_t i) {
        const auto& [x, y, z] = triples[i];
        const LiePolynomial jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        return jacobi.is_zero() && (bracket(x, y) + bracket(y, x)).is_zero();
      },
      cfg.exec, "Jacobi and antisymmetry");

  for (int k = 1; k <= 3; ++k) {
    std::vector<std::string> syms;
    for (int i = 0; i < k; ++i) syms.push_back(std::string(1, static_cast<char>('a' + i)));
    const AlphabetPtr ak = Alphabet::plain(syms);
    std::vector<std::int64_t> per_degree(static_cast<std::size_t>(d_count) + 1, 0);
    for (const Word& w : lyndon_words(*ak, d_count)) ++per_degree[w.size()];
    for (int n = 1; n <= d_count; ++n) {
      ++r.checks;
      if (per_degree[static_cast<std::size_t>(n)] != witt_dimension(k, n) && r.passed) {
        r.passed = false;
        r.detail = "Lyndon count differs from Witt dimension at k=" + std::to_string(k) + ", n=" + std::to_string(n);
      }
    }
  }
  note(r, std::to_string(lyndon.size()) + " Lyndon words of degree <= " + std::to_string(d_round) +
              ", 100 Jacobi triples of degree <= " + std::to_string(d_jacobi) + ", Witt counts to degree " +
              std::to_string(d_count));
  return r;
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg) {
  using Suite = SuiteResult (*)(const SuiteConfig&);
  static constexpr std::array<Suite, 8> kSuites = {suite_hopf_axioms, suite_inverse_maps, suite_module_algebra,
                                                  suite_smash,       suite_dimensions,   suite_elimination,
                                                  suite_freeness,    suite_free_lie};
  std::vector<SuiteResult> out;
  for (Suite s : kSuites) out.push_back(s(cfg));
  return out;
}

}  // namespace hopfelim
