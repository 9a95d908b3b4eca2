#include <doctest.h>

#include "hopfelim/elimination.hpp"
#include "hopfelim/random.hpp"
#include "oracles.hpp"

using namespace hopfelim;

namespace {

struct Fixture {
  MixedAlgebra alg{{"v"}, {"s"}};
  AlphabetPtr a = alg.alphabet();
  LetterId v = alg.v_letter(0);

  TensorElement t(const char* w, const Rational& c = 1) const { return TensorElement::word(a, std::string_view(w), c); }
  LetterId u(const char* alpha) const { return alg.u_letter(a->word(alpha), v); }
  SmashElement sm(std::vector<LetterId> us, const char* w, const Rational& c = 1) const {
    SmashElement p;
    p.add(WordPair{Word(std::move(us)), a->word(w)}, c);
    return p;
  }
};

oracle::Blocks to_blocks(const MixedAlgebra& alg, const Word& w) {
  const BlockForm b = alg.blocks(w);
  oracle::Blocks out;
  for (const Word& h : b.blocks) out.blocks.emplace_back(h.begin(), h.end());
  out.vs.assign(b.v_letters.begin(), b.v_letters.end());
  return out;
}

MixedElement from_blocks(const MixedAlgebra& alg, const oracle::BlockComb& x) {
  MixedElement out(alg.alphabet());
  for (const auto& [b, c] : x) {
    BlockForm bf;
    for (const auto& h : b.blocks) bf.blocks.emplace_back(std::vector<LetterId>(h.begin(), h.end()));
    bf.v_letters.assign(b.vs.begin(), b.vs.end());
    out.add(alg.join(bf), c);
  }
  return out;
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "map_i examples") {
  CHECK(map_i(alg, TensorElement::one(a), v) == t("v"));
  CHECK(map_i(alg, t("s"), v) == t("sv") - t("vs"));
  CHECK(map_i(alg, t("ss"), v) == t("ssv") - t("svs", 2) + t("vss"));
  CHECK_THROWS_AS(map_i(alg, t("v"), v), Error);
}

TEST_CASE_FIXTURE(Fixture, "map_i1 and map_j1 examples") {
  CHECK(map_i1(alg, TensorElement::one(a), v, t("ss")) == t("vss"));
  CHECK(map_i1(alg, t("s"), v, TensorElement::one(a)) == t("sv") - t("vs"));
  CHECK(map_i1(alg, t("s"), v, t("s")) == t("svs") - t("vss"));

  const Word s = a->word("s");
  CHECK(map_j1(alg, TensorElement::one(a), v, t("s")) == TripleComb{{Triple{{}, v, s}, 1}});
  CHECK(map_j1(alg, t("s"), v, TensorElement::one(a)) == TripleComb{{Triple{s, v, {}}, 1}, {Triple{{}, v, s}, 1}});

  TripleComb back;
  for (const auto& [tr, c] : to_triples(alg, map_i1(alg, t("s"), v, TensorElement::one(a)))) {
    back.add_scaled(map_j1(alg, TensorElement::word(a, tr.left), tr.v, TensorElement::word(a, tr.right)), c);
  }
  CHECK(back == TripleComb{{Triple{s, v, {}}, 1}});
}

TEST_CASE_FIXTURE(Fixture, "map_I and map_J examples") {
  CHECK(map_I(alg, t("s")) == t("s"));
  CHECK(map_I(alg, t("sv")) == t("sv") - t("vs"));
  CHECK(map_J(alg, t("s")) == t("s"));
  CHECK(map_J(alg, t("sv") - t("vs")) == t("sv"));

  const MixedAlgebra two({"v1", "v2"}, {"s"});
  const AlphabetPtr b = two.alphabet();
  auto w = [&](const char* text) { return TensorElement::word(b, std::string_view(text)); };
  CHECK(map_I(two, w("sv1sv2s")) == (w("sv1") - w("v1s")) * (w("sv2") - w("v2s")) * w("s"));
}

TEST_CASE("map_I and map_J equal the literal compositions of i1 and j1") {
  const MixedAlgebra alg({"v1", "v2"}, {"w1", "w2"});
  std::size_t compared = 0;
  for (const Word& w : all_words(all_letters(*alg.alphabet()), 6)) {
    const int g = alg.grade(w);
    if (g != 2 && g != 3) continue;
    const MixedElement x = TensorElement::word(alg.alphabet(), w);
    const oracle::Blocks b = to_blocks(alg, w);
    CHECK(map_I(alg, x, Exec::serial) == from_blocks(alg, oracle::literal_i(b)));
    CHECK(map_J(alg, x, Exec::serial) == from_blocks(alg, oracle::literal_j(b)));
    ++compared;
  }
  CHECK(compared > 1000);
}

TEST_CASE("map_I and map_J are inverse on words with two V and two W letters") {
  const MixedAlgebra alg({"v1", "v2"}, {"w1", "w2"});
  for (const Word& w : all_words(all_letters(*alg.alphabet()), 5)) {
    const MixedElement x = TensorElement::word(alg.alphabet(), w);
    CHECK(map_J(alg, map_I(alg, x)) == x);
    CHECK(map_I(alg, map_J(alg, x)) == x);
    CHECK(alg.grade(w) == alg.grade(map_I(alg, x).begin()->first));
  }
}

TEST_CASE("map_i is an H-module map with a left inverse") {
  const MixedAlgebra alg({"v"}, {"s", "t"});
  const AlphabetPtr a = alg.alphabet();
  const std::vector<LetterId> ws = w_letters(alg);
  RandomElements rnd(31);
  for (int i = 0; i < 60; ++i) {
    const TensorElement h = rnd.element(a, ws, 3, 2);
    const TensorElement g = rnd.element(a, ws, 3, 2);
    CHECK(map_i(alg, concat_product(h, g), 0) == adjoint_action(h, map_i(alg, g, 0)));
  }
  // (1 (x) 1 (x) eps) applied to the triple form of map_i recovers h (x) v.
  for (const Word& h : all_words(ws, 5)) {
    TripleComb kept;
    for (const auto& [tr, c] : to_triples(alg, map_i(alg, TensorElement::word(a, h), 0))) {
      if (tr.right.empty()) kept.add(tr, c);
    }
    CHECK(kept == TripleComb{{Triple{h, 0, {}}, 1}});
  }
}

TEST_CASE("free_generators examples") {
  const MixedAlgebra alg({"v"}, {"s"});
  const AlphabetPtr a = alg.alphabet();
  const auto gens = free_generators(alg, 3);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].expansion == TensorElement::word(a, std::string_view("v")));
  CHECK(gens[1].expansion == TensorElement::word(a, std::string_view("sv")) - TensorElement::word(a, std::string_view("vs")));
  CHECK(gens[2].degree == 3);
  CHECK(alg.u_symbol(gens[2].id) == "u[ss]");

  const MixedAlgebra st({"v"}, {"s", "t"});
  const auto deg2 = free_generators(st, 2);
  CHECK(std::count_if(deg2.begin(), deg2.end(), [](const UGenerator& g) { return g.degree == 2; }) == 2);

  const MixedAlgebra two({"v1", "v2"}, {"s"});
  const auto first = free_generators(two, 1);
  REQUIRE(first.size() == 2);
  CHECK(first[1].expansion == TensorElement::letter(two.alphabet(), 1));
  CHECK(two.u_symbol(two.u_letter(two.alphabet()->word("ss"), 0)) == "u[ss;v1]");
}

TEST_CASE("generator expansions are Lie elements with one V-letter") {
  const MixedAlgebra alg({"v1", "v2"}, {"s", "t"});
  for (const UGenerator& g : free_generators(alg, 4)) {
    CHECK_NOTHROW(lie_extract(g.expansion));
    for (const auto& [w, c] : g.expansion) CHECK(alg.grade(w) == 1);
  }
}

TEST_CASE("U symbols round trip") {
  const MixedAlgebra alg({"v1", "v2"}, {"w1", "w2"});
  for (LetterId u = 0; u < alg.u_count_up_to(4); ++u) {
    CHECK(alg.parse_u_symbol(alg.u_symbol(u)) == u);
  }
  CHECK(alg.u_symbol(alg.u_letter(alg.alphabet()->word("w1w2"), 1)) == "u[w1.w2;v2]");
  CHECK(!alg.parse_u_symbol("u[w3;v1]"));
  CHECK(!alg.parse_u_symbol("u[w1]"));
}

TEST_CASE("U letters are ordered by degree, subscript, then V-letter") {
  const MixedAlgebra alg({"v1", "v2"}, {"w1", "w2"}, 4);
  const AlphabetPtr ua = alg.u_alphabet();
  CHECK(ua->size() == alg.u_count_up_to(4));
  for (LetterId u = 1; u < ua->size(); ++u) {
    const auto [pa, pv] = alg.u_definition(u - 1);
    const auto [ca, cv] = alg.u_definition(u);
    const bool ordered = pa.size() < ca.size() || (pa.size() == ca.size() && (pa < ca || (pa == ca && pv < cv)));
    CHECK(ordered);
    CHECK(ua->degree(u) == alg.u_degree(u));
  }
  CHECK_THROWS_AS(alg.u_alphabet(5), Error);
}

TEST_CASE_FIXTURE(Fixture, "smash normal form examples") {
  CHECK(smash_normal_form(alg, t("s")) == sm({}, "s"));
  CHECK(smash_normal_form(alg, t("sv")) == sm({u("s")}, "") + sm({u("")}, "s"));
  CHECK(smash_normal_form(alg, t("v")) == sm({u("")}, ""));
  CHECK(embed_smash(alg, sm({u("s")}, "")) == t("sv") - t("vs"));
  CHECK(embed_smash(alg, sm({}, "s")) == t("s"));
}

TEST_CASE_FIXTURE(Fixture, "smash_multiply examples") {
  const SmashElement p = sm({u("s")}, "s", 2) + sm({u("")}, "");
  CHECK(smash_multiply(alg, sm({}, ""), p) == p);
  CHECK(smash_multiply(alg, p, sm({}, "")) == p);
  CHECK(smash_multiply(alg, sm({}, "s"), sm({u("")}, "")) == sm({u("s")}, "") + sm({u("")}, "s"));
  CHECK(smash_multiply(alg, sm({u("")}, ""), sm({u("")}, "")) == sm({u(""), u("")}, ""));
}

TEST_CASE("smash action agrees with the adjoint action on expansions") {
  const MixedAlgebra alg({"v1", "v2"}, {"s", "t"});
  const AlphabetPtr a = alg.alphabet();
  RandomElements rnd(41);
  for (int i = 0; i < 80; ++i) {
    const Word beta = rnd.word(w_letters(alg), 0, 3);
    const SmashElement p = rnd.smash(alg, 4, 1);
    const Word u_word = p.begin()->first.first;
    SmashElement acted;
    for (const auto& [u, c] : smash_act(alg, beta, u_word)) acted.add(WordPair{u, Word{}}, c);
    SmashElement base;
    base.add(WordPair{u_word, Word{}}, 1);
    const MixedElement via_adjoint = adjoint_action(TensorElement::word(a, beta), embed_smash(alg, base));
    CHECK(smash_normal_form(alg, via_adjoint) == acted);
  }
}

TEST_CASE("T(H.V) is stable under the adjoint action") {
  const MixedAlgebra alg({"v"}, {"s", "t"});
  const AlphabetPtr a = alg.alphabet();
  RandomElements rnd(43);
  for (int i = 0; i < 60; ++i) {
    const TensorElement h = rnd.element(a, w_letters(alg), 3, 2);
    SmashElement p;
    for (const auto& [pr, c] : rnd.smash(alg, 4, 2)) p.add(WordPair{pr.first, Word{}}, c);
    for (const auto& [w, c] : map_J(alg, adjoint_action(h, embed_smash(alg, p)))) {
      CHECK(alg.blocks(w).blocks.back().empty());
    }
  }
}

TEST_CASE("normal form and embedding are inverse up to degree 6") {
  const MixedAlgebra alg({"v"}, {"s", "t"});
  const AlphabetPtr a = alg.alphabet();
  RandomElements rnd(47);
  for (int i = 0; i < 60; ++i) {
    const MixedElement x = rnd.element(a, all_letters(*a), 6, 3);
    CHECK(embed_smash(alg, smash_normal_form(alg, x)) == x);
  }
}

TEST_CASE_FIXTURE(Fixture, "eliminate_lie examples") {
  const AlphabetPtr ua = alg.u_alphabet();
  const Elimination e0 = eliminate_lie(alg, LiePolynomial::generator(a, 1));
  CHECK(e0.x_u.is_zero());
  CHECK(e0.x_w == LiePolynomial::generator(a, 1));

  const Elimination e1 = eliminate_lie(alg, LiePolynomial::lyndon(a, a->word("vs")));
  CHECK(e1.x_u == LiePolynomial::generator(ua, u("s"), -1));
  CHECK(e1.x_w.is_zero());

  // [[v,s],v] = -[u_s, u_0]; check against expansions in T(V + W).
  const LiePolynomial vs = LiePolynomial::lyndon(a, a->word("vs"));
  const LiePolynomial x = bracket(vs, LiePolynomial::generator(a, v));
  const Elimination e2 = eliminate_lie(alg, x);
  const LiePolynomial expected = -bracket(LiePolynomial::generator(ua, u("s")), LiePolynomial::generator(ua, u("")));
  CHECK(e2.x_u == expected);
  CHECK(e2.x_w.is_zero());
  CHECK(embed_u(alg, expand(e2.x_u)) == expand(x));
}

TEST_CASE("eliminate_lie round trip over three W-letters") {
  const MixedAlgebra alg({"v"}, {"r", "s", "t"}, 5);
  RandomElements rnd(53);
  for (int i = 0; i < 40; ++i) {
    const LiePolynomial x = rnd.lie(alg.alphabet(), 5, 3);
    const Elimination e = eliminate_lie(alg, x);
    CHECK(embed_u(alg, expand(e.x_u)) + expand(e.x_w) == expand(x));
  }
  CHECK_THROWS_AS(eliminate_lie(MixedAlgebra({"v"}, {"s"}, 2), LiePolynomial::lyndon(MixedAlgebra({"v"}, {"s"}).alphabet(),
                                                                                        Word{0, 0, 1})),
                  Error);
}

TEST_CASE("dimension audit examples") {
  const auto rows = bigraded_dimension_audit(1, 1, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].lhs == 2);
  CHECK(rows[0].f_w == 1);
  CHECK(rows[0].f_u == 1);
  CHECK(rows[1].lhs == 1);
  CHECK(rows[1].f_w == 0);
  CHECK(rows[1].f_u == 1);
  CHECK(rows[2].lhs == 2);
  CHECK(rows[2].f_u == 2);
  CHECK_THROWS_AS(bigraded_dimension_audit(0, 1, 3), Error);
}

TEST_CASE("dimension audit columns agree with brute-force Lyndon counts") {
  for (auto [nv, nw] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
    const auto rows = bigraded_dimension_audit(nv, nw, 7);
    for (const auto& r : rows) {
      CHECK(r.lhs == oracle::lyndon_count(static_cast<std::uint32_t>(nv + nw), r.degree));
      CHECK(r.f_w == oracle::lyndon_count(static_cast<std::uint32_t>(nw), r.degree));
      CHECK(r.lhs == r.rhs());
    }
  }
}

TEST_CASE("boundary cases with empty V or empty W") {
  const MixedAlgebra no_v({}, {"s", "t"}, 4);
  const AlphabetPtr a = no_v.alphabet();
  const TensorElement st = TensorElement::word(a, std::string_view("st"));
  CHECK(map_I(no_v, st) == st);
  CHECK(map_J(no_v, st) == st);
  CHECK(no_v.u_count_up_to(4) == 0);
  const Elimination e = eliminate_lie(no_v, LiePolynomial::lyndon(a, a->word("st")));
  CHECK(e.x_u.is_zero());
  CHECK(expand(e.x_w) == expand(LiePolynomial::lyndon(a, a->word("st"))));

  const MixedAlgebra no_w({"v", "x"}, {}, 4);
  const AlphabetPtr b = no_w.alphabet();
  const TensorElement vx = TensorElement::word(b, std::string_view("vx"));
  CHECK(map_I(no_w, vx) == vx);
  CHECK(no_w.u_count_up_to(4) == 2);
  const Elimination f = eliminate_lie(no_w, LiePolynomial::lyndon(b, b->word("vx")));
  CHECK(f.x_w.is_zero());
  CHECK(f.x_u == LiePolynomial::lyndon(no_w.u_alphabet(), Word{0, 1}));
}

TEST_CASE("serial and parallel elimination kernels agree") {
  const MixedAlgebra alg({"v1", "v2"}, {"w1", "w2"});
  const AlphabetPtr a = alg.alphabet();
  RandomElements rnd(59);
  for (int i = 0; i < 10; ++i) {
    const MixedElement x = rnd.element(a, all_letters(*a), 6, 8);
    CHECK(map_I(alg, x, Exec::serial) == map_I(alg, x, Exec::parallel));
    CHECK(map_J(alg, x, Exec::serial) == map_J(alg, x, Exec::parallel));
    const SmashElement p = smash_normal_form(alg, x, Exec::serial);
    CHECK(p == smash_normal_form(alg, x, Exec::parallel));
    CHECK(embed_smash(alg, p, Exec::serial) == embed_smash(alg, p, Exec::parallel));
  }
  const auto s = bigraded_dimension_audit(2, 2, 6, Exec::serial);
  const auto p = bigraded_dimension_audit(2, 2, 6, Exec::parallel);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i].f_u == p[i].f_u);
}
