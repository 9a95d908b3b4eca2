#include "hopfelim/elimination.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

#include "hopfelim/error.hpp"

namespace hopfelim {

namespace {

constexpr std::uint64_t kMaxLetterId = std::numeric_limits<LetterId>::max();
// Upper bound on how many U-letters we are willing to materialize.
constexpr std::uint64_t kMaxMaterialized = std::uint64_t{1} << 22;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw Error(ErrorKind::DegreeCapExceeded, "U-letter index overflow");
  }
  return a * b;
}

// Sum over splittings of h into (a, b) of (-1)^|b| a v reverse(b).
LinComb<Word> adjoint_on_letter(const Word& h, LetterId v) {
  LinComb<Word> out;
  const std::size_t n = h.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Word w;
    std::vector<LetterId> back;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        w.push_back(h[i]);
      } else {
        back.push_back(h[i]);
      }
    }
    w.push_back(v);
    for (auto it = back.rbegin(); it != back.rend(); ++it) w.push_back(*it);
    out.add(std::move(w), back.size() % 2 == 0 ? Rational(1) : Rational(-1));
  }
  return out;
}

LinComb<Word> times(const LinComb<Word>& x, const LinComb<Word>& y) {
  LinComb<Word> out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.add(a + b, ca * cb);
  }
  return out;
}

void require_mixed(const MixedAlgebra& alg, const TensorElement& x) {
  require_same_alphabet(alg.alphabet(), x.alphabet());
}

void require_in_h(const MixedAlgebra& alg, const TensorElement& h) {
  require_mixed(alg, h);
  if (!in_hopf_subalgebra(h)) {
    throw Error(ErrorKind::NotInHopfSubalgebra, "expected an element of T(W)");
  }
}

void require_v(const MixedAlgebra& alg, LetterId v) {
  if (!alg.is_v(v)) throw Error(ErrorKind::InvalidArgument, "expected a V-letter");
}

}  // namespace

struct MixedAlgebra::Lazy {
  std::once_flag once;
  AlphabetPtr u_alphabet;
};

MixedAlgebra::MixedAlgebra(const std::vector<std::string>& v_symbols,
                           const std::vector<std::string>& w_symbols, int u_degree_cap)
    : alphabet_(Alphabet::mixed(v_symbols, w_symbols)),
      v_count_(v_symbols.size()),
      w_count_(w_symbols.size()),
      u_degree_cap_(u_degree_cap),
      lazy_(std::make_shared<Lazy>()) {
  if (u_degree_cap < 1) throw Error(ErrorKind::InvalidArgument, "U degree cap must be >= 1");
  compact_alpha_ = std::all_of(w_symbols.begin(), w_symbols.end(),
                               [](const std::string& s) { return s.size() == 1; });
}

int MixedAlgebra::grade(const Word& w) const {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [&](LetterId l) { return is_v(l); }));
}

BlockForm MixedAlgebra::blocks(const Word& w) const {
  BlockForm b;
  b.blocks.emplace_back();
  for (LetterId l : w) {
    if (is_v(l)) {
      b.v_letters.push_back(l);
      b.blocks.emplace_back();
    } else {
      b.blocks.back().push_back(l);
    }
  }
  return b;
}

Word MixedAlgebra::join(const BlockForm& b) const {
  Word w;
  for (std::size_t j = 0; j < b.v_letters.size(); ++j) {
    w.append(b.blocks[j]);
    w.push_back(b.v_letters[j]);
  }
  if (!b.blocks.empty()) w.append(b.blocks.back());
  return w;
}

namespace {

// U-letters with |alpha| = m number v_count * w_count^m.
std::uint64_t count_at(std::size_t v_count, std::size_t w_count, std::size_t m) {
  std::uint64_t c = v_count;
  for (std::size_t i = 0; i < m; ++i) c = checked_mul(c, w_count);
  return c;
}

std::uint64_t offset_at(std::size_t v_count, std::size_t w_count, std::size_t m) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < m; ++j) total += count_at(v_count, w_count, j);
  return total;
}

}  // namespace

std::uint64_t MixedAlgebra::u_count_up_to(int d) const {
  if (d < 1) return 0;
  return offset_at(v_count_, w_count_, static_cast<std::size_t>(d));
}

LetterId MixedAlgebra::u_letter(const Word& alpha, LetterId v) const {
  require_v(*this, v);
  std::uint64_t rank = 0;
  for (LetterId l : alpha) {
    if (!is_w(l)) throw Error(ErrorKind::InvalidArgument, "U-letter subscript must be a W-word");
    rank = checked_mul(rank, w_count_) + (l - v_count_);
  }
  const std::uint64_t id =
      offset_at(v_count_, w_count_, alpha.size()) + checked_mul(rank, v_count_) + v;
  if (id > kMaxLetterId) throw Error(ErrorKind::DegreeCapExceeded, "U-letter index overflow");
  return static_cast<LetterId>(id);
}

std::pair<Word, LetterId> MixedAlgebra::u_definition(LetterId u) const {
  if (v_count_ == 0) throw Error(ErrorKind::InvalidArgument, "no U-letters without V-letters");
  if (w_count_ == 0 && u >= v_count_) throw Error(ErrorKind::InvalidArgument, "U-letter id out of range");
  std::uint64_t rest = u;
  std::size_t m = 0;
  while (rest >= count_at(v_count_, w_count_, m)) {
    rest -= count_at(v_count_, w_count_, m);
    ++m;
  }
  const LetterId v = static_cast<LetterId>(rest % v_count_);
  std::uint64_t rank = rest / v_count_;
  std::vector<LetterId> digits(m);
  for (std::size_t i = m; i-- > 0;) {
    digits[i] = static_cast<LetterId>(v_count_ + rank % w_count_);
    rank /= w_count_;
  }
  return {Word(std::move(digits)), v};
}

int MixedAlgebra::u_degree(LetterId u) const { return static_cast<int>(u_definition(u).first.size()) + 1; }

std::string MixedAlgebra::u_symbol(LetterId u) const {
  const auto [alpha, v] = u_definition(u);
  std::string s = "u[";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0 && !compact_alpha_) s += '.';
    s += alphabet_->letter(alpha[i]).symbol;
  }
  if (v_count_ > 1) s += ";" + alphabet_->letter(v).symbol;
  s += ']';
  return s;
}

std::optional<LetterId> MixedAlgebra::parse_u_symbol(std::string_view text) const {
  if (v_count_ == 0 || text.size() < 3 || text.substr(0, 2) != "u[" || text.back() != ']') return std::nullopt;
  std::string_view inner = text.substr(2, text.size() - 3);
  std::string_view alpha_text = inner;
  LetterId v = v_letter(0);
  if (const auto semi = inner.find(';'); semi != std::string_view::npos) {
    alpha_text = inner.substr(0, semi);
    auto found = alphabet_->find(inner.substr(semi + 1));
    if (!found || !is_v(*found)) return std::nullopt;
    v = *found;
  } else if (v_count_ > 1) {
    return std::nullopt;
  }
  Word alpha;
  std::size_t pos = 0;
  while (pos < alpha_text.size()) {
    std::size_t len = 1;
    if (!compact_alpha_) {
      const auto dot = alpha_text.find('.', pos);
      len = (dot == std::string_view::npos ? alpha_text.size() : dot) - pos;
    }
    auto found = alphabet_->find(alpha_text.substr(pos, len));
    if (!found || !is_w(*found)) return std::nullopt;
    alpha.push_back(*found);
    pos += len;
    if (!compact_alpha_ && pos < alpha_text.size()) ++pos;  // skip '.'
  }
  return u_letter(alpha, v);
}

AlphabetPtr MixedAlgebra::u_alphabet(int needed_degree) const {
  if (needed_degree > u_degree_cap_) {
    throw Error(ErrorKind::DegreeCapExceeded,
                "U alphabet needed up to degree " + std::to_string(needed_degree) + " but the cap is " +
                    std::to_string(u_degree_cap_));
  }
  std::call_once(lazy_->once, [&] {
    const std::uint64_t n = u_count_up_to(u_degree_cap_);
    if (n > kMaxMaterialized) {
      throw Error(ErrorKind::DegreeCapExceeded, "too many U-letters to materialize; lower the degree cap");
    }
    std::vector<LetterInfo> letters;
    letters.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t id = 0; id < n; ++id) {
      auto [alpha, v] = u_definition(static_cast<LetterId>(id));
      const int degree = static_cast<int>(alpha.size()) + 1;
      letters.push_back({u_symbol(static_cast<LetterId>(id)), Part::U, degree, std::move(alpha), v});
    }
    lazy_->u_alphabet = std::make_shared<const Alphabet>(std::move(letters));
  });
  return lazy_->u_alphabet;
}

TensorElement MixedAlgebra::u_expansion(LetterId u) const {
  const auto [alpha, v] = u_definition(u);
  return TensorElement(alphabet_, adjoint_on_letter(alpha, v));
}

MixedElement map_i(const MixedAlgebra& alg, const TensorElement& h, LetterId v) {
  require_in_h(alg, h);
  require_v(alg, v);
  return adjoint_action(h, TensorElement::letter(alg.alphabet(), v), Exec::serial);
}

MixedElement map_i1(const MixedAlgebra& alg, const TensorElement& h1, LetterId v, const TensorElement& h2) {
  require_in_h(alg, h2);
  return concat_product(map_i(alg, h1, v), h2, Exec::serial);
}

TripleComb map_j1(const MixedAlgebra& alg, const TensorElement& h1, LetterId v, const TensorElement& h2) {
  require_in_h(alg, h1);
  require_in_h(alg, h2);
  require_v(alg, v);
  const TensorPair delta = coproduct(h1, Exec::serial);
  TripleComb out;
  for (const auto& [pair, c] : delta) {
    for (const auto& [w, d] : h2) out.add(Triple{pair.first, v, pair.second + w}, c * d);
  }
  return out;
}

TripleComb to_triples(const MixedAlgebra& alg, const MixedElement& x) {
  require_mixed(alg, x);
  TripleComb out;
  for (const auto& [w, c] : x) {
    BlockForm b = alg.blocks(w);
    if (b.v_letters.size() != 1) throw Error(ErrorKind::InvalidArgument, "element is not of grade 1");
    out.add(Triple{std::move(b.blocks[0]), b.v_letters[0], std::move(b.blocks[1])}, c);
  }
  return out;
}

MixedElement from_triples(const MixedAlgebra& alg, const TripleComb& t) {
  MixedElement out(alg.alphabet());
  for (const auto& [tr, c] : t) {
    Word w = tr.left;
    w.push_back(tr.v);
    w.append(tr.right);
    out.add(std::move(w), c);
  }
  return out;
}

MixedElement map_I(const MixedAlgebra& alg, const MixedElement& x, Exec exec) {
  require_mixed(alg, x);
  return sum_over_terms(
      x.body(),
      [&](const Word& w, const Rational& c) {
        const BlockForm b = alg.blocks(w);
        LinComb<Word> acc = LinComb<Word>::term(Word{}, c);
        for (std::size_t j = 0; j < b.v_letters.size(); ++j) {
          acc = times(acc, adjoint_on_letter(b.blocks[j], b.v_letters[j]));
        }
        MixedElement part(alg.alphabet());
        for (const auto& [u, d] : acc) part.add(u + b.blocks.back(), d);
        return part;
      },
      MixedElement(alg.alphabet()), exec);
}

MixedElement map_J(const MixedAlgebra& alg, const MixedElement& x, Exec exec) {
  require_mixed(alg, x);
  return sum_over_terms(
      x.body(),
      [&](const Word& w, const Rational& c) {
        const BlockForm b = alg.blocks(w);
        // State: (emitted prefix, W-word carried into the next block).
        LinComb<WordPair> state = LinComb<WordPair>::term(WordPair{}, c);
        for (std::size_t j = 0; j < b.v_letters.size(); ++j) {
          LinComb<WordPair> next;
          for (const auto& [pc, d] : state) {
            const Word h = pc.second + b.blocks[j];
            const std::uint64_t total = std::uint64_t{1} << h.size();
            for (std::uint64_t mask = 0; mask < total; ++mask) {
              Word prefix = pc.first;
              Word carry;
              for (std::size_t i = 0; i < h.size(); ++i) {
                if (mask >> i & 1U) {
                  prefix.push_back(h[i]);
                } else {
                  carry.push_back(h[i]);
                }
              }
              prefix.push_back(b.v_letters[j]);
              next.add(WordPair{std::move(prefix), std::move(carry)}, d);
            }
          }
          state = std::move(next);
        }
        MixedElement part(alg.alphabet());
        for (const auto& [pc, d] : state) part.add(pc.first + pc.second + b.blocks.back(), d);
        return part;
      },
      MixedElement(alg.alphabet()), exec);
}

std::vector<UGenerator> free_generators(const MixedAlgebra& alg, int max_degree) {
  if (max_degree < 1) throw Error(ErrorKind::InvalidArgument, "max_degree must be >= 1");
  const std::uint64_t n = alg.u_count_up_to(max_degree);
  if (n > kMaxMaterialized) throw Error(ErrorKind::DegreeCapExceeded, "too many generators requested");
  std::vector<UGenerator> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t id = 0; id < n; ++id) {
    const auto u = static_cast<LetterId>(id);
    auto [alpha, v] = alg.u_definition(u);
    const int degree = static_cast<int>(alpha.size()) + 1;
    out.push_back(UGenerator{u, std::move(alpha), v, degree, alg.u_expansion(u)});
  }
  return out;
}

SmashElement smash_normal_form(const MixedAlgebra& alg, const MixedElement& x, Exec exec) {
  const MixedElement j = map_J(alg, x, exec);
  SmashElement out;
  for (const auto& [w, c] : j) {
    BlockForm b = alg.blocks(w);
    Word u_word;
    for (std::size_t i = 0; i < b.v_letters.size(); ++i) u_word.push_back(alg.u_letter(b.blocks[i], b.v_letters[i]));
    out.add(WordPair{std::move(u_word), std::move(b.blocks.back())}, c);
  }
  return out;
}

namespace {

using ExpansionTable = std::map<LetterId, LinComb<Word>>;

ExpansionTable expansions_for(const MixedAlgebra& alg, const LinComb<WordPair>& body) {
  ExpansionTable table;
  for (const auto& [p, c] : body) {
    for (LetterId u : p.first) {
      if (!table.count(u)) table.emplace(u, alg.u_expansion(u).body());
    }
  }
  return table;
}

}  // namespace

MixedElement embed_smash(const MixedAlgebra& alg, const SmashElement& p, Exec exec) {
  const ExpansionTable table = expansions_for(alg, p.body());
  return sum_over_terms(
      p.body(),
      [&](const WordPair& key, const Rational& c) {
        LinComb<Word> acc = LinComb<Word>::term(Word{}, c);
        for (LetterId u : key.first) acc = times(acc, table.at(u));
        MixedElement part(alg.alphabet());
        for (const auto& [w, d] : acc) part.add(w + key.second, d);
        return part;
      },
      MixedElement(alg.alphabet()), exec);
}

MixedElement embed_u(const MixedAlgebra& alg, const TensorElement& t) {
  SmashElement p;
  for (const auto& [w, c] : t) p.add(WordPair{w, Word{}}, c);
  return embed_smash(alg, p);
}

LinComb<Word> smash_act(const MixedAlgebra& alg, const Word& beta, const Word& u_word) {
  LinComb<Word> out;
  const std::size_t slots = u_word.size();
  if (slots == 0) {
    if (beta.empty()) out.add(Word{}, 1);
    return out;
  }
  std::vector<std::pair<Word, LetterId>> defs;
  defs.reserve(slots);
  for (LetterId u : u_word) defs.push_back(alg.u_definition(u));

  std::vector<std::size_t> colour(beta.size(), 0);
  while (true) {
    std::vector<Word> prefixes(slots);
    for (std::size_t i = 0; i < beta.size(); ++i) prefixes[colour[i]].push_back(beta[i]);
    Word result;
    for (std::size_t s = 0; s < slots; ++s) result.push_back(alg.u_letter(prefixes[s] + defs[s].first, defs[s].second));
    out.add(std::move(result), 1);
    std::size_t i = 0;
    while (i < colour.size() && ++colour[i] == slots) colour[i++] = 0;
    if (i == colour.size()) break;
  }
  return out;
}

SmashElement smash_multiply(const MixedAlgebra& alg, const SmashElement& p, const SmashElement& q) {
  SmashElement out;
  for (const auto& [left, c1] : p) {
    const TensorPair delta = coproduct(TensorElement::word(alg.alphabet(), left.second), Exec::serial);
    for (const auto& [right, c2] : q) {
      for (const auto& [split, cs] : delta) {
        const LinComb<Word> acted = smash_act(alg, split.first, right.first);
        const Word w_part = split.second + right.second;
        const Rational c = c1 * c2 * cs;
        for (const auto& [u, ca] : acted) out.add(WordPair{left.first + u, w_part}, c * ca);
      }
    }
  }
  return out;
}

Elimination eliminate_lie(const MixedAlgebra& alg, const LiePolynomial& x) {
  require_same_alphabet(alg.alphabet(), x.alphabet());
  const TensorElement ex = expand(x);

  // V -> 0 is an algebra map, so it sends F(V + W) onto F(W).
  TensorElement ew(alg.alphabet());
  for (const auto& [w, c] : ex) {
    if (alg.grade(w) == 0) ew.add(w, c);
  }
  const TensorElement y = ex - ew;
  const MixedElement jy = map_J(alg, y);

  int degree = 1;
  for (const auto& [w, c] : x) degree = std::max(degree, static_cast<int>(w.size()));
  const AlphabetPtr u_alpha = alg.u_alphabet(degree);

  TensorElement in_u(u_alpha);
  for (const auto& [w, c] : jy) {
    const BlockForm b = alg.blocks(w);
    if (!b.blocks.back().empty()) {
      throw Error(ErrorKind::DecompositionFailure, "ideal component has a trailing W-block after map_J");
    }
    Word u_word;
    for (std::size_t i = 0; i < b.v_letters.size(); ++i) u_word.push_back(alg.u_letter(b.blocks[i], b.v_letters[i]));
    in_u.add(std::move(u_word), c);
  }

  try {
    return Elimination{lie_extract(in_u), lie_extract(ew)};
  } catch (const NotALieElementError& e) {
    throw Error(ErrorKind::DecompositionFailure, std::string("component is not a Lie element: ") + e.what());
  }
}

std::vector<DimensionRow> bigraded_dimension_audit(int v_count, int w_count, int max_total_degree, Exec exec) {
  if (v_count < 1 || w_count < 1) throw Error(ErrorKind::InvalidArgument, "generator counts must be >= 1");
  if (max_total_degree < 1) throw Error(ErrorKind::InvalidArgument, "max degree must be >= 1");
  std::vector<std::string> vs, ws;
  for (int i = 1; i <= v_count; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 1; i <= w_count; ++i) ws.push_back("w" + std::to_string(i));
  const MixedAlgebra alg(vs, ws, max_total_degree);
  const AlphabetPtr u_alpha = alg.u_alphabet();

  return map_indices(
      static_cast<std::size_t>(max_total_degree),
      [&](std::size_t i) {
        const int n = static_cast<int>(i) + 1;
        DimensionRow row;
        row.degree = n;
        row.lhs = witt_dimension(v_count + w_count, n);
        row.f_w = witt_dimension(w_count, n);
        row.f_u = graded_lyndon_count(*u_alpha, n);
        return row;
      },
      exec);
}

}  // namespace hopfelim
