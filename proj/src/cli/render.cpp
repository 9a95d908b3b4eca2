#include "hopfelim/render.hpp"

namespace hopfelim {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += sep;
    s += parts[i];
  }
  return s;
}

struct TextTerm {
  std::string monomial;  // empty for the unit
  Rational coefficient;
};

std::string sum_text(const std::vector<TextTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [m, c] = terms[i];
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += m;
    } else {
      out += mag.str() + "*" + m;
    }
  }
  return out;
}

Json json_term(const std::vector<std::string>& monomial, const Rational& c) {
  Json t;
  t["monomial"] = monomial;
  t["coefficient"] = c.str();
  return t;
}

std::vector<std::string> smash_symbols(const MixedAlgebra& alg, const WordPair& p) {
  std::vector<std::string> syms;
  for (LetterId u : p.first) syms.push_back(alg.u_symbol(u));
  for (const auto& s : alg.alphabet()->symbols(p.second)) syms.push_back(s);
  return syms;
}

}  // namespace

std::string bracket_string(const Alphabet& a, const Word& lyndon) {
  if (lyndon.size() == 1) return a.letter(lyndon[0]).symbol;
  const auto [left, right] = standard_factorization(lyndon);
  return "[" + bracket_string(a, left) + "," + bracket_string(a, right) + "]";
}

std::string to_text(const TensorElement& x) {
  std::vector<TextTerm> terms;
  for (const auto& [w, c] : x) terms.push_back({join(x.alphabet()->symbols(w), "*"), c});
  return sum_text(terms);
}

std::string to_text(const LiePolynomial& x) {
  std::vector<TextTerm> terms;
  for (const auto& [w, c] : x) terms.push_back({bracket_string(*x.alphabet(), w), c});
  return sum_text(terms);
}

std::string to_text(const MixedAlgebra& alg, const SmashElement& p) {
  std::vector<TextTerm> terms;
  for (const auto& [pair, c] : p) terms.push_back({join(smash_symbols(alg, pair), "*"), c});
  return sum_text(terms);
}

Json to_json(const TensorElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x) out.push_back(json_term(x.alphabet()->symbols(w), c));
  return out;
}

Json to_json(const LiePolynomial& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x) {
    Json t = json_term(x.alphabet()->symbols(w), c);
    t["bracket"] = bracket_string(*x.alphabet(), w);
    out.push_back(std::move(t));
  }
  return out;
}

Json to_json(const MixedAlgebra& alg, const SmashElement& p) {
  Json out = Json::array();
  for (const auto& [pair, c] : p) out.push_back(json_term(smash_symbols(alg, pair), c));
  return out;
}

}  // namespace hopfelim
