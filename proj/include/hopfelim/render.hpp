#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hopfelim/elimination.hpp"
#include "hopfelim/free_lie.hpp"
#include "hopfelim/tensor.hpp"

namespace hopfelim {

using Json = nlohmann::ordered_json;

// Standard bracketing of a Lyndon word, e.g. "[s,[s,v]]".
std::string bracket_string(const Alphabet& a, const Word& lyndon);

// Text forms are sums of "c*x*y" terms that the expression parser reads back.
std::string to_text(const TensorElement& x);
std::string to_text(const LiePolynomial& x);
std::string to_text(const MixedAlgebra& alg, const SmashElement& p);

// JSON forms are lists of {"monomial": [symbols], "coefficient": "p/q"}.
// Lie terms also carry "bracket"; smash monomials list U symbols then W
// symbols, so the product of the monomial is the embedded element.
Json to_json(const TensorElement& x);
Json to_json(const LiePolynomial& x);
Json to_json(const MixedAlgebra& alg, const SmashElement& p);

}  // namespace hopfelim
