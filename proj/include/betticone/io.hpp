#pragma once

#include <string>
#include <variant>

#include "betticone/decomposition.hpp"

namespace betticone {

// Canonical text documents. Tables:
//
//   betti v1
//   <i> <j> <value>        one line per entry, (i, j) ascending
//
// Decompositions:
//
//   chaindec v1            |  symdec v1
//   s <length>             |  s <length>
//   term <d0,..,ds> <r>    |  N <reflection degree>
//                          |  term <d0,..,ds> <r> pair|self
//
// Values are rationals "p/q" or integers "p", always in lowest terms. Each
// serializer also has a JSON variant carrying the same data with rationals
// as strings; parsers accept either form, keying on a leading '{'.

std::string serialize(const BettiTable& t);
std::string serialize_json(const BettiTable& t);
BettiTable parse_table(const std::string& text);

std::string serialize(const ChainDecomposition& c);
std::string serialize_json(const ChainDecomposition& c);
std::string serialize(const SymmetrizedDecomposition& sd);
std::string serialize_json(const SymmetrizedDecomposition& sd);

using DecompositionDocument = std::variant<ChainDecomposition, SymmetrizedDecomposition>;
DecompositionDocument parse_decomposition(const std::string& text);

}  // namespace betticone
