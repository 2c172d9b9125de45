#pragma once

// Text and JSON formats shared by the command line and the session service.
//
//   quiver  {"n": 3, "arrows": [[2,1],[3,1]]}   one pair per arrow
//   matrix  [[0,-1,-1],[1,0,0],[1,0,0]]         row-major
//   module  M[a,b]  P[i]  I[i]  S[i]  P[i][1]
//   pair    T=[M[1,1],M[3,3]];P=[2]

#include <string>
#include <string_view>

#include "json.hpp"
#include "quiverlab/seed.hpp"
#include "quiverlab/silting.hpp"

namespace quiverlab {

using Json = nlohmann::json;

// Structural problems throw InvalidArgument; the quiver itself may throw
// BadLabel, LoopPresent or TwoCyclePresent.
Quiver quiver_from_json(const Json& j);
Json to_json(const Quiver& q);

// Throws InvalidArgument on ragged or non-integer input.
IntMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);

// A JSON quiver, a JSON matrix, or an arrow list "2->1,3->1" (n = largest
// label).  Throws ParseError.
Quiver parse_quiver(std::string_view text);
// Matrices may be any skew-symmetric integer matrix; quivers are converted.
IntMatrix parse_exchange_matrix(std::string_view text);

// Named quivers.  "A<n>" with orientation
//   linear       1 <- 2 <- ... <- n
//   alternating  odd vertices are sinks on the path 1 - 2 - ... - n
//   fan          every arrow points at 1 along the path ... 4 2 1 3 5 ...
//   or an arrow list as in parse_quiver;
// "K<m>" is the m-Kronecker quiver, m arrows 2 -> 1.
Quiver named_quiver(std::string_view type, std::string_view orientation = "linear");

ModuleDesc parse_module(const TypeAQuiver& q, std::string_view text);
SiltingPair parse_pair(std::string_view text);

Json to_json(const CharacterTable& table);
Json to_json(const ExchangeGraph& g);
Json to_json(const SiltingPair& p);

}  // namespace quiverlab
