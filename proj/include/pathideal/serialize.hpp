#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pathideal/classify.hpp"
#include "pathideal/ideal.hpp"
#include "pathideal/linquot.hpp"
#include "pathideal/resolution.hpp"

namespace pathideal {

using Json = nlohmann::json;

// Monomials are written as label arrays. Reading needs the variable universe
// the labels refer to (the tree's labels), which the documents do not carry.

Json monomial_to_json(SquarefreeMonomial m, const std::vector<std::string>& universe);
SquarefreeMonomial monomial_from_json(const Json& j, const std::vector<std::string>& universe);

/// Array of generator arrays, canonical order.
Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j, const std::vector<std::string>& universe);

/// {"betti": {"i,j": count}, "regularity": r or null, "field_char": 0}
Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& j);

/// {"order": [[...]], "certificates": [[...]]}
Json to_json(const QuotientOrder& order, const std::vector<std::string>& universe);
QuotientOrder quotient_order_from_json(const Json& j, const std::vector<std::string>& universe);

Json to_json(const ForbiddenWitness& witness, const std::vector<std::string>& universe);
ForbiddenWitness witness_from_json(const Json& j, const std::vector<std::string>& universe);

/// {"n", "verdict", "criterion_clause", "diameter", "witness", "trimmed_vertices"}
Json to_json(const Classification& c, const std::vector<std::string>& universe);
Classification classification_from_json(const Json& j, const std::vector<std::string>& universe);

}  // namespace pathideal
