#include "pathideal/serialize.hpp"

#include <algorithm>

#include "pathideal/error.hpp"

namespace pathideal {

namespace {

Vertex index_of(const std::vector<std::string>& universe, const std::string& label) {
  const auto it = std::find(universe.begin(), universe.end(), label);
  if (it == universe.end()) throw Error(ErrorCode::InvalidVertex, "unknown label '" + label + "'");
  return static_cast<Vertex>(it - universe.begin());
}

Json monomials_to_json(const std::vector<SquarefreeMonomial>& ms,
                       const std::vector<std::string>& universe) {
  Json out = Json::array();
  for (auto m : ms) out.push_back(monomial_to_json(m, universe));
  return out;
}

std::vector<SquarefreeMonomial> monomials_from_json(const Json& j,
                                                    const std::vector<std::string>& universe) {
  std::vector<SquarefreeMonomial> out;
  for (const auto& m : j) out.push_back(monomial_from_json(m, universe));
  return out;
}

// Turns library-level JSON exceptions into our error type.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

Json monomial_to_json(SquarefreeMonomial m, const std::vector<std::string>& universe) {
  Json out = Json::array();
  for (Vertex v : m.vertices()) out.push_back(universe.at(v));
  return out;
}

SquarefreeMonomial monomial_from_json(const Json& j, const std::vector<std::string>& universe) {
  return guarded([&] {
    std::uint64_t bits = 0;
    for (const auto& label : j) {
      bits |= SquarefreeMonomial::variable(index_of(universe, label.get<std::string>())).bits();
    }
    return SquarefreeMonomial(bits);
  });
}

Json to_json(const MonomialIdeal& ideal) {
  return monomials_to_json(ideal.generators(), ideal.variables());
}

MonomialIdeal ideal_from_json(const Json& j, const std::vector<std::string>& universe) {
  return guarded([&] {
    if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "ideal must be a JSON array");
    return MonomialIdeal(universe, monomials_from_json(j, universe));
  });
}

Json to_json(const BettiTable& table) {
  Json betti = Json::object();
  for (const auto& [ij, count] : table.entries) {
    betti[std::to_string(ij.first) + "," + std::to_string(ij.second)] = count;
  }
  Json out;
  out["betti"] = std::move(betti);
  out["regularity"] = table.entries.empty() ? Json(nullptr) : Json(table.regularity());
  out["field_char"] = BettiTable::kFieldCharacteristic;
  return out;
}

BettiTable betti_from_json(const Json& j) {
  return guarded([&] {
    if (j.at("field_char").get<int>() != BettiTable::kFieldCharacteristic) {
      throw Error(ErrorCode::InvalidArgument, "only characteristic 0 tables are supported");
    }
    BettiTable table;
    for (const auto& [key, count] : j.at("betti").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) {
        throw Error(ErrorCode::InvalidArgument, "Betti key '" + key + "' is not \"i,j\"");
      }
      table.entries[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] =
          count.get<std::size_t>();
    }
    return table;
  });
}

Json to_json(const QuotientOrder& order, const std::vector<std::string>& universe) {
  Json out;
  out["order"] = monomials_to_json(order.order, universe);
  out["certificates"] = monomials_to_json(order.certificates, universe);
  return out;
}

QuotientOrder quotient_order_from_json(const Json& j, const std::vector<std::string>& universe) {
  return guarded([&] {
    QuotientOrder out;
    out.order = monomials_from_json(j.at("order"), universe);
    out.certificates = monomials_from_json(j.at("certificates"), universe);
    return out;
  });
}

Json to_json(const ForbiddenWitness& witness, const std::vector<std::string>& universe) {
  Json out;
  out["kind"] = witness.kind == ForbiddenWitness::Kind::TwoPaths ? "PnPn" : "Lnk";
  out["n"] = witness.n;
  out["k"] = witness.k;
  out["family"] = format_family_spec(witness.family());
  Json vertices = Json::array();
  for (Vertex v : witness.vertices) vertices.push_back(universe.at(v));
  out["vertices"] = std::move(vertices);
  Json mapping = Json::array();
  for (const auto& [label, v] : witness.mapping) mapping.push_back({label, universe.at(v)});
  out["mapping"] = std::move(mapping);
  return out;
}

ForbiddenWitness witness_from_json(const Json& j, const std::vector<std::string>& universe) {
  return guarded([&] {
    ForbiddenWitness w;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "PnPn") {
      w.kind = ForbiddenWitness::Kind::TwoPaths;
    } else if (kind == "Lnk") {
      w.kind = ForbiddenWitness::Kind::Lnk;
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown witness kind '" + kind + "'");
    }
    w.n = j.at("n").get<std::size_t>();
    w.k = j.at("k").get<std::size_t>();
    for (const auto& label : j.at("vertices")) {
      w.vertices.push_back(index_of(universe, label.get<std::string>()));
    }
    for (const auto& pair : j.at("mapping")) {
      w.mapping.emplace_back(pair.at(0).get<std::string>(),
                             index_of(universe, pair.at(1).get<std::string>()));
    }
    return w;
  });
}

Json to_json(const Classification& c, const std::vector<std::string>& universe) {
  Json witness;
  if (const auto* q = std::get_if<QuotientOrder>(&c.witness)) {
    witness = to_json(*q, universe);
    witness["type"] = "quotient_order";
  } else if (const auto* f = std::get_if<ForbiddenWitness>(&c.witness)) {
    witness = to_json(*f, universe);
    witness["type"] = "forbidden_subgraph";
  } else {
    const auto& b = std::get<DiameterBound>(c.witness);
    witness["type"] = "diameter_bound";
    witness["diameter"] = b.diameter;
    witness["n"] = b.n;
  }
  Json trimmed = Json::array();
  for (Vertex v : c.trimmed_vertices) trimmed.push_back(universe.at(v));

  Json out;
  out["n"] = c.n;
  out["verdict"] = verdict_name(c.verdict);
  out["criterion_clause"] = c.criterion_clause;
  out["diameter"] = c.diameter;
  out["witness"] = std::move(witness);
  out["trimmed_vertices"] = std::move(trimmed);
  return out;
}

Classification classification_from_json(const Json& j, const std::vector<std::string>& universe) {
  return guarded([&] {
    Classification c;
    c.n = j.at("n").get<std::size_t>();
    c.experimental = c.n < 4;
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == verdict_name(Verdict::LinearQuotients)) {
      c.verdict = Verdict::LinearQuotients;
    } else if (verdict == verdict_name(Verdict::NotLinearQuotients)) {
      c.verdict = Verdict::NotLinearQuotients;
    } else if (verdict == verdict_name(Verdict::ZeroIdeal)) {
      c.verdict = Verdict::ZeroIdeal;
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown verdict '" + verdict + "'");
    }
    c.criterion_clause = j.at("criterion_clause").get<std::string>();
    c.diameter = j.at("diameter").get<std::size_t>();
    const auto& w = j.at("witness");
    const auto type = w.at("type").get<std::string>();
    if (type == "quotient_order") {
      c.witness = quotient_order_from_json(w, universe);
    } else if (type == "forbidden_subgraph") {
      c.witness = witness_from_json(w, universe);
    } else if (type == "diameter_bound") {
      c.witness = DiameterBound{w.at("diameter").get<std::size_t>(), w.at("n").get<std::size_t>()};
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown witness type '" + type + "'");
    }
    for (const auto& label : j.at("trimmed_vertices")) {
      c.trimmed_vertices.push_back(index_of(universe, label.get<std::string>()));
    }
    return c;
  });
}

}  // namespace pathideal
