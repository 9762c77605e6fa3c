#pragma once

#include <json.hpp>

#include "bkm/decide.hpp"

namespace bkm {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Rationals travel as "p/q" strings or plain integers.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

// {"matrix": [[...]], "labels": [...]?, "symmetrizer": [...]?}
BorcherdsCartanMatrix algebra_from_json(const Json& j);
Json algebra_to_json(const BorcherdsCartanMatrix& A);

// {"h": [ints], "e": [rationals]?}
Weight weight_from_json(const Json& j, int rank);
std::vector<Weight> weights_from_json(const Json& j, int rank);  // object or array
Json weight_to_json(const Weight& w);

// {"H": int, "terms": [{"m": [...], "c": ...}, ...]} in graded-lex order.
Json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const Json& j, int rank);

// {"n": int, "edges": [[i, j], ...]}
SimpleGraph graph_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json oracle_to_json(const OracleResult& r);
Json factor_report_to_json(const FactorReport& r);
Json component_key_to_json(const ComponentKey& k);

}  // namespace bkm
