#include "bkm/json_io.hpp"

#include <limits>

namespace bkm {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected integer or \"p/q\" string, got " + j.dump());
}

Json rational_to_json(const Rational& q) {
  if (is_integer(q) && numerator(q) >= std::numeric_limits<long long>::min() &&
      numerator(q) <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(numerator(q)));
  return Json(format_rational(q));
}

BorcherdsCartanMatrix algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
    throw ParseError("algebra JSON must contain a \"matrix\" array");
  std::vector<std::vector<Rational>> entries;
  for (const Json& row : j["matrix"]) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const Json& v : row) r.push_back(rational_from_json(v));
    entries.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j["labels"].get<std::vector<std::string>>();
  std::optional<std::vector<Rational>> d;
  if (j.contains("symmetrizer")) {
    std::vector<Rational> dd;
    for (const Json& v : j["symmetrizer"]) dd.push_back(rational_from_json(v));
    d = std::move(dd);
  }
  return BorcherdsCartanMatrix::validate(std::move(entries), std::move(labels), d);
}

Json algebra_to_json(const BorcherdsCartanMatrix& A) {
  Json j;
  Json matrix = Json::array();
  for (int i = 0; i < A.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < A.rank(); ++k) row.push_back(rational_to_json(A.entry(i, k)));
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  if (!A.labels().empty()) j["labels"] = A.labels();
  Json d = Json::array();
  for (int i = 0; i < A.rank(); ++i) d.push_back(rational_to_json(A.d(i)));
  j["symmetrizer"] = std::move(d);
  return j;
}

Weight weight_from_json(const Json& j, int rank) {
  Json src = j;
  if (j.is_array()) {
    src = Json::object();
    src["h"] = j;
  }
  if (!src.is_object() || !src.contains("h"))
    throw ParseError("weight JSON must contain an \"h\" array");
  Weight w;
  for (const Json& v : src["h"]) {
    if (!v.is_number_integer())
      throw ParseError("weight h-entries must be integers");
    w.h.push_back(v.get<long long>());
  }
  if (static_cast<int>(w.h.size()) != rank)
    throw ParseError("weight has " + std::to_string(w.h.size()) +
                     " entries, algebra has rank " + std::to_string(rank));
  if (src.contains("e")) {
    for (const Json& v : src["e"]) w.e.push_back(rational_from_json(v));
    if (w.e.size() != w.h.size())
      throw ParseError("weight e-part must match the rank");
  }
  if (!w.dominant()) throw DominanceError();
  return w;
}

std::vector<Weight> weights_from_json(const Json& j, int rank) {
  std::vector<Weight> out;
  if (j.is_array() && (j.empty() || j[0].is_object() || j[0].is_array())) {
    for (const Json& v : j) out.push_back(weight_from_json(v, rank));
  } else {
    out.push_back(weight_from_json(j, rank));
  }
  return out;
}

Json weight_to_json(const Weight& w) {
  Json j;
  j["h"] = w.h;
  if (!w.e.empty()) {
    Json e = Json::array();
    for (const Rational& v : w.e) e.push_back(rational_to_json(v));
    j["e"] = std::move(e);
  }
  return j;
}

Json series_to_json(const TruncatedSeries& f) {
  Json j;
  j["H"] = f.height();
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {  // map iterates in graded-lex order
    Json t;
    t["m"] = m;
    t["c"] = rational_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

TruncatedSeries series_from_json(const Json& j, int rank) {
  if (!j.is_object() || !j.contains("H") || !j.contains("terms"))
    throw ParseError("series JSON must contain \"H\" and \"terms\"");
  TruncatedSeries f(rank, j["H"].get<int>());
  for (const Json& t : j["terms"])
    f.add_term(t.at("m").get<std::vector<int>>(), rational_from_json(t.at("c")));
  return f;
}

SimpleGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw ParseError("graph JSON must contain \"n\"");
  int n = j["n"].get<int>();
  if (n < 0) throw ParseError("graph size must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges"))
    for (const Json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("edges must be [i, j] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  try {
    return SimpleGraph::from_edges(n, edges);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

Json component_key_to_json(const ComponentKey& k) {
  Json j;
  j["C"] = k.C;
  Json vals = Json::object();
  for (const auto& [i, v] : k.re_values) vals[std::to_string(i)] = v;
  j["re_values"] = std::move(vals);
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["isomorphic"] = v.isomorphic;
  if (v.isomorphic) {
    Json witness = Json::array();
    for (const auto& m : v.witness) {
      Json e;
      e["left_weight"] = m.left_weight;
      e["right_weight"] = m.right_weight;
      e["component"] = component_key_to_json(m.key);
      witness.push_back(std::move(e));
    }
    j["witness"] = std::move(witness);
  } else {
    Json reason;
    reason["kind"] = v.failure == Verdict::Failure::SumMismatch
                         ? "SumMismatch"
                         : "ComponentMultisetMismatch";
    reason["detail"] = v.detail;
    if (v.offending_key) reason["key"] = component_key_to_json(*v.offending_key);
    j["reason"] = std::move(reason);
  }
  return j;
}

Json oracle_to_json(const OracleResult& r) {
  Json j;
  j["equal_to_H"] = r.equal_to_H;
  j["sum_check"] = Json{{"equal", r.sums_equal}};
  j["series_equal"] = r.series_equal;
  if (r.first_difference) j["first_difference"] = *r.first_difference;
  return j;
}

Json factor_report_to_json(const FactorReport& r) {
  Json j;
  switch (r.status) {
    case FactorReport::Status::Ok: j["status"] = "ok"; break;
    case FactorReport::Status::NotApplicable: j["status"] = "not_applicable"; break;
    case FactorReport::Status::NotIsomorphic: j["status"] = "not_isomorphic"; break;
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.status == FactorReport::Status::Ok) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
      Json e;
      e["left"] = p.left;
      e["right"] = p.right;
      e["twist_special"] = p.twist_special;
      e["twist_trivial"] = p.twist_trivial;
      pairs.push_back(std::move(e));
    }
    j["pairs"] = std::move(pairs);
  }
  return j;
}

}  // namespace bkm
