#include "cytk/report.hpp"

#include <sstream>

namespace cytk {

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json index_list(const std::vector<std::size_t>& v) { return Json(v); }

Json curve_json(const SingularCurve& c) {
  return {{"face", c.face.to_string()},
          {"order", c.type.order()},
          {"type", c.type.raw_string()},
          {"canonical", c.type.to_string()}};
}

Json c2_bound_json(const std::optional<C2BoundReport>& r) {
  if (!r) return nullptr;
  return {{"lower_bound", to_string(r->lower_bound)}, {"positive", r->positive}};
}

Json gate_json(const DuValMultiset& m) {
  const GateVerdict g = abelian_type_gate(m);
  return {{"possible", g.possible}, {"reason", to_string(g.reason)}};
}

Json classification_json(const DuValMultiset& m) {
  const Classification c = classify(m);
  Json out = {{"kind", to_string(c.kind)}, {"entry", nullptr}, {"realization", nullptr}};
  if (c.entry) {
    const auto& e = classitor_entries().at(static_cast<std::size_t>(*c.entry - 1));
    out["entry"] = e.id;
    out["realization"] = e.realization;
    out["builtin_action"] = e.builtin_action;
  }
  return out;
}

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

const char* yes_no(const Json& b) {
  if (b.is_null()) return "n/a";
  return b.get<bool>() ? "yes" : "no";
}

std::string point_string(const Json& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + p[i].get<std::string>();
  return out + ")";
}

}  // namespace

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json analyze_json(const WeightSystem& ws) {
  Json doc;
  doc["degree"] = ws.degree();
  doc["weights"] = ws.weights();
  doc["wellformed"] = is_wellformed_hypersurface(ws);
  const bool qs = is_quasismooth(ws);
  doc["quasismooth"] = qs;
  doc["calabi_yau_degree"] = is_calabi_yau_degree(ws);

  std::optional<bool> smooth, no_edge;
  Json locus = nullptr;
  if (qs) {
    const SingularLocusReport r = singular_locus(ws);
    smooth = is_smooth_in_codim2(r);
    no_edge = r.contained_edges.empty();
    locus = Json::object();
    locus["singular_vertices"] = index_list(r.singular_vertices);
    locus["contained_edges"] = Json::array();
    for (const auto& e : r.contained_edges)
      locus["contained_edges"].push_back(
          {{"stratum", e.edge.to_string()}, {"order", e.order}, {"singular", e.singular()}});
    locus["edge_point_loci"] = Json::array();
    for (const auto& s : r.edge_point_loci)
      locus["edge_point_loci"].push_back({{"stratum", s.stratum.to_string()}, {"order", s.order}});
    locus["singular_curves"] = Json::array();
    for (const auto& c : r.singular_curves) locus["singular_curves"].push_back(curve_json(c));
  }
  doc["smooth_in_codim2"] = optional_bool(smooth);
  doc["no_edge"] = optional_bool(no_edge);
  doc["singular_locus"] = locus;
  doc["c2_bound"] = c2_bound_json(is_calabi_yau_degree(ws) ? std::optional(c2_lower_bound(ws)) : std::nullopt);
  return doc;
}

std::string analyze_text(const Json& doc) {
  std::ostringstream os;
  os << "X_" << doc["degree"].get<Integer>() << " in P(";
  for (std::size_t i = 0; i < doc["weights"].size(); ++i) os << (i ? "," : "") << doc["weights"][i].get<Integer>();
  os << ")\n";
  os << "  wellformed:        " << yes_no(doc["wellformed"]) << "\n";
  os << "  quasismooth:       " << yes_no(doc["quasismooth"]) << "\n";
  os << "  CY degree:         " << yes_no(doc["calabi_yau_degree"]) << "\n";
  os << "  smooth in codim 2: " << yes_no(doc["smooth_in_codim2"]) << "\n";
  os << "  no edge:           " << yes_no(doc["no_edge"]) << "\n";

  const Json& locus = doc["singular_locus"];
  if (locus.is_null()) {
    os << "singular locus: not computed (not quasismooth)\n";
  } else {
    os << "singular vertices: ";
    if (locus["singular_vertices"].empty()) os << "none";
    for (std::size_t i = 0; i < locus["singular_vertices"].size(); ++i)
      os << (i ? ", " : "") << "P" << locus["singular_vertices"][i].get<std::size_t>();
    os << "\ncontained edges: " << locus["contained_edges"].size() << "\n";
    for (const auto& e : locus["contained_edges"])
      os << "  J=" << e["stratum"].get<std::string>() << " gcd " << e["order"].get<Integer>()
         << (e["singular"].get<bool>() ? " (singular)" : "") << "\n";
    os << "singular edges meeting X in points: " << locus["edge_point_loci"].size() << "\n";
    for (const auto& e : locus["edge_point_loci"])
      os << "  J=" << e["stratum"].get<std::string>() << " Z/" << e["order"].get<Integer>() << "\n";
    os << "singular curves: " << locus["singular_curves"].size() << "\n";
    for (const auto& c : locus["singular_curves"])
      os << "  J=" << c["face"].get<std::string>() << " " << c["type"].get<std::string>() << "  ~ "
         << c["canonical"].get<std::string>() << "\n";
  }
  if (doc["c2_bound"].is_null())
    os << "c2 bound: n/a (degree differs from weight sum)\n";
  else
    os << "c2 bound: " << doc["c2_bound"]["lower_bound"].get<std::string>()
       << (doc["c2_bound"]["positive"].get<bool>() ? " (positive)" : " (not positive)") << "\n";
  return os.str();
}

Json census_json(const CensusResult& result) {
  Json doc;
  const auto& s = result.summary;
  doc["summary"] = {{"total", s.total},
                    {"not_smooth_codim2", s.not_smooth_codim2},
                    {"not_smooth_codim2_and_no_edge", s.not_smooth_codim2_and_no_edge}};
  doc["failures"] = Json::array();
  for (const auto& f : s.failures) doc["failures"].push_back({{"line", f.line}, {"reason", f.reason}});
  doc["verdicts"] = Json::array();
  for (const auto& v : result.verdicts) {
    Json curves = Json::array();
    for (const auto& c : v.curves) curves.push_back(c.type.raw_string());
    doc["verdicts"].push_back({{"line", v.source_line},
                               {"degree", v.ws.degree()},
                               {"weights", v.ws.weights()},
                               {"origin", to_string(v.origin)},
                               {"wellformed", v.wellformed},
                               {"quasismooth", v.quasismooth},
                               {"calabi_yau_degree", v.calabi_yau_degree},
                               {"smooth_in_codim2", optional_bool(v.smooth_in_codim2)},
                               {"no_edge", optional_bool(v.no_edge)},
                               {"curves", curves},
                               {"c2_bound", c2_bound_json(v.c2_bound)}});
  }
  return doc;
}

std::string census_text(const Json& doc) {
  std::ostringstream os;
  const Json& s = doc["summary"];
  os << "records:                              " << s["total"].get<std::size_t>() << "\n";
  os << "not smooth in codim 2:                " << s["not_smooth_codim2"].get<std::size_t>() << "\n";
  os << "not smooth in codim 2 and edge-free:  " << s["not_smooth_codim2_and_no_edge"].get<std::size_t>() << "\n";
  os << "failures:                             " << doc["failures"].size() << "\n";
  for (const auto& f : doc["failures"])
    os << "  line " << f["line"].get<std::size_t>() << ": " << f["reason"].get<std::string>() << "\n";
  return os.str();
}

Json surface_json(const DuValMultiset& m) {
  Json doc;
  doc["multiset"] = m.to_string();
  doc["points"] = m.size();
  doc["total_k"] = m.total_k();
  doc["types"] = Json::array();
  for (auto it = m.entries().rbegin(); it != m.entries().rend(); ++it) {
    const auto& [t, count] = *it;
    doc["types"].push_back(
        {{"type", t.to_string()}, {"count", count}, {"k", t.k()}, {"r", t.r()}, {"deficiency", to_string(t.deficiency())}});
  }
  doc["orbifold_c2"] = to_string(orbifold_c2(m));
  doc["conditional"] = c2_is_conditional(m);
  doc["gate"] = gate_json(m);
  doc["classification"] = classification_json(m);
  return doc;
}

std::string surface_text(const Json& doc) {
  std::ostringstream os;
  os << "multiset:    " << doc["multiset"].get<std::string>() << "  (" << doc["points"].get<std::size_t>()
     << " points, sum k = " << doc["total_k"].get<Integer>() << ")\n";
  os << "orbifold c2: " << doc["orbifold_c2"].get<std::string>()
     << (doc["conditional"].get<bool>() ? "  (conditional: assumes the resolution is K3)" : "") << "\n";
  const Json& gate = doc["gate"];
  os << "abelian gate: " << (gate["possible"].get<bool>() ? "possible" : "excluded");
  if (!gate["possible"].get<bool>()) os << " (" << gate["reason"].get<std::string>() << ")";
  os << "\n";
  const Json& c = doc["classification"];
  os << "classification: " << c["kind"].get<std::string>();
  if (!c["entry"].is_null())
    os << ", entry " << c["entry"].get<int>() << ": " << c["realization"].get<std::string>();
  os << "\n";
  return os.str();
}

Json enumerate_json(const std::vector<DuValMultiset>& all) {
  Json doc;
  doc["count"] = all.size();
  doc["multisets"] = Json::array();
  for (const auto& m : all)
    doc["multisets"].push_back({{"multiset", m.to_string()},
                                {"total_k", m.total_k()},
                                {"gate", gate_json(m)},
                                {"classification", classification_json(m)}});
  return doc;
}

std::string enumerate_text(const Json& doc) {
  std::ostringstream os;
  os << doc["count"].get<std::size_t>() << " multisets with orbifold c2 = 0\n";
  for (const auto& m : doc["multisets"]) {
    os << "  " << m["multiset"].get<std::string>() << "  sum k = " << m["total_k"].get<Integer>() << "  ";
    const Json& c = m["classification"];
    if (!c["entry"].is_null())
      os << "realized (entry " << c["entry"].get<int>() << ")";
    else if (m["gate"]["possible"].get<bool>())
      os << c["kind"].get<std::string>();
    else
      os << "excluded (" << m["gate"]["reason"].get<std::string>() << ")";
    os << "\n";
  }
  return os.str();
}

Json torus_json(const TorusAction& action, const QuotientReport& report, const DuValMultiset* expected) {
  Json doc;
  doc["label"] = report.label;
  doc["group_order"] = report.group_order;
  Json histogram = Json::object();
  for (std::size_t n : action.element_orders()) {
    const std::string key = std::to_string(n);
    histogram[key] = histogram.value(key, 0) + 1;
  }
  doc["element_orders"] = histogram;
  Json fixed = Json::object();
  for (const auto& [n, counts] : report.fixed_point_counts) fixed[std::to_string(n)] = counts;
  doc["fixed_point_counts"] = fixed;
  doc["orbits"] = Json::array();
  for (const auto& o : report.orbits) {
    Json points = Json::array();
    for (const auto& p : o.points) points.push_back(vector_json(p));
    Json stab = Json::object();
    for (const auto& [n, c] : o.stabilizer_histogram) stab[std::to_string(n)] = c;
    doc["orbits"].push_back({{"points", points},
                             {"size", o.points.size()},
                             {"stabilizer_order", o.stabilizer_order},
                             {"stabilizer_element_orders", stab},
                             {"stabilizer", o.group},
                             {"du_val", o.type.to_string()}});
  }
  doc["multiset"] = report.multiset.to_string();
  doc["orbifold_c2"] = to_string(orbifold_c2(report.multiset));
  doc["expected"] = expected ? Json(expected->to_string()) : Json(nullptr);
  doc["matches_expected"] = expected ? Json(*expected == report.multiset) : Json(nullptr);
  return doc;
}

std::string torus_text(const Json& doc) {
  std::ostringstream os;
  const std::string label = doc["label"].get<std::string>();
  os << "action: " << (label.empty() ? "(unnamed)" : label) << ", group order " << doc["group_order"].get<std::size_t>()
     << "\n";
  os << "fixed points per element:";
  for (const auto& [order, counts] : doc["fixed_point_counts"].items()) {
    os << "  order " << order << ": ";
    for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "/" : "") << counts[i].get<std::size_t>();
  }
  os << "\norbits with nontrivial stabilizer: " << doc["orbits"].size() << "\n";
  for (const auto& o : doc["orbits"])
    os << "  " << o["du_val"].get<std::string>() << "  stabilizer " << o["stabilizer"].get<std::string>()
       << ", orbit size " << o["size"].get<std::size_t>() << ", representative " << point_string(o["points"][0])
       << "\n";
  os << "quotient singularities: " << doc["multiset"].get<std::string>() << "\n";
  os << "orbifold c2: " << doc["orbifold_c2"].get<std::string>() << "\n";
  if (!doc["expected"].is_null())
    os << "expected: " << doc["expected"].get<std::string>() << " ("
       << (doc["matches_expected"].get<bool>() ? "match" : "MISMATCH") << ")\n";
  return os.str();
}

Json builtins_json() {
  Json doc = Json::array();
  for (const auto& a : builtin_actions()) {
    const auto& e = classitor_entries().at(static_cast<std::size_t>(a.entry - 1));
    doc.push_back({{"name", a.name}, {"entry", a.entry}, {"lattice", a.lattice}, {"expected", e.multiset.to_string()}});
  }
  return doc;
}

std::string builtins_text(const Json& doc) {
  std::ostringstream os;
  for (const auto& a : doc)
    os << a["name"].get<std::string>() << "\t" << a["expected"].get<std::string>() << "\t"
       << a["lattice"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace cytk
