#include "coxchain/export.hpp"

#include <sstream>

namespace coxchain {

namespace {

std::string coeff_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

Json covers_json(const std::vector<Arc>& covers) {
  Json out = Json::array();
  for (auto [a, b] : covers) out.push_back({a, b});
  return out;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json roots_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.system().name();
  Json pos = Json::array();
  for (PosIdx i = 0; i < rs.size(); ++i) pos.push_back(rs.coeffs(i));
  j["positives"] = pos;
  Json subs = Json::array();
  for (const auto& s : rs.subsystems()) {
    Json o;
    o["roots"] = s.roots;
    o["commutative"] = s.commutative;
    subs.push_back(o);
  }
  j["subsystems"] = subs;
  return j;
}

Json lattice_json(const Lattice& L) {
  Json j;
  j["n"] = L.size();
  j["covers"] = covers_json(L.covers());
  Json labels = Json::object();
  if (L.labelled())
    for (int e = 0; e < L.num_edges(); ++e)
      labels[std::to_string(L.edge(e).first) + "," + std::to_string(L.edge(e).second)] = L.label(e);
  j["labels"] = labels;
  j["bottom"] = L.bottom();
  j["top"] = L.top();
  return j;
}

Json mg_json(const MGPoset& mg, const ChainSet& chains) {
  Json j;
  Json classes = Json::array();
  for (const auto& c : mg.classes) {
    Json o;
    o["key"] = bit_string(c.key);
    o["rep"] = chains.chains[c.representative];
    classes.push_back(o);
  }
  j["classes"] = classes;
  j["covers"] = covers_json(mg.covers);
  j["is_poset"] = mg.is_poset;
  j["polygon_complete"] = mg.polygon_complete;
  j["min_ids"] = mg.minima;
  j["max_ids"] = mg.maxima;
  return j;
}

Json report_json(const Report& r) {
  Json j;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json contraction_json(const ContractionReport& r) {
  Json j;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  j["surjective"] = r.surjective;
  j["order_preserving"] = r.order_preserving;
  j["fibres_connected"] = r.fibres_connected;
  j["covers_lift"] = r.covers_lift;
  return j;
}

Json bruhat_json(const HigherBruhat& b) {
  Json j;
  j["n"] = b.classes.size();
  j["covers"] = covers_json(b.order.covers());
  j["labels"] = Json::object();
  auto mins = b.order.minimal();
  auto maxs = b.order.maximal();
  j["bottom"] = mins.size() == 1 ? mins[0] : -1;
  j["top"] = maxs.size() == 1 ? maxs[0] : -1;
  Json keys = Json::array(), reps = Json::array();
  for (const auto& c : b.classes) {
    keys.push_back(bit_string(c.triples));
    CoxeterWord one_based = c.representative;
    for (int& x : one_based) ++x;
    reps.push_back(one_based);
  }
  j["keys"] = keys;
  j["words"] = reps;
  j["reduced_words"] = b.word_count;
  j["inclusion_order_equal"] = b.inclusion_order_equal;
  return j;
}

std::string weak_order_dot(const WeakOrder& wo) {
  std::ostringstream os;
  os << "digraph weak_order {\n  rankdir=BT;\n";
  for (ElemId w = 0; w < wo.size(); ++w) os << "  n" << w << " [label=\"" << w << "\"];\n";
  for (ElemId w = 0; w < wo.size(); ++w)
    for (const auto& e : wo.up_edges(w))
      os << "  n" << w << " -> n" << e.target << " [dir=forward, label=\""
         << coeff_text(wo.roots().coeffs(e.label)) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string lattice_dot(const Lattice& L, const Congruence* theta) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  if (theta) {
    for (int k = 0; k < theta->num_classes; ++k) {
      os << "  subgraph cluster_" << k << " {\n    label=\"" << k << "\";\n";
      for (int x : theta->members[k]) os << "    n" << x << ";\n";
      os << "  }\n";
    }
  } else {
    for (int x = 0; x < L.size(); ++x) os << "  n" << x << ";\n";
  }
  for (int e = 0; e < L.num_edges(); ++e) {
    os << "  n" << L.edge(e).first << " -> n" << L.edge(e).second << " [dir=forward";
    if (L.labelled()) os << ", label=\"" << L.label(e) << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace coxchain
