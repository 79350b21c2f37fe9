#include "adf/report_json.hpp"

namespace adf {

namespace {

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace

Json to_json(const Certificate& c) {
  Json j;
  j["decision"] = to_string(c.decision);
  j["method"] = to_string(c.method);
  Json cycles = Json::array();
  Json directions = Json::array();
  if (c.witness) {
    j["equipartition"] = {{"X", c.witness->source_side}};
    const CycleCover& cover = c.witness->cover;
    for (std::size_t i = 0; i < cover.cycles.size(); ++i) {
      const auto& cycle = cover.cycles[i];
      cycles.push_back(cycle);
      Json arcs = Json::array();
      if (cover.forward) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
          const Vertex a = cycle[k];
          const Vertex b = cycle[(k + 1) % cycle.size()];
          arcs.push_back((*cover.forward)[i][k] ? Json::array({a, b}) : Json::array({b, a}));
        }
      }
      directions.push_back(std::move(arcs));
    }
  } else {
    j["equipartition"] = nullptr;
  }
  j["cycles"] = std::move(cycles);
  j["arc_directions"] = std::move(directions);
  j["stats"] = {{"checked", c.checked}, {"total", c.total}};
  if (c.refutation) j["refutation"] = *c.refutation;
  if (c.guarantee) j["guarantee"] = *c.guarantee;
  return j;
}

Json to_json(const CensusReport& r) {
  Json j;
  j["n"] = r.n;
  j["target"] = to_string(r.target);
  j["mode"] = to_string(r.mode);
  j["total"] = r.total;
  j["examined"] = r.examined;
  j["good"] = r.good;
  j["bad"] = r.bad;
  j["unknown"] = r.unknown;
  j["degree_histogram"] = r.degree_histogram;
  return j;
}

Json to_json(const CountReport& r) {
  Json terms = Json::object();
  for (const auto& [k, nk] : r.terms) terms[std::to_string(k)] = nk.get_str();
  Json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["N"] = r.N.get_str();
  j["S"] = rational_string(r.S);
  j["S_strong"] = rational_string(r.S_strong);
  j["terms"] = std::move(terms);
  j["inequality3_holds"] = r.inequality3_holds;
  j["inequality3_strong_holds"] = r.inequality3_strong_holds;
  return j;
}

Json to_json(const EdgeColoring& c) {
  Json edges = Json::array();
  for (const Edge& e : c.edges) edges.push_back({e.u, e.v});
  return {{"edges", std::move(edges)}, {"colors", c.colors}};
}

Json to_json(const ConjectureReport& r) {
  Json rows = Json::array();
  for (const ConjectureRow& row : r.rows) {
    rows.push_back({{"n", row.n}, {"trials", row.trials}, {"yes", row.yes}, {"no", row.no},
                    {"unknown", row.unknown}});
  }
  Json found = Json::array();
  for (const Counterexample& c : r.counterexamples) {
    Json arcs = Json::array();
    for (const Arc& a : c.digraph.arcs()) arcs.push_back({a.from, a.to});
    found.push_back({{"n", c.n}, {"family", c.family}, {"delta", c.delta}, {"arcs", std::move(arcs)},
                     {"certificate", to_json(c.certificate)}});
  }
  return {{"rows", std::move(rows)}, {"counterexamples", std::move(found)}};
}

Json to_json(const ClassicalReport& r) {
  Json conditions = Json::array();
  for (const ConditionResult& c : r.conditions) {
    conditions.push_back({{"name", c.name}, {"met", c.met}, {"guarantee", c.guarantee}});
  }
  return {{"n", r.n}, {"delta", r.delta}, {"conditions", std::move(conditions)}};
}

Json to_json(const ThresholdBracket& b) {
  return {{"floor", b.floor.get_str()}, {"lower", b.lower}, {"upper", b.upper}, {"bits", b.bits},
          {"bracket", describe(b)}};
}

std::string dump(const Json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace adf
