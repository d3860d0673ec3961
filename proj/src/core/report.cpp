#include "lip/report.hpp"

namespace lip {

namespace {

Json vertex_array(std::span<const Vertex> vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

Json witness_json(const ConditionWitness& w) {
  return Json{{"x", vertex_array(w.x.members())}, {"y", vertex_array(w.y.members())}, {"value", w.value}};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const GraphPair& pair, const RunResult& result, std::optional<std::uint64_t> sigma_seed,
             std::optional<std::size_t> target_len, bool include_trace) {
  Json j;
  j["n"] = pair.n();
  j["mG"] = pair.g().m();
  j["mGPrime"] = pair.g_prime().m();
  j["dMin"] = pair.d_min();
  j["sigmaSeed"] = optional_json(sigma_seed);
  j["targetLen"] = optional_json(target_len);
  j["bestLen"] = result.best_len;
  j["bestPath"] = vertex_array(result.best_path);
  j["rounds"] = result.rounds;
  j["stopReason"] = to_string(result.stop_reason);
  j["s1Size"] = result.s1_size;
  j["s2Size"] = result.s2_size;
  j["workCounter"] = result.work;
  if (include_trace) {
    Json trace = Json::array();
    for (const auto& e : result.trace) {
      trace.push_back(Json{{"round", e.round}, {"action", to_string(e.action)}, {"vertex", e.vertex}});
    }
    j["trace"] = std::move(trace);
  }
  return j;
}

Json to_json(const SpectralReport& r) {
  return Json{{"n", r.n},
              {"d", r.d},
              {"lambda2", r.lambda2},
              {"lambdaMin", r.lambda_min},
              {"lambda", r.lambda},
              {"method", to_string(r.method)},
              {"residual", r.residual},
              {"iterations", r.iterations},
              {"alonBoppanaOk", r.alon_boppana_ok}};
}

Json to_json(const Certificate& cert) {
  Json inputs{{"n", cert.n}, {"d", cert.d}};
  if (cert.lambda) inputs["lambda"] = *cert.lambda;
  if (cert.c) inputs["C"] = *cert.c;

  Json conditions = Json::array();
  for (const auto& c : cert.conditions) {
    Json cj{{"name", c.name}, {"lhs", c.lhs},         {"rhs", c.rhs},
            {"strict", c.strict}, {"required", c.required}, {"pass", c.pass}};
    if (c.witness_x) cj["witnessX"] = vertex_array(*c.witness_x);
    if (c.witness_y) cj["witnessY"] = vertex_array(*c.witness_y);
    conditions.push_back(std::move(cj));
  }

  Json j;
  j["certificate"] = cert.kind;
  j["inputs"] = std::move(inputs);
  j["derived"] = Json{{"l", cert.l},
                      {"s1", cert.s1},
                      {"s2", cert.s2},
                      {"lFloor", cert.l_floor},
                      {"s1Floor", cert.s1_floor},
                      {"s2Floor", cert.s2_floor}};
  if (cert.graph_min_degree) j["graphMinDegree"] = *cert.graph_min_degree;
  j["conditions"] = std::move(conditions);
  j["overall"] = cert.overall;
  j["sampled"] = cert.sampled;
  if (cert.sampled) {
    j["samples"] = cert.samples;
    j["untested"] = cert.untested;
  }
  return j;
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["l"] = r.l;
  j["s1"] = r.s1;
  j["s2"] = r.s2;
  j["d"] = r.d;
  j["exhaustive"] = r.exhaustive;
  // A sampled run that saw no violation proves nothing.
  j["conclusive"] = r.exhaustive || !r.both_hold();
  j["cond1Holds"] = r.cond1_holds;
  j["cond2Holds"] = r.cond2_holds;
  j["bound1"] = r.bound1;
  j["bound2"] = r.bound2;
  j["worstWitness1"] = witness_json(r.worst1);
  j["worstWitness2"] = witness_json(r.worst2);
  j["pairsChecked"] = r.sets_checked;
  return j;
}

Json to_json(const LongestPathResult& r) {
  return Json{{"length", r.length}, {"path", vertex_array(r.path)}};
}

Json to_json(const RamseyReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["vertexCount"] = r.vertex_count;
  j["p"] = r.p;
  j["mG"] = r.m_g;
  j["mDensest"] = r.m_densest;
  j["densestColor"] = r.densest_color;
  j["threshold"] = r.threshold;
  j["survivorN"] = r.survivor_n;
  j["survivorMinDeg"] = r.survivor_min_degree;
  j["inputAvgDeg"] = r.input_average_degree;
  j["survivorAvgDeg"] = r.survivor_average_degree;
  j["averageMonotone"] = r.average_monotone;
  j["foundLen"] = r.found_len;
  j["targetLen"] = optional_json(r.target_len);
  j["targetMet"] = r.target_met;
  j["witness"] = vertex_array(r.witness);
  j["monochromatic"] = r.monochromatic;
  j["inducedRestricted"] = r.induced_in_restricted;
  j["inducedFull"] = r.induced_in_full;
  j["checksPassed"] = r.checks_passed;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

Json cliques_to_json(const CliqueInstance& instance) {
  Json cliques = Json::array();
  for (const auto& c : instance.cliques) cliques.push_back(vertex_array(c));
  return Json{{"n", instance.graph.n()}, {"cliques", std::move(cliques)}};
}

}  // namespace lip
