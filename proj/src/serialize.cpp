#include "freecert/serialize.hpp"

#include <map>

namespace freecert {

namespace {

Json count_or_infinite(const AxisOverlap& o, std::size_t n) {
  if (o.infinite) return "infinite";
  return n;
}

Letter parse_vertex(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x') throw InputError("bad vertex name " + name);
  const bool inverted = name.back() == '\'';
  const std::string digits = name.substr(1, name.size() - 1 - (inverted ? 1 : 0));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("bad vertex name " + name);
  }
  return Letter(std::stoi(digits), inverted);
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::kNonSimpleCertified, Verdict::kHypothesisFailed, Verdict::kUndecided}) {
    if (to_string(v) == s) return v;
  }
  throw InputError("unknown verdict " + s);
}

Rule rule_from(const std::string& s) {
  for (Rule r : {Rule::kTheoremOverlap, Rule::kCorSquares, Rule::kCorCommutators, Rule::kOracle}) {
    if (to_string(r) == s) return r;
  }
  throw InputError("unknown rule " + s);
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkip: return "skip";
  }
  return "?";
}

}  // namespace

Json to_json(const WhiteheadGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : named_edges(g)) edges.push_back({a, b});
  return Json{{"schema", kSchemaVersion}, {"rank", g.rank()}, {"edges", std::move(edges)}};
}

WhiteheadGraph graph_from_json(const Json& j) {
  WhiteheadGraph g(j.at("rank").get<int>());
  for (const auto& e : j.at("edges")) {
    g.add_edge(parse_vertex(e.at(0).get<std::string>()), parse_vertex(e.at(1).get<std::string>()));
  }
  return g;
}

Json to_json(const AxisOverlap& o) {
  Json j{{"schema", kSchemaVersion},
         {"overlap", count_or_infinite(o, o.vertex_count)},
         {"length", count_or_infinite(o, o.edge_length())}};
  if (o.endpoint_low && o.endpoint_high) {
    j["endpoints"] = {to_string(*o.endpoint_low), to_string(*o.endpoint_high)};
  }
  return j;
}

Json to_json(const Certificate& c) {
  const Trail& t = c.trail;
  Json trail{{"w", to_string(t.pivot)}};
  if (t.pivot_non_simple) trail["non_simple_w"] = *t.pivot_non_simple;
  if (t.pivot_cyclically_reduced) trail["cyclically_reduced_w"] = *t.pivot_cyclically_reduced;
  if (t.minimal) trail["minimal"] = *t.minimal;
  if (t.overlap) {
    trail["overlap"] = count_or_infinite(*t.overlap, t.overlap->vertex_count);
    trail["overlap_length"] = count_or_infinite(*t.overlap, t.overlap->edge_length());
    if (t.overlap->endpoint_low && t.overlap->endpoint_high) {
      trail["endpoints"] = {to_string(*t.overlap->endpoint_low),
                            to_string(*t.overlap->endpoint_high)};
    }
  }
  trail["threshold"] = t.threshold;
  if (t.k) trail["k"] = *t.k;
  if (t.subgraph) trail["subgraph"] = *t.subgraph;
  if (t.cut_free_w) trail["cut_free_w"] = *t.cut_free_w;
  if (t.cut_free_ak) trail["cut_free_ak"] = *t.cut_free_ak;
  if (t.offset) trail["offset"] = *t.offset;
  if (t.rotated) trail["rotated"] = to_string(*t.rotated);
  if (t.conjugator) trail["conjugator"] = to_string(*t.conjugator);
  if (t.failed) trail["failed"] = *t.failed;
  if (t.note) trail["note"] = *t.note;
  return Json{{"schema", kSchemaVersion},
              {"subject", to_string(c.subject)},
              {"verdict", to_string(c.verdict)},
              {"rule", to_string(c.rule)},
              {"trail", std::move(trail)}};
}

Certificate certificate_from_json(const Json& j, int rank) {
  if (j.value("schema", 0) != kSchemaVersion) throw InputError("unsupported certificate schema");
  Certificate c;
  c.subject = parse_word(j.at("subject").get<std::string>(), rank);
  c.verdict = verdict_from(j.at("verdict").get<std::string>());
  c.rule = rule_from(j.at("rule").get<std::string>());
  const Json& t = j.at("trail");
  Trail& out = c.trail;
  const auto word = [rank](const Json& v) { return parse_word(v.get<std::string>(), rank); };
  out.pivot = word(t.at("w"));
  if (t.contains("non_simple_w")) out.pivot_non_simple = t["non_simple_w"].get<bool>();
  if (t.contains("cyclically_reduced_w")) {
    out.pivot_cyclically_reduced = t["cyclically_reduced_w"].get<bool>();
  }
  if (t.contains("minimal")) out.minimal = t["minimal"].get<bool>();
  if (t.contains("overlap")) {
    AxisOverlap o;
    if (t["overlap"].is_string()) {
      o.infinite = true;
    } else {
      o.vertex_count = t["overlap"].get<std::size_t>();
    }
    if (t.contains("endpoints")) {
      o.endpoint_low = word(t["endpoints"].at(0));
      o.endpoint_high = word(t["endpoints"].at(1));
    }
    out.overlap = o;
  }
  out.threshold = t.at("threshold").get<std::size_t>();
  if (t.contains("k")) out.k = t["k"].get<long>();
  if (t.contains("subgraph")) out.subgraph = t["subgraph"].get<bool>();
  if (t.contains("cut_free_w")) out.cut_free_w = t["cut_free_w"].get<bool>();
  if (t.contains("cut_free_ak")) out.cut_free_ak = t["cut_free_ak"].get<bool>();
  if (t.contains("offset")) out.offset = t["offset"].get<std::size_t>();
  if (t.contains("rotated")) out.rotated = word(t["rotated"]);
  if (t.contains("conjugator")) out.conjugator = word(t["conjugator"]);
  if (t.contains("failed")) out.failed = t["failed"].get<std::string>();
  if (t.contains("note")) out.note = t["note"].get<std::string>();
  return c;
}

Json to_json(const Report& r) {
  Json checks = Json::object();
  for (const Check& c : r.checks) {
    checks[c.name] = Json{{"status", status_name(c.status)}, {"detail", c.detail}};
  }
  return Json{{"schema", kSchemaVersion}, {"ok", r.ok()}, {"checks", std::move(checks)}};
}

}  // namespace freecert
