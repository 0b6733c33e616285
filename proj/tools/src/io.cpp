#include "expdist_cli/io.hpp"

#include <algorithm>

#include "expdist/error.hpp"

namespace expdist::cli {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& detail) { throw FormatError("InvalidSpec", detail); }

std::size_t positive_count(const json& obj, const char* key, std::size_t min) {
  if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer()) {
    invalid(std::string("field '") + key + "' must be an integer");
  }
  const auto v = obj[key].get<std::int64_t>();
  if (v < static_cast<std::int64_t>(min)) {
    invalid(std::string("field '") + key + "' must be >= " + std::to_string(min));
  }
  return static_cast<std::size_t>(v);
}

Side parse_side(const json& v) {
  if (v == "X") return Side::X;
  if (v == "Y") return Side::Y;
  invalid("side must be \"X\" or \"Y\"");
}

std::string side_string(Side s) { return std::string(1, side_letter(s)); }

[[noreturn]] void bad_report(const std::string& detail) { throw FormatError("InvalidReport", detail); }

const json& need(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad_report(std::string("missing field '") + key + "'");
  return obj.at(key);
}

Rational rational_field(const json& v) {
  if (!v.is_string()) bad_report("rational values must be strings");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    bad_report(e.what());
  }
}

}  // namespace

GraphSpec parse_graph_spec(const json& doc) {
  if (!doc.is_object()) invalid("spec must be a JSON object");
  const bool model = doc.contains("blocks") || doc.contains("attachments");
  const bool edges = doc.contains("edges");
  if (model && edges) throw FormatError("AmbiguousSpec", "both blocks/attachments and edges given");
  if (!model && !edges) invalid("spec needs either blocks (+ attachments) or edges");

  GraphSpec spec;
  if (edges) {
    const json& list = doc["edges"];
    if (!list.is_array()) invalid("edges must be an array");
    std::vector<Edge> out;
    for (const json& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
          e[0].get<std::int64_t>() < 0 || e[1].get<std::int64_t>() < 0) {
        invalid("each edge must be a pair of non-negative integers");
      }
      out.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    if (doc.contains("vertex_count")) spec.vertex_count = positive_count(doc, "vertex_count", 1);
    spec.edges = std::move(out);
    return spec;
  }

  if (!doc.contains("blocks") || !doc["blocks"].is_array()) invalid("blocks must be an array");
  for (const json& b : doc["blocks"]) spec.blocks.push_back({positive_count(b, "m", 1), positive_count(b, "n", 1)});
  if (doc.contains("attachments")) {
    if (!doc["attachments"].is_array()) invalid("attachments must be an array");
    for (const json& a : doc["attachments"]) {
      if (!a.is_object() || !a.contains("side")) invalid("attachment needs cut_vertex and side");
      spec.attachments.push_back({positive_count(a, "cut_vertex", 0), parse_side(a["side"])});
    }
  }
  return spec;
}

LoadedGraph load_graph(const GraphSpec& spec) {
  if (!spec.edges) return {build_graph(spec.blocks, spec.attachments), std::nullopt};
  std::size_t n = spec.vertex_count;
  if (n == 0) {
    for (const auto& [a, b] : *spec.edges) n = std::max({n, a + 1, b + 1});
  }
  RecognizedGraph rec = ingest_edge_list(*spec.edges, n);
  return {std::move(rec.graph), std::move(rec.input_vertex)};
}

json blocks_json(const std::vector<BlockSpec>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back({{"m", b.m}, {"n", b.n}});
  return out;
}

json attachments_json(const std::vector<Attachment>& attachments) {
  json out = json::array();
  for (const auto& a : attachments) out.push_back({{"cut_vertex", a.cut_vertex}, {"side", side_string(a.side)}});
  return out;
}

json graph_json(const LoadedGraph& loaded) {
  const BiBlockGraph& g = loaded.graph;
  json dist = json::array();
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    json row = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) row.push_back(g.distances()(u, v));
    dist.push_back(std::move(row));
  }
  json out = {{"blocks", blocks_json(g.blocks())},
              {"attachments", attachments_json(g.attachments())},
              {"vertex_count", g.vertex_count()},
              {"distances", std::move(dist)}};
  if (loaded.input_vertex) out["input_vertex"] = *loaded.input_vertex;
  return out;
}

json matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json report_to_json(const SweepReport& report) {
  const SweepParams& p = report.params;
  json checks = json::array();
  for (CheckKind k : p.checks) checks.push_back(std::string(check_name(k)));
  json q_list = json::array();
  for (const auto& q : p.q_list) q_list.push_back(q.to_string());

  json tallies = json::object();
  for (CheckKind k : p.checks) {
    const CheckTally t = report.tally(k);
    tallies[std::string(check_name(k))] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
  }

  json cases = json::array();
  const std::size_t per_case = std::max<std::size_t>(p.q_list.size(), 1);
  for (std::size_t k = 0; k < report.reports.size(); ++k) {
    const VerificationReport& r = report.reports[k];
    json graph = {{"blocks", blocks_json(r.graph.blocks)},
                  {"attachments", attachments_json(r.graph.attachments)},
                  {"vertex_count", r.vertex_count}};
    if (r.graph.seed) graph["seed"] = *r.graph.seed;
    json outcomes = json::array();
    for (const CheckOutcome& o : r.outcomes) {
      json entry = {{"kind", std::string(check_name(o.kind))}, {"status", std::string(status_name(o.status))}};
      if (!o.reason.empty()) entry["reason"] = o.reason;
      if (o.witness) {
        json w = {{"what", o.witness->what}, {"expected", o.witness->expected}, {"actual", o.witness->actual}};
        if (o.witness->row) w["row"] = *o.witness->row;
        if (o.witness->col) w["col"] = *o.witness->col;
        entry["witness"] = std::move(w);
      }
      outcomes.push_back(std::move(entry));
    }
    cases.push_back({{"case", k / per_case}, {"q", r.q.to_string()}, {"graph", std::move(graph)},
                     {"checks", std::move(outcomes)}});
  }

  return {{"tool", "expdist"},
          {"version", kToolVersion},
          {"parameters",
           {{"seed", p.seed},
            {"cases", p.cases},
            {"r_max", p.r_max},
            {"size_max", p.size_max},
            {"q", std::move(q_list)},
            {"checks", std::move(checks)}}},
          {"summary", {{"records", report.reports.size()}, {"failures", report.failures()}, {"checks", std::move(tallies)}}},
          {"cases", std::move(cases)}};
}

SweepReport report_from_json(const json& doc) {
  SweepReport out;
  try {
    const json& p = need(doc, "parameters");
    out.params.seed = need(p, "seed").get<std::uint64_t>();
    out.params.cases = need(p, "cases").get<std::size_t>();
    out.params.r_max = need(p, "r_max").get<std::size_t>();
    out.params.size_max = need(p, "size_max").get<std::size_t>();
    for (const json& q : need(p, "q")) out.params.q_list.push_back(rational_field(q));
    out.params.checks.clear();
    for (const json& c : need(p, "checks")) out.params.checks.push_back(parse_check_name(c.get<std::string>()));

    for (const json& c : need(doc, "cases")) {
      VerificationReport r;
      r.q = rational_field(need(c, "q"));
      const json& g = need(c, "graph");
      r.vertex_count = need(g, "vertex_count").get<std::size_t>();
      for (const json& b : need(g, "blocks")) r.graph.blocks.push_back({need(b, "m").get<std::size_t>(), need(b, "n").get<std::size_t>()});
      for (const json& a : need(g, "attachments")) {
        r.graph.attachments.push_back({need(a, "cut_vertex").get<std::size_t>(), parse_side(need(a, "side"))});
      }
      if (g.contains("seed")) r.graph.seed = g["seed"].get<std::uint64_t>();
      for (const json& o : need(c, "checks")) {
        CheckOutcome outcome;
        outcome.kind = parse_check_name(need(o, "kind").get<std::string>());
        const std::string status = need(o, "status").get<std::string>();
        if (status == "pass") {
          outcome.status = CheckStatus::Pass;
        } else if (status == "fail") {
          outcome.status = CheckStatus::Fail;
        } else if (status == "skipped") {
          outcome.status = CheckStatus::Skipped;
        } else {
          bad_report("unknown status '" + status + "'");
        }
        if (o.contains("reason")) outcome.reason = o["reason"].get<std::string>();
        if (o.contains("witness")) {
          const json& w = o["witness"];
          Witness wit{need(w, "what").get<std::string>(), std::nullopt, std::nullopt,
                      need(w, "expected").get<std::string>(), need(w, "actual").get<std::string>()};
          if (w.contains("row")) wit.row = w["row"].get<std::size_t>();
          if (w.contains("col")) wit.col = w["col"].get<std::size_t>();
          outcome.witness = std::move(wit);
        }
        r.outcomes.push_back(std::move(outcome));
      }
      out.reports.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    bad_report(e.what());
  } catch (const FormatError& e) {
    bad_report(e.what());
  } catch (const Error& e) {
    bad_report(e.what());
  }
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace expdist::cli
