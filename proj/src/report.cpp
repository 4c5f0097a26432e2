#include "geodex/report.hpp"

#include <json.hpp>

namespace geodex {

namespace {

using nlohmann::json;

std::string arc_cell(const ArcLevel& a) {
  if (a.unbounded) return "unbounded";
  std::string s = std::to_string(a.level);
  if (a.cap_reached) s += "+cap";
  return s;
}

}  // namespace

std::string to_json(const ReportDocument& doc) {
  const ClassificationReport& r = doc.report;
  json j;
  j["schema"] = 1;
  j["tool"] = "geodex";
  j["version"] = doc.version;
  j["id"] = doc.source_id;
  j["provenance"] = doc.provenance;
  j["n"] = r.n;
  if (r.valency >= 0)
    j["valency"] = r.valency;
  else
    j["valency"] = nullptr;
  if (r.array) {
    j["array"] = {{"b", r.array->b}, {"c", r.array->c}};
  } else {
    j["array"] = nullptr;
  }
  j["diameter"] = r.diameter;
  if (r.girth)
    j["girth"] = *r.girth;
  else
    j["girth"] = "infinity";
  if (r.arc.unbounded)
    j["arc_level"] = "unbounded";
  else
    j["arc_level"] = r.arc.level;
  j["arc_cap_reached"] = r.arc.cap_reached;
  j["geodesic_level"] = r.geodesic_level;
  j["gt"] = r.gt;
  j["dt"] = r.dt;
  j["vt"] = r.vt;
  j["aut_order"] = r.aut_order.str();
  j["vertex_stabilizer_order"] = r.vertex_stabilizer_order.str();
  if (r.divisibility_ok)
    j["divisibility_ok"] = *r.divisibility_ok;
  else
    j["divisibility_ok"] = nullptr;
  j["timings_ms"] = {{"construction", doc.timings.construction_ms},
                     {"aut", doc.timings.aut_ms},
                     {"classify", doc.timings.classify_ms}};
  j["warnings"] = doc.warnings;
  return j.dump(2);
}

ReportDocument from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("schema") || j["schema"].get<int>() != 1)
    throw std::runtime_error("report: unknown schema");
  ReportDocument doc;
  doc.version = j.at("version").get<std::string>();
  doc.source_id = j.at("id").get<std::string>();
  doc.provenance = j.at("provenance").get<std::string>();
  ClassificationReport& r = doc.report;
  r.graph_id = doc.source_id;
  r.n = j.at("n").get<int>();
  r.valency = j.at("valency").is_null() ? -1 : j.at("valency").get<int>();
  if (!j.at("array").is_null()) {
    IntersectionArray ia;
    ia.b = j.at("array").at("b").get<std::vector<int>>();
    ia.c = j.at("array").at("c").get<std::vector<int>>();
    r.array = std::move(ia);
  }
  r.diameter = j.at("diameter").get<int>();
  if (!j.at("girth").is_string()) r.girth = j.at("girth").get<int>();
  if (j.at("arc_level").is_string())
    r.arc.unbounded = true;
  else
    r.arc.level = j.at("arc_level").get<int>();
  r.arc.cap_reached = j.at("arc_cap_reached").get<bool>();
  r.geodesic_level = j.at("geodesic_level").get<int>();
  r.gt = j.at("gt").get<bool>();
  r.dt = j.at("dt").get<bool>();
  r.vt = j.at("vt").get<bool>();
  r.aut_order = BigInt(j.at("aut_order").get<std::string>());
  r.vertex_stabilizer_order = BigInt(j.at("vertex_stabilizer_order").get<std::string>());
  if (!j.at("divisibility_ok").is_null()) r.divisibility_ok = j.at("divisibility_ok").get<bool>();
  doc.timings.construction_ms = j.at("timings_ms").at("construction").get<double>();
  doc.timings.aut_ms = j.at("timings_ms").at("aut").get<double>();
  doc.timings.classify_ms = j.at("timings_ms").at("classify").get<double>();
  doc.warnings = j.at("warnings").get<std::vector<std::string>>();
  return doc;
}

std::string tsv_header() { return "id\tn\tvalency\tarray\td\tg\ts\tautOrder\tgeodesicLevel\tGT\tDT"; }

std::string to_tsv_row(const ReportDocument& doc) {
  const ClassificationReport& r = doc.report;
  std::string row = doc.source_id;
  row += '\t';
  row += std::to_string(r.n);
  row += '\t';
  row += r.valency >= 0 ? std::to_string(r.valency) : std::string("-");
  row += '\t';
  row += r.array ? r.array->to_string() : std::string("-");
  row += '\t';
  row += std::to_string(r.diameter);
  row += '\t';
  row += r.girth ? std::to_string(*r.girth) : std::string("infinity");
  row += '\t';
  row += arc_cell(r.arc);
  row += '\t';
  row += r.aut_order.str();
  row += '\t';
  row += std::to_string(r.geodesic_level);
  row += '\t';
  row += r.gt ? "Y" : "N";
  row += '\t';
  row += r.dt ? "Y" : "N";
  return row;
}

}  // namespace geodex
