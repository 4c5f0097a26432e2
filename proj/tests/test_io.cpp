#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "geodex/classify.hpp"
#include "geodex/families.hpp"
#include "geodex/graph6.hpp"
#include "geodex/report.hpp"

using namespace geodex;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::vector<std::pair<int, int>> e;
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(rng) < p) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("graph6 decodes the reference strings") {
  Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);
  Graph e5 = parse_graph6("D??");
  CHECK(e5.order() == 5);
  CHECK(e5.edge_count() == 0);
  Graph v1 = parse_graph6("@");
  CHECK(v1.order() == 1);
  CHECK(v1.edge_count() == 0);
  // prefix and trailing newline tolerated
  Graph k4b = parse_graph6(">>graph6<<C~\n");
  CHECK(k4b == k4);
}

TEST_CASE("graph6 round-trips random graphs") {
  std::mt19937 rng(2718);
  for (int t = 0; t < 200; ++t) {
    int n = static_cast<int>(rng() % 41);
    Graph g = random_graph(rng, n, 0.3);
    CHECK(parse_graph6(encode_graph6(g)) == g);
  }
  // medium header form
  Graph big = random_graph(rng, 100, 0.05);
  std::string enc = encode_graph6(big);
  CHECK(static_cast<unsigned char>(enc[0]) == 126);
  CHECK(parse_graph6(enc) == big);
  CHECK(encode_graph6(complete(4)) == "C~");
}

TEST_CASE("graph6 errors are distinct") {
  auto kind_of = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return e.kind;
    }
    return static_cast<Graph6Error::Kind>(-1);
  };
  CHECK(kind_of("") == Graph6Error::Kind::BadHeader);
  CHECK(kind_of("\x01") == Graph6Error::Kind::BadHeader);
  CHECK(kind_of("~~????") == Graph6Error::Kind::BadHeader);  // long form unsupported
  CHECK(kind_of("C") == Graph6Error::Kind::Truncated);       // n=4 needs one body byte
  CHECK(kind_of("C~~") == Graph6Error::Kind::TrailingGarbage);
  CHECK(kind_of("C\x01") == Graph6Error::Kind::BadByte);  // control byte in body
}

TEST_CASE("adjacency matrices parse with whitespace tolerance") {
  Graph k2 = parse_adjacency_matrix("01\n10\n");
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);
  Graph k3 = parse_adjacency_matrix("0 1 1\n1 0 1\n1 1 0\n");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(are_isomorphic(k3, cycle(3)).has_value());
  // blank lines tolerated
  Graph k2b = parse_adjacency_matrix("\n01\n\n10\n");
  CHECK(k2b == k2);
}

TEST_CASE("adjacency matrix errors carry coordinates") {
  try {
    parse_adjacency_matrix("010\n100\n010\n");  // asymmetric at (1,2)/(2,1)
    FAIL("expected MatrixParseError");
  } catch (const MatrixParseError& e) {
    CHECK(e.row == 1);
    CHECK(e.col == 2);
  }
  try {
    parse_adjacency_matrix("01\n11\n");
    FAIL("expected MatrixParseError");
  } catch (const MatrixParseError& e) {
    CHECK(e.row == 1);
    CHECK(e.col == 1);
  }
  CHECK_THROWS_AS(parse_adjacency_matrix("01\n1\n"), MatrixParseError);   // not square
  CHECK_THROWS_AS(parse_adjacency_matrix("0x\n10\n"), MatrixParseError);  // bad character
  CHECK_THROWS_AS(parse_adjacency_matrix(""), MatrixParseError);
  CHECK_THROWS_AS(parse_adjacency_matrix("2\n01\n10\n"), MatrixParseError);
}

TEST_CASE("json reports round-trip losslessly") {
  ReportDocument doc;
  doc.source_id = "petersen";
  doc.provenance = "family";
  doc.report = classify(odd_graph(2), "petersen");
  doc.timings = {1.5, 2.25, 0.125};
  doc.warnings = {"s capped at 7"};
  std::string j = to_json(doc);
  CHECK(j.find("\"schema\"") != std::string::npos);
  ReportDocument back = from_json(j);
  CHECK(back.version == doc.version);
  CHECK(back.source_id == doc.source_id);
  CHECK(back.provenance == doc.provenance);
  CHECK(back.warnings == doc.warnings);
  CHECK(back.timings.construction_ms == doc.timings.construction_ms);
  CHECK(back.timings.aut_ms == doc.timings.aut_ms);
  CHECK(back.timings.classify_ms == doc.timings.classify_ms);
  const auto& a = doc.report;
  const auto& b = back.report;
  CHECK(b.graph_id == a.graph_id);
  CHECK(b.n == a.n);
  CHECK(b.valency == a.valency);
  CHECK(b.array == a.array);
  CHECK(b.diameter == a.diameter);
  CHECK(b.girth == a.girth);
  CHECK(b.arc.level == a.arc.level);
  CHECK(b.arc.unbounded == a.arc.unbounded);
  CHECK(b.arc.cap_reached == a.arc.cap_reached);
  CHECK(b.geodesic_level == a.geodesic_level);
  CHECK(b.gt == a.gt);
  CHECK(b.dt == a.dt);
  CHECK(b.vt == a.vt);
  CHECK(b.aut_order == a.aut_order);
  CHECK(b.vertex_stabilizer_order == a.vertex_stabilizer_order);
  CHECK(b.divisibility_ok == a.divisibility_ok);
}

TEST_CASE("json round-trips the irregular and acyclic special cases") {
  ReportDocument doc;
  doc.source_id = "p4";
  doc.provenance = "external";
  doc.report = classify(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), "p4");
  ReportDocument back = from_json(to_json(doc));
  CHECK_FALSE(back.report.array.has_value());
  CHECK_FALSE(back.report.girth.has_value());
  CHECK(back.report.aut_order == doc.report.aut_order);
}

TEST_CASE("tsv header and rows have the documented shape") {
  CHECK(tsv_header() == "id\tn\tvalency\tarray\td\tg\ts\tautOrder\tgeodesicLevel\tGT\tDT");
  ReportDocument doc;
  doc.source_id = "petersen";
  doc.report = classify(odd_graph(2), "petersen");
  std::string row = to_tsv_row(doc);
  CHECK(row == "petersen\t10\t3\t{3,2;1,1}\t2\t5\t3\t120\t2\tY\tY");
  // a cycle reports an unbounded arc level
  ReportDocument c7;
  c7.source_id = "c7";
  c7.report = classify(cycle(7), "c7");
  std::string crow = to_tsv_row(c7);
  CHECK(crow.find("\tinfinity\t") == std::string::npos);  // girth 7 is finite
  CHECK(crow.find("\t-\t") == std::string::npos);
}

TEST_CASE("tsv encodes missing values with dashes") {
  ReportDocument doc;
  doc.source_id = "p4";
  doc.report = classify(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), "p4");
  std::string row = to_tsv_row(doc);
  // irregular: valency and array are dashes; forest: girth infinity
  CHECK(row.find("\t-\t-\t") != std::string::npos);
  CHECK(row.find("\tinfinity\t") != std::string::npos);
}
