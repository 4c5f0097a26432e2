#include "geodex/selftest.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "geodex/classify.hpp"
#include "geodex/families.hpp"

namespace geodex {
namespace {

struct GoldenRow {
  std::string id;
  std::function<Graph()> build;
  std::string array;  // "" when the check should be skipped (cycles)
  int d;
  int g;
  int s;  // arc level; -1 = unbounded (cycle)
  int geo;
  bool gt;
  std::string aut_order;
};

std::vector<GoldenRow> golden_rows() {
  return {
      {"complete(4)", [] { return complete(4); }, "{3;1}", 1, 3, 2, 1, true, "24"},
      {"complete_bipartite(3)", [] { return complete_bipartite(3); }, "{3,2;1,3}", 2, 4, 3, 2,
       true, "72"},
      {"odd_graph(2)", [] { return odd_graph(2); }, "{3,2;1,1}", 2, 5, 3, 2, true, "120"},
      {"hamming(3,2)", [] { return hamming(3, 2); }, "{3,2,1;1,2,3}", 3, 4, 2, 3, true, "48"},
      {"pg2(2)", [] { return pg2_incidence(2); }, "{3,2,2;1,1,3}", 3, 6, 4, 3, true, "336"},
      {"ag2(3)", [] { return ag2_minus_parallel(3); }, "{3,2,2,1;1,1,2,3}", 4, 6, 3, 4, true,
       "216"},
      {"johnson(5,2)", [] { return johnson(5, 2); }, "{6,2;1,4}", 2, 3, 1, 2, true, "120"},
      {"paley(13)", [] { return paley(13); }, "{6,3;1,3}", 2, 3, 1, 1, false, "78"},
      {"cycle(7)", [] { return cycle(7); }, "{2,1,1;1,1,1}", 3, 7, -1, 3, true, "14"},
  };
}

}  // namespace

int run_selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& row : golden_rows()) {
    ClassificationReport rep;
    std::string error;
    try {
      rep = classify(row.build(), row.id);
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::ostringstream diff;
    if (!error.empty()) {
      diff << " threw: " << error;
    } else {
      std::string arr = rep.array ? rep.array->to_string() : "(none)";
      if (!row.array.empty() && arr != row.array)
        diff << " array=" << arr << " want " << row.array;
      if (rep.diameter != row.d) diff << " d=" << rep.diameter << " want " << row.d;
      int got_g = rep.girth.value_or(-1);
      if (got_g != row.g) diff << " g=" << got_g << " want " << row.g;
      bool want_unbounded = row.s < 0;
      if (rep.arc.unbounded != want_unbounded || (!want_unbounded && rep.arc.level != row.s)) {
        diff << " s=" << (rep.arc.unbounded ? std::string("unbounded")
                                            : std::to_string(rep.arc.level))
             << " want " << (want_unbounded ? std::string("unbounded") : std::to_string(row.s));
      }
      if (rep.geodesic_level != row.geo)
        diff << " geo=" << rep.geodesic_level << " want " << row.geo;
      if (rep.gt != row.gt) diff << " GT=" << (rep.gt ? "Y" : "N") << " want " << (row.gt ? "Y" : "N");
      if (rep.aut_order.str() != row.aut_order)
        diff << " |Aut|=" << rep.aut_order.str() << " want " << row.aut_order;
    }
    std::string msg = diff.str();
    if (msg.empty()) {
      out << "[ok]   " << row.id << "\n";
    } else {
      out << "[FAIL] " << row.id << msg << "\n";
      ++failures;
    }
  }
  return failures;
}

}  // namespace geodex
