#ifndef GEODEX_SELFTEST_HPP
#define GEODEX_SELFTEST_HPP

#include <ostream>

namespace geodex {

// Classifies a small suite of graphs with known parameters and compares every
// field against the stored values, printing one line per graph. Returns the
// number of mismatching graphs (0 = all good).
int run_selftest(std::ostream& out);

}  // namespace geodex

#endif
