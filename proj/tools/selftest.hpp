#pragma once

#include <ostream>

namespace gq {

// Reproduces the library's worked reference examples byte-exactly, printing
// one "ok"/"FAIL" line per example. Returns false if any example fails.
bool run_selftest(std::ostream& out);

} // namespace gq
