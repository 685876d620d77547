#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfs {

struct KnownEquation {
    std::string equation;
    std::uint32_t p;
    std::vector<std::uint32_t> weights;
    unsigned ns; // expected non-splitting index (equal to sigma for the K3 rows)
};

/// Smooth supersingular quartics over F_2 containing a line, sigma = 3..9.
const std::vector<KnownEquation>& quartics_f2();
/// Smooth supersingular quartics over F_3, sigma = 1..10.
const std::vector<KnownEquation>& quartics_f3();
/// A quintic threefold over F_2, not quasi-F-split, with ns = 58.
const KnownEquation& quintic_f2();
/// A quartic over F_2 with ns = 2.
const KnownEquation& quartic_ns2_f2();

} // namespace qfs
