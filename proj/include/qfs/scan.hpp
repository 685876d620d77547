#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfs/cartier.hpp"

namespace qfs {

inline constexpr const char* kSmoothnessCaveat =
    "\"no small-field singular point\" is not a smoothness proof";

/// Coefficient vector (canonical basis order) for sample `index` of the
/// stream `seed`. Each coordinate is uniform over the field, drawn from a
/// counter-based generator keyed by (seed, index, coordinate), so any index
/// can be produced without producing the ones before it. Coordinates outside
/// `mask` (when given) are zero.
std::vector<std::uint32_t> sample(std::uint64_t seed, std::uint64_t index, const Ring& ring,
                                  const std::vector<bool>* mask = nullptr);

struct SingularPoint {
    unsigned extension_degree; // point defined over F_(p^k) for this k
    std::vector<std::string> coordinates;
    bool ambient_vertex = false; // a singular point of the weighted projective space itself
};

/// Searches points over F_(p^k), k <= max_degree, for a common zero of f and
/// all partial derivatives, and vertices of weight > 1 lying on X. Over a
/// non-prime base field only the base field is searched. None is NOT a proof
/// of smoothness.
std::optional<SingularPoint> singular_witness(const Polynomial& f, unsigned max_degree = 2);

enum class ScanMode { histogram, hunt, assert_bound };

struct ScanJob {
    RingPtr ring;
    ScanMode mode = ScanMode::histogram;
    unsigned target = 0; // sigma to hunt for, or the minimal sigma to assert
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
    bool exhaustive = false; // enumerate all coefficient vectors supported on `mask`
    std::optional<std::vector<bool>> mask;
    bool smoothness_filter = false;
    unsigned extension_bound = 2;
    unsigned workers = 1;
    ReportOptions options;
};

struct SampleRecord {
    std::uint64_t index = 0;
    std::vector<std::uint32_t> coefficients;
    std::string status; // "ok", "zero", or an error message
    std::optional<InvariantReport> report;
    std::optional<bool> witness; // unset when the filter is off
};

struct ScanResult {
    std::vector<SampleRecord> records; // ordered by index
    std::map<std::pair<std::string, std::string>, std::uint64_t> histogram; // (height, ns) -> count
    std::vector<std::uint64_t> hits;       // hunt: indices whose sigma equals the target
    std::vector<std::uint64_t> violations; // assert_bound: sigma certainly below the bound
    std::vector<std::uint64_t> undecided;  // assert_bound: tau below the bound but sigma may be tau + 1
    std::uint64_t filtered = 0;            // samples with a singular witness
    std::uint64_t errors = 0;
};

/// Runs the job over `workers` threads. Results depend only on the job
/// parameters other than `workers`.
ScanResult run_scan(const ScanJob& job);

std::string to_string(ScanMode mode);

/// CSV with columns index,coefficients,height,ns,tau,smooth_witness_flag.
void write_csv(const ScanResult& result, const Ring& ring, std::ostream& out);
/// JSON document echoing the job and summarising the histogram.
std::string summary_json(const ScanJob& job, const ScanResult& result);

} // namespace qfs
