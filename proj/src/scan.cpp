#include "qfs/scan.hpp"

#include <atomic>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qfs/json_io.hpp"

namespace qfs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t draw(std::uint64_t seed, std::uint64_t index, std::uint64_t coord, std::uint64_t attempt) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index ^ 0x5851f42d4c957f2dull) ^
                      splitmix64((coord << 16) ^ attempt ^ 0x14057b7ef767814full));
}

std::vector<std::size_t> support(std::size_t m, const std::vector<bool>* mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m; ++i)
        if (!mask || (*mask)[i]) out.push_back(i);
    return out;
}

std::vector<std::uint32_t> enumerate_vector(std::uint64_t index, std::uint64_t q, std::size_t m,
                                            const std::vector<std::size_t>& positions) {
    std::vector<std::uint32_t> v(m, 0);
    for (auto pos : positions) {
        v[pos] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
    return v;
}

std::optional<std::vector<std::uint32_t>> find_singular(const Field& k, const std::vector<Polynomial>& system,
                                                        std::size_t n) {
    const auto elems = k.elements();
    std::vector<std::uint32_t> point(n, 0);
    auto vanishes = [&] {
        for (const auto& g : system)
            if (g.evaluate(k, point) != 0) return false;
        return true;
    };
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::fill(point.begin(), point.end(), 0);
        point[lead] = 1;
        const std::size_t free = n - 1 - lead;
        std::vector<std::size_t> digit(free, 0);
        while (true) {
            for (std::size_t i = 0; i < free; ++i) point[lead + 1 + i] = elems[digit[i]];
            if (vanishes()) return point;
            std::size_t i = 0;
            while (i < free && ++digit[i] == elems.size()) digit[i++] = 0;
            if (i == free) break;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<std::uint32_t> sample(std::uint64_t seed, std::uint64_t index, const Ring& ring,
                                  const std::vector<bool>* mask) {
    const std::size_t m = MonomialBasis(Ring::make(ring.field_ptr(), ring.weights())).size();
    if (mask && mask->size() != m) throw UsageError("mask length must equal m = " + std::to_string(m));
    const std::uint64_t q = ring.field().order();
    const std::uint64_t reject_below = (0 - q) % q; // 2^64 mod q
    std::vector<std::uint32_t> v(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        if (mask && !(*mask)[j]) continue;
        std::uint64_t x = 0;
        for (std::uint64_t attempt = 0;; ++attempt) {
            x = draw(seed, index, j, attempt);
            if (x >= reject_below) break;
        }
        v[j] = static_cast<std::uint32_t>(x % q);
    }
    return v;
}

std::optional<SingularPoint> singular_witness(const Polynomial& f, unsigned max_degree) {
    if (max_degree == 0 || max_degree > 3) throw UsageError("extension bound K must be in 1..3");
    const Ring& ring = f.ring();
    const std::size_t n = ring.num_vars();
    const Field& base = ring.field();

    for (std::size_t i = 0; i < n; ++i) {
        if (ring.weights()[i] == 1) continue;
        std::vector<std::uint32_t> vertex(n, 0);
        vertex[i] = 1;
        if (f.evaluate(base, vertex) == 0) {
            SingularPoint s{1, {}, true};
            for (auto x : vertex) s.coordinates.push_back(base.format(x));
            return s;
        }
    }

    std::vector<Polynomial> system{f};
    for (std::size_t i = 0; i < n; ++i) system.push_back(f.partial_derivative(i));

    const unsigned top = base.degree() > 1 ? 1 : max_degree;
    for (unsigned k = 1; k <= top; ++k) {
        const FieldPtr ext = k == 1 ? ring.field_ptr() : Field::extension(base.characteristic(), k);
        if (auto pt = find_singular(*ext, system, n)) {
            SingularPoint s{k * base.degree(), {}, false};
            for (auto x : *pt) s.coordinates.push_back(ext->format(x));
            return s;
        }
    }
    return std::nullopt;
}

std::string to_string(ScanMode mode) {
    switch (mode) {
    case ScanMode::histogram: return "histogram";
    case ScanMode::hunt: return "hunt";
    case ScanMode::assert_bound: return "assert_bound";
    }
    return "histogram";
}

ScanResult run_scan(const ScanJob& job) {
    if (!job.ring) throw UsageError("scan job has no ring");
    if (job.workers == 0) throw UsageError("workers must be positive");
    const MonomialBasis basis(job.ring);
    const std::size_t m = basis.size();
    if (job.mask && job.mask->size() != m) throw UsageError("mask length must equal m = " + std::to_string(m));
    const std::uint64_t q = job.ring->field().order();
    const auto positions = support(m, job.mask ? &*job.mask : nullptr);

    std::uint64_t count = job.count;
    if (job.exhaustive) {
        count = 1;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (count > 10'000'000 / q) throw ResourceError("exhaustive scan over more than 10^7 vectors");
            count *= q;
        }
    }

    ScanResult result;
    result.records.resize(count);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= count) return;
            SampleRecord& rec = result.records[i];
            rec.index = i;
            rec.coefficients = job.exhaustive ? enumerate_vector(i, q, m, positions)
                                              : sample(job.seed, i, *job.ring, job.mask ? &*job.mask : nullptr);
            try {
                const Polynomial f = basis.combine(Vector(job.ring->field_ptr(), rec.coefficients));
                if (f.is_zero()) {
                    rec.status = "zero";
                    continue;
                }
                if (job.smoothness_filter) rec.witness = singular_witness(f, job.extension_bound).has_value();
                rec.report = artin_report(f, job.options);
                rec.status = "ok";
            } catch (const Error& e) {
                rec.status = e.what();
            }
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(job.workers, std::max<std::uint64_t>(count, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& rec : result.records) {
        if (rec.status != "ok") {
            if (rec.status == "zero") {
                ++result.histogram[{"zero polynomial", "-"}];
            } else {
                ++result.errors;
                ++result.histogram[{"error", "-"}];
            }
            continue;
        }
        const auto& r = *rec.report;
        ++result.histogram[{r.height.to_string(), r.ns.to_string()}];
        if (rec.witness.value_or(false)) {
            ++result.filtered;
            continue;
        }
        if (!r.tau || !r.tau->value) continue;
        const unsigned tau = *r.tau->value;
        const unsigned sigma_max = r.sigma_note == SigmaNote::tau_or_tau_plus_1_char2_quartic ? tau + 1 : tau;
        if (job.mode == ScanMode::hunt && r.sigma_note == SigmaNote::equals_tau && tau == job.target) {
            const Polynomial f = basis.combine(Vector(job.ring->field_ptr(), rec.coefficients));
            const auto again = artin_report(f, job.options);
            if (!(again.ns == r.ns)) throw Error("hunt hit " + std::to_string(rec.index) + " did not re-verify");
            result.hits.push_back(rec.index);
        }
        if (job.mode == ScanMode::assert_bound) {
            if (sigma_max < job.target)
                result.violations.push_back(rec.index);
            else if (tau < job.target)
                result.undecided.push_back(rec.index);
        }
    }
    return result;
}

void write_csv(const ScanResult& result, const Ring& ring, std::ostream& out) {
    const Field& k = ring.field();
    out << "index,coefficients,height,ns,tau,smooth_witness_flag\n";
    for (const auto& rec : result.records) {
        out << rec.index << ",";
        for (std::size_t i = 0; i < rec.coefficients.size(); ++i) {
            if (i) out << ' ';
            out << k.format(rec.coefficients[i]);
        }
        out << ",";
        if (rec.report) {
            const auto& r = *rec.report;
            auto cell = [](const CappedIndex& c) { return c.value ? std::to_string(*c.value) : std::string("infinity"); };
            out << cell(r.height) << "," << cell(r.ns) << "," << (r.tau ? cell(*r.tau) : std::string()) << ",";
        } else {
            out << rec.status << ",,,";
        }
        if (rec.witness) out << (*rec.witness ? 1 : 0);
        out << "\n";
    }
}

std::string summary_json(const ScanJob& job, const ScanResult& result) {
    nlohmann::json j;
    j["job"] = {{"field", field_json(job.ring->field())},
                {"weights", job.ring->weights()},
                {"mode", to_string(job.mode)},
                {"target", job.target},
                {"seed", job.seed},
                {"count", result.records.size()},
                {"exhaustive", job.exhaustive},
                {"smoothness_filter", job.smoothness_filter},
                {"extension_bound", job.extension_bound}};
    if (job.mask) j["job"]["mask"] = *job.mask;
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [key, n] : result.histogram) hist.push_back({{"height", key.first}, {"ns", key.second}, {"count", n}});
    j["histogram"] = hist;
    j["filtered_singular"] = result.filtered;
    j["errors"] = result.errors;
    if (job.smoothness_filter) j["smoothness_caveat"] = kSmoothnessCaveat;
    if (job.mode == ScanMode::hunt) j["hits"] = result.hits;
    if (job.mode == ScanMode::assert_bound) {
        j["violations"] = result.violations;
        j["undecided"] = result.undecided;
    }
    return j.dump(2);
}

} // namespace qfs
