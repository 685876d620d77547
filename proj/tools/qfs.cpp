// qfs: quasi-F-split heights, non-splitting indices and Artin invariants of
// Calabi-Yau hypersurfaces over finite fields.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfs/catalogue.hpp"
#include "qfs/cartier.hpp"
#include "qfs/delsarte.hpp"
#include "qfs/json_io.hpp"
#include "qfs/lifts.hpp"
#include "qfs/scan.hpp"

using namespace qfs;
using nlohmann::json;

namespace {

enum Exit { ok = 0, usage = 1, domain = 2, resource = 3 };

struct Globals {
    std::uint32_t p = 0;
    unsigned ext_degree = 1;
    std::string modulus;
    std::string weights = "1,1,1,1";
    unsigned cap = 0;
    std::string format = "text";
    std::uint64_t seed = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

std::uint64_t parse_unsigned(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + " '" + s + "'");
    }
}

std::vector<std::uint32_t> parse_weights(const std::string& s) {
    std::vector<std::uint32_t> w;
    for (const auto& part : split(s, ',')) w.push_back(static_cast<std::uint32_t>(parse_unsigned(part, "weight")));
    return w;
}

FieldPtr make_field(const Globals& g) {
    if (g.p == 0) throw UsageError("-p is required");
    if (g.ext_degree == 0) throw UsageError("--ext-degree must be positive");
    if (g.ext_degree == 1) {
        if (!g.modulus.empty()) throw UsageError("--modulus needs --ext-degree > 1");
        return Field::prime(g.p);
    }
    std::vector<std::uint32_t> modulus;
    if (!g.modulus.empty())
        for (const auto& part : split(g.modulus, ','))
            modulus.push_back(static_cast<std::uint32_t>(parse_unsigned(part, "modulus coefficient")));
    return Field::extension(g.p, g.ext_degree, modulus);
}

RingPtr make_ring(const Globals& g) { return Ring::make(make_field(g), parse_weights(g.weights)); }

std::string join(const std::vector<std::uint32_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string field_name(const Field& k) {
    if (k.degree() == 1) return "F_" + std::to_string(k.characteristic());
    return "F_" + std::to_string(k.characteristic()) + "^" + std::to_string(k.degree());
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v.field().format(v.raw(i)));
    return a;
}

std::string vector_text(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v.field().format(v.raw(i));
    return out;
}

Vector parse_vector(const std::string& s, const FrobeniusBundle& b) {
    const auto parts = split(s, ',');
    if (parts.size() != b.m())
        throw UsageError("c has " + std::to_string(parts.size()) + " entries, expected m = " + std::to_string(b.m()));
    Vector c(b.basis.ring().field_ptr(), b.m());
    for (std::size_t i = 0; i < parts.size(); ++i) c.set_raw(i, b.field().parse(parts[i]).raw());
    return c;
}

void print_report_text(const InvariantReport& r, const Ring& ring, bool full) {
    std::cout << "field: " << field_name(ring.field()) << "  weights: " << join(ring.weights())
              << "  m = " << r.basis_size << "\n";
    std::cout << "family: " << to_string(r.family) << "\n";
    std::cout << "height: " << r.height.to_string() << (r.heuristic_cap ? "  [heuristic cap]" : "") << "\n";
    if (!full) return;
    std::cout << "ns: " << r.ns.to_string() << "\n";
    if (r.tau) std::cout << "tau: " << r.tau->to_string() << "\n";
    std::cout << "sigma: " << to_string(r.sigma_note);
    if (r.tau && r.tau->value) {
        if (r.sigma_note == SigmaNote::equals_tau) std::cout << " (sigma = " << *r.tau->value << ")";
        if (r.sigma_note == SigmaNote::tau_or_tau_plus_1_char2_quartic)
            std::cout << " (sigma in {" << *r.tau->value << ", " << *r.tau->value + 1 << "})";
    }
    std::cout << "\n";
    if (r.line) std::cout << "line: x" << r.line->first << " = x" << r.line->second << " = 0\n";
}

// Emits either JSON or text for an invariant report.
int run_report(const Globals& g, const std::string& text, unsigned ns_cap, bool full) {
    const auto ring = make_ring(g);
    const Polynomial f = parse_poly(text, ring);
    ReportOptions opts;
    if (g.cap) opts.height_cap = g.cap;
    if (ns_cap) opts.ns_cap = ns_cap;
    const auto r = artin_report(f, opts);
    if (g.format == "json") {
        json j = to_json(r);
        j["field"] = field_json(ring->field());
        j["weights"] = ring->weights();
        j["polynomial"] = format_poly(f);
        if (!full) j = json{{"field", j["field"]}, {"weights", j["weights"]}, {"polynomial", j["polynomial"]},
                            {"height", j["height"]}, {"supersingular", j["supersingular"]}};
        std::cout << j.dump(2) << "\n";
    } else {
        print_report_text(r, *ring, full);
    }
    return ok;
}

int run_lift(const Globals& g, const std::string& text, const std::string& c_text, unsigned random, bool find_inf,
             unsigned lift_cap) {
    const int modes = (!c_text.empty()) + (random > 0) + find_inf;
    if (modes != 1) throw UsageError("lift needs exactly one of: a c list, --random N, --find-infinite");
    const auto ring = make_ring(g);
    const auto b = bundle(parse_poly(text, ring));
    const std::optional<unsigned> cap = lift_cap ? std::optional<unsigned>(lift_cap) : std::nullopt;
    json j;
    j["m"] = b.m();
    if (!c_text.empty()) {
        const Vector c = parse_vector(c_text, b);
        const auto n = ns_lift(b, t_shifted(b, c), cap);
        j["ns_lift"] = to_json(n);
        j["ns_lift"]["method"] = "least n with R_(c,n) = 0, T_c = T - c lambda";
        if (g.format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << "ns of lift: " << n.to_string() << "\n";
        return ok;
    }
    if (random > 0) {
        const auto ns_f = ns_index(b);
        std::map<std::string, unsigned> tally;
        unsigned outside = 0;
        for (unsigned i = 0; i < random; ++i) {
            const Vector c(ring->field_ptr(), sample(g.seed, i, *ring));
            const auto n = ns_lift(b, t_shifted(b, c), cap);
            ++tally[n.to_string()];
            if (n.is_finite() && !(n.value == ns_f.value)) ++outside;
        }
        j["ns"] = to_json(ns_f);
        j["samples"] = random;
        j["seed"] = g.seed;
        j["tally"] = tally;
        j["outside_value_set"] = outside;
        if (g.format == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "ns(f): " << ns_f.to_string() << "\n";
            for (const auto& [k, v] : tally) std::cout << "  ns of lift = " << k << ": " << v << "\n";
            std::cout << "values outside {ns(f), infinity}: " << outside << "\n";
        }
        return ok;
    }
    const auto lift = infinite_lift(b);
    if (!lift) {
        j["infinite_lift"] = nullptr;
        j["reason"] = "lambda = 0: every lift has ns = 1";
        if (g.format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << "no infinite lift: lambda = 0, every lift has ns = 1\n";
        return ok;
    }
    const unsigned check = lift_cap ? lift_cap : static_cast<unsigned>(b.m() + 1);
    const bool verified = verify_infinite_lift(b, *lift, check);
    j["j"] = lift->j;
    j["c"] = vector_json(lift->c);
    j["verified_through"] = check;
    j["verified"] = verified;
    if (g.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "j = " << lift->j << "\nc = " << vector_text(lift->c) << "\n"
                  << "T_c e_j = e_j and R_(c,n) e_j != 0 for n <= " << check << ": " << (verified ? "yes" : "NO")
                  << "\n";
    }
    return verified ? ok : domain;
}

int run_delsarte(const Globals& g, int family, const std::string& matrix) {
    if ((family >= 0) == !matrix.empty()) throw UsageError("delsarte needs exactly one of --family, --matrix");
    if (g.p == 0) throw UsageError("-p is required");
    json j;
    std::optional<DelsarteMatrix> a;
    std::vector<std::uint32_t> extra;
    if (family >= 0) {
        const auto& fams = builtin_families();
        if (static_cast<std::size_t>(family) >= fams.size())
            throw UsageError("--family must be in 0.." + std::to_string(fams.size() - 1));
        const auto& fam = fams[static_cast<std::size_t>(family)];
        a = fam.matrix;
        extra = fam.extra_primes;
        j["family"] = family;
        j["table"] = {{"det_abs", fam.det_abs}, {"e_A", fam.e_a}, {"extra_smooth_primes", fam.extra_primes}};
    } else {
        const auto parts = split(matrix, ',');
        if (parts.size() != 16) throw UsageError("--matrix takes 16 comma-separated entries");
        DelsarteMatrix::Entries e{};
        for (std::size_t i = 0; i < 16; ++i) e[i / 4][i % 4] = static_cast<std::int64_t>(parse_unsigned(parts[i], "entry"));
        const auto w = parse_weights(g.weights);
        if (w.size() != 4) throw UsageError("Delsarte matrices need four weights");
        a = DelsarteMatrix(e, {w[0], w[1], w[2], w[3]});
    }
    const auto inv = e_invariant(*a);
    const auto r = delsarte_invariants(*a, g.p, extra);
    j["equation"] = a->equation_text();
    j["weights"] = a->weights();
    j["p"] = g.p;
    j["matrix"] = a->entries();
    j["invariants"] = to_json(inv);
    j["result"] = to_json(r);
    if (g.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "equation: " << a->equation_text() << "\n|det| = " << std::abs(inv.det) << "  g = " << inv.g
                  << "  e_A = " << inv.e_a << "\n";
        if (r.supersingular)
            std::cout << "supersingular, sigma = " << r.value << "\n";
        else
            std::cout << "height = " << r.value << "\n";
    }
    return ok;
}

int run_tables(const Globals& g, const std::string& which) {
    static const std::vector<std::string> known{"f2", "f3", "quintic", "ns2", "delsarte", "all"};
    if (std::find(known.begin(), known.end(), which) == known.end())
        throw UsageError("--which must be one of f2, f3, quintic, ns2, delsarte, all");
    json out = json::object();
    bool drift = false;
    auto equations = [&](const std::string& name, const std::vector<KnownEquation>& rows) {
        json arr = json::array();
        if (g.format != "json") std::cout << "[" << name << "]\n";
        for (const auto& row : rows) {
            const auto ring = Ring::make(Field::prime(row.p), row.weights);
            const auto r = artin_report(parse_poly(row.equation, ring));
            const bool match = !r.height.is_finite() && r.ns.value && *r.ns.value == row.ns;
            drift |= !match;
            json jr = to_json(r);
            jr["equation"] = row.equation;
            jr["p"] = row.p;
            jr["expected_ns"] = row.ns;
            jr["match"] = match;
            arr.push_back(jr);
            if (g.format != "json")
                std::cout << "  " << row.equation << "  p=" << row.p << "  height " << r.height.to_string() << "  ns "
                          << r.ns.to_string() << "  expected " << row.ns << (match ? "  ok" : "  MISMATCH") << "\n";
        }
        out[name] = arr;
    };
    if (which == "f2" || which == "all") equations("f2", quartics_f2());
    if (which == "f3" || which == "all") equations("f3", quartics_f3());
    if (which == "quintic" || which == "all") equations("quintic", {quintic_f2()});
    if (which == "ns2" || which == "all") equations("ns2", {quartic_ns2_f2()});
    if (which == "delsarte" || which == "all") {
        json arr = json::array();
        if (g.format != "json") std::cout << "[delsarte]\n";
        for (const auto& fam : builtin_families()) {
            const auto inv = e_invariant(fam.matrix);
            const bool match = std::abs(inv.det) == fam.det_abs && inv.e_a == fam.e_a;
            drift |= !match;
            arr.push_back({{"index", fam.index},
                           {"equation", fam.matrix.equation_text()},
                           {"det_abs", std::abs(inv.det)},
                           {"e_A", inv.e_a},
                           {"tabulated_det_abs", fam.det_abs},
                           {"tabulated_e_A", fam.e_a},
                           {"extra_smooth_primes", fam.extra_primes},
                           {"match", match}});
            if (g.format != "json")
                std::cout << "  " << fam.index << "  " << fam.matrix.equation_text() << "  |det| " << std::abs(inv.det)
                          << "  e_A " << inv.e_a << "  tabulated " << fam.det_abs << ", " << fam.e_a
                          << (match ? "  ok" : "  MISMATCH") << "\n";
        }
        out["delsarte"] = arr;
    }
    if (g.format == "json") {
        out["all_match"] = !drift;
        std::cout << out.dump(2) << "\n";
    }
    return drift ? domain : ok;
}

int run_check_smooth(const Globals& g, const std::string& text, unsigned k) {
    const auto ring = make_ring(g);
    const Polynomial f = parse_poly(text, ring);
    const auto w = singular_witness(f, k);
    if (g.format == "json") {
        json j;
        j["extension_bound"] = k;
        if (w) {
            j["witness"] = {{"coordinates", w->coordinates},
                            {"extension_degree", w->extension_degree},
                            {"ambient_vertex", w->ambient_vertex}};
        } else {
            j["witness"] = nullptr;
            j["caveat"] = kSmoothnessCaveat;
        }
        std::cout << j.dump(2) << "\n";
    } else if (w) {
        std::cout << "singular point over F_" << ring->characteristic() << "^" << w->extension_degree << ": (";
        for (std::size_t i = 0; i < w->coordinates.size(); ++i) std::cout << (i ? " : " : "") << w->coordinates[i];
        std::cout << ")" << (w->ambient_vertex ? "  [vertex of the weighted projective space]" : "") << "\n";
    } else {
        std::cout << "no singular point over F_" << ring->characteristic() << "^k, k <= " << k << "\n"
                  << "note: " << kSmoothnessCaveat << "\n";
    }
    return ok;
}

struct ScanArgs {
    std::string mode = "histogram";
    unsigned target = 0;
    std::uint64_t count = 1000;
    unsigned workers = 1;
    bool filter = false;
    bool no_filter = false;
    unsigned k = 2;
    std::string csv;
    bool exhaustive = false;
    std::string mask;
};

int run_scan_cmd(const Globals& g, const ScanArgs& a) {
    ScanJob job;
    job.ring = make_ring(g);
    if (a.mode == "histogram")
        job.mode = ScanMode::histogram;
    else if (a.mode == "hunt")
        job.mode = ScanMode::hunt;
    else if (a.mode == "assert-bound")
        job.mode = ScanMode::assert_bound;
    else
        throw UsageError("--mode must be histogram, hunt or assert-bound");
    if (job.mode != ScanMode::histogram && a.target == 0) throw UsageError("--target is required for this mode");
    job.target = a.target;
    job.seed = g.seed;
    job.count = a.count;
    job.workers = a.workers;
    job.exhaustive = a.exhaustive;
    job.extension_bound = a.k;
    job.smoothness_filter = a.filter || (job.mode == ScanMode::assert_bound && !a.no_filter);
    if (g.cap) job.options.height_cap = g.cap;
    if (!a.mask.empty()) {
        const std::size_t m = basis(job.ring).size();
        std::vector<bool> mask(m, false);
        for (const auto& part : split(a.mask, ',')) {
            const auto i = parse_unsigned(part, "mask index");
            if (i >= m) throw UsageError("mask index " + part + " out of range (m = " + std::to_string(m) + ")");
            mask[i] = true;
        }
        job.mask = mask;
    }
    const auto result = run_scan(job);
    if (!a.csv.empty()) {
        std::ofstream out(a.csv);
        if (!out) throw UsageError("cannot write " + a.csv);
        write_csv(result, *job.ring, out);
    }
    if (g.format == "json") {
        std::cout << summary_json(job, result) << "\n";
    } else {
        std::cout << "samples: " << result.records.size() << "  singular (filtered): " << result.filtered
                  << "  errors: " << result.errors << "\n";
        for (const auto& [key, n] : result.histogram)
            std::cout << "  height " << key.first << ", ns " << key.second << ": " << n << "\n";
        if (job.mode == ScanMode::hunt) std::cout << "hits: " << result.hits.size() << "\n";
        if (job.mode == ScanMode::assert_bound)
            std::cout << "violations: " << result.violations.size() << "  undecided: " << result.undecided.size()
                      << "\n";
        if (job.smoothness_filter) std::cout << "note: " << kSmoothnessCaveat << "\n";
    }
    return result.violations.empty() ? ok : domain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-F-split heights and Artin invariants of Calabi-Yau hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("-p", g.p, "characteristic");
    app.add_option("--ext-degree", g.ext_degree, "work over F_(p^e)");
    app.add_option("--modulus", g.modulus, "defining polynomial coefficients, constant term first");
    app.add_option("--weights", g.weights, "variable weights, comma separated");
    app.add_option("--cap", g.cap, "height search cap");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "random seed");

    std::string poly, c_text, which = "all", matrix;
    unsigned ns_cap = 0, random = 0, lift_cap = 0, k = 2;
    int family = -1;
    bool find_inf = false;
    ScanArgs scan_args;

    auto* height_cmd = app.add_subcommand("height", "quasi-F-split height");
    height_cmd->add_option("polynomial", poly)->required();
    auto* ns_cmd = app.add_subcommand("ns", "non-splitting index");
    ns_cmd->add_option("polynomial", poly)->required();
    ns_cmd->add_option("--ns-cap", ns_cap, "cap for the rank search (default m + 1)");
    auto* artin_cmd = app.add_subcommand("artin", "height, ns, tau and sigma");
    artin_cmd->add_option("polynomial", poly)->required();
    artin_cmd->add_option("--ns-cap", ns_cap, "cap for the rank search (default m + 1)");

    auto* lift_cmd = app.add_subcommand("lift", "non-splitting index of lifts to W_2");
    lift_cmd->add_option("polynomial", poly)->required();
    lift_cmd->add_option("c", c_text, "first-order lift coefficients, comma separated, basis order");
    lift_cmd->add_option("--random", random, "number of random c to try");
    lift_cmd->add_flag("--find-infinite", find_inf, "construct a lift with infinite ns");
    lift_cmd->add_option("--lift-cap", lift_cap, "cap for the lift recursion (default m + 1)");

    auto* del_cmd = app.add_subcommand("delsarte", "closed-form invariants of Delsarte K3 surfaces");
    del_cmd->add_option("--family", family, "built-in family index 0..19");
    del_cmd->add_option("--matrix", matrix, "16 exponents a00,a01,...,a33");

    auto* scan_cmd = app.add_subcommand("scan", "seeded sweeps over coefficient space");
    scan_cmd->add_option("--mode", scan_args.mode, "histogram, hunt or assert-bound");
    scan_cmd->add_option("--target", scan_args.target, "sigma to hunt for, or the minimal sigma to assert");
    scan_cmd->add_option("--count", scan_args.count, "number of samples");
    scan_cmd->add_option("--workers", scan_args.workers, "worker threads");
    scan_cmd->add_flag("--filter", scan_args.filter, "skip samples with a small-field singular point");
    scan_cmd->add_flag("--no-filter", scan_args.no_filter, "disable the filter in assert-bound mode");
    scan_cmd->add_option("-K", scan_args.k, "extension bound for the singular point search");
    scan_cmd->add_option("--csv", scan_args.csv, "write per-sample results here");
    scan_cmd->add_flag("--exhaustive", scan_args.exhaustive, "enumerate all coefficient vectors on the mask");
    scan_cmd->add_option("--mask", scan_args.mask, "basis indices allowed to be nonzero, comma separated");

    auto* tables_cmd = app.add_subcommand("tables", "recompute the reference tables");
    tables_cmd->add_option("--which", which, "f2, f3, quintic, ns2, delsarte or all");

    auto* smooth_cmd = app.add_subcommand("check-smooth", "search for a singular point over small fields");
    smooth_cmd->add_option("polynomial", poly)->required();
    smooth_cmd->add_option("-K", k, "extension bound (1..3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (height_cmd->parsed()) return run_report(g, poly, 0, false);
        if (ns_cmd->parsed() || artin_cmd->parsed()) return run_report(g, poly, ns_cap, true);
        if (lift_cmd->parsed()) return run_lift(g, poly, c_text, random, find_inf, lift_cap);
        if (del_cmd->parsed()) return run_delsarte(g, family, matrix);
        if (scan_cmd->parsed()) return run_scan_cmd(g, scan_args);
        if (tables_cmd->parsed()) return run_tables(g, which);
        if (smooth_cmd->parsed()) return run_check_smooth(g, poly, k);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return domain;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return resource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain;
    }
    return usage;
}
