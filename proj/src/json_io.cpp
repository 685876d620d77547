#include "qfs/json_io.hpp"

namespace qfs {

nlohmann::json to_json(const CappedIndex& v) {
    nlohmann::json j;
    if (v.value)
        j["value"] = *v.value;
    else
        j["value"] = "infinity";
    j["cap"] = v.cap;
    return j;
}

nlohmann::json to_json(const InvariantReport& r) {
    nlohmann::json j;
    j["family"] = to_string(r.family);
    j["basis_size"] = r.basis_size;
    j["height"] = to_json(r.height);
    j["height"]["method"] = r.height_method;
    j["height"]["heuristic_cap"] = r.heuristic_cap;
    j["ns"] = to_json(r.ns);
    j["ns"]["method"] = r.ns_method;
    j["supersingular"] = !r.height.is_finite();
    if (r.tau)
        j["tau"] = to_json(*r.tau);
    else
        j["tau"] = nullptr;
    j["sigma_note"] = to_string(r.sigma_note);
    if (r.line)
        j["coordinate_line"] = {r.line->first, r.line->second};
    else
        j["coordinate_line"] = nullptr;
    return j;
}

nlohmann::json to_json(const DelsarteResult& r) {
    nlohmann::json j;
    j["e_A"] = r.e_a;
    j["supersingular"] = r.supersingular;
    if (r.supersingular)
        j["sigma"] = r.value;
    else
        j["height"] = r.value;
    j["order"] = r.order;
    j["method"] = "closed form: powers of p mod e_A";
    return j;
}

nlohmann::json to_json(const EInvariant& e) {
    nlohmann::json j;
    j["det"] = e.det;
    j["adjugate"] = e.adjugate;
    j["alpha"] = e.alpha;
    j["g"] = e.g;
    j["e_A"] = e.e_a;
    return j;
}

nlohmann::json field_json(const Field& k) {
    nlohmann::json j;
    j["p"] = k.characteristic();
    j["e"] = k.degree();
    if (k.degree() > 1) j["modulus"] = k.modulus();
    return j;
}

} // namespace qfs
