#include "hilbtaut/capi.h"

#include "hilbtaut/cohomology.hpp"
#include "hilbtaut/ringmodel.hpp"
#include "hilbtaut/verify.hpp"

#include <json.hpp>

#include <cstring>
#include <string>

using namespace hilbtaut;
using nlohmann::json;

struct ht_surface {
    SurfaceData data;
};

struct ht_result {
    std::string payload;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ht_status fail(ht_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
ht_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const PropertyFalsified& e) {
        return fail(HT_PROPERTY_FALSIFIED, e.what());
    } catch (const ConfigError& e) {
        return fail(HT_CONFIG, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HT_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(HT_INTERNAL, e.what());
    }
}

json dims_json(const GradedDim& g) {
    json j = json::object();
    for (const auto& [d, m] : g.entries()) j[std::to_string(d)] = m;
    return j;
}

}  // namespace

extern "C" {

ht_status ht_surface_p2(int dL, int dA, ht_surface** out) {
    return guarded([&]() {
        *out = new ht_surface{preset_p2(dL, dA)};
        return HT_OK;
    });
}

ht_status ht_surface_affine(int d, ht_surface** out) {
    return guarded([&]() {
        *out = new ht_surface{preset_affine(d)};
        return HT_OK;
    });
}

ht_status ht_surface_from_json(const char* json_text, ht_surface** out) {
    return guarded([&]() {
        if (!json_text) throw ConfigError("null surface JSON");
        *out = new ht_surface{surface_from_json(json_text)};
        return HT_OK;
    });
}

ht_status ht_surface_to_json(const ht_surface* s, char** json_out) {
    return guarded([&]() {
        if (!s || !json_out) throw ConfigError("null argument");
        *json_out = dup_string(surface_to_json(s->data));
        return HT_OK;
    });
}

void ht_surface_free(ht_surface* s) { delete s; }

ht_status ht_compute(const ht_surface* s, const char* op_c, int n, int k, ht_result** out) {
    return guarded([&]() {
        if (!s || !op_c || !out) throw ConfigError("null argument");
        std::string op = op_c;
        if (n < 1) throw std::invalid_argument("n >= 1 required");
        json j;
        j["op"] = op;
        j["surface"] = s->data.name;
        j["n"] = n;
        GradedDim dims;
        std::string provenance;
        if (op == "taut") {
            dims = taut_cohomology(n, s->data);
            provenance = "H*(L^[n]) = H*(L) (x) S^{n-1}H*(O)";
        } else if (op == "tensor2" || op == "sym2" || op == "ext2") {
            HilbertCohomologyResult r = tensor_square_cohomology(n, s->data);
            dims = (op == "tensor2") ? r.dims : (op == "sym2" ? r.sym2 : r.ext2);
            provenance = r.provenance;
            j["split"] = {{"sym2", dims_json(r.sym2)}, {"ext2", dims_json(r.ext2)},
                          {"total", dims_json(r.dims)}};
        } else if (op == "extk") {
            if (k < 0 || k > n) throw std::invalid_argument("extk requires 0 <= k <= n");
            j["k"] = k;
            dims = ext_power_cohomology(n, k, s->data);
            provenance = "H*(Lambda^k L^[n] (x) D_A) = Lambda^k H*(LA) (x) S^{n-k}H*(A)";
        } else if (op == "tensor2-twisted") {
            HilbertCohomologyResult r = les_twisted(n, s->data);
            dims = r.dims;
            provenance = r.provenance;
            j["exact"] = r.exact;
            if (!r.exact) {
                j["lower"] = dims_json(r.lower);
                j["upper"] = dims_json(r.upper);
            }
        } else {
            throw std::invalid_argument("unknown op: " + op +
                                        " (expected taut|tensor2|sym2|ext2|extk|tensor2-twisted)");
        }
        j["dims"] = dims_json(dims);
        j["total"] = dims.total_dim();
        j["euler"] = dims.euler_char();
        j["provenance"] = provenance;
        *out = new ht_result{j.dump(2)};
        return HT_OK;
    });
}

const char* ht_result_json(const ht_result* r) { return r ? r->payload.c_str() : nullptr; }

void ht_result_free(ht_result* r) { delete r; }

ht_status ht_verify(const char* suite_c, const char* tier_c, int max_n, char** report_json_out) {
    return guarded([&]() {
        std::string suite = suite_c ? suite_c : "all";
        std::string tier_s = tier_c ? tier_c : "fast";
        Tier tier;
        if (tier_s == "fast") tier = Tier::fast;
        else if (tier_s == "full") tier = Tier::full;
        else throw std::invalid_argument("tier must be fast or full");
        auto results = run_verify(suite, tier, max_n);
        json j;
        j["suite"] = suite;
        j["tier"] = tier_s;
        json checks = json::array();
        bool all_pass = true;
        for (const auto& r : results) {
            checks.push_back({{"name", r.name},
                              {"pass", r.pass},
                              {"seconds", r.seconds},
                              {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        j["checks"] = checks;
        j["pass"] = all_pass;
        if (report_json_out) *report_json_out = dup_string(j.dump(2));
        if (!all_pass) {
            g_last_error = "one or more verification checks failed";
            return HT_PROPERTY_FALSIFIED;
        }
        return HT_OK;
    });
}

void ht_string_free(char* s) { std::free(s); }

const char* ht_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
