// hilbtaut: exact computations of cohomology of tautological-bundle
// constructions on Hilbert schemes of points, plus the desk-scale
// verification suites. Links only the C API.

#include "hilbtaut/capi.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

int fail(ht_status s) {
    std::cerr << "error: " << ht_last_error() << "\n";
    return static_cast<int>(s);
}

struct SurfaceSpec {
    std::string preset = "p2";
    int L = 1;
    int A = 0;
    int d = 1;
    json inline_surface;  // formal preset data
};

ht_status make_surface(const SurfaceSpec& spec, ht_surface** out, std::string* err) {
    if (spec.preset == "p2") return ht_surface_p2(spec.L, spec.A, out);
    if (spec.preset == "affine") return ht_surface_affine(spec.d, out);
    if (spec.preset == "formal") {
        if (spec.inline_surface.is_null()) {
            *err = "formal preset needs inline surface data (use --config)";
            return HT_CONFIG;
        }
        return ht_surface_from_json(spec.inline_surface.dump().c_str(), out);
    }
    *err = "unknown surface preset '" + spec.preset + "'";
    return HT_CONFIG;
}

void print_table(const json& j) {
    const auto& dims = j.at("dims");
    if (dims.empty()) {
        std::cout << "H^*: 0\n";
    } else {
        int lo = 0, hi = 0;
        bool first = true;
        for (auto it = dims.begin(); it != dims.end(); ++it) {
            int d = std::stoi(it.key());
            lo = first ? d : std::min(lo, d);
            hi = first ? d : std::max(hi, d);
            first = false;
        }
        lo = std::min(lo, 0);
        for (int d = lo; d <= hi; ++d) {
            auto it = dims.find(std::to_string(d));
            long long m = (it == dims.end()) ? 0 : it->get<long long>();
            std::cout << "H^" << d << ": " << m << "\n";
        }
    }
    std::cout << "total: " << j.at("total").get<long long>() << "\n";
    std::cout << "euler: " << j.at("euler").get<long long>() << "\n";
    if (j.contains("exact") && !j.at("exact").get<bool>()) {
        std::cout << "note: interval result [lower, upper]; supply pairing tables for exact dims\n";
        std::cout << "lower: " << j.at("lower").dump() << "\n";
        std::cout << "upper: " << j.at("upper").dump() << "\n";
    }
    if (j.contains("split")) {
        std::cout << "sym2: " << j.at("split").at("sym2").dump() << "\n";
        std::cout << "ext2: " << j.at("split").at("ext2").dump() << "\n";
    }
    std::cout << "provenance: " << j.at("provenance").get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hilbtaut: tautological bundles on Hilbert schemes of points, exact engine"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate a closed cohomology formula");
    SurfaceSpec spec;
    std::string op = "taut", output = "table", config_path;
    int n = 2, k = 1;
    compute->add_option("--surface", spec.preset, "surface preset: p2 | affine | formal");
    compute->add_option("--L", spec.L, "p2: degree of L = O(L)");
    compute->add_option("--A", spec.A, "p2: degree of A = O(A) (determinant twist)");
    compute->add_option("--d", spec.d, "affine: truncation order of the chart model");
    compute->add_option("--op", op, "taut | tensor2 | sym2 | ext2 | extk | tensor2-twisted");
    compute->add_option("--n", n, "number of points");
    compute->add_option("--k", k, "exterior power (extk only)");
    compute->add_option("--config", config_path, "JSON job config (overrides flags)");
    compute->add_option("--output", output, "table | json");

    // verify
    auto* verify = app.add_subcommand("verify", "run the desk-scale verification suites");
    std::string suite = "all", tier, voutput = "table";
    int max_n = 0;
    verify->add_option("--suite", suite,
                       "all | grading | symrep | ringmodel | cech | danila | multitor | specseq | "
                       "cohomology");
    verify->add_option("--tier", tier, "fast | full (default fast; HILBTAUT_VERIFY_TIER overrides)");
    verify->add_option("--max-n", max_n, "cap the number of points in the heavy suites");
    verify->add_option("--output", voutput, "table | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(HT_USAGE);
    }

    if (compute->parsed()) {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot open config " << config_path << "\n";
                return HT_CONFIG;
            }
            json cfg;
            try {
                in >> cfg;
            } catch (const std::exception& e) {
                std::cerr << "error: config parse: " << e.what() << "\n";
                return HT_CONFIG;
            }
            if (cfg.contains("surface")) {
                const auto& s = cfg["surface"];
                spec.preset = s.value("preset", "formal");
                spec.L = s.value("L", 0);
                spec.A = s.value("A", 0);
                spec.d = s.value("d", 1);
                if (spec.preset == "formal") spec.inline_surface = s;
            }
            op = cfg.value("op", op);
            n = cfg.value("n", n);
            k = cfg.value("k", k);
            output = cfg.value("output", output);
        }
        if (output != "table" && output != "json") {
            std::cerr << "error: --output must be table or json\n";
            return HT_USAGE;
        }
        ht_surface* surf = nullptr;
        std::string err;
        ht_status st = make_surface(spec, &surf, &err);
        if (st != HT_OK) {
            if (!err.empty()) {
                std::cerr << "error: " << err << "\n";
                return static_cast<int>(st);
            }
            return fail(st);
        }
        ht_result* res = nullptr;
        st = ht_compute(surf, op.c_str(), n, k, &res);
        if (st != HT_OK) {
            ht_surface_free(surf);
            return fail(st);
        }
        json j = json::parse(ht_result_json(res));
        if (output == "json")
            std::cout << j.dump(2) << "\n";
        else
            print_table(j);
        ht_result_free(res);
        ht_surface_free(surf);
        return 0;
    }

    // verify
    if (voutput != "table" && voutput != "json") {
        std::cerr << "error: --output must be table or json\n";
        return HT_USAGE;
    }
    if (tier.empty()) {
        const char* env = std::getenv("HILBTAUT_VERIFY_TIER");
        tier = env ? env : "fast";
    }
    char* report = nullptr;
    ht_status st = ht_verify(suite.c_str(), tier.c_str(), max_n, &report);
    if (st != HT_OK && st != HT_PROPERTY_FALSIFIED) return fail(st);
    json j = json::parse(report);
    ht_string_free(report);
    if (voutput == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : j.at("checks")) {
            std::ostringstream line;
            line << (c.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ") << c.at("name").get<std::string>();
            std::cout << line.str() << "  (" << c.at("seconds").get<double>() << " s)";
            if (!c.at("pass").get<bool>()) std::cout << "  " << c.at("detail").get<std::string>();
            std::cout << "\n";
        }
        std::cout << (j.at("pass").get<bool>() ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return static_cast<int>(st);
}
