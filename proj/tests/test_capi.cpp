// Exercises the shared-library surface the CLI sits on: handles, status
// codes, JSON payloads. No access to C++ internals.

#include "hilbtaut/capi.h"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

using nlohmann::json;

static int failures = 0;

#define REQUIRE(cond)                                                     \
    do {                                                                  \
        if (!(cond)) {                                                    \
            std::fprintf(stderr, "[FAIL] %s:%d %s\n", __FILE__, __LINE__, \
                         #cond);                                          \
            ++failures;                                                   \
        }                                                                 \
    } while (0)

int main() {
    // p2 taut regression through the C API
    ht_surface* s = nullptr;
    REQUIRE(ht_surface_p2(1, 0, &s) == HT_OK);
    ht_result* r = nullptr;
    REQUIRE(ht_compute(s, "taut", 3, 0, &r) == HT_OK);
    {
        json j = json::parse(ht_result_json(r));
        REQUIRE(j.at("dims").at("0").get<long long>() == 3);
        REQUIRE(j.at("total").get<long long>() == 3);
        REQUIRE(j.at("euler").get<long long>() == 3);
    }
    ht_result_free(r);

    // extk regression
    ht_surface* s2 = nullptr;
    REQUIRE(ht_surface_p2(2, 0, &s2) == HT_OK);
    REQUIRE(ht_compute(s2, "extk", 4, 3, &r) == HT_OK);
    {
        json j = json::parse(ht_result_json(r));
        REQUIRE(j.at("dims").at("0").get<long long>() == 20);
    }
    ht_result_free(r);
    ht_surface_free(s2);

    // tensor2 with split
    REQUIRE(ht_compute(s, "tensor2", 2, 0, &r) == HT_OK);
    {
        json j = json::parse(ht_result_json(r));
        REQUIRE(j.at("total").get<long long>() == 9);
        REQUIRE(j.at("split").at("sym2").at("0").get<long long>() == 6);
        REQUIRE(j.at("split").at("ext2").at("0").get<long long>() == 3);
    }
    ht_result_free(r);

    // status codes
    REQUIRE(ht_compute(s, "frobenius", 2, 0, &r) == HT_USAGE);
    REQUIRE(std::strlen(ht_last_error()) > 0);
    REQUIRE(ht_compute(s, "taut", 0, 0, &r) == HT_USAGE);
    ht_surface* bad = nullptr;
    REQUIRE(ht_surface_p2(-1, 0, &bad) == HT_CONFIG);
    REQUIRE(ht_surface_from_json("{", &bad) == HT_CONFIG);

    // surface JSON round trip through the C API
    char* text = nullptr;
    REQUIRE(ht_surface_to_json(s, &text) == HT_OK);
    ht_surface* back = nullptr;
    REQUIRE(ht_surface_from_json(text, &back) == HT_OK);
    ht_result* r1 = nullptr;
    ht_result* r2 = nullptr;
    REQUIRE(ht_compute(s, "tensor2-twisted", 2, 0, &r1) == HT_OK);
    REQUIRE(ht_compute(back, "tensor2-twisted", 2, 0, &r2) == HT_OK);
    {
        json a = json::parse(ht_result_json(r1));
        json b = json::parse(ht_result_json(r2));
        REQUIRE(a.at("dims") == b.at("dims"));
        REQUIRE(a.at("exact") == b.at("exact"));
    }
    ht_result_free(r1);
    ht_result_free(r2);
    ht_string_free(text);
    ht_surface_free(back);
    ht_surface_free(s);

    // affine surface + a fast verify suite
    ht_surface* aff = nullptr;
    REQUIRE(ht_surface_affine(1, &aff) == HT_OK);
    REQUIRE(ht_compute(aff, "taut", 2, 0, &r) == HT_OK);
    {
        json j = json::parse(ht_result_json(r));
        REQUIRE(j.at("total").get<long long>() == 9);
    }
    ht_result_free(r);
    ht_surface_free(aff);

    char* report = nullptr;
    REQUIRE(ht_verify("grading", "fast", 0, &report) == HT_OK);
    {
        json j = json::parse(report);
        REQUIRE(j.at("pass").get<bool>());
        REQUIRE(j.at("checks").size() >= 4);
    }
    ht_string_free(report);
    REQUIRE(ht_verify("no-such-suite", "fast", 0, &report) == HT_CONFIG);

    if (failures) {
        std::fprintf(stderr, "%d C API check(s) failed\n", failures);
        return 1;
    }
    std::puts("capi_tests: all checks passed");
    return 0;
}
