#ifndef HILBTAUT_CAPI_H
#define HILBTAUT_CAPI_H

/* C interface to the hilbtaut engine: opaque handles and status codes.
 * All computations are exact; any rational output is serialized as a
 * string inside the JSON payloads. Strings returned through `char**`
 * must be released with ht_string_free; handles with their _free call.
 *
 * Status values double as process exit codes for the CLI. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ht_status {
    HT_OK = 0,
    HT_USAGE = 1,              /* malformed request (bad op name, bad n/k) */
    HT_CONFIG = 2,             /* bad surface data / config document */
    HT_PROPERTY_FALSIFIED = 3, /* an internal identity the formulas rely on failed */
    HT_INTERNAL = 4
} ht_status;

typedef struct ht_surface ht_surface;
typedef struct ht_result ht_result;

/* Presets. p2 takes nonnegative twist degrees; affine takes the truncation
 * order of the two-variable chart model. */
ht_status ht_surface_p2(int dL, int dA, ht_surface** out);
ht_status ht_surface_affine(int d, ht_surface** out);
ht_status ht_surface_from_json(const char* json_text, ht_surface** out);
ht_status ht_surface_to_json(const ht_surface* s, char** json_out);
void ht_surface_free(ht_surface* s);

/* op: taut | tensor2 | sym2 | ext2 | extk | tensor2-twisted.
 * k is consulted only by extk. */
ht_status ht_compute(const ht_surface* s, const char* op, int n, int k, ht_result** out);

/* JSON payload: degrees, dimensions, total, Euler characteristic,
 * provenance; owned by the result handle. */
const char* ht_result_json(const ht_result* r);
void ht_result_free(ht_result* r);

/* suite: "all" or a module name; tier: "fast" | "full"; max_n <= 0 picks
 * the tier default. Returns HT_PROPERTY_FALSIFIED when any check fails;
 * the JSON report lists every check either way. */
ht_status ht_verify(const char* suite, const char* tier, int max_n, char** report_json_out);

void ht_string_free(char* s);

/* Message for the most recent failing call on this thread. */
const char* ht_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* HILBTAUT_CAPI_H */
