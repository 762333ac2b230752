/* C interface to the airplane refueling solver.
 *
 * Handles are opaque; every call returns an arp_status and reports details via
 * arp_last_error() (thread-local). Strings returned through `char**` are owned by
 * the caller and released with arp_string_free. Permutations are written
 * first-drop -> farthest.
 */
#ifndef ARP_ARP_H
#define ARP_ARP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ARP_API __declspec(dllexport)
#else
#define ARP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arp_status {
    ARP_OK = 0,
    ARP_E_INVALID = 1,
    ARP_E_PARSE = 2,
    ARP_E_GUARD = 3,
    ARP_E_PRECONDITION = 4,
    ARP_E_IO = 5,
    ARP_E_INTERNAL = 6
} arp_status;

typedef enum arp_format { ARP_FORMAT_AUTO = 0, ARP_FORMAT_JSON = 1, ARP_FORMAT_CSV = 2 } arp_format;

typedef enum arp_class_kind {
    ARP_CLASS_ALIGNED = 0,
    ARP_CLASS_COMPLETE_REVERSE_ORDER = 1,
    ARP_CLASS_MIXED = 2
} arp_class_kind;

typedef enum arp_method { ARP_METHOD_BRUTE = 0, ARP_METHOD_GREEDY = 1, ARP_METHOD_SEQUENTIAL = 2 } arp_method;

typedef enum arp_search_mode {
    ARP_MODE_OPTIMIZE = 0,
    ARP_MODE_COUNT = 1,
    ARP_MODE_OPTIMIZE_AND_COUNT = 2,
    ARP_MODE_ENUMERATE = 3
} arp_search_mode;

typedef enum arp_estimate_mode { ARP_ESTIMATE_EXACT = 0, ARP_ESTIMATE_HEURISTIC = 1 } arp_estimate_mode;

typedef enum arp_report_kind { ARP_REPORT_TABLE2 = 0, ARP_REPORT_TABLE5 = 1, ARP_REPORT_TABLE6 = 2 } arp_report_kind;

typedef struct arp_instance arp_instance;

typedef struct arp_search_options {
    arp_search_mode mode;
    size_t max_n_guard; /* 0 selects the default (10) */
    unsigned workers;   /* 0 selects 1 */
} arp_search_options;

typedef struct arp_cro_params {
    size_t n;
    uint64_t seed;
    const char* epsilon; /* decimal strings; NULL selects the defaults 0.01 / 100 / 100 */
    const char* max_ratio;
    const char* max_rate;
} arp_cro_params;

ARP_API const char* arp_version(void);
ARP_API const char* arp_last_error(void);
ARP_API void arp_string_free(char* s);

/* instances */
ARP_API arp_status arp_instance_create(size_t n, const uint32_t* ids, const char* const* v, const char* const* c,
                                       arp_instance** out);
ARP_API arp_status arp_instance_parse(const char* text, arp_format format, arp_instance** out);
ARP_API arp_status arp_instance_load(const char* path, arp_instance** out);
ARP_API arp_status arp_instance_serialize(const arp_instance* inst, arp_format format, char** out);
ARP_API arp_status arp_instance_save(const arp_instance* inst, const char* path, arp_format format);
ARP_API size_t arp_instance_size(const arp_instance* inst);
ARP_API void arp_instance_free(arp_instance* inst);

/* generators; the instance remembers its provenance for serialization */
ARP_API arp_status arp_generate_table4(size_t n, int rounded, arp_instance** out);
ARP_API arp_status arp_generate_cro(const arp_cro_params* params, arp_instance** out);
ARP_API arp_status arp_generate_general(size_t n, uint64_t seed, arp_instance** out);
ARP_API arp_status arp_generate_subset(const arp_instance* inst, size_t k, uint64_t seed, arp_instance** out);

/* analysis */
ARP_API arp_status arp_classify(const arp_instance* inst, arp_class_kind* kind, int* ties);
ARP_API arp_status arp_is_sequential_feasible(const arp_instance* inst, const uint32_t* pi, size_t n, int* feasible);
ARP_API arp_status arp_total_distance(const arp_instance* inst, const uint32_t* pi, size_t n, char** exact_out);

/* solving; the result is a JSON solution document */
ARP_API arp_status arp_solve(const arp_instance* inst, arp_method method, const arp_search_options* opts,
                             char** json_out);

/* factorial oracle: {"count": "...", "leaves": [[...], ...]} */
ARP_API arp_status arp_enumerate_oracle(const arp_instance* inst, size_t max_n_guard, char** json_out);

/* writes `text` to `path` through a temporary file and a rename */
ARP_API arp_status arp_write_text(const char* path, const char* text);

/* complexity; results are JSON report documents */
ARP_API arp_status arp_estimate(const arp_instance* inst, arp_estimate_mode mode, unsigned workers, char** json_out);
ARP_API arp_status arp_bounds(size_t n, size_t m, char** json_out);
ARP_API arp_status arp_report(arp_report_kind kind, size_t family_n, unsigned workers, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* ARP_ARP_H */
