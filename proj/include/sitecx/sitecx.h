#ifndef SITECX_SITECX_H
#define SITECX_SITECX_H

#include <stdint.h>

#if defined(SITECX_BUILDING)
#define SITECX_API __attribute__((visibility("default")))
#else
#define SITECX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sitecx_status {
  SITECX_OK = 0,
  SITECX_MATH_FAILURE = 1, /* computed, but the property checked does not hold */
  SITECX_INPUT_ERROR = 2,
  SITECX_INTERNAL = 3
} sitecx_status;

typedef enum sitecx_format { SITECX_FORMAT_JSON = 0, SITECX_FORMAT_TEXT = 1 } sitecx_format;

typedef struct sitecx_site sitecx_site;
typedef struct sitecx_complex sitecx_complex;
typedef struct sitecx_hypercover sitecx_hypercover;
typedef struct sitecx_functor sitecx_functor;

/* Coefficient ring override: tag is "Z", "Q" or "Fp" (with p), or NULL to
   keep the ring declared by the input. */
typedef struct sitecx_ring {
  const char* tag;
  unsigned long p;
} sitecx_ring;

typedef struct sitecx_range {
  int lo;
  int hi;
} sitecx_range;

SITECX_API const char* sitecx_version(void);

/* Message of the last failing call on this thread, or "" */
SITECX_API const char* sitecx_last_error(void);

/* Every char* handed out by the library is released with this. */
SITECX_API void sitecx_string_free(char* s);

/* Inputs. `origin` names the source in error messages. */
SITECX_API sitecx_status sitecx_site_parse(const char* json, const char* origin, sitecx_site** out);
SITECX_API void sitecx_site_free(sitecx_site* site);
SITECX_API sitecx_status sitecx_complex_parse(const sitecx_site* site, const char* json, const char* origin,
                                              sitecx_ring ring, sitecx_complex** out);
SITECX_API void sitecx_complex_free(sitecx_complex* k);
SITECX_API sitecx_status sitecx_hypercover_parse(const sitecx_site* site, const char* json, const char* origin,
                                                 sitecx_hypercover** out);
SITECX_API void sitecx_hypercover_free(sitecx_hypercover* x);
SITECX_API sitecx_status sitecx_functor_parse(const sitecx_site* site, const char* json, const char* origin,
                                              sitecx_ring ring, sitecx_functor** out);
SITECX_API void sitecx_functor_free(sitecx_functor* g);

/* Reports. On SITECX_OK and SITECX_MATH_FAILURE *report receives a JSON
   document; on other statuses it is set to NULL. */
SITECX_API sitecx_status sitecx_site_validate(const char* json, const char* origin, char** report);
SITECX_API sitecx_status sitecx_homology(const sitecx_complex* k, const sitecx_range* window, char** report);
SITECX_API sitecx_status sitecx_sheafify(const sitecx_complex* k, char** report);
SITECX_API sitecx_status sitecx_descent(const sitecx_complex* k, const sitecx_hypercover* x, char** report);
/* strategy: "economical" or "paper-exact" */
SITECX_API sitecx_status sitecx_cofrep(const sitecx_complex* k, int depth, const char* strategy, char** report);
SITECX_API sitecx_status sitecx_godement(const sitecx_complex* k, int levels, char** report);
/* object NULL for every object; method "godement", "cech-colimit" or
   "both"; depth < 0 picks the smallest certifying depth. */
SITECX_API sitecx_status sitecx_hypercoh(const sitecx_complex* k, const char* object, sitecx_range range,
                                         const char* method, int depth, char** report);
SITECX_API sitecx_status sitecx_kan(const sitecx_functor* gamma, const sitecx_complex* k, char** report);
/* suite NULL runs every property suite */
SITECX_API sitecx_status sitecx_check(uint64_t seed, const char* suite, char** report);

/* Canonical bytes of a JSON report in the requested format. */
SITECX_API sitecx_status sitecx_render(const char* report, sitecx_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
