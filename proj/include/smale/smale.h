#ifndef SMALE_SMALE_H
#define SMALE_SMALE_H

#include <stddef.h>

#if defined(SMALE_BUILDING_LIBRARY)
#define SMALE_API __attribute__((visibility("default")))
#else
#define SMALE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smale_status {
  SMALE_OK = 0,
  /* The order (or certificate) was examined and principally rejected. */
  SMALE_REFUSED = 1,
  SMALE_ERR_IO = 2,
  SMALE_ERR_PARSE = 3,
  SMALE_ERR_INVALID_ORDER = 4,
  SMALE_ERR_PRECONDITION = 5,
  SMALE_ERR_INVALID_ARGUMENT = 6,
  SMALE_ERR_INTERNAL = 7
} smale_status;

typedef enum smale_matching { SMALE_MATCH_FIRST_FIT = 0, SMALE_MATCH_LAST_FIT = 1 } smale_matching;

typedef enum smale_dot_kind { SMALE_DOT_HASSE = 0, SMALE_DOT_BANDS = 1, SMALE_DOT_EMBEDDING = 2 } smale_dot_kind;

typedef struct smale_options {
  smale_matching matching;
  /* Negative: number of edges of the highest level graph. */
  long max_genus;
  unsigned threads;
} smale_options;

typedef struct smale_order smale_order;
typedef struct smale_certificate smale_certificate;

SMALE_API const char* smale_version(void);
SMALE_API smale_options smale_default_options(void);

/* Message for the last non-OK status on this thread; never NULL. */
SMALE_API const char* smale_last_error(void);
/* Strings returned through char** out-parameters are freed with this. */
SMALE_API void smale_string_free(char* text);

/* Order spec documents (JSON), optionally carrying externally chosen cycles. */
SMALE_API smale_status smale_order_parse(const char* text, smale_order** out);
SMALE_API smale_status smale_order_load(const char* path, smale_order** out);
SMALE_API void smale_order_free(smale_order* order);

/* Validation report: roles, generations, covers, north-south pairs. */
SMALE_API smale_status smale_order_report(const smale_order* order, char** json_out);
/* Connectivity report plus necessary-condition violations; REFUSED when
   connectivity fails or a rule fires. */
SMALE_API smale_status smale_check(const smale_order* order, char** json_out);
SMALE_API smale_status smale_plan_plugs(const smale_order* order, char** json_out);
/* REFUSED when no good embedding exists up to max_genus. */
SMALE_API smale_status smale_gradient_like(const smale_order* order, const smale_options* options, char** json_out);

/* On REFUSED, *certificate_out is NULL and *refusal_json_out names the stage. */
SMALE_API smale_status smale_realize(const smale_order* order, const smale_options* options,
                                     smale_certificate** certificate_out, char** refusal_json_out);
SMALE_API smale_status smale_certificate_parse(const char* text, smale_certificate** out);
SMALE_API smale_status smale_certificate_json(const smale_certificate* certificate, char** json_out);
/* REFUSED when some invariant does not re-verify; the report lists them. */
SMALE_API smale_status smale_certificate_verify(const smale_certificate* certificate, char** json_out);
SMALE_API long smale_certificate_euler_characteristic(const smale_certificate* certificate);
SMALE_API long smale_certificate_genus(const smale_certificate* certificate);
SMALE_API void smale_certificate_free(smale_certificate* certificate);

SMALE_API smale_status smale_export_dot(const smale_order* order, smale_dot_kind kind, const smale_options* options,
                                        char** dot_out);

/* Writes the worked example orders as <name>.json files into directory. */
SMALE_API smale_status smale_write_seed_corpus(const char* directory, char** file_list_json_out);

#ifdef __cplusplus
}
#endif

#endif
