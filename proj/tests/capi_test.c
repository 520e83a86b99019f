/* Exercises the public C interface only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "smale/smale.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static const char* diamond =
    "{\"elements\": [\"alpha\", \"s1\", \"s2\", \"omega\"],"
    " \"relations\": [[\"alpha\", \"s1\"], [\"alpha\", \"s2\"], [\"s1\", \"omega\"], [\"s2\", \"omega\"]]}";

static const char* torus =
    "{\"elements\": [\"alpha\", \"s1\", \"s2\", \"omega\"],"
    " \"relations\": [[\"alpha\", \"s1\"], [\"alpha\", \"s2\"], [\"s1\", \"omega\"], [\"s2\", \"omega\"]],"
    " \"cycles\": {"
    "  \"omega\": [[\"s1\",\"alpha\",\"s2\"],[\"s2\",\"alpha\",\"s1\"],[\"s1\",\"alpha\",\"s2\"],[\"s2\",\"alpha\",\"s1\"]],"
    "  \"alpha\": [[\"s1\",\"omega\",\"s2\"],[\"s2\",\"omega\",\"s1\"],[\"s1\",\"omega\",\"s2\"],[\"s2\",\"omega\",\"s1\"]]}}";

static const char* impossible =
    "{\"elements\": [\"A\", \"s1\", \"s2\", \"w1\", \"w2\"],"
    " \"relations\": [[\"A\", \"s1\"], [\"A\", \"s2\"], [\"s1\", \"w1\"], [\"s2\", \"w2\"]]}";

static void realize_torus(void) {
  smale_order* order = NULL;
  smale_certificate* cert = NULL;
  smale_certificate* back = NULL;
  char* refusal = NULL;
  char* json = NULL;
  char* report = NULL;
  smale_options opts = smale_default_options();

  EXPECT(smale_order_parse(torus, &order) == SMALE_OK);
  EXPECT(smale_realize(order, &opts, &cert, &refusal) == SMALE_OK);
  EXPECT(refusal == NULL);
  EXPECT(cert != NULL);
  if (!cert) {
    smale_order_free(order);
    return;
  }
  EXPECT(smale_certificate_euler_characteristic(cert) == 0);
  EXPECT(smale_certificate_genus(cert) == 1);
  EXPECT(smale_certificate_json(cert, &json) == SMALE_OK);
  EXPECT(json && strstr(json, "\"schema\"") != NULL);
  EXPECT(smale_certificate_parse(json, &back) == SMALE_OK);
  EXPECT(smale_certificate_verify(back, &report) == SMALE_OK);
  EXPECT(smale_certificate_genus(back) == 1);

  smale_string_free(report);
  smale_string_free(json);
  smale_certificate_free(back);
  smale_certificate_free(cert);
  smale_order_free(order);
}

static void refusals_and_errors(void) {
  smale_order* order = NULL;
  smale_certificate* cert = NULL;
  char* refusal = NULL;
  char* json = NULL;

  EXPECT(smale_order_parse(impossible, &order) == SMALE_OK);
  EXPECT(smale_realize(order, NULL, &cert, &refusal) == SMALE_REFUSED);
  EXPECT(cert == NULL);
  EXPECT(refusal && strstr(refusal, "connectivity") != NULL);
  EXPECT(smale_check(order, &json) == SMALE_REFUSED);
  smale_string_free(json);
  smale_string_free(refusal);
  smale_order_free(order);

  order = NULL;
  EXPECT(smale_order_parse("{", &order) == SMALE_ERR_PARSE);
  EXPECT(order == NULL);
  EXPECT(strlen(smale_last_error()) > 0);
  EXPECT(smale_order_parse("{\"elements\": [\"a\",\"b\"], \"relations\": [[\"a\",\"b\"],[\"b\",\"a\"]]}", &order) ==
         SMALE_ERR_INVALID_ORDER);
  EXPECT(smale_order_load("/nonexistent/order.json", &order) == SMALE_ERR_IO);
  EXPECT(smale_order_parse(NULL, &order) == SMALE_ERR_INVALID_ARGUMENT);
  EXPECT(smale_certificate_parse("{\"schema\": 3}", &cert) == SMALE_ERR_PARSE);
}

static void reports(void) {
  smale_order* order = NULL;
  char* json = NULL;
  smale_options opts = smale_default_options();

  EXPECT(smale_order_parse(diamond, &order) == SMALE_OK);
  EXPECT(smale_order_report(order, &json) == SMALE_OK);
  smale_string_free(json);
  EXPECT(smale_check(order, &json) == SMALE_OK);
  smale_string_free(json);
  EXPECT(smale_plan_plugs(order, &json) == SMALE_OK);
  smale_string_free(json);
  opts.threads = 2;
  EXPECT(smale_gradient_like(order, &opts, &json) == SMALE_OK);
  EXPECT(json && strstr(json, "\"genus\": 1") != NULL);
  smale_string_free(json);
  EXPECT(smale_export_dot(order, SMALE_DOT_HASSE, &opts, &json) == SMALE_OK);
  EXPECT(json && strncmp(json, "digraph", 7) == 0);
  smale_string_free(json);
  EXPECT(smale_export_dot(order, SMALE_DOT_BANDS, &opts, &json) == SMALE_OK);
  smale_string_free(json);
  EXPECT(smale_export_dot(order, SMALE_DOT_EMBEDDING, &opts, &json) == SMALE_OK);
  smale_string_free(json);
  EXPECT(smale_version() && strlen(smale_version()) > 0);
  smale_order_free(order);
}

int main(void) {
  realize_torus();
  refusals_and_errors();
  reports();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
