/* Minimal pure-C consumer: proves the public header is C and the shared
 * library links without any C++ toolchain involvement. */

#include <stdio.h>
#include <string.h>

#include "pastrev.h"

static int failures = 0;

static void expect(int condition, const char* what) {
  if (!condition) {
    fprintf(stderr, "FAIL: %s (%s)\n", what, pr_last_error());
    ++failures;
  }
}

int main(void) {
  pr_matrix* m = NULL;
  expect(pr_matrix_from_json("{\"rows\":2,\"cols\":2,\"data\":[[1,2],[3,4]]}", &m) == PR_OK,
         "parse matrix");

  pr_matrix* reversed = NULL;
  expect(pr_matrix_reverse(m, PR_AXIS_FULL, &reversed) == PR_OK, "reverse");

  char* det = NULL;
  expect(pr_matrix_det(reversed, &det) == PR_OK, "determinant");
  expect(det != NULL && strcmp(det, "-2") == 0, "determinant value");
  pr_string_free(det);

  pr_matrix* bad = NULL;
  expect(pr_matrix_from_json("nonsense", &bad) == PR_ERR_PARSE, "parse error status");

  pr_verify_config config;
  memset(&config, 0, sizeof config);
  config.seed = 1;
  config.trials_per_property = 2;
  config.max_dim = 2;
  config.entry_bound = 3;
  config.only = "P001";
  char* report = NULL;
  int pass = 0;
  expect(pr_verify_run(&config, -1, &report, &pass) == PR_OK, "verify run");
  expect(pass == 1, "verify pass flag");
  pr_string_free(report);

  pr_matrix_free(reversed);
  pr_matrix_free(m);
  if (failures == 0) printf("c consumer ok\n");
  return failures == 0 ? 0 : 1;
}
