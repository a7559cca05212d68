/* Minimal consumer of the C API: build the catalog workspace, reduce a
 * word, run the declared checks, and print the verdict. */

#include <stdio.h>
#include <string.h>

#include "hopfforge.h"

static int fail(const char *what) {
  const char *err = hf_last_error();
  fprintf(stderr, "%s: %s\n", what, err ? err : "(no message)");
  return 1;
}

int main(void) {
  HfWorkspace *ws = NULL;
  if (hf_workspace_builtin("axb-q", NULL, NULL, NULL, &ws) != HF_STATUS_OK)
    return fail("builtin");

  char *nf = hf_normal_form(ws, "A", "b*a");
  if (!nf)
    return fail("normal_form");
  printf("b*a reduces to %s\n", nf);
  if (strcmp(nf, "q^-1*a*b") != 0)
    return 1;
  hf_string_free(nf);

  HfRunOptions opts = hf_run_options_default();
  opts.samples = 10;
  opts.max_degree = 4;
  HfReport *report = NULL;
  if (hf_workspace_run(ws, NULL, 0, &opts, &report) != HF_STATUS_OK)
    return fail("run");
  printf("exit code %d over %zu cases\n", hf_report_exit_code(report),
         hf_report_case_count(report));
  int code = hf_report_exit_code(report);

  hf_report_free(report);
  hf_workspace_free(ws);
  return code;
}
