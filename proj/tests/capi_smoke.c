/* Compiles the public header as C and runs one point through the library. */
#include <bsbs/bsbs.h>

#include <math.h>
#include <stdio.h>

static int check(int ok, const char* what) {
  if (!ok) fprintf(stderr, "capi_c_smoke: %s failed: %s\n", what, bsbs_last_error());
  return ok ? 0 : 1;
}

int main(void) {
  bsbs_config* config = NULL;
  bsbs_point_result point;
  int failures = 0;

  failures += check(bsbs_config_create(&config) == BSBS_OK, "create");
  failures += check(bsbs_config_apply_override(config, "g_coupling_a=0") == BSBS_OK, "override");
  failures += check(bsbs_config_apply_override(config, "g_coupling_m=0") == BSBS_OK, "override");
  failures += check(bsbs_evaluate_point(config, &point) == BSBS_OK, "evaluate");
  failures += check(point.has_entanglement && fabs(point.entanglement.nu_minus - 0.5) < 1e-9,
                    "nu_minus");
  failures += check(point.entanglement.log_negativity == 0.0, "log negativity");
  failures += check(fabs(point.covariance[4 * 6 + 4] - 100.5) < 1e-6, "thermal variance");
  bsbs_config_destroy(config);

  if (failures == 0) printf("capi_c_smoke: ok\n");
  return failures == 0 ? 0 : 1;
}
