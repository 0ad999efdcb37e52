#include <stdio.h>
#include <string.h>

#include "cexkit.h"

int main(void) {
  CexAlgebra *a = NULL;
  if (cex_algebra_from_spec("mu1_1:6", &a) != CEX_STATUS_OK) return 1;
  size_t z = 0, b = 0, h = 0;
  if (cex_cohomology_dims(a, &z, &b, &h) != CEX_STATUS_OK) return 2;
  if (z != 8 || b != 4 || h != 4) return 3;
  CexAlgebra *bad = NULL;
  if (cex_algebra_from_spec("mu1_9:6", &bad) != CEX_STATUS_INVALID_SPEC) return 4;
  if (strlen(cex_last_error()) == 0) return 5;
  cex_algebra_free(a);
  printf("ok %s\n", cex_version());
  return 0;
}
