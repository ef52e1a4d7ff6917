/* The header must compile as C and the library must link from C. */
#include <stdio.h>
#include <string.h>

#include "flipgraph/flipgraph.h"

int main(void) {
  fg_triangulation* t = NULL;
  fg_theorem_bound b;
  if (fg_generate(FG_FAMILY_G2, 6, &t) != FG_OK) return 1;
  if (fg_tri_edge_count(t) != 12) return 1;
  fg_tri_free(t);
  if (fg_theorem_bound_compute(30, &b) != FG_OK || b.flip_bound != 36) return 1;
  if (fg_generate(FG_FAMILY_G1, 4, &t) != FG_ERR_INVALID_ARGUMENT) return 1;
  if (strlen(fg_last_error()) == 0) return 1;
  printf("%s\n", fg_version());
  return 0;
}
