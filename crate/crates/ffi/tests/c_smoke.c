#include <stdio.h>
#include <string.h>
#include "nilcomplex.h"

int main(void) {
    NcContext *ctx = NULL;
    if (nc_context_new("zmod:3", "1", 3, &ctx) != NC_STATUS_OK) return 10;
    NcTable *t = NULL;
    if (nc_simplicial_homology(ctx, "triangle", 0, 6, &t) != NC_STATUS_OK) return 11;
    size_t level, dim;
    int64_t degree;
    bool valid;
    int ones = 0;
    for (size_t i = 0; i < nc_table_len(t); i++) {
        if (nc_table_cell(t, i, &level, &degree, &dim, &valid) != NC_STATUS_OK) return 12;
        if (valid && dim > 0) ones += (int)dim;
    }
    int64_t bad[4] = {1, 0, 0, 0};
    NcModule *m = NULL;
    NcStatus s = nc_module_new(ctx, 2, bad, &m);
    nc_table_free(t);
    nc_context_free(ctx);
    printf("%d %d\n", ones, (int)s);
    return 0;
}
