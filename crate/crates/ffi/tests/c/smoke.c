#include <stdio.h>
#include <string.h>

#include "rankcodes.h"

#define CHECK(x)                                                    \
    do {                                                            \
        if (!(x)) {                                                 \
            const char *e = rc_last_error();                        \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, \
                    #x, e ? e : "no error");                        \
            return 1;                                               \
        }                                                           \
    } while (0)

int main(void) {
    RcField *field = NULL;
    CHECK(rc_field_new(2, 1, 6, &field) == RC_STATUS_OK);
    CHECK(rc_field_size(field) == 64);

    RcSubspaceCode *code = NULL;
    CHECK(rc_subspace_code_new(field, 4, 2, 2, &code) == RC_STATUS_OK);
    CHECK(rc_subspace_code_ambient_dim(code) == 16);

    uint32_t msg[2] = {5, 33};
    RcSubspace *v = NULL, *u = NULL;
    CHECK(rc_subspace_code_encode(code, msg, 2, &v) == RC_STATUS_OK);
    CHECK(rc_operator_channel(v, 1, 3, 7, &u) == RC_STATUS_OK);
    CHECK(rc_subspace_dim(u) == 6);

    RcSolutionSpace *sol = NULL;
    bool found = false;
    CHECK(rc_subspace_code_list_decode(code, u, &sol) == RC_STATUS_OK);
    CHECK(rc_solution_contains(sol, msg, 2, &found) == RC_STATUS_OK);
    CHECK(found);

    char *json = NULL;
    CHECK(rc_solution_to_json(sol, &json) == RC_STATUS_OK);
    CHECK(strstr(json, "\"k\":2") != NULL);
    rc_string_free(json);

    CHECK(rc_subspace_code_new(field, 9, 2, 2, &code) == RC_STATUS_INVALID_ARGUMENT);
    CHECK(rc_last_error() != NULL);

    rc_solution_free(sol);
    rc_subspace_free(u);
    rc_subspace_free(v);
    rc_subspace_code_free(code);
    rc_field_free(field);
    puts("ok");
    return 0;
}
