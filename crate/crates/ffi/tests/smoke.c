#include <stdio.h>
#include <string.h>
#include "contrabench.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, cb_last_error()); return 1; } } while (0)

int main(void) {
    CbContramodule *k = NULL, *ind = NULL;
    CHECK(cb_contramodule_builtin("amb_p2_r1", "trivial", 1, &k) == CB_STATUS_OK);
    bool proj = true;
    size_t obstruction = 0;
    CHECK(cb_contramodule_is_projective(k, &proj, &obstruction) == CB_STATUS_OK);
    CHECK(!proj && obstruction > 0);
    cb_contramodule_free(k);

    CHECK(cb_contramodule_builtin("z2_p2", "trivial", 1, &k) == CB_STATUS_OK);
    CHECK(cb_contramodule_induce("tower_p2_r1", "pi_H", k, &ind) == CB_STATUS_INPUT);
    cb_contramodule_free(k);
    CHECK(cb_contramodule_on_tower("tower_p2_r1", "pi_H", "trivial", 1, &k) == CB_STATUS_OK);
    CHECK(cb_contramodule_induce("tower_p2_r1", "pi_H", k, &ind) == CB_STATUS_OK);
    CHECK(cb_contramodule_dim(ind) == 2);
    CbMock kind;
    CHECK(cb_contramodule_mock("tower_p2_r1", ind, &kind) == CB_STATUS_OK);
    CHECK(kind == CB_MOCK_PROPER_MOCK_PROJECTIVE);

    char *json = NULL;
    CHECK(cb_contramodule_to_json(ind, &json) == CB_STATUS_OK);
    CbWorkspace *ws = NULL;
    CHECK(cb_workspace_parse(json, &ws) == CB_STATUS_OK);
    CHECK(cb_workspace_validate(ws) == CB_STATUS_OK);
    cb_workspace_free(ws);
    cb_string_free(json);

    CHECK(cb_workspace_parse("{\"algebras\": 3}", &ws) == CB_STATUS_INPUT);
    CHECK(ws == NULL && strlen(cb_last_error()) > 0);
    CHECK(cb_contramodule_induce("tower_p2_r1", "pi_9", k, &ind) == CB_STATUS_INPUT);
    CHECK(cb_contramodule_is_projective(NULL, &proj, NULL) == CB_STATUS_NULL_ARGUMENT);

    cb_contramodule_free(ind);
    cb_contramodule_free(k);
    puts("ok");
    return 0;
}
