#include <math.h>
#include <stdio.h>
#include <string.h>

#include "hypersph.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    double v = 0.0;
    CHECK(hs_legendre_p(2.0, 0.5, &v) == HS_STATUS_OK);
    CHECK(v == -0.125);
    CHECK(hs_gamma(0.0, &v) == HS_STATUS_GAMMA_POLE);
    CHECK(hs_last_error_message() != NULL);

    double q[3] = {2.0, 1.0, 0.5};
    double x[3], h[3];
    CHECK(hs_to_cartesian(HS_SYSTEM_HYPERSPHERICAL, q, 3, x) == HS_STATUS_OK);
    CHECK(fabs(x[0] - 2.0 * cos(1.0)) < 1e-14);
    CHECK(fabs(x[2] - 2.0 * sin(1.0) * sin(0.5)) < 1e-14);
    CHECK(hs_scale_factors(HS_SYSTEM_HYPERSPHERICAL, q, 3, h) == HS_STATUS_OK);
    CHECK(fabs(h[2] - 2.0 * sin(1.0)) < 1e-14);

    HsModeSpec *spec = NULL;
    const char *json = "{\"system\":\"hyperspherical\",\"dim\":3,\"m\":0,\"q_chain\":[1],\"k\":1.0,\"bessel_kind\":\"J\"}";
    CHECK(hs_mode_spec_from_json(json, &spec) == HS_STATUS_OK);
    double re = 0.0, im = 0.0;
    CHECK(hs_mode_eval(spec, q, 3, 0.0, &re, &im) == HS_STATUS_OK);
    char *text = NULL;
    CHECK(hs_mode_spec_to_json(spec, &text) == HS_STATUS_OK);
    CHECK(strstr(text, "\"dim\": 3") != NULL);
    hs_string_free(text);
    hs_mode_spec_free(spec);

    printf("%.17g %.17g\n", re, im);
    return 0;
}
