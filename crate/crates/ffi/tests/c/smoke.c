#include <stdio.h>
#include <string.h>
#include "approxquasi.h"

int main(void) {
    AqText *text = NULL;
    const char *s = "abaab";
    if (aq_text_new((const uint8_t *)s, strlen(s), '?', &text) != AQ_STATUS_OK) return 1;
    size_t cov[6], needed = 0;
    if (aq_prefix_coverage(text, 1, cov, 6, &needed) != AQ_STATUS_OK) return 2;
    if (needed != 6 || cov[2] != 5) return 3;
    AqThresholds *report = NULL;
    if (aq_restricted(text, AQ_VARIANT_COVER, AQ_DISTANCE_HAMMING, NULL, 1, &report) != AQ_STATUS_OK) return 4;
    long long best = aq_thresholds_minimal(report);
    aq_thresholds_free(report);
    if (aq_factor_coverage(text, AQ_DISTANCE_EDIT, NULL, 1, NULL) != AQ_STATUS_NULL_POINTER) return 5;
    if (aq_last_error() == NULL) return 6;
    aq_text_free(text);
    printf("ok %s %lld\n", aq_version(), best);
    return 0;
}
