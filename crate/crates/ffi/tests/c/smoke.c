#include <stdio.h>
#include <string.h>

#include "sl3spider.h"

int main(void) {
    SpiderTangle *t = NULL;
    if (spider_tangle_parse("word:\ncup+ 1\ncap 1\n", &t) != SPIDER_STATUS_OK) {
        return 1;
    }
    SpiderWebSum *s = NULL;
    if (spider_evaluate(t, false, &s) != SPIDER_STATUS_OK) {
        return 2;
    }
    char *json = NULL;
    spider_websum_to_json(s, &json);
    printf("%s\n", json);
    spider_string_free(json);
    spider_websum_free(s);
    spider_tangle_free(t);

    SpiderTangle *bad = NULL;
    SpiderStatus st = spider_tangle_parse("word: +\nx+ 1\n", &bad);
    if (st != SPIDER_STATUS_INVALID_INPUT || bad != NULL || spider_last_error() == NULL) {
        return 3;
    }
    printf("%s\n", spider_last_error());
    return 0;
}
