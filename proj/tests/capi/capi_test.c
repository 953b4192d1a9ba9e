/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "specker/specker.h"

static int failures = 0;

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: CHECK(%s) failed: %s\n", __FILE__,     \
              __LINE__, #cond, specker_last_error());                \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static int text_is(const specker_element* e, const char* want) {
  char* s = NULL;
  int same;
  if (specker_element_to_text(e, &s) != SPECKER_OK) return 0;
  same = strcmp(s, want) == 0;
  if (!same) fprintf(stderr, "got '%s', expected '%s'\n", s, want);
  specker_string_free(s);
  return same;
}

static void test_elements(void) {
  specker_algebra* alg = NULL;
  specker_element *a = NULL, *b = NULL, *flat = NULL, *sum = NULL, *scaled = NULL, *back = NULL;
  specker_rep rep;
  specker_order order;
  uint64_t count = 0;
  char* json = NULL;

  CHECK(specker_algebra_from_json("{\"atoms\":[\"p\",\"q\"]}", &alg) == SPECKER_OK);
  CHECK(specker_algebra_element_count(alg, &count) == SPECKER_OK && count == 4);

  CHECK(specker_element_from_expr(alg, "x_p*x_p + 3*x_q - x_p", &a) == SPECKER_OK);
  CHECK(text_is(a, "3·[q] + 0·[p]"));
  CHECK(specker_element_rep(a, &rep) == SPECKER_OK && rep == SPECKER_REP_PERP);

  CHECK(specker_element_convert(a, SPECKER_REP_FLAT, &flat) == SPECKER_OK);
  CHECK(text_is(flat, "[1 | 0] [q | 3]"));
  CHECK(specker_element_compare(a, flat, &order) == SPECKER_OK && order == SPECKER_ORDER_EQUAL);

  CHECK(specker_element_from_expr(alg, "x_p", &b) == SPECKER_OK);
  CHECK(specker_element_binary(SPECKER_OP_ADD, flat, b, &sum) == SPECKER_OK);
  CHECK(specker_element_rep(sum, &rep) == SPECKER_OK && rep == SPECKER_REP_FLAT);
  CHECK(specker_element_compare(a, sum, &order) == SPECKER_OK && order == SPECKER_ORDER_LEQ);
  CHECK(specker_element_compare(b, a, &order) == SPECKER_OK && order == SPECKER_ORDER_INCOMPARABLE);

  CHECK(specker_element_scalar_mul("-2", a, &scaled) == SPECKER_OK);
  CHECK(text_is(scaled, "0·[p] + -6·[q]"));

  CHECK(specker_element_to_json(flat, &json) == SPECKER_OK);
  CHECK(specker_element_from_json(alg, json, &back) == SPECKER_OK);
  CHECK(specker_element_compare(back, flat, &order) == SPECKER_OK && order == SPECKER_ORDER_EQUAL);
  specker_string_free(json);

  specker_element_free(back);
  specker_element_free(scaled);
  specker_element_free(sum);
  specker_element_free(b);
  specker_element_free(flat);
  specker_element_free(a);
  specker_algebra_free(alg);
}

static void test_errors(void) {
  specker_algebra *alg = NULL, *other = NULL;
  specker_element *e = NULL, *f = NULL, *out = NULL;

  CHECK(specker_algebra_from_json("{\"atoms\":", &alg) == SPECKER_ERR_PARSE);
  CHECK(alg == NULL);
  CHECK(strlen(specker_last_error()) > 0);
  CHECK(specker_algebra_from_json(NULL, &alg) == SPECKER_ERR_NULL_ARGUMENT);

  CHECK(specker_algebra_from_json("{\"atoms\":[\"p\",\"q\"]}", &alg) == SPECKER_OK);
  CHECK(specker_algebra_from_json("{\"atoms\":[\"x\"]}", &other) == SPECKER_OK);
  CHECK(specker_element_from_expr(alg, "x_p +", &e) == SPECKER_ERR_PARSE);
  CHECK(specker_element_from_expr(alg, "x_r", &e) == SPECKER_ERR_UNBOUND_NAME);
  CHECK(specker_element_from_expr(alg, "x_p", &e) == SPECKER_OK);
  CHECK(specker_element_from_expr(other, "x_x", &f) == SPECKER_OK);
  CHECK(specker_element_binary(SPECKER_OP_MEET, e, f, &out) == SPECKER_ERR_ALGEBRA_MISMATCH);
  CHECK(out == NULL);
  CHECK(strcmp(specker_status_name(SPECKER_ERR_NOT_DEVRIES), "not_devries") == 0);

  specker_element_free(f);
  specker_element_free(e);
  specker_algebra_free(other);
  specker_algebra_free(alg);
  /* Freeing NULL is a no-op. */
  specker_algebra_free(NULL);
  specker_element_free(NULL);
}

static void test_proximity(void) {
  specker_algebra* alg = NULL;
  specker_proximity *leq = NULL, *broken = NULL;
  specker_report* report = NULL;
  specker_element *s = NULL, *t = NULL;
  specker_sample_config config = specker_default_config();
  size_t count = 0;
  char* json = NULL;
  int flag = 0;

  config.samples = 40;
  CHECK(specker_algebra_from_json("{\"atoms\":[\"p\",\"q\"]}", &alg) == SPECKER_OK);
  CHECK(specker_proximity_from_json(alg, "leq", &leq) == SPECKER_OK);
  CHECK(specker_proximity_is_devries(leq, &flag) == SPECKER_OK && flag == 1);

  CHECK(specker_proximity_check(leq, &report) == SPECKER_OK && specker_report_passed(report));
  CHECK(specker_report_summary(report, &json) == SPECKER_OK && strcmp(json, "PASS (7 axioms)") == 0);
  specker_string_free(json);
  specker_report_free(report);

  CHECK(specker_proximity_sample(leq, config, &report) == SPECKER_OK && specker_report_passed(report));
  specker_report_free(report);

  CHECK(specker_proximity_enumerate(alg, &count, &json) == SPECKER_OK && count == 1);
  specker_string_free(json);

  CHECK(specker_proximity_from_json(alg, "{\"pairs\":[[\"0\",\"0\"],[\"0\",\"1\"],[\"1\",\"1\"]]}", &broken) ==
        SPECKER_OK);
  CHECK(specker_proximity_is_devries(broken, &flag) == SPECKER_OK && flag == 0);
  CHECK(specker_proximity_check(broken, &report) == SPECKER_OK && !specker_report_passed(report));
  specker_report_free(report);
  CHECK(specker_equivalence_check(broken, config, &report) == SPECKER_ERR_NOT_DEVRIES);

  CHECK(specker_element_from_json(alg,
                                  "{\"rep\":\"flat\",\"steps\":[{\"upto\":\"0\",\"idem\":\"1\"},"
                                  "{\"upto\":\"2\",\"idem\":\"p\"}]}",
                                  &s) == SPECKER_OK);
  CHECK(specker_element_from_expr(alg, "1 + 2*x_p + x_q", &t) == SPECKER_OK);
  CHECK(specker_proximity_lift_check(leq, s, t, &flag) == SPECKER_OK && flag == 1);
  CHECK(specker_proximity_lift_check(leq, t, s, &flag) == SPECKER_OK && flag == 0);

  CHECK(specker_equivalence_check(leq, config, &report) == SPECKER_OK && specker_report_passed(report));
  specker_report_free(report);

  specker_element_free(t);
  specker_element_free(s);
  specker_proximity_free(broken);
  specker_proximity_free(leq);
  specker_algebra_free(alg);
}

static void test_morphisms(void) {
  const char* proj =
      "{\"source\":{\"atoms\":[\"a\",\"b\",\"c\"]},\"target\":{\"atoms\":[\"p\",\"q\"]},"
      "\"map\":{\"0\":\"0\",\"a\":\"p\",\"b\":\"q\",\"c\":\"0\",\"[a,b]\":\"1\",\"[a,c]\":\"p\","
      "\"[b,c]\":\"q\",\"1\":\"1\"}}";
  const char* swap =
      "{\"source\":{\"atoms\":[\"p\",\"q\"]},\"target\":{\"atoms\":[\"p\",\"q\"]},"
      "\"map\":{\"0\":\"0\",\"p\":\"q\",\"q\":\"p\",\"1\":\"1\"}}";
  specker_morphism *m = NULL, *n = NULL, *composite = NULL;
  specker_algebra* source = NULL;
  specker_element *e = NULL, *image = NULL;
  specker_report* report = NULL;
  specker_sample_config config = specker_default_config();
  char* json = NULL;

  config.samples = 30;
  CHECK(specker_morphism_from_json(proj, &m) == SPECKER_OK);
  CHECK(specker_morphism_from_json(swap, &n) == SPECKER_OK);
  CHECK(specker_morphism_check(m, &report) == SPECKER_OK && specker_report_passed(report));
  specker_report_free(report);
  CHECK(specker_morphism_check_lift(m, config, &report) == SPECKER_OK && specker_report_passed(report));
  specker_report_free(report);
  CHECK(specker_morphism_naturality(m, config, &report) == SPECKER_OK && specker_report_passed(report));
  specker_report_free(report);

  CHECK(specker_morphism_source(m, &source) == SPECKER_OK);
  CHECK(specker_element_from_expr(source, "2*x_a + x_c", &e) == SPECKER_OK);
  CHECK(specker_morphism_apply(m, e, &image) == SPECKER_OK);
  CHECK(text_is(image, "[1 | 0] [p | 2]"));

  CHECK(specker_morphism_compose(n, m, &composite) == SPECKER_OK);
  CHECK(specker_morphism_to_json(composite, &json) == SPECKER_OK && strstr(json, "\"[a]\":\"[q]\"") != NULL);
  specker_string_free(json);
  CHECK(specker_morphism_compose(m, n, &composite) == SPECKER_ERR_ALGEBRA_MISMATCH);

  specker_element_free(image);
  specker_element_free(e);
  specker_algebra_free(source);
  specker_morphism_free(composite);
  specker_morphism_free(n);
  specker_morphism_free(m);
}

static void test_oracle(void) {
  specker_algebra* alg = NULL;
  specker_sample_config config = specker_default_config();
  char* jsonl = NULL;
  int passed = 0;
  size_t lines = 0;
  const char* c;

  config.samples = 5;
  config.seed = 11;
  CHECK(specker_algebra_from_json("{\"atoms\":[\"a\",\"b\",\"c\"]}", &alg) == SPECKER_OK);
  CHECK(specker_oracle_diff(alg, config, &passed, &jsonl) == SPECKER_OK && passed == 1);
  for (c = jsonl; c && *c; ++c) lines += *c == '\n';
  CHECK(lines == 100);
  specker_string_free(jsonl);
  specker_algebra_free(alg);
}

int main(void) {
  CHECK(strlen(specker_version()) > 0);
  test_elements();
  test_errors();
  test_proximity();
  test_morphisms();
  test_oracle();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return EXIT_FAILURE;
  }
  puts("C API checks passed");
  return EXIT_SUCCESS;
}
