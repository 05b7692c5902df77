// Exercises the shared-library surface end to end: handles, error codes,
// out-parameters and string ownership.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "onecount/onecount.h"

namespace {

struct Table {
  onec_table* t = nullptr;
  ~Table() { onec_table_free(t); }
};

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(onec_version() != nullptr);
  CHECK(std::strcmp(onec_status_str(ONEC_OK), "ok") == 0);
  CHECK(onec_status_str(ONEC_ERR_CHECKSUM) != nullptr);
}

TEST_CASE("expression lifecycle") {
  onec_expr* e = nullptr;
  REQUIRE(onec_expr_parse("((1+1)*(1+(1+1)))", &e) == ONEC_OK);
  uint64_t value = 0;
  CHECK(onec_expr_evaluate(e, &value) == ONEC_OK);
  CHECK(value == 6);
  CHECK(onec_expr_ones(e) == 5);
  CHECK(onec_expr_valid(e, ONEC_BASIS_PLUS_TIMES) == 1);
  char* text = nullptr;
  CHECK(onec_expr_render(e, &text) == ONEC_OK);
  CHECK(std::string(text) == "((1+1)*(1+(1+1)))");
  onec_string_free(text);
  onec_expr_free(e);

  CHECK(onec_expr_parse("((1+1)", &e) == ONEC_ERR_PARSE);
  CHECK(onec_expr_parse(nullptr, &e) == ONEC_ERR_INVALID_ARGUMENT);

  REQUIRE(onec_expr_parse("(1-(1+1))", &e) == ONEC_OK);
  CHECK(onec_expr_evaluate(e, &value) == ONEC_ERR_NONPOSITIVE_SUBTERM);
  CHECK(onec_expr_valid(e, ONEC_BASIS_PLUS_TIMES_MINUS) == 0);
  onec_expr_free(e);
}

TEST_CASE("table build, query, persistence") {
  Table t;
  REQUIRE(onec_table_build(3000, ONEC_BASIS_PLUS_TIMES_MINUS, &t.t) == ONEC_OK);
  CHECK(onec_table_limit(t.t) == 3000);
  CHECK(onec_table_basis(t.t) == ONEC_BASIS_PLUS_TIMES_MINUS);

  uint32_t ones = 0;
  CHECK(onec_table_complexity(t.t, 23, &ones) == ONEC_OK);
  CHECK(ones == 10);
  CHECK(onec_table_complexity(t.t, 0, &ones) == ONEC_ERR_OUT_OF_RANGE);
  CHECK(onec_table_complexity(t.t, 3001, &ones) == ONEC_ERR_OUT_OF_RANGE);

  double lc = 0;
  CHECK(onec_table_log_complexity(t.t, 11, &lc) == ONEC_OK);
  CHECK(lc == doctest::Approx(3.665).epsilon(0.001));
  CHECK(onec_table_log_complexity(t.t, 1, &lc) == ONEC_ERR_OUT_OF_RANGE);

  onec_expr* e = nullptr;
  REQUIRE(onec_table_shortest_expr(t.t, 23, &e) == ONEC_OK);
  uint64_t value = 0;
  CHECK(onec_expr_evaluate(e, &value) == ONEC_OK);
  CHECK(value == 23);
  CHECK(onec_expr_ones(e) == 10);
  onec_expr_free(e);

  CHECK(onec_selfridge_e(8) == 18);
  uint64_t m = 0;
  CHECK(onec_table_e_kth(t.t, 8, 1, &m) == ONEC_OK);
  CHECK(m == 18);
  CHECK(onec_table_e_kth(t.t, 8, 2, &m) == ONEC_OK);
  CHECK(m == 16);
  CHECK(onec_table_e_kth(t.t, 60, 1, &m) == ONEC_ERR_OUT_OF_RANGE);
  CHECK(onec_table_e_min(t.t, 22, &m) == ONEC_OK);
  CHECK(m == 787);
  CHECK(onec_table_e_min(t.t, 99, &m) == ONEC_ERR_NOT_FOUND);

  onec_champion records[3];
  uint32_t count = 0;
  CHECK(onec_table_champions(t.t, 3000, 3, records, &count) == ONEC_OK);
  REQUIRE(count == 3);
  CHECK(records[0].n == 11);
  CHECK(records[1].n == 67);
  CHECK(records[2].n == 787);

  auto path = (std::filesystem::temp_directory_path() / "capi_table.ict").string();
  CHECK(onec_table_save(t.t, path.c_str()) == ONEC_OK);
  onec_table* back = nullptr;
  REQUIRE(onec_table_load(path.c_str(), &back) == ONEC_OK);
  CHECK(onec_table_limit(back) == 3000);
  CHECK(onec_table_complexity(back, 787, &ones) == ONEC_OK);
  CHECK(ones == 22);
  onec_table_free(back);
  std::filesystem::remove(path);
  CHECK(onec_table_load("/does/not/exist.ict", &back) == ONEC_ERR_IO);
}

TEST_CASE("compression points and power rows") {
  Table t;
  REQUIRE(onec_table_build(80000, ONEC_BASIS_PLUS_TIMES, &t.t) == ONEC_OK);
  uint32_t exps[8];
  uint32_t count = 0;
  CHECK(onec_table_compression_points(t.t, 5, 7, exps, 8, &count) == ONEC_OK);
  REQUIRE(count == 1);
  CHECK(exps[0] == 6);

  onec_power_row rows[32];
  uint32_t n_rows = 0;
  int subadditive = 0;
  CHECK(onec_table_power_limit_check(t.t, 3, rows, 32, &n_rows, &subadditive) == ONEC_OK);
  CHECK(subadditive == 1);
  CHECK(n_rows == 10);  // 3^10 < 80000 < 3^11
  CHECK(rows[9].running_min == doctest::Approx(3.0));
}

TEST_CASE("prime set surface") {
  uint64_t primes[2] = {5, 11};
  onec_prime_set* ps = nullptr;
  REQUIRE(onec_prime_set_create(primes, 2, &ps) == ONEC_OK);
  CHECK(onec_prime_set_q(ps) == 5);
  CHECK(onec_prime_set_size(ps) == 2);
  uint32_t ones = 0;
  CHECK(onec_prime_set_member_ones(ps, 11, &ones) == ONEC_OK);
  CHECK(ones == 8);
  CHECK(onec_prime_set_member_ones(ps, 7, &ones) == ONEC_ERR_INVALID_ARGUMENT);

  CHECK(onec_prime_set_complexity(ps, 157, &ones, nullptr) == ONEC_OK);
  CHECK(ones == 19);
  onec_expr* e = nullptr;
  CHECK(onec_prime_set_complexity(ps, 77, &ones, &e) == ONEC_OK);
  CHECK(ones == 15);
  uint64_t value = 0;
  CHECK(onec_expr_evaluate(e, &value) == ONEC_OK);
  CHECK(value == 77);
  onec_expr_free(e);

  double d = 0;
  CHECK(onec_prime_set_defect(ps, 1, 5, &d) == ONEC_OK);
  CHECK(d == doctest::Approx(1.0));

  struct Ctx {
    uint64_t rows = 0;
  } ctx;
  CHECK(onec_prime_set_scan(
            ps, 2, 1000,
            [](void* raw, uint64_t, uint32_t, double) { ((Ctx*)raw)->rows++; }, &ctx) ==
        ONEC_OK);
  CHECK(ctx.rows == 999);

  onec_bound_report rep;
  CHECK(onec_prime_set_check_upper_bound(ps, 2, 100000, &rep) == ONEC_OK);
  CHECK(rep.hypothesis_violations == 0);
  CHECK(rep.max_log_complexity > 3.0);

  char* n_text = nullptr;
  uint64_t n0 = 0, k = 0, predicted = 0, traced_ones = 0;
  int traced = 0;
  CHECK(onec_prime_set_dense_point(ps, 1, 1, &n_text, &n0, &k, &predicted, &traced,
                                   &traced_ones) == ONEC_OK);
  CHECK(std::string(n_text) == "2636718754");
  CHECK(n0 == 54);
  CHECK(k == 10);
  CHECK(traced == 1);
  CHECK(predicted == traced_ones);
  onec_string_free(n_text);
  onec_prime_set_free(ps);

  uint64_t bad[1] = {9};
  CHECK(onec_prime_set_create(bad, 1, &ps) == ONEC_ERR_INVALID_ARGUMENT);

  uint64_t pair[2] = {163, 167};
  REQUIRE(onec_prime_set_create(pair, 2, &ps) == ONEC_OK);
  onec_partly_row rows[1];
  uint32_t count = 0;
  CHECK(onec_prime_set_check_partly(ps, rows, 1, &count) == ONEC_OK);
  REQUIRE(count == 1);
  CHECK(rows[0].p == 167);
  CHECK(rows[0].pass == 0);
  CHECK(rows[0].left > 177.1);
  CHECK(rows[0].left < 177.2);

  uint64_t verified = 0, mismatches = 0;
  CHECK(onec_prime_set_power_pair_spectrum(ps, 163, 167, 2, 2, 1000000, nullptr, nullptr,
                                           &verified, &mismatches) == ONEC_OK);
  CHECK(mismatches == 0);
  onec_prime_set_free(ps);
}

TEST_CASE("digit stream surface") {
  onec_stream* s = nullptr;
  REQUIRE(onec_stream_create(2, 3, 0, &s) == ONEC_OK);
  for (int i = 0; i < 5; ++i) CHECK(onec_stream_advance(s) == ONEC_OK);
  CHECK(onec_stream_exponent(s) == 5);
  CHECK(onec_stream_digit_count(s) == 4);
  const uint8_t* digits = onec_stream_digits(s);
  uint8_t expect[4] = {2, 1, 0, 1};
  for (int i = 0; i < 4; ++i) CHECK(digits[i] == expect[i]);
  CHECK(onec_stream_digit_sum(s) == 4);
  int has_s3 = 0, has_sigma = 0;
  double s3 = 0, sigma = 0;
  CHECK(onec_stream_stats(s, &has_s3, &s3, &has_sigma, &sigma) == ONEC_OK);
  CHECK(has_s3 == 1);
  CHECK(has_sigma == 1);
  onec_stream_free(s);
  CHECK(onec_stream_create(2, 1, 0, &s) == ONEC_ERR_INVALID_ARGUMENT);

  onec_expr* e = nullptr;
  REQUIRE(onec_horner_expr(32, 3, &e) == ONEC_OK);
  uint64_t value = 0;
  CHECK(onec_expr_evaluate(e, &value) == ONEC_OK);
  CHECK(value == 32);
  CHECK(onec_expr_ones(e) <= 13);
  onec_expr_free(e);
}

TEST_CASE("histogram and factorization surface") {
  double values[5] = {-0.1, 0.1, 0.2, 3.0, 9.0};
  uint64_t bins[32];
  uint64_t bin_count = 0, under = 0, over = 0;
  CHECK(onec_histogram(values, 5, -4.0, 4.0, 0.25, bins, 32, &bin_count, &under, &over) ==
        ONEC_OK);
  CHECK(bin_count == 32);
  CHECK(under == 0);
  CHECK(over == 1);

  uint64_t factors[16];
  uint32_t count = 0;
  CHECK(onec_factorize(786, factors, 16, &count) == ONEC_OK);
  REQUIRE(count == 3);
  CHECK(factors[0] == 2);
  CHECK(factors[1] == 3);
  CHECK(factors[2] == 131);
  CHECK(onec_factorize(1, factors, 16, &count) == ONEC_OK);
  CHECK(count == 0);
  CHECK(onec_is_prime(2767) == 1);
  CHECK(onec_is_prime(2765) == 0);
}
