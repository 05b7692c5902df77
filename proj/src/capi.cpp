#include "onecount/onecount.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>

#include "core/expr.hpp"
#include "core/factor.hpp"
#include "core/palgo.hpp"
#include "core/powerdigits.hpp"
#include "core/tables.hpp"

using namespace onecount;

struct onec_table {
  ComplexityTable impl;
};
struct onec_expr {
  ExprPtr impl;
};
struct onec_prime_set {
  PrimeSet impl;
};
struct onec_stream {
  PowerDigitStream impl;
};

namespace {

onec_status to_status(errc code) {
  switch (code) {
    case errc::ok: return ONEC_OK;
    case errc::invalid_argument: return ONEC_ERR_INVALID_ARGUMENT;
    case errc::out_of_range: return ONEC_ERR_OUT_OF_RANGE;
    case errc::not_found: return ONEC_ERR_NOT_FOUND;
    case errc::overflow: return ONEC_ERR_OVERFLOW;
    case errc::nonpositive_subterm: return ONEC_ERR_NONPOSITIVE_SUBTERM;
    case errc::parse_error: return ONEC_ERR_PARSE;
    case errc::io_error: return ONEC_ERR_IO;
    case errc::format_error: return ONEC_ERR_FORMAT;
    case errc::checksum_mismatch: return ONEC_ERR_CHECKSUM;
    case errc::limit_too_large: return ONEC_ERR_LIMIT_TOO_LARGE;
    case errc::witness_not_found: return ONEC_ERR_WITNESS_NOT_FOUND;
    case errc::out_of_budget: return ONEC_ERR_OUT_OF_BUDGET;
    case errc::internal: return ONEC_ERR_UNKNOWN;
  }
  return ONEC_ERR_UNKNOWN;
}

template <typename Fn>
onec_status guarded(Fn&& fn) {
  try {
    fn();
    return ONEC_OK;
  } catch (const Error& e) {
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    return ONEC_ERR_NOMEM;
  } catch (...) {
    return ONEC_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* onec_version(void) { return "1.0.0"; }

const char* onec_status_str(onec_status status) {
  switch (status) {
    case ONEC_OK: return "ok";
    case ONEC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ONEC_ERR_OUT_OF_RANGE: return "out of range";
    case ONEC_ERR_NOT_FOUND: return "not found";
    case ONEC_ERR_OVERFLOW: return "overflow";
    case ONEC_ERR_NONPOSITIVE_SUBTERM: return "non-positive subterm";
    case ONEC_ERR_PARSE: return "parse error";
    case ONEC_ERR_IO: return "I/O error";
    case ONEC_ERR_FORMAT: return "format error";
    case ONEC_ERR_CHECKSUM: return "checksum mismatch";
    case ONEC_ERR_LIMIT_TOO_LARGE: return "limit too large";
    case ONEC_ERR_WITNESS_NOT_FOUND: return "witness not found";
    case ONEC_ERR_OUT_OF_BUDGET: return "out of budget";
    case ONEC_ERR_NOMEM: return "out of memory";
    case ONEC_ERR_UNKNOWN: return "unknown error";
  }
  return "unknown error";
}

void onec_string_free(char* s) { std::free(s); }

/* ---- expressions -------------------------------------------------------- */

onec_status onec_expr_parse(const char* text, onec_expr** out) {
  if (!text || !out) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new onec_expr{Expr::parse(text)}; });
}

void onec_expr_free(onec_expr* e) { delete e; }

onec_status onec_expr_evaluate(const onec_expr* e, uint64_t* value) {
  if (!e || !value) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *value = e->impl->evaluate(); });
}

uint64_t onec_expr_ones(const onec_expr* e) { return e ? e->impl->count_ones() : 0; }

int onec_expr_valid(const onec_expr* e, onec_basis basis) {
  if (!e || basis > ONEC_BASIS_PLUS_TIMES_MINUS) return 0;
  return e->impl->valid((Basis)basis) ? 1 : 0;
}

onec_status onec_expr_render(const onec_expr* e, char** text) {
  if (!e || !text) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *text = dup_string(e->impl->render()); });
}

/* ---- complexity tables --------------------------------------------------- */

onec_status onec_table_build(uint64_t limit, onec_basis basis, onec_table** out) {
  if (!out || basis > ONEC_BASIS_PLUS_TIMES_MINUS) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new onec_table{ComplexityTable::build(limit, (Basis)basis)}; });
}

void onec_table_free(onec_table* t) { delete t; }

onec_status onec_table_save(const onec_table* t, const char* path) {
  if (!t || !path) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { t->impl.save(path); });
}

onec_status onec_table_load(const char* path, onec_table** out) {
  if (!path || !out) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new onec_table{ComplexityTable::load(path)}; });
}

uint64_t onec_table_limit(const onec_table* t) { return t ? t->impl.limit() : 0; }

onec_basis onec_table_basis(const onec_table* t) {
  return t ? (onec_basis)t->impl.basis() : ONEC_BASIS_PLUS_TIMES;
}

onec_status onec_table_complexity(const onec_table* t, uint64_t n, uint32_t* ones) {
  if (!t || !ones) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *ones = t->impl.complexity(n); });
}

onec_status onec_table_log_complexity(const onec_table* t, uint64_t n, double* value) {
  if (!t || !value) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *value = t->impl.log_complexity(n); });
}

onec_status onec_table_shortest_expr(const onec_table* t, uint64_t n, onec_expr** out) {
  if (!t || !out) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new onec_expr{t->impl.shortest_expression(n)}; });
}

uint64_t onec_selfridge_e(uint32_t k) { return selfridge_e(k); }

onec_status onec_table_e_kth(const onec_table* t, uint32_t k, uint32_t j, uint64_t* out) {
  if (!t || !out) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = t->impl.e_kth(k, j); });
}

onec_status onec_table_e_min(const onec_table* t, uint32_t k, uint64_t* out) {
  if (!t || !out) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = t->impl.e_min(k); });
}

onec_status onec_table_champions(const onec_table* t, uint64_t bound, uint32_t top,
                                 onec_champion* records, uint32_t* count) {
  if (!t || !records || !count) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto rows = t->impl.champions(bound, top);
    *count = (uint32_t)rows.size();
    for (size_t i = 0; i < rows.size(); ++i)
      records[i] = {rows[i].n, rows[i].ones, rows[i].log_complexity};
  });
}

onec_status onec_table_compression_points(const onec_table* t, uint64_t p, uint32_t n_max,
                                          uint32_t* exponents, uint32_t cap, uint32_t* count) {
  if (!t || !exponents || !count) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto points = compression_points(p, n_max, t->impl);
    if (points.size() > cap) fail(errc::invalid_argument, "output buffer too small");
    *count = (uint32_t)points.size();
    for (size_t i = 0; i < points.size(); ++i) exponents[i] = points[i];
  });
}

onec_status onec_table_power_limit_check(const onec_table* t, uint64_t base, onec_power_row* rows,
                                         uint32_t cap, uint32_t* count, int* subadditive) {
  if (!t || !rows || !count || !subadditive) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto rep = power_limit_check(base, t->impl);
    if (rep.rows.size() > cap) fail(errc::invalid_argument, "output buffer too small");
    *count = (uint32_t)rep.rows.size();
    *subadditive = rep.subadditive ? 1 : 0;
    for (size_t i = 0; i < rep.rows.size(); ++i)
      rows[i] = {rep.rows[i].exponent, rep.rows[i].ones, rep.rows[i].log_complexity,
                 rep.rows[i].running_min};
  });
}

/* ---- prime-set reductions ------------------------------------------------ */

onec_status onec_prime_set_create(const uint64_t* primes, uint32_t count, onec_prime_set** out) {
  if (!primes || count == 0 || !out) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new onec_prime_set{PrimeSet::create({primes, primes + count})};
  });
}

void onec_prime_set_free(onec_prime_set* ps) { delete ps; }

uint64_t onec_prime_set_q(const onec_prime_set* ps) { return ps ? ps->impl.q() : 0; }

uint32_t onec_prime_set_size(const onec_prime_set* ps) {
  return ps ? (uint32_t)ps->impl.primes().size() : 0;
}

onec_status onec_prime_set_member_ones(const onec_prime_set* ps, uint64_t p, uint32_t* ones) {
  if (!ps || !ones) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *ones = ps->impl.member_ones(p); });
}

onec_status onec_prime_set_complexity(const onec_prime_set* ps, uint64_t n, uint32_t* ones,
                                      onec_expr** expr_out) {
  if (!ps || !ones) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    if (expr_out) {
      auto result = ps->impl.complexity(n);
      *ones = result.ones;
      *expr_out = new onec_expr{std::move(result.expr)};
    } else {
      *ones = ps->impl.ones(n);
    }
  });
}

onec_status onec_prime_set_defect(const onec_prime_set* ps, uint64_t n, uint64_t p_star,
                                  double* defect) {
  if (!ps || !defect) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *defect = ps->impl.defect(n, p_star); });
}

onec_status onec_prime_set_scan(const onec_prime_set* ps, uint64_t from, uint64_t to,
                                onec_scan_cb cb, void* ctx) {
  if (!ps || !cb) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    ps->impl.scan(from, to, [&](uint64_t n, uint32_t ones) {
      double lc = n > 1 ? (double)ones / (std::log((double)n) / std::log(3.0)) : 0.0;
      cb(ctx, n, ones, lc);
    });
  });
}

onec_status onec_prime_set_check_upper_bound(const onec_prime_set* ps, uint64_t from, uint64_t to,
                                             onec_bound_report* report) {
  if (!ps || !report) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    BoundReport rep = ps->impl.check_upper_bound(from, to);
    *report = {rep.hypothesis_bound, rep.weak_bound,        rep.hypothesis_violations,
               rep.weak_violations,  rep.max_log_complexity, rep.max_n};
  });
}

onec_status onec_prime_set_check_partly(const onec_prime_set* ps, onec_partly_row* rows,
                                        uint32_t cap, uint32_t* count) {
  if (!ps || !count || (cap > 0 && !rows)) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto result = ps->impl.check_partly_condition();
    if (result.size() > cap) fail(errc::invalid_argument, "output buffer too small");
    *count = (uint32_t)result.size();
    for (size_t i = 0; i < result.size(); ++i)
      rows[i] = {result[i].p, result[i].left, result[i].right, result[i].pass ? 1 : 0};
  });
}

onec_status onec_prime_set_power_pair_spectrum(const onec_prime_set* ps, uint64_t p, uint64_t q,
                                               uint32_t a_max, uint32_t b_max,
                                               uint64_t verify_limit, onec_spectrum_cb cb,
                                               void* ctx, uint64_t* verified,
                                               uint64_t* mismatches) {
  if (!ps) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto rep = ps->impl.power_pair_spectrum(
        p, q, a_max, b_max, verify_limit, [&](const SpectrumPoint& point) {
          if (cb) cb(ctx, point.a, point.b, point.n_decimal.c_str(), point.ones,
                     point.log_complexity);
        });
    if (verified) *verified = rep.verified;
    if (mismatches) *mismatches = rep.mismatches;
  });
}

onec_status onec_prime_set_dense_point(const onec_prime_set* ps, uint32_t m, uint32_t l,
                                       char** n_decimal, uint64_t* n0, uint64_t* k,
                                       uint64_t* predicted_ones, int* traced,
                                       uint64_t* traced_ones) {
  if (!ps || !n_decimal || !predicted_ones) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    DensePoint point = ps->impl.dense_point(m, l);
    *n_decimal = dup_string(point.n_decimal);
    if (n0) *n0 = point.n0;
    if (k) *k = point.k;
    *predicted_ones = point.predicted_ones;
    if (traced) *traced = point.traced_ones.has_value() ? 1 : 0;
    if (traced_ones) *traced_ones = point.traced_ones.value_or(0);
  });
}

/* ---- power digit streams ------------------------------------------------- */

onec_status onec_stream_create(uint64_t p, uint32_t q, uint64_t max_digits, onec_stream** out) {
  if (!out) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new onec_stream{max_digits ? PowerDigitStream(p, q, max_digits)
                                      : PowerDigitStream(p, q)};
  });
}

void onec_stream_free(onec_stream* s) { delete s; }

onec_status onec_stream_advance(onec_stream* s) {
  if (!s) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { s->impl.advance(); });
}

uint64_t onec_stream_exponent(const onec_stream* s) { return s ? s->impl.exponent() : 0; }

uint64_t onec_stream_digit_count(const onec_stream* s) {
  return s ? s->impl.digits().size() : 0;
}

const uint8_t* onec_stream_digits(const onec_stream* s) {
  return s ? s->impl.digits().data() : nullptr;
}

uint64_t onec_stream_digit_sum(const onec_stream* s) { return s ? s->impl.digit_sum() : 0; }

onec_status onec_stream_stats(const onec_stream* s, int* has_s3, double* s3, int* has_sigma,
                              double* sigma) {
  if (!s || !has_s3 || !s3 || !has_sigma || !sigma) return ONEC_ERR_INVALID_ARGUMENT;
  auto v3 = s->impl.s3();
  auto vs = s->impl.sigma();
  *has_s3 = v3.has_value() ? 1 : 0;
  *s3 = v3.value_or(0.0);
  *has_sigma = vs.has_value() ? 1 : 0;
  *sigma = vs.value_or(0.0);
  return ONEC_OK;
}

onec_status onec_horner_expr(uint64_t n, uint32_t q, onec_expr** out) {
  if (!out) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new onec_expr{horner_expression(n, q)}; });
}

onec_status onec_histogram(const double* values, uint64_t count, double lo, double hi,
                           double width, uint64_t* bins, uint64_t bin_cap, uint64_t* bin_count,
                           uint64_t* underflow, uint64_t* overflow) {
  if ((!values && count > 0) || !bins || !bin_count) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    Histogram h = histogram({values, (size_t)count}, width, lo, hi);
    if (h.counts.size() > bin_cap) fail(errc::invalid_argument, "output buffer too small");
    *bin_count = h.counts.size();
    for (size_t i = 0; i < h.counts.size(); ++i) bins[i] = h.counts[i];
    if (underflow) *underflow = h.underflow;
    if (overflow) *overflow = h.overflow;
  });
}

/* ---- factorization ------------------------------------------------------- */

onec_status onec_factorize(uint64_t n, uint64_t* factors, uint32_t cap, uint32_t* count) {
  if (!count || (cap > 0 && !factors)) return ONEC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto fs = factorize(n);
    if (fs.size() > cap) fail(errc::invalid_argument, "output buffer too small");
    *count = (uint32_t)fs.size();
    for (size_t i = 0; i < fs.size(); ++i) factors[i] = fs[i];
  });
}

int onec_is_prime(uint64_t n) { return is_prime(n) ? 1 : 0; }

}  // extern "C"
