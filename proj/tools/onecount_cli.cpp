// onecount command-line front end. Talks to the library exclusively through
// the C API in onecount/onecount.h.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "onecount/onecount.h"

namespace {

using nlohmann::json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(onec_status st, const std::string& what) {
  if (st != ONEC_OK) throw CliError(what + ": " + onec_status_str(st));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// One table file per basis under --table or $ONECOUNT_TABLE_DIR (default ".").
std::string table_path(const std::string& explicit_path, bool minus) {
  if (!explicit_path.empty()) return explicit_path;
  const char* dir = std::getenv("ONECOUNT_TABLE_DIR");
  std::string base = dir && *dir ? dir : ".";
  return base + "/" + (minus ? "minus" : "plus") + ".ict";
}

struct TableHandle {
  onec_table* t = nullptr;
  ~TableHandle() { onec_table_free(t); }
};

struct ExprHandle {
  onec_expr* e = nullptr;
  ~ExprHandle() { onec_expr_free(e); }
};

struct PrimeSetHandle {
  onec_prime_set* ps = nullptr;
  ~PrimeSetHandle() { onec_prime_set_free(ps); }
};

struct StreamHandle {
  onec_stream* s = nullptr;
  ~StreamHandle() { onec_stream_free(s); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { onec_string_free(s); }
};

void load_table(const std::string& explicit_path, bool minus, TableHandle& out) {
  std::string path = table_path(explicit_path, minus);
  onec_status st = onec_table_load(path.c_str(), &out.t);
  if (st != ONEC_OK)
    throw CliError("cannot load table " + path + " (" + onec_status_str(st) +
                   "); run `onecount build` first");
}

// Row-oriented output: CSV with an optional header, or a JSON array of
// objects mirroring the columns. Empty cells become nulls in JSON.
struct Cell {
  enum class Kind { empty, integer, real, text } kind = Kind::empty;
  uint64_t u = 0;
  double d = 0.0;
  std::string s;

  static Cell none() { return {}; }
  static Cell integer(uint64_t v) {
    Cell c;
    c.kind = Kind::integer;
    c.u = v;
    return c;
  }
  static Cell real(double v) {
    Cell c;
    c.kind = Kind::real;
    c.d = v;
    return c;
  }
  static Cell text(std::string v) {
    Cell c;
    c.kind = Kind::text;
    c.s = std::move(v);
    return c;
  }
};

class RowSink {
 public:
  RowSink(const std::string& out_path, bool as_json, std::vector<std::string> columns,
          bool csv_header)
      : json_(as_json), columns_(std::move(columns)) {
    if (!out_path.empty()) {
      file_.open(out_path, std::ios::trunc);
      if (!file_) throw CliError("cannot open " + out_path + " for writing");
      os_ = &file_;
    } else {
      os_ = &std::cout;
    }
    if (!json_ && csv_header) {
      for (size_t i = 0; i < columns_.size(); ++i) *os_ << (i ? "," : "") << columns_[i];
      *os_ << "\n";
    }
  }

  void row(const std::vector<Cell>& cells) {
    if (json_) {
      json obj;
      for (size_t i = 0; i < cells.size() && i < columns_.size(); ++i) {
        const Cell& c = cells[i];
        switch (c.kind) {
          case Cell::Kind::empty: obj[columns_[i]] = nullptr; break;
          case Cell::Kind::integer: obj[columns_[i]] = c.u; break;
          case Cell::Kind::real: obj[columns_[i]] = c.d; break;
          case Cell::Kind::text: obj[columns_[i]] = c.s; break;
        }
      }
      rows_.push_back(std::move(obj));
      return;
    }
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) *os_ << ",";
      const Cell& c = cells[i];
      switch (c.kind) {
        case Cell::Kind::empty: break;
        case Cell::Kind::integer: *os_ << c.u; break;
        case Cell::Kind::real: *os_ << format_double(c.d); break;
        case Cell::Kind::text: *os_ << c.s; break;
      }
    }
    *os_ << "\n";
  }

  ~RowSink() {
    if (json_) *os_ << rows_.dump(2) << "\n";
  }

 private:
  bool json_;
  std::vector<std::string> columns_;
  std::ofstream file_;
  std::ostream* os_ = nullptr;
  json rows_ = json::array();
};

std::vector<uint64_t> parse_primes(const std::string& spec) {
  std::vector<uint64_t> primes;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    std::string tok = spec.substr(pos, comma - pos);
    if (tok.empty()) throw CliError("empty entry in --primes");
    primes.push_back(std::strtoull(tok.c_str(), nullptr, 10));
    pos = comma + 1;
  }
  if (primes.empty()) throw CliError("--primes needs at least one prime");
  return primes;
}

void parse_range(const std::string& spec, uint64_t& from, uint64_t& to) {
  size_t dots = spec.find("..");
  if (dots == std::string::npos) throw CliError("--range expects A..B");
  from = std::strtoull(spec.substr(0, dots).c_str(), nullptr, 10);
  to = std::strtoull(spec.substr(dots + 2).c_str(), nullptr, 10);
  if (from < 1 || to < from) throw CliError("--range expects 1 <= A <= B");
}

void parse_bins(const std::string& spec, double& lo, double& hi, double& width) {
  size_t c1 = spec.find(':');
  size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
  if (c2 == std::string::npos) throw CliError("--bins expects lo:hi:width");
  lo = std::strtod(spec.substr(0, c1).c_str(), nullptr);
  hi = std::strtod(spec.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr);
  width = std::strtod(spec.substr(c2 + 1).c_str(), nullptr);
}

std::string factorization_string(uint64_t n) {
  if (n < 2) return "";
  std::vector<uint64_t> factors(64);
  uint32_t count = 0;
  check(onec_factorize(n, factors.data(), (uint32_t)factors.size(), &count), "factorize");
  std::string out;
  for (uint32_t i = 0; i < count;) {
    uint32_t j = i;
    while (j < count && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += "*";
    out += std::to_string(factors[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

PrimeSetHandle make_prime_set(const std::string& spec) {
  auto primes = parse_primes(spec);
  PrimeSetHandle h;
  check(onec_prime_set_create(primes.data(), (uint32_t)primes.size(), &h.ps), "prime set");
  return h;
}

double log3_of(uint64_t n) { return std::log((double)n) / std::log(3.0); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer complexity tables, witnesses, prime-set reductions and "
               "power digit statistics"};
  app.require_subcommand(1);

  std::string basis_name = "plus", table_file, out_path, format = "csv";
  std::string primes_spec, range_spec, bins_spec = "-4:4:0.25";
  uint64_t limit = 10000000, n_arg = 0, bound = 1000, p_arg = 2;
  uint32_t k_arg = 0, j_arg = 1, k_max = 0, top = 14, q_arg = 3;
  uint64_t n_max = 100, m_max = 1, l_max = 1;

  auto add_common = [&](CLI::App* cmd, bool with_table) {
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (with_table) {
      cmd->add_option("--basis", basis_name, "complexity basis")
          ->check(CLI::IsMember({"plus", "minus"}));
      cmd->add_option("--table", table_file, "table file (default <dir>/<basis>.ict)");
    }
  };

  auto* build = app.add_subcommand("build", "build a complexity table and save it");
  add_common(build, true);
  build->add_option("--limit", limit, "largest value in the table");

  auto* query = app.add_subcommand("query", "complexity and log-complexity of n");
  add_common(query, true);
  query->add_option("--n", n_arg, "value to look up")->required();

  auto* expr = app.add_subcommand("expr", "shortest expression of n");
  add_common(expr, true);
  expr->add_option("--n", n_arg, "value to reconstruct")->required();

  auto* etable = app.add_subcommand("e-table", "smallest value with complexity k");
  add_common(etable, true);
  etable->add_option("--k", k_arg, "single complexity value");
  etable->add_option("--k-max", k_max, "emit rows for k = 1..k-max");

  auto* extremal = app.add_subcommand("extremal", "j-th largest value with complexity <= k");
  add_common(extremal, true);
  extremal->add_option("--k", k_arg, "complexity value")->required();
  extremal->add_option("--j", j_arg, "rank (default 1)");

  auto* champions = app.add_subcommand("champions", "largest log-complexities up to a bound");
  add_common(champions, true);
  champions->add_option("--bound", bound, "scan 2..bound")->required();
  champions->add_option("--top", top, "number of records (default 14)");

  auto* palgo = app.add_subcommand("palgo", "prime-set reduction of a single value");
  add_common(palgo, false);
  palgo->add_option("--primes", primes_spec, "comma-separated primes")->required();
  palgo->add_option("--n", n_arg, "value to reduce")->required();

  auto* palgo_scan = app.add_subcommand("palgo-scan", "prime-set reduction over a range");
  add_common(palgo_scan, false);
  palgo_scan->add_option("--primes", primes_spec, "comma-separated primes")->required();
  palgo_scan->add_option("--range", range_spec, "A..B")->required();

  auto* dense = app.add_subcommand("dense-points", "forced-trace spectrum points");
  add_common(dense, false);
  dense->add_option("--primes", primes_spec, "comma-separated primes")->required();
  dense->add_option("--m-max", m_max, "m grid bound");
  dense->add_option("--l-max", l_max, "l grid bound");

  auto* digitsum = app.add_subcommand("digitsum", "base-q digit sums of p^n");
  add_common(digitsum, false);
  digitsum->add_option("--p", p_arg, "prime whose powers are expanded (default 2)");
  digitsum->add_option("--q", q_arg, "digit base (default 3)");
  digitsum->add_option("--n-max", n_max, "largest exponent")->required();

  auto* histo = app.add_subcommand("histogram", "histogram of the digit-sum statistic");
  add_common(histo, false);
  histo->add_option("--p", p_arg, "prime whose powers are expanded (default 2)");
  histo->add_option("--q", q_arg, "digit base (default 3)");
  histo->add_option("--n-max", n_max, "largest exponent")->required();
  histo->add_option("--bins", bins_spec, "lo:hi:width (default -4:4:0.25)");

  auto* compress = app.add_subcommand("compress", "compression points of prime powers");
  add_common(compress, true);
  compress->add_option("--p", p_arg, "prime base")->required();
  compress->add_option("--n-max", n_max, "largest exponent")->required();

  auto* neighbors = app.add_subcommand(
      "neighbors", "factorizations around the smallest value per complexity");
  add_common(neighbors, true);
  neighbors->add_option("--k-max", k_max, "emit rows for k = 1..k-max")->required();

  CLI11_PARSE(app, argc, argv);
  const bool minus = basis_name == "minus";
  const bool as_json = format == "json";

  try {
    if (build->parsed()) {
      TableHandle t;
      check(onec_table_build(limit, minus ? ONEC_BASIS_PLUS_TIMES_MINUS : ONEC_BASIS_PLUS_TIMES,
                             &t.t),
            "build");
      std::string path = table_path(table_file, minus);
      check(onec_table_save(t.t, path.c_str()), "save " + path);
      std::cerr << "wrote " << path << " (limit " << limit << ", basis " << basis_name << ")\n";

    } else if (query->parsed()) {
      TableHandle t;
      load_table(table_file, minus, t);
      uint32_t ones = 0;
      check(onec_table_complexity(t.t, n_arg, &ones), "query");
      RowSink sink(out_path, as_json, {"n", "ones", "log_complexity"}, false);
      Cell log_cell = Cell::none();
      if (n_arg > 1) {
        double lc = 0;
        check(onec_table_log_complexity(t.t, n_arg, &lc), "query");
        log_cell = Cell::real(lc);
      }
      sink.row({Cell::integer(n_arg), Cell::integer(ones), log_cell});

    } else if (expr->parsed()) {
      TableHandle t;
      load_table(table_file, minus, t);
      ExprHandle e;
      check(onec_table_shortest_expr(t.t, n_arg, &e.e), "expr");
      OwnedString text;
      check(onec_expr_render(e.e, &text.s), "render");
      RowSink sink(out_path, as_json, {"n", "ones", "expression"}, false);
      sink.row({Cell::integer(n_arg), Cell::integer(onec_expr_ones(e.e)), Cell::text(text.s)});

    } else if (etable->parsed()) {
      if ((k_arg == 0) == (k_max == 0)) throw CliError("pass exactly one of --k or --k-max");
      TableHandle t;
      load_table(table_file, minus, t);
      if (k_arg != 0) {
        uint64_t e = 0;
        check(onec_table_e_min(t.t, k_arg, &e), "e-table");
        RowSink sink(out_path, as_json, {"k", "e"}, false);
        if (as_json) {
          sink.row({Cell::integer(k_arg), Cell::integer(e)});
        } else {
          sink.row({Cell::integer(e)});
        }
      } else {
        RowSink sink(out_path, as_json, {"k", "e"}, true);
        for (uint32_t k = 1; k <= k_max; ++k) {
          uint64_t e = 0;
          check(onec_table_e_min(t.t, k, &e), "e-table at k=" + std::to_string(k));
          sink.row({Cell::integer(k), Cell::integer(e)});
        }
      }

    } else if (extremal->parsed()) {
      TableHandle t;
      load_table(table_file, minus, t);
      uint64_t e = 0;
      check(onec_table_e_kth(t.t, k_arg, j_arg, &e), "extremal");
      RowSink sink(out_path, as_json, {"k", "j", "value"}, false);
      if (as_json) {
        sink.row({Cell::integer(k_arg), Cell::integer(j_arg), Cell::integer(e)});
      } else {
        sink.row({Cell::integer(e)});
      }

    } else if (champions->parsed()) {
      TableHandle t;
      load_table(table_file, minus, t);
      std::vector<onec_champion> records(top);
      uint32_t count = 0;
      check(onec_table_champions(t.t, bound, top, records.data(), &count), "champions");
      RowSink sink(out_path, as_json, {"n", "ones", "log_complexity"}, true);
      for (uint32_t i = 0; i < count; ++i)
        sink.row({Cell::integer(records[i].n), Cell::integer(records[i].ones),
                  Cell::real(records[i].log_complexity)});

    } else if (palgo->parsed()) {
      PrimeSetHandle ps = make_prime_set(primes_spec);
      uint32_t ones = 0;
      ExprHandle e;
      check(onec_prime_set_complexity(ps.ps, n_arg, &ones, &e.e), "palgo");
      OwnedString text;
      check(onec_expr_render(e.e, &text.s), "render");
      RowSink sink(out_path, as_json, {"n", "ones", "log_complexity", "expression"}, false);
      sink.row({Cell::integer(n_arg), Cell::integer(ones),
                n_arg > 1 ? Cell::real((double)ones / log3_of(n_arg)) : Cell::none(),
                Cell::text(text.s)});

    } else if (palgo_scan->parsed()) {
      uint64_t from = 0, to = 0;
      parse_range(range_spec, from, to);
      PrimeSetHandle ps = make_prime_set(primes_spec);
      RowSink sink(out_path, as_json, {"n", "ones", "log_complexity"}, true);
      check(onec_prime_set_scan(
                ps.ps, from, to,
                [](void* raw, uint64_t n, uint32_t ones, double lc) {
                  auto* s = (RowSink*)raw;
                  s->row({Cell::integer(n), Cell::integer(ones),
                          n > 1 ? Cell::real(lc) : Cell::none()});
                },
                &sink),
            "palgo-scan");

    } else if (dense->parsed()) {
      PrimeSetHandle ps = make_prime_set(primes_spec);
      RowSink sink(out_path, as_json, {"m", "l", "n", "predicted_ones", "traced_ones", "match"},
                   true);
      for (uint64_t m = 1; m <= m_max; ++m) {
        for (uint64_t l = 1; l <= l_max; ++l) {
          OwnedString n_text;
          uint64_t predicted = 0, traced_ones = 0;
          int traced = 0;
          check(onec_prime_set_dense_point(ps.ps, (uint32_t)m, (uint32_t)l, &n_text.s, nullptr,
                                           nullptr, &predicted, &traced, &traced_ones),
                "dense-points");
          sink.row({Cell::integer(m), Cell::integer(l), Cell::text(n_text.s),
                    Cell::integer(predicted),
                    traced ? Cell::integer(traced_ones) : Cell::none(),
                    traced ? Cell::integer(traced_ones == predicted ? 1 : 0) : Cell::none()});
        }
      }

    } else if (digitsum->parsed()) {
      StreamHandle s;
      check(onec_stream_create(p_arg, q_arg, 0, &s.s), "digitsum");
      RowSink sink(out_path, as_json, {"n", "S", "s3", "sigma"}, true);
      for (uint64_t n = 1; n <= n_max; ++n) {
        check(onec_stream_advance(s.s), "digitsum");
        int has_s3 = 0, has_sigma = 0;
        double s3 = 0, sigma = 0;
        check(onec_stream_stats(s.s, &has_s3, &s3, &has_sigma, &sigma), "digitsum");
        sink.row({Cell::integer(n), Cell::integer(onec_stream_digit_sum(s.s)),
                  has_s3 ? Cell::real(s3) : Cell::none(),
                  has_sigma ? Cell::real(sigma) : Cell::none()});
      }

    } else if (histo->parsed()) {
      double lo = 0, hi = 0, width = 0;
      parse_bins(bins_spec, lo, hi, width);
      if (!(width > 0) || !(hi > lo)) throw CliError("--bins expects lo < hi and width > 0");
      StreamHandle s;
      check(onec_stream_create(p_arg, q_arg, 0, &s.s), "histogram");
      const bool use_s3 = p_arg == 2 && q_arg == 3;
      std::vector<double> values;
      values.reserve(n_max);
      for (uint64_t n = 1; n <= n_max; ++n) {
        check(onec_stream_advance(s.s), "histogram");
        int has_s3 = 0, has_sigma = 0;
        double s3 = 0, sigma = 0;
        check(onec_stream_stats(s.s, &has_s3, &s3, &has_sigma, &sigma), "histogram");
        if (use_s3 && has_s3) values.push_back(s3);
        if (!use_s3 && has_sigma) values.push_back(sigma);
      }
      size_t bins = (size_t)std::ceil((hi - lo) / width);
      std::vector<uint64_t> counts(bins);
      uint64_t bin_count = 0, under = 0, over = 0;
      check(onec_histogram(values.data(), values.size(), lo, hi, width, counts.data(), bins,
                           &bin_count, &under, &over),
            "histogram");
      RowSink sink(out_path, as_json, {"bin_lo", "bin_hi", "count"}, true);
      for (uint64_t i = 0; i < bin_count; ++i)
        sink.row({Cell::real(lo + (double)i * width), Cell::real(lo + (double)(i + 1) * width),
                  Cell::integer(counts[i])});

    } else if (compress->parsed()) {
      TableHandle t;
      load_table(table_file, minus, t);
      std::vector<uint32_t> points(n_max);
      uint32_t count = 0;
      check(onec_table_compression_points(t.t, p_arg, (uint32_t)n_max, points.data(),
                                          (uint32_t)points.size(), &count),
            "compress");
      RowSink sink(out_path, as_json, {"n", "ones", "compression_point"}, true);
      uint64_t power = 1;
      uint32_t next = 0;
      for (uint32_t n = 1; n <= (uint32_t)n_max; ++n) {
        power *= p_arg;
        uint32_t ones = 0;
        check(onec_table_complexity(t.t, power, &ones), "compress");
        bool is_point = next < count && points[next] == n;
        if (is_point) ++next;
        sink.row({Cell::integer(n), Cell::integer(ones), Cell::integer(is_point ? 1 : 0)});
      }

    } else if (neighbors->parsed()) {
      TableHandle t;
      load_table(table_file, minus, t);
      RowSink sink(out_path, as_json,
                   {"k", "e", "fact_minus2", "fact_minus1", "fact", "fact_plus1"}, true);
      for (uint32_t k = 1; k <= k_max; ++k) {
        uint64_t e = 0;
        check(onec_table_e_min(t.t, k, &e), "neighbors at k=" + std::to_string(k));
        auto fact_cell = [&](uint64_t v) { return Cell::text(factorization_string(v)); };
        sink.row({Cell::integer(k), Cell::integer(e),
                  e >= 3 ? fact_cell(e - 2) : Cell::none(),
                  e >= 2 ? fact_cell(e - 1) : Cell::none(), fact_cell(e), fact_cell(e + 1)});
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
