#include "weavekh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "weavekh/diagram.hpp"
#include "weavekh/error.hpp"
#include "weavekh/format.hpp"
#include "weavekh/jones.hpp"
#include "weavekh/khovanov.hpp"

namespace weavekh::cli {
namespace {

using nlohmann::json;

// Rows whose total is longer than this also get scientific columns.
constexpr std::size_t kPlainDigits = 19;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_knot(int n) {
  if (n < 1) throw UsageError("n must be >= 1");
  if (n % 3 == 0) {
    throw UsageError("3 | n: W(3," + std::to_string(n) +
                     ") is a 3-component link; Khovanov ranks need a knot");
  }
}

json line_json(const khovanov::BettiLine& line) {
  json arr = json::array();
  for (const auto& [i, r] : line) arr.push_back({i, r.get_str()});
  return arr;
}

json fit_json(const gaussfit::GaussianFit& fit) {
  json pts = json::array();
  for (const auto& [x, y] : fit.fit_points) pts.push_back({x, y});
  return {{"n", fit.n},         {"alpha", fit.alpha}, {"beta", fit.beta},
          {"delta", fit.delta}, {"mu", fit.mu},       {"sigma", fit.sigma},
          {"a_n", fit.a_n},     {"l2", fit.l2},       {"l1", fit.l1},
          {"fit_point_set", gaussfit::kFitPointSet},  {"fit_points", std::move(pts)}};
}

// ---------------------------------------------------------------------------
// Commands

int cmd_jones(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) throw UsageError("n must be >= 1");
  const auto result = jones::jones_w3(cfg.n);
  if (!result.is_knot) {
    err << "warning: 3 | n: closure is a 3-component link\n";
  }
  if (cfg.format == Format::kJson) {
    out << json{{"n", result.n},
                {"jones", to_json(result.v)},
                {"span", result.span},
                {"min_deg", result.min_deg},
                {"max_deg", result.max_deg},
                {"is_knot", result.is_knot},
                {"palindromic", is_palindromic(result.v)}}
               .dump()
        << '\n';
  } else {
    out << to_string(result.v) << '\n';
  }
  return kExitOk;
}

int cmd_kh(const RunConfig& cfg, std::ostream& out, bool betti_only) {
  require_knot(cfg.n);
  const auto tbl = khovanov::khovanov_w3(cfg.n);
  const auto line = khovanov::betti_line(tbl);
  switch (cfg.format) {
    case Format::kJson: {
      json j{{"n", tbl.n},
             {"sigma", tbl.sigma},
             {"betti_line", line_json(line)},
             {"total", khovanov::total_rank_line(tbl).get_str()},
             {"h01", khovanov::h01(tbl).get_str()},
             {"h01_paired", khovanov::h01_paired(tbl).get_str()}};
      if (!betti_only) j["kh"] = to_json(tbl.kh_poly);
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      if (betti_only) {
        out << "i,rank\n";
        for (const auto& [i, r] : line) out << i << ',' << r.get_str() << '\n';
      } else {
        out << "i,j,rank\n";
        for (const auto& [key, r] : tbl.kh_poly.terms()) {
          out << key.first << ',' << key.second << ',' << r.get_str() << '\n';
        }
      }
      break;
    case Format::kText:
      if (betti_only) {
        for (const auto& [i, r] : line) out << i << ' ' << r.get_str() << '\n';
      } else {
        out << to_string(tbl.kh_poly) << '\n';
      }
      break;
  }
  return kExitOk;
}

void emit_density(const gaussfit::GaussianFit& fit, const gaussfit::NormalizedBetti& nb,
                  const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  file << "x,rho,d\n";
  // Ten samples per unit over the deviation window; d only at integers.
  for (int k = -20 * nb.n; k <= 10 * (2 * nb.n + 1); ++k) {
    const double x = k / 10.0;
    file << significant(x, 10) << ',' << significant(gaussfit::density(fit, x), 10) << ',';
    if (k % 10 == 0) file << significant(nb.at(k / 10), 10);
    file << '\n';
  }
  if (!file) throw std::runtime_error("write failed: " + path);
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
  require_knot(cfg.n);
  const auto tbl = khovanov::khovanov_w3(cfg.n);
  const auto line = khovanov::betti_line(tbl);
  const auto nb = gaussfit::normalize(cfg.n, line);
  const auto fit = gaussfit::fit_line(nb);
  if (!cfg.density_path.empty()) emit_density(fit, nb, cfg.density_path);
  if (cfg.format == Format::kJson) {
    out << fit_json(fit).dump() << '\n';
  } else {
    out << "n " << fit.n << '\n'
        << "total " << nb.total.get_str() << '\n'
        << "alpha " << significant(fit.alpha, 12) << '\n'
        << "beta " << significant(fit.beta, 12) << '\n'
        << "delta " << significant(fit.delta, 12) << '\n'
        << "mu " << significant(fit.mu, 12) << '\n'
        << "sigma " << significant(fit.sigma, 12) << '\n'
        << "a_n " << significant(fit.a_n, 12) << '\n'
        << "l2 " << significant(fit.l2, 6) << '\n'
        << "l1 " << significant(fit.l1, 6) << '\n'
        << "fit_point_set " << gaussfit::kFitPointSet << '\n';
  }
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  if (cfg.residue != 1 && cfg.residue != 2) throw UsageError("--residue must be 1 or 2");
  if (cfg.start < 1 || cfg.start % 3 != cfg.residue) {
    throw UsageError("--start must be positive and congruent to the residue mod 3");
  }
  const auto rows = compute_table(cfg.start, cfg.end, resolve_threads(cfg.threads));
  const std::string csv = table_csv(rows, cfg.h01, !cfg.no_meta);
  if (cfg.out_path.empty()) {
    out << csv;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + cfg.out_path);
    file << csv;
    if (!file) throw std::runtime_error("write failed: " + cfg.out_path);
  }
  return kExitOk;
}

int cmd_signature(const RunConfig& cfg, std::ostream& out) {
  if (cfg.p < 2 || cfg.q < 1) throw UsageError("need -p >= 2 and -q >= 1");
  if (!cfg.check_diagram) {
    const int s = diagram::signature_closed_form(cfg.p, cfg.q);
    if (cfg.format == Format::kJson) {
      out << json{{"p", cfg.p}, {"q", cfg.q}, {"closed_form", s}}.dump() << '\n';
    } else {
      out << s << '\n';
    }
    return kExitOk;
  }
  const auto r = diagram::signature_report(cfg.p, cfg.q);
  const json j{{"p", r.p},
               {"q", r.q},
               {"c", r.stats.c},
               {"x", r.stats.x},
               {"y", r.stats.y},
               {"o", r.stats.o},
               {"signature", r.signature},
               {"closed_form", r.closed_form},
               {"agree", r.agree},
               {"alternating", r.alternating}};
  if (cfg.format == Format::kJson) {
    out << j.dump() << '\n';
  } else {
    for (const auto& [k, v] : j.items()) out << k << ' ' << v.dump() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_max < 1) throw UsageError("--n-max must be >= 1");
  bool ok = true;
  for (const auto& check : run_verify(cfg.n_max, cfg.inject_fault)) {
    ok = ok && check.failures == 0;
    out << (check.failures == 0 ? "PASS " : "FAIL ") << check.name << " (" << check.cases
        << " cases";
    if (check.failures != 0) out << ", " << check.failures << " failed";
    out << ")\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

// ---------------------------------------------------------------------------

TableRow compute_row(const hecke::HeckeCoeffs& row) {
  const auto tbl = khovanov::khovanov_from_jones(jones::jones_from_coeffs(row));
  const auto line = khovanov::betti_line(tbl);
  const auto nb = gaussfit::normalize(row.n, line);
  TableRow out{row.n, nb.total, khovanov::h01(tbl), khovanov::h01_paired(tbl), std::nullopt};
  try {
    out.fit = gaussfit::fit_line(nb);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateFit) throw;
  }
  return out;
}

std::vector<TableRow> compute_table(int start, int end, unsigned threads) {
  if (end < start) return {};
  if (start < 1) throw Error(ErrorCode::kInvalidArgument, "table start must be >= 1");
  const std::size_t count = static_cast<std::size_t>((end - start) / 3) + 1;
  const int last = start + 3 * static_cast<int>(count - 1);
  std::vector<TableRow> rows(count);

  if (threads <= 1) {
    hecke::for_each_row(last, [&](const hecke::HeckeCoeffs& row) {
      if (row.n >= start && (row.n - start) % 3 == 0) {
        rows[static_cast<std::size_t>((row.n - start) / 3)] = compute_row(row);
      }
    });
    return rows;
  }

  std::mutex mu;
  std::condition_variable cv;
  std::deque<hecke::HeckeCoeffs> queue;
  bool done = false;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      hecke::HeckeCoeffs row;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return !queue.empty() || done; });
        if (queue.empty()) return;
        row = std::move(queue.front());
        queue.pop_front();
      }
      try {
        rows[static_cast<std::size_t>((row.n - start) / 3)] = compute_row(row);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    try {
      hecke::for_each_row(last, [&](const hecke::HeckeCoeffs& row) {
        if (row.n >= start && (row.n - start) % 3 == 0) {
          std::lock_guard lock(mu);
          queue.push_back(row);
          cv.notify_one();
        }
      });
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
    }
    {
      std::lock_guard lock(mu);
      done = true;
    }
    cv.notify_all();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows, H01Convention h01, bool meta) {
  std::ostringstream os;
  if (meta) {
    os << "# weavekh " << kVersion << " fit_point_set=" << gaussfit::kFitPointSet
       << " dim_H01=" << (h01 == H01Convention::kPaired ? "paired" : "full") << '\n';
  }
  os << "n,total_dimension,dim_H01,sigma,l2_comparison,l1_comparison,total_dimension_sci,"
        "dim_H01_sci\n";

  for (const auto& r : rows) {
    const BigInt& h = h01 == H01Convention::kPaired ? r.h01_paired : r.h01;
    os << r.n << ',' << r.total.get_str() << ',' << h.get_str() << ',';
    if (r.fit) {
      os << significant(r.fit->sigma, 6) << ',' << significant(r.fit->l2, 6) << ','
         << significant(r.fit->l1, 6);
    } else {
      os << ",,";
    }
    if (r.total.get_str().size() > kPlainDigits) {
      os << ',' << scientific(r.total, 6) << ',' << scientific(h, 6) << '\n';
    } else {
      os << ",,\n";
    }
  }
  return os.str();
}

std::vector<CheckResult> run_verify(int n_max, bool inject_fault) {
  std::vector<CheckResult> checks;
  auto record = [&](std::string name, int lo, int hi, auto&& pred) {
    CheckResult c{std::move(name), 0, 0};
    for (int k = lo; k <= hi; ++k) {
      ++c.cases;
      if (!pred(k)) ++c.failures;
    }
    checks.push_back(std::move(c));
  };

  std::vector<hecke::HeckeCoeffs> rows;
  hecke::for_each_row(n_max, [&](const hecke::HeckeCoeffs& r) { rows.push_back(r); });
  if (inject_fault) rows.back().c12 += LaurentPoly::constant(1);
  const auto row = [&](int n) -> const hecke::HeckeCoeffs& { return rows[static_cast<std::size_t>(n - 1)]; };

  record("hecke recursion vs H3 oracle", 1, std::min(n_max, 30), [&](int n) {
    return hecke::HeckeElement::from_coeffs(row(n)) == hecke::oracle_power(n);
  });
  record("C121 vanishes", 1, n_max, [&](int n) { return row(n).c121.is_zero(); });
  record("degree bounds", 1, n_max, [&](int n) {
    auto below = [](const LaurentPoly& p, int bound) { return p.is_zero() || p.max_degree() <= bound; };
    const auto& r = row(n);
    return below(r.c0, 2 * n - 1) && below(r.c1, 2 * n - 1) && below(r.c2, 2 * n - 2) &&
           below(r.c12, 2 * n - 2) && below(r.c21, 2 * n - 3);
  });
  record("low coefficients of C0 and C1", 1, n_max, [&](int n) {
    const auto& r = row(n);
    const int sign = n % 2 == 0 ? 1 : -1;  // (-1)^n == (-1)^(n-2)
    return r.c0.coeff(0) == 0 && (n < 2 || r.c0.coeff(1) == sign) && r.c1.coeff(0) == -sign;
  });
  record("top-term cancellation", 1, n_max, [&](int n) {
    const auto& r = row(n);
    return r.c1.coeff(2 * n - 1) + r.c12.coeff(2 * n - 2) == 0;
  });

  std::vector<int> knots;
  for (int n = 1; n <= n_max; ++n) {
    if (n % 3 != 0) knots.push_back(n);
  }
  auto record_knots = [&](std::string name, int limit, auto&& pred) {
    CheckResult c{std::move(name), 0, 0};
    for (int n : knots) {
      if (n > limit) break;
      ++c.cases;
      if (!pred(n)) ++c.failures;
    }
    checks.push_back(std::move(c));
  };

  record_knots("jones vs Kauffman bracket", std::min(n_max, 10), [&](int n) {
    return jones::jones_from_coeffs(row(n)).v == jones::kauffman_oracle(diagram::weaving_braid(3, n));
  });

  std::vector<khovanov::KhovanovTable> tables;
  std::vector<LaurentPoly> polys;
  record_knots("Khovanov table builds", n_max, [&](int n) {
    try {
      const auto jr = jones::jones_from_coeffs(row(n));
      tables.push_back(khovanov::khovanov_from_jones(jr));
      polys.push_back(jr.v);
      return true;
    } catch (const Error&) {
      return false;
    }
  });
  auto over_tables = [&](std::string name, auto&& pred) {
    CheckResult c{std::move(name), 0, 0};
    for (std::size_t k = 0; k < tables.size(); ++k) {
      ++c.cases;
      if (!pred(tables[k], polys[k])) ++c.failures;
    }
    checks.push_back(std::move(c));
  };
  over_tables("Euler characteristic identity", [](const auto& t, const auto& v) {
    return khovanov::euler_identity_holds(t, v);
  });
  over_tables("support on j = 2i +- 1", [](const auto& t, const auto&) {
    return khovanov::support_on_lines(t);
  });
  over_tables("knight-move divisibility", [](const auto& t, const auto&) {
    return khovanov::knight_move_divisible(t);
  });

  CheckResult sig{"signature diagram vs closed form", 0, 0};
  for (int p = 3; p <= 8; ++p) {
    for (int q = 1; q <= std::max(n_max, 1); ++q) {
      ++sig.cases;
      if (!diagram::signature_report(p, q).agree) ++sig.failures;
    }
  }
  checks.push_back(std::move(sig));
  return checks;
}

unsigned resolve_threads(unsigned requested) {
  if (const char* env = std::getenv("WEAVEKH_THREADS"); env != nullptr && *env != '\0') {
    char* endp = nullptr;
    const unsigned long v = std::strtoul(env, &endp, 10);
    if (endp != nullptr && *endp == '\0') requested = static_cast<unsigned>(v);
  }
  if (requested == 0) requested = std::max(1U, std::thread::hardware_concurrency());
  return requested;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jones polynomials, Khovanov ranks and Betti-line statistics of weaving knots",
               "weavekh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string format = "text";
  std::string h01 = "paired";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of W(3,n)");
  jones_cmd->add_option("-n", cfg.n, "Braid power n")->required();
  add_format(jones_cmd);

  auto* kh_cmd = app.add_subcommand("kh", "Khovanov polynomial of W(3,n)");
  kh_cmd->add_option("-n", cfg.n, "Braid power n")->required();
  add_format(kh_cmd);

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers along j = 2i + 1");
  betti_cmd->add_option("-n", cfg.n, "Braid power n")->required();
  add_format(betti_cmd);

  auto* fit_cmd = app.add_subcommand("fit", "Normal-density fit of the Betti line");
  fit_cmd->add_option("-n", cfg.n, "Braid power n")->required();
  fit_cmd->add_option("--emit-density", cfg.density_path, "Write x,rho,d samples to FILE");
  add_format(fit_cmd);

  auto* table_cmd = app.add_subcommand("table", "CSV rows for n = start, start+3, ..., end");
  table_cmd->add_option("--residue", cfg.residue, "n mod 3")->required();
  table_cmd->add_option("--start", cfg.start, "First n")->required();
  table_cmd->add_option("--end", cfg.end, "Last n")->required();
  table_cmd->add_option("--out", cfg.out_path, "Output file (default stdout)");
  table_cmd->add_option("--threads", cfg.threads, "Worker threads, 0 = auto");
  table_cmd->add_flag("--no-meta", cfg.no_meta, "Omit the metadata comment line");
  table_cmd->add_option("--h01", h01, "dim_H01 column: paired (default) or full t^0 Q^1")
      ->check(CLI::IsMember({"paired", "full"}));
  add_format(table_cmd);

  auto* sig_cmd = app.add_subcommand("signature", "Signature of W(p,q)");
  sig_cmd->add_option("-p", cfg.p, "Strands")->required();
  sig_cmd->add_option("-q", cfg.q, "Braid power")->required();
  sig_cmd->add_flag("--check-diagram", cfg.check_diagram, "Also count the all-A smoothing");
  add_format(sig_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle and structural checks");
  verify_cmd->add_option("--n-max", cfg.n_max, "Largest n to check");
  verify_cmd->add_flag("--inject-fault", cfg.inject_fault, "Corrupt one row (harness self-test)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  cfg.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kText;
  cfg.h01 = h01 == "full" ? H01Convention::kFull : H01Convention::kPaired;

  try {
    if (jones_cmd->parsed()) return cmd_jones(cfg, out, err);
    if (kh_cmd->parsed()) return cmd_kh(cfg, out, false);
    if (betti_cmd->parsed()) return cmd_kh(cfg, out, true);
    if (fit_cmd->parsed()) return cmd_fit(cfg, out);
    if (table_cmd->parsed()) return cmd_table(cfg, out);
    if (sig_cmd->parsed()) return cmd_signature(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kInvalidArgument ? kExitUsage : kExitContract;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitContract;
  }
  return kExitUsage;
}

}  // namespace weavekh::cli
