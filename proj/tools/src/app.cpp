#include "qhz_cli/app.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qhz/classical.hpp"
#include "qhz_cli/format.hpp"
#include "qhz_cli/suites.hpp"

namespace qhz::cli {

namespace {

struct Globals {
  double q = 0.5;
  std::string format = "json";
  double tol = QContext::kDefaultEpsTerm;
  std::size_t max_terms = QContext::kDefaultMaxTerms;
  double pole_guard = QContext::kDefaultPoleGuard;
  std::string out_path;
};

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw DomainError("unknown format '" + name + "'");
}

QContext make_context(const Globals& g) {
  return QContext(g.q, g.tol, g.max_terms, g.pole_guard);
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- eval ---------------------------------------------------------------

struct EvalArgs {
  int nu = 1;
  std::string s;
  std::string z = "1";
  std::string method = "binomial";
};

int cmd_eval(const EvalArgs& a, const Globals& g, Format fmt, std::ostream& out) {
  const QContext ctx = make_context(g);
  const Complex s = parse_complex(a.s);
  const Complex z = parse_complex(a.z);
  SeriesValue v;
  if (a.method == "from-Z" || a.method == "from_Z") {
    if (z != Complex(1.0, 0.0)) {
      throw DomainError("method from-Z evaluates only at z = 1");
    }
    v = zeta_from_Z(a.nu, s, ctx);
  } else {
    const auto method = parse_zeta_method(a.method);
    if (!method) throw DomainError("unknown method '" + a.method + "'");
    v = zeta_nu({a.nu, s, z, *method}, ctx);
  }
  switch (fmt) {
    case Format::json: {
      Json j = to_json(v);
      j["method"] = a.method;
      emit_json(out, j);
      break;
    }
    case Format::csv: {
      CsvWriter csv(out);
      csv.row({"re", "im", "abs_err", "terms_used", "method"});
      csv.row({format_double(v.value.real()), format_double(v.value.imag()),
               format_double(v.abs_err), std::to_string(v.terms_used), a.method});
      break;
    }
    case Format::text:
      out << format_complex(v.value) << "  (abs_err " << format_double(v.abs_err)
          << ", terms " << v.terms_used << ", " << a.method << ")\n";
      break;
  }
  return kOk;
}

// ---- bernoulli ----------------------------------------------------------

struct BernoulliArgs {
  int nu = 1;
  int max_m = 4;
  std::optional<std::string> z;
};

int cmd_bernoulli(const BernoulliArgs& a, const Globals& g, Format fmt,
                  std::ostream& out) {
  if (a.nu < 1 || a.max_m < 0) throw DomainError("need nu >= 1 and max-m >= 0");
  const QContext ctx = make_context(g);
  std::optional<Complex> z;
  if (a.z) z = parse_complex(*a.z);
  std::vector<QPolynomial> polys;
  for (int m = 0; m <= a.max_m; ++m) polys.push_back(b_closed_poly(a.nu, m, ctx));
  switch (fmt) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto& p : polys) {
        Json j = to_json(p);
        if (z) {
          j["z"] = to_json(*z);
          j["value"] = to_json(p.eval(*z, ctx));
        }
        arr.push_back(j);
      }
      emit_json(out, arr);
      break;
    }
    case Format::csv: {
      CsvWriter csv(out);
      csv.row({"nu", "m", "kind", "k", "re", "im"});
      for (const auto& p : polys) {
        const std::string nu = std::to_string(p.nu), m = std::to_string(p.m);
        for (const auto& [k, c] : p.terms) {
          csv.row({nu, m, "exp", std::to_string(k), format_double(c.real()),
                   format_double(c.imag())});
        }
        csv.row({nu, m, "log", "", format_double(p.log_term.real()),
                 format_double(p.log_term.imag())});
        if (z) {
          const Complex v = p.eval(*z, ctx);
          csv.row({nu, m, "value", "", format_double(v.real()),
                   format_double(v.imag())});
        }
      }
      break;
    }
    case Format::text:
      for (const auto& p : polys) {
        out << "B_" << p.m << "^(" << p.nu << ")(z;q) =";
        for (const auto& [k, c] : p.terms) {
          out << " (" << format_complex(c) << ") q^(" << k << " z) +";
        }
        out << " (" << format_complex(p.log_term) << ") / log q";
        if (z) out << "   at z=" << format_complex(*z) << ": "
                   << format_complex(p.eval(*z, ctx));
        out << '\n';
      }
      break;
  }
  return kOk;
}

// ---- poles --------------------------------------------------------------

struct PolesArgs {
  int nu = 1;
  int n_min = -2;
  int n_max = 0;  // 0 means nu
  long m_max = 2;
  std::string z = "1";
};

int cmd_poles(const PolesArgs& a, const Globals& g, Format fmt, std::ostream& out) {
  if (a.nu < 1) throw DomainError("need nu >= 1");
  if (a.m_max < 0) throw DomainError("need m-max >= 0");
  const QContext ctx = make_context(g);
  const int n_hi = a.n_max == 0 ? a.nu : a.n_max;
  const auto list = poles(a.nu, a.n_min, n_hi, -a.m_max, a.m_max,
                          parse_complex(a.z), ctx);
  switch (fmt) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto& p : list) arr.push_back(to_json(p));
      emit_json(out, arr);
      break;
    }
    case Format::csv: {
      CsvWriter csv(out);
      csv.row({"n", "m", "location_re", "location_im", "residue_re", "residue_im"});
      for (const auto& p : list) {
        csv.row({std::to_string(p.n), std::to_string(p.m),
                 format_double(p.location.real()), format_double(p.location.imag()),
                 format_double(p.residue.real()), format_double(p.residue.imag())});
      }
      break;
    }
    case Format::text:
      for (const auto& p : list) {
        out << "s = " << format_complex(p.location) << "  (n=" << p.n
            << ", m=" << p.m << ")  residue " << format_complex(p.residue) << '\n';
      }
      break;
  }
  return kOk;
}

// ---- special-values -----------------------------------------------------

struct SpecialArgs {
  int nu = 1;
  int max_m = 6;
  std::string z = "1";
};

int cmd_special(const SpecialArgs& a, const Globals& g, Format fmt,
                std::ostream& out) {
  if (a.nu < 1 || a.max_m < 1) throw DomainError("need nu >= 1 and max-m >= 1");
  const QContext ctx = make_context(g);
  const Complex z = parse_complex(a.z);
  std::vector<std::pair<int, Complex>> rows;
  for (int m = 1; m <= a.max_m; ++m) rows.emplace_back(m, special_value(a.nu, m, z, ctx));
  switch (fmt) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto& [m, v] : rows) {
        Json j;
        j["m"] = m;
        j["s"] = 1 - m;
        j["value"] = to_json(v);
        arr.push_back(j);
      }
      emit_json(out, arr);
      break;
    }
    case Format::csv: {
      CsvWriter csv(out);
      csv.row({"m", "s", "re", "im"});
      for (const auto& [m, v] : rows) {
        csv.row({std::to_string(m), std::to_string(1 - m), format_double(v.real()),
                 format_double(v.imag())});
      }
      break;
    }
    case Format::text:
      for (const auto& [m, v] : rows) {
        out << "zeta(" << 1 - m << ") = " << format_complex(v) << '\n';
      }
      break;
  }
  return kOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a, Format fmt, std::ostream& out) {
  std::vector<std::string> names = a.suites.empty() ? suite_names() : a.suites;
  for (const auto& n : names) {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), n) == all.end()) {
      throw DomainError("unknown suite '" + n + "'");
    }
  }
  std::vector<std::pair<std::string, std::vector<EvalReport>>> results;
  std::size_t total = 0, passed = 0;
  for (const auto& n : names) {
    auto reports = run_suite(n, a.seed);
    for (const auto& r : reports) {
      ++total;
      if (r.pass) ++passed;
    }
    results.emplace_back(n, std::move(reports));
  }
  switch (fmt) {
    case Format::json: {
      Json j;
      j["seed"] = a.seed;
      Json suites = Json::array();
      for (const auto& [n, reports] : results) {
        Json s;
        s["suite"] = n;
        std::size_t ok = 0;
        Json arr = Json::array();
        for (const auto& r : reports) {
          ok += r.pass ? 1 : 0;
          arr.push_back(to_json(r));
        }
        s["passed"] = ok;
        s["failed"] = reports.size() - ok;
        s["reports"] = arr;
        suites.push_back(s);
      }
      j["suites"] = suites;
      j["summary"] = {{"total", total}, {"passed", passed}, {"failed", total - passed}};
      emit_json(out, j);
      break;
    }
    case Format::csv: {
      CsvWriter csv(out);
      csv.row({"suite", "identity", "inputs", "lhs", "rhs", "abs_diff", "rel_diff",
               "pass"});
      for (const auto& [n, reports] : results) {
        for (const auto& r : reports) {
          csv.row({n, r.identity, inputs_text(r.inputs), format_complex(r.lhs),
                   format_complex(r.rhs), format_double(r.abs_diff),
                   format_double(r.rel_diff), r.pass ? "true" : "false"});
        }
      }
      break;
    }
    case Format::text:
      for (const auto& [n, reports] : results) {
        std::size_t ok = 0;
        for (const auto& r : reports) {
          ok += r.pass ? 1 : 0;
          if (!r.pass) {
            out << "  FAIL " << r.identity << " [" << inputs_text(r.inputs)
                << "] rel " << format_double(r.rel_diff) << '\n';
          }
        }
        out << n << ": " << ok << "/" << reports.size() << " passed\n";
      }
      out << "total: " << passed << "/" << total << " passed\n";
      break;
  }
  return passed == total ? kOk : kCheckFailed;
}

// ---- limit-sweep --------------------------------------------------------

struct LimitArgs {
  int nu = 1;
  std::string s = "2.5";
  std::string z = "1";
  int k_max = 10;
  std::optional<int> m;
};

int cmd_limit_sweep(const LimitArgs& a, Format fmt, std::ostream& out) {
  if (a.k_max < 1 || a.k_max > 40) throw DomainError("k-max must lie in 1..40");
  const Complex z = parse_complex(a.z);
  std::vector<LimitRow> rows;
  if (a.m) {
    if (*a.m < 0 || a.nu < 1) throw DomainError("need m >= 0 and nu >= 1");
    const Complex classical = bernoulli_poly(*a.m, z);
    for (int k = std::min(3, a.k_max); k <= a.k_max; ++k) {
      LimitRow row;
      row.k = k;
      row.q = 1.0 - std::ldexp(1.0, -k);
      row.q_value = b_value(a.nu, *a.m, z, QContext(row.q));
      row.classical_value = classical;
      row.abs_error = std::abs(row.q_value - classical);
      rows.push_back(row);
    }
  } else {
    rows = classical_limit_sweep(a.nu, parse_complex(a.s), z, a.k_max);
  }
  switch (fmt) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      emit_json(out, arr);
      break;
    }
    case Format::csv: {
      CsvWriter csv(out);
      csv.row({"k", "q", "q_value", "classical_value", "abs_error"});
      for (const auto& r : rows) {
        csv.row({std::to_string(r.k), format_double(r.q), format_complex(r.q_value),
                 format_complex(r.classical_value), format_double(r.abs_error)});
      }
      break;
    }
    case Format::text:
      for (const auto& r : rows) {
        out << "k=" << r.k << " q=" << format_double(r.q)
            << " error=" << format_double(r.abs_error) << '\n';
      }
      break;
  }
  return kOk;
}

// ---- zq -----------------------------------------------------------------

struct ZqArgs {
  std::string s;
  std::string t;
  std::optional<long> depth;
  std::optional<int> ladders;
};

int cmd_zq(const ZqArgs& a, const Globals& g, Format fmt, std::ostream& out) {
  const QContext ctx = make_context(g);
  const Complex s = parse_complex(a.s);
  const Complex t = parse_complex(a.t);
  if (a.depth && *a.depth < 0) throw DomainError("depth must be >= 0");
  const SeriesValue series = log_Z(s, t, ctx);
  const ProductValue product = a.depth ? Z_product(s, t, *a.depth, ctx)
                                       : Z_product(s, t, ctx);
  std::vector<EvalReport> reports;
  if (a.ladders) {
    if (*a.ladders < 1) throw DomainError("ladder order must be >= 1");
    reports = verify_ladders(s, t, *a.ladders, ctx);
  }
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  switch (fmt) {
    case Format::json: {
      Json j;
      j["log_series"] = to_json(series);
      j["product"] = to_json(product);
      if (a.ladders) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        j["ladders"] = arr;
      }
      emit_json(out, j);
      break;
    }
    case Format::csv: {
      CsvWriter csv(out);
      csv.row({"quantity", "re", "im", "abs_err"});
      csv.row({"log_series", format_double(series.value.real()),
               format_double(series.value.imag()), format_double(series.abs_err)});
      csv.row({"log_product", format_double(product.log_value.real()),
               format_double(product.log_value.imag()), format_double(product.abs_err)});
      csv.row({"Z", format_double(product.value.real()),
               format_double(product.value.imag()), ""});
      for (const auto& r : reports) {
        csv.row({r.identity, format_double(r.abs_diff), "", r.pass ? "pass" : "fail"});
      }
      break;
    }
    case Format::text:
      out << "log Z (series)  = " << format_complex(series.value) << '\n'
          << "log Z (product) = " << format_complex(product.log_value)
          << "  depth " << product.depth << '\n'
          << "Z               = " << format_complex(product.value) << '\n';
      for (const auto& r : reports) {
        out << (r.pass ? "PASS " : "FAIL ") << r.identity << "  |diff| "
            << format_double(r.abs_diff) << '\n';
      }
      break;
  }
  return all_pass ? kOk : kCheckFailed;
}

// ---- error reporting ----------------------------------------------------

int report_error(const std::string& kind, const std::string& message,
                 const std::optional<PoleDescriptor>& pole, int code, Format fmt,
                 std::ostream& out, std::ostream& err) {
  err << "qzeta: " << message << '\n';
  if (fmt == Format::json) {
    Json e;
    e["kind"] = kind;
    e["message"] = message;
    e["exit_code"] = code;
    if (pole) e["pole"] = to_json(*pole);
    Json j;
    j["error"] = e;
    emit_json(out, j);
  }
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"q-Hurwitz zeta functions, q-Bernoulli polynomials and Z_q",
               "qzeta"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "qzeta 0.1.0");

  Globals g;
  app.add_option("--q", g.q, "deformation parameter, 0 < q < 1");
  auto* format_opt = app.add_option("--format", g.format, "json | csv | text")
                         ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--tol", g.tol, "relative term tolerance for series");
  app.add_option("--max-terms", g.max_terms, "term budget per series");
  app.add_option("--pole-guard", g.pole_guard, "distance treated as on a pole");
  app.add_option("--out", g.out_path, "write output to this file");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate zeta_q^(nu)(s,z)");
  eval_cmd->add_option("--nu", eval.nu, "order nu >= 1");
  eval_cmd->add_option("--s", eval.s, "s as re[,im]")->required();
  eval_cmd->add_option("--z", eval.z, "z as re[,im]");
  eval_cmd->add_option("--method", eval.method,
                       "direct | binomial | mellin | integral-rep | from-Z");

  BernoulliArgs bern;
  auto* bern_cmd = app.add_subcommand("bernoulli", "q-Bernoulli polynomials");
  bern_cmd->add_option("--nu", bern.nu, "order nu >= 1");
  bern_cmd->add_option("--max-m", bern.max_m, "largest degree m");
  bern_cmd->add_option("--z", bern.z, "evaluate at z = re[,im]");

  PolesArgs pol;
  auto* poles_cmd = app.add_subcommand("poles", "pole lattice with residues");
  poles_cmd->add_option("--nu", pol.nu, "order nu >= 1");
  poles_cmd->add_option("--n-min", pol.n_min, "smallest real index n");
  poles_cmd->add_option("--n-max", pol.n_max, "largest real index n (default nu)");
  poles_cmd->add_option("--m-max", pol.m_max, "lattice index range -m..m");
  poles_cmd->add_option("--z", pol.z, "z as re[,im]");

  SpecialArgs special;
  auto* special_cmd =
      app.add_subcommand("special-values", "values at s = 0, -1, -2, ...");
  special_cmd->add_option("--nu", special.nu, "order nu >= 1");
  special_cmd->add_option("--max-m", special.max_m, "values at s = 1-m, m = 1..max");
  special_cmd->add_option("--z", special.z, "z as re[,im]");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
  verify_cmd->add_option("--suite", ver.suites, "restrict to these suites");
  verify_cmd->add_option("--seed", ver.seed, "seed of the random grid");

  LimitArgs lim;
  auto* limit_cmd = app.add_subcommand("limit-sweep", "q -> 1 error sequence");
  limit_cmd->add_option("--nu", lim.nu, "order nu >= 1");
  limit_cmd->add_option("--s", lim.s, "s as re[,im]");
  limit_cmd->add_option("--z", lim.z, "z as re[,im]");
  limit_cmd->add_option("--k-max", lim.k_max, "q = 1 - 2^-k up to this k");
  limit_cmd->add_option("--m", lim.m, "sweep B_m^(nu)(z;q) instead of zeta");

  ZqArgs zq;
  auto* zq_cmd = app.add_subcommand("zq", "Z_q(s,t) and its ladder relations");
  zq_cmd->add_option("--s", zq.s, "s as re[,im]")->required();
  zq_cmd->add_option("--t", zq.t, "t as re[,im]")->required();
  zq_cmd->add_option("--depth", zq.depth, "product truncation depth");
  zq_cmd->add_option("--ladders", zq.ladders, "check the ladders of this order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "qzeta 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qzeta: " << e.what() << '\n';
    return kDomain;
  }

  Format fmt = parse_format(g.format);
  if (limit_cmd->parsed() && format_opt->count() == 0) fmt = Format::csv;

  std::ostringstream buffer;
  try {
    if (!(g.q > 0.0 && g.q < 1.0)) {
      throw DomainError("--q must lie strictly between 0 and 1, got " +
                        format_double(g.q));
    }
    int code = kOk;
    if (eval_cmd->parsed()) code = cmd_eval(eval, g, fmt, buffer);
    else if (bern_cmd->parsed()) code = cmd_bernoulli(bern, g, fmt, buffer);
    else if (poles_cmd->parsed()) code = cmd_poles(pol, g, fmt, buffer);
    else if (special_cmd->parsed()) code = cmd_special(special, g, fmt, buffer);
    else if (verify_cmd->parsed()) code = cmd_verify(ver, fmt, buffer);
    else if (limit_cmd->parsed()) code = cmd_limit_sweep(lim, fmt, buffer);
    else if (zq_cmd->parsed()) code = cmd_zq(zq, g, fmt, buffer);

    if (g.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(g.out_path, std::ios::binary);
      if (!file) throw DomainError("cannot open '" + g.out_path + "' for writing");
      file << buffer.str();
    }
    return code;
  } catch (const NearPoleError& e) {
    return report_error("near_pole", e.what(), e.pole(), kNearPole, fmt, out, err);
  } catch (const ConvergenceError& e) {
    return report_error("convergence", e.what(), std::nullopt, kConvergence, fmt,
                        out, err);
  } catch (const RangeError& e) {
    return report_error("range", e.what(), std::nullopt, kConvergence, fmt, out,
                        err);
  } catch (const GammaPoleError& e) {
    return report_error("gamma_pole", e.what(), std::nullopt, kDomain, fmt, out,
                        err);
  } catch (const DomainError& e) {
    return report_error("domain", e.what(), std::nullopt, kDomain, fmt, out, err);
  } catch (const Error& e) {
    return report_error("error", e.what(), std::nullopt, kDomain, fmt, out, err);
  }
}

}  // namespace qhz::cli
