#include "qhz_cli/suites.hpp"

#include <functional>
#include <random>

#include "qhz/classical.hpp"
#include "qhz/genfun.hpp"
#include "qhz/qbernoulli.hpp"
#include "qhz/qzeta.hpp"
#include "qhz/zqprod.hpp"

namespace qhz::cli {

namespace {

using Inputs = std::vector<std::pair<std::string, Complex>>;

// Any library error inside one instance becomes a failed report.
void guarded(std::vector<EvalReport>& out, const std::string& identity,
             const Inputs& inputs, const std::function<EvalReport()>& body) {
  try {
    out.push_back(body());
  } catch (const Error& e) {
    EvalReport r;
    r.identity = identity + " [" + e.what() + "]";
    r.inputs = inputs;
    r.lhs = r.rhs = Complex(std::nan(""), 0.0);
    r.abs_diff = r.rel_diff = std::numeric_limits<double>::infinity();
    r.pass = false;
    out.push_back(r);
  }
}

// Report whose pass criterion is |lhs - rhs| <= tol * scale.
EvalReport scaled_report(std::string identity, Inputs inputs, Complex lhs,
                         Complex rhs, double tol, double scale) {
  return make_report(std::move(identity), std::move(inputs), lhs, rhs, 0.0,
                     tol * scale);
}

std::vector<EvalReport> functional(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uq(0.2, 0.7);
  std::uniform_real_distribution<double> ut(0.05, 1.5);
  std::uniform_real_distribution<double> ux(0.2, 1.8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> unu(1, 3);
  std::vector<EvalReport> out;
  for (int i = 0; i < 100; ++i) {
    const double q = uq(rng);
    const int nu = unu(rng);
    const QContext ctx(q);
    const double y = 0.3 * unit(rng) * (kPi / 2.0) / std::abs(ctx.log_q());
    const Complex z(ux(rng), y);
    // keep t inside the sector around arg = y log q
    const double arg = y * ctx.log_q() + 0.6 * unit(rng);
    const Complex t = std::polar(ut(rng), arg);
    const Complex extra = std::pow(t, nu) * q_pow(double(nu) * (1.0 - z), ctx) *
                          std::exp(t * q_number(1.0 - z, ctx));
    const Complex e = std::exp(-t);
    const Inputs in{{"q", q}, {"nu", Complex(nu)}, {"t", t}, {"z", z}};
    guarded(out, "F+ functional equation", in, [&] {
      const Complex f = F_plus({nu, t, z}, ctx).value;
      return scaled_report("F+ functional equation", in,
                           F_plus({nu, q * t, z}, ctx).value, e * (f + extra),
                           1e-11, std::max(std::abs(f), std::abs(extra)));
    });
    guarded(out, "F- functional equation", in, [&] {
      const Complex f = F_minus({nu, t, z}, ctx).value;
      return scaled_report("F- functional equation", in,
                           F_minus({nu, q * t, z}, ctx).value, e * (f - extra),
                           1e-11, std::max(std::abs(f), std::abs(extra)));
    });
    guarded(out, "G_q q-difference", in, [&] {
      const Complex g = G_q({nu, t, z}, ctx).value;
      return scaled_report("G_q q-difference", in, G_q({nu, q * t, z}, ctx).value,
                           e * (g + extra), 1e-11,
                           std::max(std::abs(g), std::abs(extra)));
    });
  }
  return out;
}

std::vector<EvalReport> poisson() {
  std::vector<EvalReport> out;
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (int nu : {1, 2, 3}) {
      for (double t : {0.3, 0.7, 1.0, 2.0}) {
        for (double z : {0.25, 0.5, 1.0}) {
          const Inputs in{{"q", q}, {"nu", Complex(nu)}, {"t", t}, {"z", z}};
          guarded(out, "Poisson: bilateral sum = Fourier form", in, [&] {
            const GenfunPoint p{nu, t, z};
            const SeriesValue a = F_bilateral(p, ctx);
            const SeriesValue b = F_fourier(p, ctx);
            return make_report("Poisson: bilateral sum = Fourier form", in,
                               a.value, b.value, 0.0,
                               std::max(1e-10, a.abs_err + b.abs_err));
          });
        }
      }
    }
  }
  return out;
}

std::vector<EvalReport> bernoulli() {
  std::vector<EvalReport> out;
  for (double q : {0.3, 0.5, 0.9}) {
    const QContext ctx(q);
    for (int nu : {1, 2, 3}) {
      for (double z : {0.3, 1.0, 1.7}) {
        for (int m = 0; m <= 8; ++m) {
          const Inputs in{{"q", q}, {"nu", Complex(nu)}, {"m", Complex(m)}, {"z", z}};
          guarded(out, "B closed form = recursion", in, [&] {
            return make_report("B closed form = recursion", in,
                               b_value(nu, m, z, ctx),
                               b_value_recursive(nu, m, z, ctx), 1e-11);
          });
        }
        for (int n = 0; n < nu; ++n) {
          const Inputs in{{"q", q}, {"nu", Complex(nu)}, {"n", Complex(n)}, {"z", z}};
          guarded(out, "Btilde low-order closed value", in, [&] {
            const double closed = ((n % 2 == 1) ? 1.0 : -1.0) *
                                  std::pow(1.0 - q, nu - n) / ctx.log_q() *
                                  factorial(nu - 1);
            return make_report("Btilde low-order closed value", in,
                               btilde_recursive(nu, n, z, ctx), closed, 1e-13);
          });
        }
      }
    }
  }
  return out;
}

std::vector<EvalReport> special() {
  std::vector<EvalReport> out;
  for (double q : {0.3, 0.5, 0.9}) {
    const QContext ctx(q);
    for (int nu : {1, 2, 3}) {
      for (double z : {0.5, 1.0, 1.7}) {
        for (int m = 1; m <= 8; ++m) {
          const Inputs in{{"q", q}, {"nu", Complex(nu)}, {"m", Complex(m)}, {"z", z}};
          guarded(out, "special value zeta(1-m) = -B_m/m", in, [&] {
            const ZetaQuery query{nu, Complex(1.0 - m), z, ZetaMethod::binomial};
            return make_report("special value zeta(1-m) = -B_m/m", in,
                               zeta_nu_binomial(query, ctx).value,
                               special_value(nu, m, z, ctx), 1e-9);
          });
        }
      }
    }
  }
  return out;
}

std::vector<EvalReport> residues() {
  std::vector<EvalReport> out;
  const QContext ctx(0.5);
  const Complex z(0.7, 0.0);
  for (int nu : {1, 2, 3}) {
    const std::vector<std::pair<int, long>> sample{{1, 0},  {nu, 0}, {0, 1},
                                                   {0, -1}, {1, 1},  {-1, 2}};
    for (auto [n, m] : sample) {
      if (!is_pole_index(nu, n, m)) continue;
      if (n == nu && m == 0 && nu == 1) continue;  // same as (1, 0)
      const Inputs in{{"q", ctx.q()}, {"nu", Complex(nu)}, {"n", Complex(n)},
                      {"m", Complex(static_cast<double>(m))}, {"z", z}};
      guarded(out, "residue numeric = closed form", in, [&] {
        return make_report("residue numeric = closed form", in,
                           residue_numeric(nu, n, m, z, ctx),
                           pole_residue(nu, n, m, z, ctx), 1e-5);
      });
    }
  }
  return out;
}

std::vector<EvalReport> ladders() {
  std::vector<EvalReport> out;
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (double s : {0.0, 1.0, 2.5}) {
      for (double t : {1.0, 2.0}) {
        const Inputs in{{"q", q}, {"s", s}, {"t", t}};
        guarded(out, "log Z series = product", in, [&] {
          return make_report("log Z series = product", in,
                             log_Z(s, t, ctx).value,
                             Z_product(s, t, ctx).log_value, 1e-10, 1e-10);
        });
        for (const auto& r : verify_ladders(s, t, 1, ctx)) out.push_back(r);
        for (const auto& r : verify_ladders(s, t + 2.0, 2, ctx)) out.push_back(r);
      }
    }
    for (double t : {1.0, 2.0}) {
      const Inputs in{{"q", q}, {"t", t}};
      guarded(out, "Z(0,t)(1-q^t) = 1", in, [&] {
        return make_report("Z(0,t)(1-q^t) = 1", in,
                           Z_product(0.0, t, ctx).value * (1.0 - q_pow(t, ctx)),
                           1.0, 1e-12);
      });
      for (int m = 1; m <= 3; ++m) {
        const Inputs inm{{"q", q}, {"t", t}, {"m", Complex(m)}};
        guarded(out, "Z(-m,t) finite product", inm, [&] {
          return make_report("Z(-m,t) finite product", inm,
                             Z_product(Complex(-m), t, ctx).value,
                             Z_neg(m, t, ctx), 1e-9);
        });
        guarded(out, "O(t;1_m) Z(m,t) = 1", inm, [&] {
          return make_report("O(t;1_m) Z(m,t) = 1", inm,
                             appell_O(t, m, ctx) *
                                 Z_product(Complex(m), t, ctx).value,
                             1.0, 1e-9);
        });
      }
    }
  }
  return out;
}

std::vector<EvalReport> recurrences() {
  std::vector<EvalReport> out;
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (int nu : {2, 3, 4}) {
      for (int m = 1; m <= nu - 1; ++m) {
        for (double ds : {1.5, 4.0}) {
          const Complex s = nu + ds;
          const Inputs in{{"q", q}, {"nu", Complex(nu)}, {"m", Complex(m)}, {"s", s}};
          guarded(out, "zeta recurrence in nu", in, [&] {
            return verify_zeta_recurrences(nu, m, s, ctx, 1e-10);
          });
        }
      }
      const Inputs in{{"q", q}, {"nu", Complex(nu)}};
      guarded(out, "zeta recurrence in nu at z", in, [&] {
        return verify_zeta_recurrence_z(nu, nu + 1.5, 1.5, ctx, 1e-10);
      });
      const Complex s = nu + 2.5;
      const Inputs in2{{"q", q}, {"nu", Complex(nu)}, {"s", s}};
      guarded(out, "zeta from log-derivative of Z = defining series", in2, [&] {
        return make_report(
            "zeta from log-derivative of Z = defining series", in2,
            zeta_from_Z(nu, s, ctx).value,
            zeta_nu_direct({nu, s, 1.0, ZetaMethod::direct}, ctx).value, 1e-12);
      });
      guarded(out, "zeta from finite difference of log Z", in2, [&] {
        const double h = 1e-5;
        const Complex t = s - static_cast<double>(nu);
        const Complex fd = std::pow(Complex(1.0 - q), s) / ctx.log_q() *
                           (log_Z(s, t + h, ctx).value - log_Z(s, t - h, ctx).value) /
                           (2.0 * h);
        return make_report("zeta from finite difference of log Z", in2, fd,
                           zeta_from_Z(nu, s, ctx).value, 1e-7);
      });
    }
  }
  return out;
}

std::vector<EvalReport> limits() {
  std::vector<EvalReport> out;
  const int k_max = 10;
  const double q_final = 1.0 - std::ldexp(1.0, -k_max);
  struct BPoint {
    int nu, m;
    double z;
  };
  for (const BPoint& p : {BPoint{1, 0, 1.0}, BPoint{1, 1, 1.0}, BPoint{2, 2, 0.5}}) {
    const Inputs in{{"q", q_final}, {"nu", Complex(p.nu)}, {"m", Complex(p.m)},
                    {"z", p.z}};
    guarded(out, "B_m(z;q) -> B_m(z)", in, [&] {
      return make_report("B_m(z;q) -> B_m(z)", in,
                         b_value(p.nu, p.m, p.z, QContext(q_final)),
                         bernoulli_poly(p.m, p.z), 0.0, 5e-3);
    });
  }
  struct ZPoint {
    int nu;
    double s, z;
  };
  for (const ZPoint& p : {ZPoint{1, 2.5, 1.3}, ZPoint{2, 0.5, 1.0}, ZPoint{1, -1.0, 1.0}}) {
    const Inputs in{{"q", q_final}, {"nu", Complex(p.nu)}, {"s", p.s}, {"z", p.z}};
    guarded(out, "zeta_q(s,z) -> zeta(s,z)", in, [&] {
      const LimitRow row = classical_limit_sweep(p.nu, p.s, p.z, k_max).back();
      return make_report("zeta_q(s,z) -> zeta(s,z)", in, row.q_value,
                         row.classical_value, 0.0, 1e-2);
    });
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "functional", "poisson", "bernoulli",   "special",
      "residues",   "ladders", "recurrences", "limits"};
  return names;
}

std::vector<EvalReport> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "functional") return functional(seed);
  if (name == "poisson") return poisson();
  if (name == "bernoulli") return bernoulli();
  if (name == "special") return special();
  if (name == "residues") return residues();
  if (name == "ladders") return ladders();
  if (name == "recurrences") return recurrences();
  if (name == "limits") return limits();
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace qhz::cli
