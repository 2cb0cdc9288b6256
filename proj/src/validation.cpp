#include "ckosc/validation.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ckosc/classical.hpp"
#include "ckosc/figures.hpp"
#include "ckosc/numerics.hpp"
#include "ckosc/output.hpp"
#include "ckosc/quantum.hpp"

namespace ckosc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

class Suite {
 public:
  void at_most(std::string name, std::string module, double tolerance, double observed) {
    results_.push_back({std::move(name), std::move(module), "<=", tolerance, observed,
                        std::isfinite(observed) && observed <= tolerance});
  }
  void at_least(std::string name, std::string module, double tolerance, double observed) {
    results_.push_back({std::move(name), std::move(module), ">=", tolerance, observed,
                        std::isfinite(observed) && observed >= tolerance});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

double sup_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double relative_sup_error(const std::vector<double>& a, const std::vector<double>& b) {
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return err / std::max(sup_abs(b), 1e-300);
}

template <class F>
double simpson(F&& f, double lo, double hi, int intervals) {
  const double h = (hi - lo) / intervals;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return sum * h / 3.0;
}

Scenario corrupt(Scenario s, const ValidationOptions& options) {
  s.params.omega *= options.omega_corruption;
  return s;
}

void model_checks(Suite& suite) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double identity = 0.0;
  double above = 0.0;
  int idempotent_mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    OscillatorParams p;
    p.m = 0.1 + 10.0 * u(rng);
    p.omega0 = 0.1 + 5.0 * u(rng);
    p.gamma = 1.999 * p.omega0 * u(rng);
    p.hbar = u(rng);
    const auto v = validate_params(p);
    const double w0sq = v.omega0 * v.omega0;
    identity = std::max(identity, std::abs(w0sq - v.omega * v.omega - v.gamma * v.gamma / 4) / w0sq);
    above = std::max(above, v.omega - v.omega0);
    const auto vv = validate_params(v);
    if (vv.omega != v.omega || vv.m != v.m || vv.gamma != v.gamma || vv.hbar != v.hbar) {
      ++idempotent_mismatches;
    }
  }
  suite.at_most("omega_identity", "model", 4 * kEps, identity);
  suite.at_most("omega_not_above_omega0", "model", 0.0, above);
  suite.at_most("validate_idempotent", "model", 0.0, idempotent_mismatches);
}

void forcing_checks(Suite& suite) {
  const double omega_d = 2.0 * std::numbers::pi;
  const double tau = 1.0;
  double odd = 0.0;
  double periodic = 0.0;
  for (int i = 0; i <= 600; ++i) {
    const double t = 3.0 * tau * i / 600.0;
    for (int n : {1, 3, 1000}) {
      const double f = sawtooth_series(1.0, 1.0, omega_d, n, t);
      odd = std::max(odd, std::abs(sawtooth_series(1.0, 1.0, omega_d, n, -t) + f));
      periodic = std::max(periodic, std::abs(sawtooth_series(1.0, 1.0, omega_d, n, t + tau) - f));
    }
  }
  suite.at_most("sawtooth_odd", "forcing", 0.0, odd);
  suite.at_most("sawtooth_periodic", "forcing", 1e-12, periodic);

  double ramp = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = tau * (-0.45 + 0.9 * i / 999.0);
    ramp = std::max(ramp, std::abs(sawtooth_series(1.0, 1.0, omega_d, 1000, t) -
                                   sawtooth_ramp_oracle(1.0, 1.0, omega_d, t)));
  }
  suite.at_most("sawtooth_series_vs_ramp", "forcing", 1e-3, ramp);

  const TmafmForce c{.F_ext = 0.3, .k = 0.5, .D0 = 0.5, .a0 = 0.3, .omega_d = 0.3, .m_eff = 1.0};
  const double lo = (c.F_ext + c.k * (c.D0 - c.a0)) / c.m_eff;
  const double hi = (c.F_ext + c.k * (c.D0 + c.a0)) / c.m_eff;
  double outside = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double f = eval_force(c, 0.05 * i);
    outside = std::max({outside, lo - f, f - hi});
  }
  suite.at_most("tmafm_range", "forcing", 4 * kEps, outside);
}

void numerics_checks(Suite& suite) {
  const auto params = validate_params({.m = 1.0, .omega0 = 1.0, .gamma = 0.1, .hbar = 1.0});
  const InitialState init{.Q0 = 3.0, .varphi = 0.0};

  auto rk4_error = [&](double dt) {
    const TimeGrid grid{.t_end = 20.0, .dt = dt};
    const auto states = rk4_integrate(params, ZeroForce{}, initial_ode_state(params, init), grid);
    double err = 0.0;
    for (const auto& s : states) {
      err = std::max(err, std::abs(s.q - homogeneous_solution(params, init, s.t).Q_h));
    }
    return err;
  };
  suite.at_least("rk4_convergence_ratio", "numerics", 8.0, rk4_error(0.1) / rk4_error(0.05));

  {
    const auto undamped = validate_params({.m = 1.0, .omega0 = 1.0, .gamma = 0.0, .hbar = 1.0});
    const TimeGrid grid{.t_end = 20.0 * std::numbers::pi, .dt = 1e-3};
    const auto states = rk4_integrate(undamped, ZeroForce{}, {0.0, 1.0, 0.0}, grid);
    const double e0 = 0.5;
    double drift = 0.0;
    for (const auto& s : states) drift = std::max(drift, std::abs(0.5 * (s.v * s.v + s.q * s.q) - e0) / e0);
    suite.at_most("rk4_energy_drift", "numerics", 1e-8, drift);
  }

  {
    const ForceModel force = TmafmForce{.F_ext = 0.3, .k = 0.5, .D0 = 0.5, .a0 = 0.3, .omega_d = 0.3, .m_eff = 1.0};
    const double h = 0.01;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(1, 2000);
    std::vector<int> panels(100);
    for (auto& k : panels) k = pick(rng);
    std::sort(panels.begin(), panels.end());

    ConvolutionAccumulator acc(h);
    std::vector<double> fast, naive;
    for (int k : panels) {
      const double t = k * h;
      acc.extend(force, params, t);
      fast.push_back(acc.value(params, t).Q_p);
      auto g = [&](double tp) {
        return eval_force(force, tp) / params.omega * std::exp(-params.gamma * (t - tp) / 2.0) *
               std::sin(params.omega * (t - tp));
      };
      double sum = 0.0;
      for (int i = 0; i < k; ++i) {
        const double a = i * h;
        const double b = (i + 1) * h;
        sum += h / 6.0 * (g(a) + 4.0 * g(0.5 * (a + b)) + g(b));
      }
      naive.push_back(sum);
    }
    suite.at_most("convolution_vs_naive_quadrature", "numerics", 1e-10, relative_sup_error(fast, naive));
  }
}

void classical_checks(Suite& suite, const ValidationOptions& options) {
  {
    Scenario s;
    s.params = validate_params({.m = 1.0, .omega0 = 1.0, .gamma = 0.0, .hbar = 1.0});
    s.init = {.Q0 = 3.0, .varphi = 0.3};
    s.force = ZeroForce{};
    s.grid = {.t_end = 20.0, .dt = 0.01};
    const double e0 = 0.5 * 9.0;
    double drift = 0.0;
    for (const auto& pt : trajectory(s)) {
      drift = std::max(drift, std::abs(classical_energy(s.params, pt) - e0) / e0);
    }
    suite.at_most("energy_conserved_undamped", "classical", 1e-12, drift);
  }

  for (FigureId id : kAllFigures) {
    Scenario s = corrupt(figure_scenario(id), options);
    s.grid.dt = 1e-3;
    const auto points = trajectory(s);
    const auto states = rk4_integrate(s.params, s.force, initial_ode_state(s.params, s.init), s.grid);
    std::vector<double> q, qd, rq, rqd;
    for (std::size_t i = 0; i < points.size(); ++i) {
      q.push_back(points[i].Q);
      qd.push_back(points[i].Qdot);
      rq.push_back(states[i].q);
      rqd.push_back(states[i].v);
    }
    const double err = std::max(relative_sup_error(q, rq), relative_sup_error(qd, rqd));
    suite.at_most("trajectory_vs_rk4_fig" + figure_name(id), "classical", 1e-5, err);
  }

  {
    Scenario s;
    s.params = validate_params({.m = 1.0, .omega0 = 1.0, .gamma = 0.1, .hbar = 1.0});
    s.init = {.Q0 = 0.0, .varphi = 0.0};
    s.grid = {.t_end = 10.0, .dt = 0.01};
    TabulatedForce f1, f2, sum;
    for (int i = 0; i <= 100; ++i) {
      const double t = 0.1 * i;
      const double a = std::sin(1.3 * t) + 0.2;
      const double b = 0.5 * std::cos(0.4 * t) * t;
      f1.t.push_back(t);
      f2.t.push_back(t);
      sum.t.push_back(t);
      f1.f.push_back(a);
      f2.f.push_back(b);
      sum.f.push_back(a + b);
    }
    auto response = [&](const ForceModel& f) {
      Scenario c = s;
      c.force = f;
      std::vector<double> q;
      for (const auto& pt : trajectory(c)) q.push_back(pt.Q);
      return q;
    };
    const auto q1 = response(f1);
    const auto q2 = response(f2);
    const auto qs = response(sum);
    std::vector<double> combined(q1.size());
    for (std::size_t i = 0; i < q1.size(); ++i) combined[i] = q1[i] + q2[i];
    suite.at_most("superposition", "classical", 1e-12, relative_sup_error(combined, qs));
  }
}

void quantum_checks(Suite& suite, const ValidationOptions& options) {
  for (FigureId id : kAllFigures) {
    const Scenario s = corrupt(figure_scenario(id), options);
    OscillatorParams limit = s.params;
    limit.hbar = 0.0;
    // Reference zero-point term from an independent evaluation of omega.
    const double omega = std::sqrt(s.params.omega0 * s.params.omega0 - s.params.gamma * s.params.gamma / 4.0);
    double corr = 0.0;
    double offset = 0.0;
    for (const auto& pt : trajectory(s)) {
      const auto e0 = quantum_energy(limit, pt);
      const double ec = classical_energy(s.params, pt);
      corr = std::max(corr, std::abs(e0.e_quantum - ec) / std::max(ec, 1e-30));
      const auto e = quantum_energy(s.params, pt);
      const double expected = 0.5 * s.params.hbar * s.params.omega0 * s.params.omega0 / omega *
                              std::exp(-s.params.gamma * pt.t);
      offset = std::max(offset, std::abs((e.e_quantum - ec) - expected) / expected);
    }
    suite.at_most("correspondence_hbar0_fig" + figure_name(id), "quantum", 1e-12, corr);
    suite.at_most("correspondence_zero_point_fig" + figure_name(id), "quantum", 1e-12, offset);
  }

  {
    Scenario s;
    s.params = validate_params({.m = 1.0, .omega0 = 1.0, .gamma = 0.1, .hbar = 1.0});
    s.init = {.Q0 = 3.0, .varphi = 0.0};
    s.force = ZeroForce{};
    s.grid = {.t_end = 20.0, .dt = 0.01};
    s = corrupt(s, options);
    double err = 0.0;
    for (const auto& pt : trajectory(s)) {
      const double a = quantum_energy(s.params, pt).e_quantum;
      const double b = quantum_energy_undriven(s.params, s.init, pt.t);
      err = std::max(err, std::abs(a - b) / std::abs(b));
    }
    suite.at_most("energy_driven_form_vs_undriven_form", "quantum", 1e-9, err);
  }

  {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double margin = std::numeric_limits<double>::infinity();
    double at_zero_gamma = 0.0;
    for (int i = 0; i < 1000; ++i) {
      OscillatorParams p{.m = 0.1 + u(rng), .omega0 = 0.1 + 3 * u(rng), .gamma = 0.0, .hbar = 0.1 + u(rng)};
      p.gamma = 1.99 * p.omega0 * u(rng);
      const auto v = validate_params(p);
      margin = std::min(margin, uncertainty_product(v) - v.hbar / 2.0);
      p.gamma = 0.0;
      const auto z = validate_params(p);
      at_zero_gamma = std::max(at_zero_gamma, std::abs(uncertainty_product(z) - z.hbar / 2.0));
    }
    suite.at_least("uncertainty_at_least_hbar_over_2", "quantum", 0.0, margin);
    suite.at_most("uncertainty_minimal_at_zero_damping", "quantum", 0.0, at_zero_gamma);

    Scenario s = figure_scenario(FigureId::Fig1a);
    s.grid = {.t_end = 1.0, .dt = 0.01};
    const ForceModel variants[] = {ZeroForce{}, ConstantForce{0.7}, s.force,
                                   SawtoothForce{.f0 = 1, .m = 1, .omega_d = 0.3, .n_terms = 10},
                                   TabulatedForce{{0.0, 2.0}, {1.0, -1.0}}};
    double reference = std::numeric_limits<double>::quiet_NaN();
    double spread = 0.0;
    for (const auto& f : variants) {
      s.force = f;
      for (const auto& row : simulate(s)) {
        if (std::isnan(reference)) reference = row.uncertainty_product;
        spread = std::max(spread, std::abs(row.uncertainty_product - reference));
      }
    }
    suite.at_most("uncertainty_force_independent", "quantum", 0.0, spread);
  }

  {
    double center = 0.0;
    double width = 0.0;
    double moments = 0.0;
    for (FigureId id : {FigureId::Fig1a, FigureId::Fig3a}) {
      const Scenario s = corrupt(figure_scenario(id), options);
      const auto points = trajectory(s);
      std::vector<double> q, c;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto w = wave_packet(s.params, s.init, points[i], s.chi);
        q.push_back(points[i].Q);
        c.push_back(w.center);
        const double law = w.sigma * w.sigma * s.params.m * s.params.omega * std::exp(s.params.gamma * w.t);
        width = std::max(width, std::abs(law - s.params.hbar / 2.0) / (s.params.hbar / 2.0));
        if (i % 20 == 0) {
          const double lo = w.center - 8 * w.sigma;
          const double hi = w.center + 8 * w.sigma;
          const double norm = simpson([&](double x) { return density(w, x); }, lo, hi, 10000);
          const double mean = simpson([&](double x) { return x * density(w, x); }, lo, hi, 10000);
          const double var = simpson([&](double x) { return (x - w.center) * (x - w.center) * density(w, x); },
                                     lo, hi, 10000);
          moments = std::max({moments, std::abs(norm - 1.0), std::abs(mean - points[i].Q),
                              std::abs(var - w.sigma * w.sigma) / (w.sigma * w.sigma)});
        }
      }
      center = std::max(center, relative_sup_error(c, q));
    }
    suite.at_most("wave_packet_center", "quantum", 1e-12, center);
    suite.at_most("wave_packet_width_law", "quantum", 1e-12, width);
    suite.at_most("wave_packet_moments", "quantum", 1e-6, moments);
  }
}

void cli_checks(Suite& suite) {
  Scenario s = figure_scenario(FigureId::Fig3b);
  s.grid.t_end = 2.0;
  const auto a = format_csv(simulate(s), {"t", "Q", "E_quantum"});
  const auto b = format_csv(simulate(s), {"t", "Q", "E_quantum"});
  suite.at_most("csv_deterministic", "cli", 0.0, a == b ? 0.0 : 1.0);
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  Suite suite;
  model_checks(suite);
  forcing_checks(suite);
  numerics_checks(suite);
  classical_checks(suite, options);
  quantum_checks(suite, options);
  cli_checks(suite);
  return suite.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string format_report_table(const std::vector<CheckResult>& results) {
  auto sci = [](double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 3);
    return std::string(buf, ptr);
  };
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width + 2)) << "check" << std::setw(11) << "module"
     << std::setw(15) << "tolerance" << std::setw(13) << "observed" << "verdict\n";
  for (const auto& r : results) {
    os << std::setw(static_cast<int>(width + 2)) << r.name << std::setw(11) << r.module
       << std::setw(15) << (r.relation + " " + sci(r.tolerance)) << std::setw(13) << sci(r.observed)
       << (r.passed ? "PASS" : "FAIL") << '\n';
  }
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  os << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  return os.str();
}

std::string format_report_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    checks.push_back({{"name", r.name},
                      {"module", r.module},
                      {"relation", r.relation},
                      {"tolerance", r.tolerance},
                      {"observed", r.observed},
                      {"passed", r.passed}});
  }
  return nlohmann::json{{"checks", checks}, {"all_passed", all_passed(results)}}.dump(2) + "\n";
}

}  // namespace ckosc
