#include "esdmem/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "esdmem/channels.hpp"
#include "esdmem/csv.hpp"
#include "esdmem/esd.hpp"

namespace esdmem {

namespace {

using std::numbers::pi;

std::string sci(double v) { return format_number(v); }

SuiteResult verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

DensityMatrix random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix m(d, d);
  for (auto& x : m.entries()) x = Complex(g(rng), g(rng));
  ComplexMatrix rho = m * dagger(m);
  rho *= 1.0 / rho.trace().real();
  for (std::size_t i = 0; i < d; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < d; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return DensityMatrix(n, std::move(rho));
}

SuiteResult channels_cptp() {
  double worst = 0.0;
  bool ok = true;
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    for (const auto kind : {NoiseKind::dephasing, NoiseKind::depolarizing}) {
      const KrausChannel ch = single_qubit_channel(kind, p);
      ComplexMatrix sum(2, 2);
      for (const auto& k : ch.operators()) sum += dagger(k) * k;
      worst = std::max(worst, max_abs_diff(sum, ComplexMatrix::identity(2)));
      ok = ok && is_cptp(ch, tol::kStructural);
    }
  }
  return verdict("channels_cptp", ok, "max completeness defect " + sci(worst));
}

SuiteResult product_kraus_equivalence(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> up(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_state(rng, 3);
    for (const auto kind : {NoiseKind::dephasing, NoiseKind::depolarizing}) {
      const double p = up(rng);
      const auto fast = apply_independent(kind, p, rho);
      const auto explicit_product = apply(product_channel(kind, p, 3), rho);
      worst = std::max(worst, max_abs_diff(fast.matrix(), explicit_product.matrix()));
    }
  }
  return verdict("product_kraus_equivalence", worst < 1e-12, "max deviation " + sci(worst));
}

SuiteResult eigensolver_consistency(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(rng, 3);
    const auto herm = eigenvalues_hermitian(rho.matrix());
    auto gen = eigenvalues_general(rho.matrix());
    std::vector<double> gen_real;
    for (const auto& x : gen) {
      worst = std::max(worst, std::abs(x.imag()));
      gen_real.push_back(x.real());
    }
    std::sort(gen_real.begin(), gen_real.end(), std::greater<>());
    double sum = 0.0;
    for (std::size_t i = 0; i < herm.size(); ++i) {
      worst = std::max(worst, std::abs(herm[i] - gen_real[i]));
      sum += herm[i];
    }
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return verdict("eigensolver_consistency", worst < 1e-10, "max disagreement " + sci(worst));
}

SuiteResult closed_form_oracle(const std::string& name, CodeName code_name, NoiseKind kind,
                               const ClosedFormFn& closed_form) {
  const LogicalCode code = LogicalCode::make(code_name);
  const NoiseModel noise{kind, NoiseScope::independent};
  double worst = 0.0;
  for (int ia = 0; ia <= 10; ++ia) {
    for (int ib = 0; ib <= 10; ++ib) {
      const StoredQubit q{ia * (pi / 2.0) / 10.0, ib * (2.0 * pi) / 11.0};
      const DensityMatrix initial = encode(code, q);
      for (int ip = 0; ip <= 10; ++ip) {
        const double p = ip / 10.0;
        const DensityMatrix rho = apply_noise(noise, p, initial);
        const double simulated = reference_fidelity(code, rho, q);
        worst = std::max(worst, std::abs(simulated - closed_form(code_name, kind, q, p)));
      }
    }
  }
  return verdict(name, worst < 1e-10, "max |simulated - closed form| " + sci(worst));
}

SuiteResult collective_immunity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  std::uniform_real_distribution<double> half(0.0, pi / 2.0);
  std::uniform_int_distribution<int> axis_pick(0, 2);
  const LogicalCode dfs4 = LogicalCode::dfs4();
  const LogicalCode ns3 = LogicalCode::ns3();
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const StoredQubit q{half(rng), angle(rng)};
    const Axis axis = static_cast<Axis>(axis_pick(rng));
    const double theta = angle(rng);
    const auto r4 = conjugate_by(collective_rotation(axis, theta, 4), encode(dfs4, q));
    worst = std::max(worst, 1.0 - dfs_state_fidelity(r4, dfs4, q));
    const auto r3 = conjugate_by(collective_rotation(axis, theta, 3), encode(ns3, q));
    worst = std::max(worst, 1.0 - ns3_stored_fidelity(r3, q));
  }
  return verdict("collective_immunity", worst < 1e-10, "max fidelity loss " + sci(worst));
}

SuiteResult dfs4_threshold() {
  const double analytic = 1.0 - 1.0 / std::sqrt(3.0);
  const auto r = esd_threshold(LogicalCode::dfs4(), {NoiseKind::depolarizing, NoiseScope::independent},
                               {0.0, 0.0}, MetricId::negativity({1}));
  const bool ok = r.status == ThresholdStatus::crossing && std::abs(r.p_star - analytic) < 1e-8;
  return verdict("dfs4_depolarizing_threshold", ok,
                 "p* " + sci(r.p_star) + " vs 1-3^(-1/2) " + sci(analytic));
}

SuiteResult ns3_threshold() {
  const LogicalCode ns3 = LogicalCode::ns3();
  const NoiseModel noise{NoiseKind::depolarizing, NoiseScope::independent};
  const auto r = esd_threshold(ns3, noise, {0.0, 0.0}, MetricId::negativity({1}));
  if (r.status != ThresholdStatus::crossing) {
    return verdict("ns3_depolarizing_threshold", false, "no crossing found");
  }
  const double f = reference_fidelity(ns3, evolve(ns3, noise, {0.0, 0.0}, r.p_star), {0.0, 0.0});
  const bool ok = std::abs(r.p_star - 0.42486) < 1e-4 && std::abs(f - 0.59512) < 1e-3;
  return verdict("ns3_depolarizing_threshold", ok, "p* " + sci(r.p_star) + " F " + sci(f));
}

SuiteResult dephasing_no_esd() {
  const NoiseModel noise{NoiseKind::dephasing, NoiseScope::independent};
  const auto d = esd_threshold(LogicalCode::dfs4(), noise, {0.0, 0.0}, MetricId::negativity({1}));
  const auto n = esd_threshold(LogicalCode::ns3(), noise, {0.0, 0.0}, MetricId::negativity({1}));
  const bool ok = d.status == ThresholdStatus::no_esd && n.status == ThresholdStatus::no_esd;
  return verdict("dephasing_no_esd", ok,
                 std::string("dfs4 ") + std::string(to_string(d.status)) + ", ns3 " +
                     std::string(to_string(n.status)));
}

SuiteResult sweep_determinism(int jobs) {
  SweepSpec spec;
  spec.code = CodeName::dfs4;
  spec.noise = {NoiseKind::depolarizing, NoiseScope::independent};
  spec.metric = MetricId::negativity({1});
  spec.a_grid = linspace(0.0, pi / 2.0, 5);
  spec.b_grid = {0.0, pi / 3.0};
  spec.p_grid = linspace(0.0, 1.0, 9);
  const auto serial = sweep(spec, 1);
  const auto parallel = sweep(spec, std::max(2, jobs));
  bool same = serial.size() == parallel.size();
  for (std::size_t i = 0; same && i < serial.size(); ++i) {
    same = serial[i].a == parallel[i].a && serial[i].b == parallel[i].b &&
           serial[i].p == parallel[i].p && serial[i].value == parallel[i].value;
  }
  return verdict("sweep_determinism", same, std::to_string(serial.size()) + " rows compared");
}

}  // namespace

std::vector<SuiteResult> run_validation(const ValidationOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<SuiteResult> out;
  out.push_back(channels_cptp());
  out.push_back(product_kraus_equivalence(rng));
  out.push_back(eigensolver_consistency(rng));
  out.push_back(closed_form_oracle("dfs4_dephasing_closed_form", CodeName::dfs4, NoiseKind::dephasing,
                                   options.closed_form));
  out.push_back(closed_form_oracle("dfs4_depolarizing_closed_form", CodeName::dfs4, NoiseKind::depolarizing,
                                   options.closed_form));
  out.push_back(closed_form_oracle("ns3_dephasing_closed_form", CodeName::ns3, NoiseKind::dephasing,
                                   options.closed_form));
  out.push_back(closed_form_oracle("ns3_depolarizing_closed_form", CodeName::ns3, NoiseKind::depolarizing,
                                   options.closed_form));
  out.push_back(collective_immunity(rng));
  out.push_back(dfs4_threshold());
  out.push_back(ns3_threshold());
  out.push_back(dephasing_no_esd());
  out.push_back(sweep_determinism(options.jobs));
  return out;
}

bool print_report(std::ostream& out, const std::vector<SuiteResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  out << (all ? "all suites passed\n" : "validation FAILED\n");
  return all;
}

}  // namespace esdmem
