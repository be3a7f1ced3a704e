#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "esdmem/codes.hpp"
#include "esdmem/entanglement.hpp"
#include "esdmem/errors.hpp"
#include "oracles.hpp"

using namespace esdmem;
using std::numbers::pi;

namespace {

double f_dfs4_dephasing(double a, double b, double p) {
  const double s = std::sin(2 * a);
  return (48 + p * (11 * p - 48) + p * p * (std::cos(4 * a) + 2 * std::cos(2 * b) * s * s)) / 48;
}

double f_dfs4_depolarizing(double a, double b, double p) {
  const double c4 = std::cos(4 * a);
  return (p * p * (p - 1) * (p - 1) * (c4 + std::cos(2 * b) * (1 - c4)) + 8 * std::pow(p, 4) -
          34 * std::pow(p, 3) + 59 * p * p - 48 * p + 16) /
         16;
}

double f_ns3_dephasing(double a, double p) {
  return (12 - 5 * p - p * (2 * std::cos(2 * a) + std::cos(4 * a))) / 12;
}

double f_ns3_depolarizing(double a, double p) {
  return (4 - p * (5 + p * (p - 4)) - p * (p - 1) * (p - 1) * std::cos(4 * a)) / 4;
}

double norm_sq(const PureState& s) {
  double n = 0.0;
  for (const auto& x : s.amplitudes()) n += std::norm(x);
  return n;
}

}  // namespace

TEST_CASE("stored qubit") {
  const StoredQubit q{0.3, 1.1};
  const auto s = q.state();
  CHECK(std::abs(s[0] - std::cos(0.3)) < 1e-15);
  CHECK(std::abs(s[1] - std::polar(std::sin(0.3), 1.1)) < 1e-15);
  SUBCASE("canonical folding keeps the ray") {
    for (const StoredQubit raw : {StoredQubit{2.5, 0.4}, StoredQubit{-0.7, -1.0}, StoredQubit{4.0, 9.0}}) {
      const auto c = raw.canonical();
      CHECK(c.a >= 0.0);
      CHECK(c.a <= pi / 2);
      CHECK(c.b >= 0.0);
      CHECK(c.b < 2 * pi);
      const Complex overlap = raw.state().inner(c.state());
      CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("code bases") {
  SUBCASE("DFS4") {
    const auto [zero, one] = dfs4_basis();
    CHECK(std::abs(zero[0b0101] - 0.5) < 1e-15);
    CHECK(std::abs(zero[0b0110] + 0.5) < 1e-15);
    CHECK(std::abs(one[0b0011] - 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(one[0b0101] + 1.0 / std::sqrt(12.0)) < 1e-15);
    CHECK(std::abs(zero.inner(one)) < 1e-15);
    CHECK(norm_sq(one) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("NS3") {
    const auto b = ns3_basis();
    REQUIRE(b.size() == 4);
    const Complex w = std::polar(1.0, 2 * pi / 3);
    CHECK(std::abs(b[1][0b101] - w / std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(b[0][0b001] - 1.0 / std::sqrt(3.0)) < 1e-15);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(std::abs(b[i].inner(b[j]) - (i == j ? 1.0 : 0.0)) < 1e-14);
  }
  SUBCASE("small codes") {
    const auto [d0, d1] = dfs2_basis();
    CHECK(d0[0b01] == Complex(1.0));
    CHECK(d1[0b10] == Complex(1.0));
    const auto [p0, p1] = parity_ns2_states();
    CHECK(p0[0b00] == Complex(1.0));
    CHECK(p1[0b01] == Complex(1.0));
    CHECK(parity_projector(0)(3, 3) == Complex(1.0));
    CHECK(parity_projector(1)(1, 1) == Complex(1.0));
    CHECK(parity_projector(1)(0, 0) == Complex(0.0));
    CHECK_THROWS_AS(parity_projector(2), ArgumentError);
  }
  CHECK(parse_code_name("parity-ns2") == CodeName::parity_ns2);
  CHECK(to_string(CodeName::ns3) == "ns3");
  CHECK_THROWS_AS(parse_code_name("steane"), ArgumentError);
}

TEST_CASE("NS3 decoder") {
  const auto dec = ns3_decoder();
  CHECK(is_unitary(dec.decode_unitary, 1e-13));
  CHECK(dec.logical_qubit == 1);
  CHECK(dec.gauge_qubits == QubitSet{2, 3});
  const auto b = ns3_basis();
  // Decoded basis vectors land on |logical> ⊗ |gauge>.
  const std::size_t targets[] = {0b000, 0b001, 0b100, 0b101};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto v = dec.decode_unitary * b[k].amplitudes();
    CHECK(std::abs(std::abs(v[targets[k]]) - 1.0) < 1e-14);
  }
  SUBCASE("decoded logical state is the stored qubit") {
    const auto code = LogicalCode::ns3();
    for (const StoredQubit q : {StoredQubit{0.0, 0.0}, StoredQubit{0.4, 2.2}, StoredQubit{pi / 2, 0.0}}) {
      const auto logical = decode_logical(code, encode(code, q));
      CHECK(fidelity_pure(logical, q.state()) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("parity NS2 decodes through the odd/even sector") {
  const auto code = LogicalCode::parity_ns2();
  const StoredQubit q{0.9, 0.5};
  const auto logical = decode_logical(code, encode(code, q));
  CHECK(fidelity_pure(logical, q.state()) == doctest::Approx(1.0).epsilon(1e-13));
  // Product input, so nothing to lose.
  CHECK(concurrence(encode(code, q)) < 1e-12);
}

TEST_CASE("library closed forms agree with the test formulas") {
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j)
      for (int k = 0; k <= 6; ++k) {
        const StoredQubit q{i * pi / 12, j * pi / 3};
        const double p = k / 6.0;
        CHECK(closed_form_fidelity(CodeName::dfs4, NoiseKind::dephasing, q, p) ==
              doctest::Approx(f_dfs4_dephasing(q.a, q.b, p)).epsilon(1e-14));
        CHECK(closed_form_fidelity(CodeName::dfs4, NoiseKind::depolarizing, q, p) ==
              doctest::Approx(f_dfs4_depolarizing(q.a, q.b, p)).epsilon(1e-14));
        CHECK(closed_form_fidelity(CodeName::ns3, NoiseKind::dephasing, q, p) ==
              doctest::Approx(f_ns3_dephasing(q.a, p)).epsilon(1e-14));
        CHECK(closed_form_fidelity(CodeName::ns3, NoiseKind::depolarizing, q, p) ==
              doctest::Approx(f_ns3_depolarizing(q.a, p)).epsilon(1e-14));
      }
  CHECK_THROWS_AS(closed_form_fidelity(CodeName::dfs2, NoiseKind::dephasing, {}, 0.5), ArgumentError);
}

TEST_CASE("simulated fidelities follow the closed forms") {
  const auto dfs4 = LogicalCode::dfs4();
  const auto ns3 = LogicalCode::ns3();
  const NoiseModel deph{NoiseKind::dephasing, NoiseScope::independent};
  const NoiseModel depol{NoiseKind::depolarizing, NoiseScope::independent};
  double worst = 0.0;
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      const StoredQubit q{i * (pi / 2) / 8, j * (2 * pi) / 9};
      const auto r4 = encode(dfs4, q);
      const auto r3 = encode(ns3, q);
      for (int k = 0; k <= 8; ++k) {
        const double p = k / 8.0;
        worst = std::max(worst, std::abs(dfs_state_fidelity(apply_noise(deph, p, r4), dfs4, q) -
                                         f_dfs4_dephasing(q.a, q.b, p)));
        worst = std::max(worst, std::abs(dfs_state_fidelity(apply_noise(depol, p, r4), dfs4, q) -
                                         f_dfs4_depolarizing(q.a, q.b, p)));
        worst = std::max(worst, std::abs(ns3_stored_fidelity(apply_noise(deph, p, r3), q) -
                                         f_ns3_dephasing(q.a, p)));
        worst = std::max(worst, std::abs(ns3_stored_fidelity(apply_noise(depol, p, r3), q) -
                                         f_ns3_depolarizing(q.a, p)));
      }
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("limiting fidelities") {
  const auto dfs4 = LogicalCode::dfs4();
  const auto ns3 = LogicalCode::ns3();
  const NoiseModel deph{NoiseKind::dephasing, NoiseScope::independent};
  const NoiseModel depol{NoiseKind::depolarizing, NoiseScope::independent};
  const StoredQubit zero{0.0, 0.0};
  CHECK(dfs_state_fidelity(apply_noise(deph, 1.0, encode(dfs4, zero)), dfs4, zero) ==
        doctest::Approx(0.25).epsilon(1e-13));
  CHECK(std::abs(dfs_state_fidelity(apply_noise(depol, 1.0, encode(dfs4, {0.8, 2.0})), dfs4, {0.8, 2.0}) -
                 0.0625) < 1e-12);
  CHECK(ns3_stored_fidelity(apply_noise(deph, 1.0, encode(ns3, zero)), zero) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(ns3_stored_fidelity(apply_noise(depol, 1.0, encode(ns3, {1.0, 0.2})), {1.0, 0.2}) ==
        doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("NS3 dephasing fidelity does not depend on b") {
  const auto ns3 = LogicalCode::ns3();
  const NoiseModel deph{NoiseKind::dephasing, NoiseScope::independent};
  for (const double a : {0.2, 0.7, 1.3}) {
    const double f0 = ns3_stored_fidelity(apply_noise(deph, 0.6, encode(ns3, {a, 0.0})), {a, 0.0});
    for (const double b : {0.5, 2.0, 4.0}) {
      CHECK(std::abs(ns3_stored_fidelity(apply_noise(deph, 0.6, encode(ns3, {a, b})), {a, b}) - f0) < 1e-12);
    }
  }
}

TEST_CASE("collective immunity") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  const auto dfs4 = LogicalCode::dfs4();
  const auto ns3 = LogicalCode::ns3();
  bool ns3_state_changed = false;
  for (int trial = 0; trial < 20; ++trial) {
    const StoredQubit q{angle(rng) / 4, angle(rng)};
    const Axis axis = static_cast<Axis>(trial % 3);
    const double theta = angle(rng);
    const auto r4 = conjugate_by(collective_rotation(axis, theta, 4), encode(dfs4, q));
    CHECK(dfs_state_fidelity(r4, dfs4, q) == doctest::Approx(1.0).epsilon(1e-12));
    const auto r3 = conjugate_by(collective_rotation(axis, theta, 3), encode(ns3, q));
    CHECK(ns3_stored_fidelity(r3, q) == doctest::Approx(1.0).epsilon(1e-12));
    if (dfs_state_fidelity(r3, ns3, q) < 1.0 - 1e-6) ns3_state_changed = true;
  }
  CHECK(ns3_state_changed);
}

TEST_CASE("DFS2 singlet") {
  const auto code = LogicalCode::dfs2();
  const StoredQubit q{pi / 4, pi};
  const auto rho = encode(code, q);
  CHECK(concurrence(rho) == doctest::Approx(1.0).epsilon(1e-12));
  // Collective dephasing only adds phases to |01> and |10> equally.
  const auto out = apply(collective_dephasing_mixture(2), rho);
  CHECK(max_abs_diff(out.matrix(), rho.matrix()) < 1e-14);
  CHECK(!code.decoder().has_value());
  CHECK_THROWS_AS(stored_fidelity(code, rho, q), ArgumentError);
}
