#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "hotline/core/coupling.hpp"
#include "hotline/core/modulation.hpp"
#include "hotline/core/network.hpp"
#include "support/quadrature.hpp"

using namespace hotline;
using namespace hotline::core;
using std::numbers::pi;

namespace {

// Two qubits at the edges of the line, the hot-gate geometry
NetworkSpec edge_pair_spec(double a_over_L = 0.03, double g_over_w1 = 1.0 / std::sqrt(8.0),
                           double T_over_w1 = 1.0) {
    NetworkSpec spec;
    spec.length_L = pi; // omega1 = 1
    spec.speed_c = 1.0;
    spec.cutoff_a = a_over_L * spec.length_L;
    spec.temperature_T = T_over_w1 * spec.omega1();
    const double g = g_over_w1 * spec.omega1();
    spec.qubits = {{0.0, 0.0, g}, {spec.length_L - spec.cutoff_a, 0.0, g}};
    return spec;
}

// Point-like couplings g_i sqrt(n) cos(k_n x_i), the unregularized limit
ModeSet point_like_modes(const NetworkSpec& spec, int n_modes) {
    ModeSet modes;
    modes.n_modes = n_modes;
    modes.omega.resize(n_modes);
    modes.k.resize(n_modes);
    modes.thermal_occ = Eigen::VectorXd::Zero(n_modes);
    modes.couplings.resize(spec.n_qubits(), n_modes);
    for (int n = 1; n <= n_modes; ++n) {
        modes.omega(n - 1) = n * spec.omega1();
        modes.k(n - 1) = n * pi / spec.length_L;
        for (int i = 0; i < spec.n_qubits(); ++i)
            modes.couplings(i, n - 1) = spec.qubits[i].base_coupling_g * std::sqrt(double(n)) *
                                        std::cos(modes.k(n - 1) * spec.qubits[i].position_x);
    }
    return modes;
}

} // namespace

TEST_CASE("build_mode_set", "[core]") {
    SECTION("linear spectrum and thermal occupations") {
        auto spec = edge_pair_spec();
        auto modes = build_mode_set(spec, 12);
        for (int n = 1; n <= 12; ++n) {
            REQUIRE(modes.omega(n - 1) == Catch::Approx(n * spec.omega1()).epsilon(1e-15));
            REQUIRE(modes.k(n - 1) == Catch::Approx(n * pi / spec.length_L).epsilon(1e-15));
            const double nbar = 1.0 / std::expm1(modes.omega(n - 1) / spec.temperature_T);
            REQUIRE(modes.thermal_occ(n - 1) == Catch::Approx(nbar).epsilon(1e-14));
        }
        spec.temperature_T = 0.0;
        auto cold = build_mode_set(spec, 4);
        REQUIRE(cold.thermal_occ.cwiseAbs().maxCoeff() == 0.0);
    }

    SECTION("point-like limit a -> 0 at x_i = 0") {
        auto spec = edge_pair_spec();
        spec.cutoff_a = 1e-9 * spec.length_L;
        spec.qubits = {{0.0, 0.0, 0.7}};
        auto modes = build_mode_set(spec, 5);
        for (int n = 1; n <= 5; ++n)
            REQUIRE(modes.couplings(0, n - 1) ==
                    Catch::Approx(0.7 * std::sqrt(double(n))).epsilon(1e-12));
    }

    SECTION("zero base coupling zeroes the row") {
        auto spec = edge_pair_spec();
        spec.qubits[1].base_coupling_g = 0.0;
        auto modes = build_mode_set(spec, 20);
        REQUIRE(modes.couplings.row(1).cwiseAbs().maxCoeff() == 0.0);
        REQUIRE(modes.couplings.row(0).cwiseAbs().maxCoeff() > 0.0);
    }

    SECTION("entries match adaptive quadrature of the defining integral") {
        auto spec = edge_pair_spec(); // Fig.-2-style geometry, 30 modes
        auto modes = build_mode_set(spec, 30);
        for (int n : {1, 2, 7, 17, 30}) {
            const double k = n * pi / spec.length_L;
            for (int i = 0; i < 2; ++i) {
                const auto& q = spec.qubits[i];
                const double integral = testing::integrate(
                    [&](double x) { return std::cos(k * x) / spec.cutoff_a; }, q.position_x,
                    q.position_x + spec.cutoff_a, 1e-14);
                const double expected = q.base_coupling_g * std::sqrt(double(n)) * integral;
                REQUIRE(modes.couplings(i, n - 1) == Catch::Approx(expected).margin(1e-12));
            }
        }
    }

    SECTION("invalid geometry is rejected") {
        auto spec = edge_pair_spec();
        spec.qubits[1].position_x = spec.length_L - 0.5 * spec.cutoff_a;
        REQUIRE_THROWS_AS(build_mode_set(spec, 5), configuration_error);
        auto bad = edge_pair_spec();
        bad.cutoff_a = 2.0 * bad.length_L;
        REQUIRE_THROWS_AS(build_mode_set(bad, 5), configuration_error);
        REQUIRE_THROWS_AS(build_mode_set(edge_pair_spec(), 0), configuration_error);
    }
}

TEST_CASE("coupling_matrix_modesum", "[core]") {
    SECTION("single qubit has no off-diagonal entries") {
        auto spec = edge_pair_spec();
        spec.qubits.resize(1);
        auto J = coupling_matrix_modesum(build_mode_set(spec, 10));
        REQUIRE(J.size() == 1);
        REQUIRE(J.J(0, 0) == 0.0);
    }

    SECTION("converges to the closed form for separated qubits") {
        auto spec = edge_pair_spec();
        const double closed = coupling_matrix_closed_form(spec).J(0, 1);
        REQUIRE(closed == Catch::Approx(spec.omega1() / 8.0).epsilon(1e-14));

        // < 1% relative at the default mode count (the documented choice)
        const int n_doc = default_mode_count(spec);
        const double at_doc = coupling_matrix_modesum(build_mode_set(spec, n_doc)).J(0, 1);
        REQUIRE(std::abs(at_doc - closed) / closed < 0.01);

        // pair-averaged partial sums approach the closed form as n grows
        auto pair_avg_err = [&](int n) {
            const double s1 = coupling_matrix_modesum(build_mode_set(spec, n)).J(0, 1);
            const double s2 = coupling_matrix_modesum(build_mode_set(spec, n + 1)).J(0, 1);
            return std::abs(0.5 * (s1 + s2) - closed);
        };
        double prev = pair_avg_err(33);
        for (int n : {66, 133, 266}) {
            const double cur = pair_avg_err(n);
            REQUIRE(cur < prev);
            prev = cur;
        }
    }

    SECTION("point-like couplings do not converge") {
        auto spec = edge_pair_spec();
        spec.qubits[1].position_x = 0.0; // colocated point-like qubits: sum grows linearly
        const double j100 = coupling_matrix_modesum(point_like_modes(spec, 100)).J(0, 1);
        const double j200 = coupling_matrix_modesum(point_like_modes(spec, 200)).J(0, 1);
        const double j400 = coupling_matrix_modesum(point_like_modes(spec, 400)).J(0, 1);
        REQUIRE(std::abs(j200) > 1.9 * std::abs(j100));
        REQUIRE(std::abs(j400 - j200) >= std::abs(j200 - j100));
    }

    SECTION("symmetry and zero diagonal are exact") {
        auto spec = edge_pair_spec();
        spec.qubits.push_back({0.4 * spec.length_L, 1.3, -0.2});
        auto J = coupling_matrix_modesum(build_mode_set(spec, 57)).J;
        REQUIRE((J - J.transpose()).cwiseAbs().maxCoeff() == 0.0);
        REQUIRE(J.diagonal().cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("coupling_matrix_closed_form", "[core]") {
    SECTION("hot-gate fixture J12 = omega1/8") {
        auto spec = edge_pair_spec();
        REQUIRE(coupling_matrix_closed_form(spec).J(0, 1) ==
                Catch::Approx(spec.omega1() / 8.0).epsilon(1e-14));
    }

    SECTION("full overlap correction (1 - L/a), cross-checked by quadrature") {
        auto spec = edge_pair_spec();
        spec.qubits[1].position_x = spec.qubits[0].position_x = 0.2 * spec.length_L;
        const double g1 = spec.qubits[0].base_coupling_g;
        const double g2 = spec.qubits[1].base_coupling_g;
        const double expected =
            g1 * g2 / spec.omega1() * (1.0 - spec.length_L / spec.cutoff_a);
        REQUIRE(coupling_matrix_closed_form(spec).J(0, 1) ==
                Catch::Approx(expected).epsilon(1e-13));

        // partial overlap against numerical quadrature of the overlap integral,
        // restricted to the common support where the integrand is smooth
        spec.qubits[1].position_x = spec.qubits[0].position_x + 0.4 * spec.cutoff_a;
        const double a = spec.cutoff_a;
        const double x1 = spec.qubits[0].position_x, x2 = spec.qubits[1].position_x;
        const double ov = testing::integrate([&](double) { return 1.0 / (a * a); },
                                             std::max(x1, x2), std::min(x1 + a, x2 + a), 1e-13);
        const double want = g1 * g2 / spec.omega1() * (1.0 - spec.length_L * ov);
        REQUIRE(coupling_matrix_closed_form(spec).J(0, 1) == Catch::Approx(want).epsilon(1e-6));
    }

    SECTION("diagonal reported as zero") {
        auto J = coupling_matrix_closed_form(edge_pair_spec()).J;
        REQUIRE(J.diagonal().cwiseAbs().maxCoeff() == 0.0);
    }

    SECTION("cutoff independence under non-overlapping deformations") {
        std::mt19937_64 rng(42);
        auto spec = edge_pair_spec();
        const double reference = coupling_matrix_closed_form(spec).J(0, 1);
        for (int trial = 0; trial < 32; ++trial) {
            NetworkSpec s = spec;
            s.cutoff_a = (0.01 + 0.2 * (rng() % 1000) / 1000.0) * s.length_L;
            const double gap = s.cutoff_a * 1.01;
            const double x1 = (rng() % 1000) / 1000.0 * (s.length_L - 2 * s.cutoff_a - gap);
            s.qubits[0].position_x = x1;
            s.qubits[1].position_x = x1 + gap;
            REQUIRE(coupling_matrix_closed_form(s).J(0, 1) == reference);
        }
    }

    SECTION("J scales as 1/L at fixed g*L products") {
        auto spec1 = edge_pair_spec();
        NetworkSpec spec2 = spec1;
        spec2.length_L = 3.0 * spec1.length_L;
        spec2.cutoff_a = 3.0 * spec1.cutoff_a;
        for (auto& q : spec2.qubits) {
            q.position_x *= 3.0;
            q.base_coupling_g /= 3.0; // g ~ 1/L
        }
        REQUIRE(coupling_matrix_closed_form(spec2).J(0, 1) ==
                Catch::Approx(coupling_matrix_closed_form(spec1).J(0, 1) / 3.0).epsilon(1e-13));
    }
}

TEST_CASE("modulated_frame", "[core]") {
    auto spec = edge_pair_spec();
    const int n_modes = 6;
    DriveFrame frame;
    frame.detunings = Eigen::VectorXd::Constant(n_modes, 0.05 * spec.omega1());
    frame.drive_freqs.resize(n_modes);
    for (int n = 1; n <= n_modes; ++n)
        frame.drive_freqs(n - 1) = n * spec.omega1() - frame.detunings(n - 1);
    frame.amplitudes = Eigen::MatrixXd::Zero(2, n_modes);

    SECTION("all-zero amplitudes give an empty effective model") {
        auto model = modulated_frame(spec, frame);
        REQUIRE(model.effective.n_modes == 0);
        auto J = modulated_coupling_matrix(spec, frame).J;
        REQUIRE(J.cwiseAbs().maxCoeff() == 0.0);
    }

    SECTION("monochromatic drive reduces to a single effective mode") {
        frame.amplitudes.col(2).setConstant(0.002 * spec.omega1());
        auto model = modulated_frame(spec, frame);
        REQUIRE(model.effective.n_modes == 1);
        REQUIRE(model.effective.omega(0) == frame.detunings(2));
        REQUIRE(model.effective.couplings(0, 0) == Catch::Approx(0.001 * spec.omega1()));
        // J_ij ~ -A_i A_j / (2 Delta)
        auto J = modulated_coupling_matrix(spec, frame).J;
        const double a0 = frame.amplitudes(0, 2);
        REQUIRE(J(0, 1) == Catch::Approx(-a0 * a0 / (2.0 * frame.detunings(2))).epsilon(1e-12));
    }

    SECTION("sign flip of one qubit's amplitudes flips its J row and column") {
        frame.amplitudes.col(1).setConstant(0.004 * spec.omega1());
        frame.amplitudes.col(4).setConstant(0.001 * spec.omega1());
        auto J_base = modulated_coupling_matrix(spec, frame).J;
        frame.amplitudes.row(1) *= -1.0;
        auto J_flip = modulated_coupling_matrix(spec, frame).J;
        REQUIRE(J_flip(0, 1) == Catch::Approx(-J_base(0, 1)).epsilon(1e-14));
    }

    SECTION("zero detuning on a driven mode is singular") {
        frame.amplitudes.col(0).setConstant(1e-3);
        frame.detunings(0) = 0.0;
        REQUIRE_THROWS_AS(modulated_frame(spec, frame), singular_frame_error);
    }

    SECTION("large amplitude ratio is a warning, not an error") {
        frame.amplitudes.col(0).setConstant(0.5 * frame.drive_freqs(0));
        auto model = modulated_frame(spec, frame);
        REQUIRE_FALSE(model.warnings.empty());
    }
}
