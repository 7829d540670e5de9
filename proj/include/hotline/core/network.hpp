// network.hpp — Physical configuration of the qubit + transmission-line system
// and construction of the discretized photon mode set.
//
// Units: hbar = 1 throughout; temperature enters as k_B*T in the same angular
// frequency units as the mode frequencies. Lengths and the propagation speed
// only enter through omega_1 = pi*c/L and the cutoff ratio a/L.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hotline/errors.hpp"

namespace hotline::core {

struct QubitSpec {
    double position_x{0.0};     // location along the line, in [0, L - a]
    double frequency_omega{0.0}; // qubit splitting (>= 0)
    double base_coupling_g{0.0}; // coupling amplitude g_i, sign allowed
};

struct NetworkSpec {
    double length_L{std::numbers::pi};
    double speed_c{1.0};
    double cutoff_a{0.03 * std::numbers::pi};
    double temperature_T{0.0}; // k_B*T, frequency units
    std::vector<QubitSpec> qubits;

    double omega1() const { return std::numbers::pi * speed_c / length_L; }
    double round_trip_time() const { return 2.0 * length_L / speed_c; } // = 2*pi/omega1
    int n_qubits() const { return static_cast<int>(qubits.size()); }

    void validate() const {
        if (!(length_L > 0.0)) throw configuration_error("NetworkSpec: length_L must be > 0");
        if (!(speed_c > 0.0)) throw configuration_error("NetworkSpec: speed_c must be > 0");
        if (!(cutoff_a > 0.0 && cutoff_a < length_L))
            throw configuration_error("NetworkSpec: cutoff_a must lie in (0, L)");
        if (!(temperature_T >= 0.0) || !std::isfinite(temperature_T))
            throw configuration_error("NetworkSpec: temperature_T must be finite and >= 0");
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            const auto& q = qubits[i];
            if (!(q.position_x >= 0.0) || !(q.position_x + cutoff_a <= length_L))
                throw configuration_error("NetworkSpec: qubit " + std::to_string(i) +
                                          " coupling window [x, x+a] exceeds [0, L]");
            if (!(q.frequency_omega >= 0.0))
                throw configuration_error("NetworkSpec: qubit frequency must be >= 0");
            if (!std::isfinite(q.base_coupling_g))
                throw configuration_error("NetworkSpec: qubit coupling must be finite");
        }
    }

    std::vector<double> qubit_frequencies() const {
        std::vector<double> w;
        w.reserve(qubits.size());
        for (const auto& q : qubits) w.push_back(q.frequency_omega);
        return w;
    }
};

// Bose-Einstein occupation; T = 0 is handled as the exact vacuum.
inline double thermal_occupation(double omega, double temperature) {
    if (temperature <= 0.0) return 0.0;
    return 1.0 / std::expm1(omega / temperature);
}

// Box coupling profile f(x) = 1/a on (0, a). The profile is a customization
// point: build_mode_set and the closed-form coupling are templated on it.
struct BoxProfile {
    // integral of cos(k x) f(x - x_i) dx over the line
    static double fourier(double k, double x_i, double a) {
        // (sin(k(x+a)) - sin(kx))/(ka) written in a cancellation-free form
        const double half = 0.5 * k * a;
        return std::cos(k * (x_i + 0.5 * a)) * (std::sin(half) / half);
    }
    // integral of f(x - x_i) f(x - x_j) dx
    static double overlap(double x_i, double x_j, double a) {
        const double d = std::abs(x_i - x_j);
        return d >= a ? 0.0 : (a - d) / (a * a);
    }
};

struct ModeSet {
    int n_modes{0};
    Eigen::VectorXd omega;      // mode frequencies omega_n
    Eigen::VectorXd k;          // wavevectors k_n = n*pi/L
    Eigen::MatrixXd couplings;  // g_{i,n}, N x n_modes
    Eigen::VectorXd thermal_occ;

    void validate() const {
        if (n_modes < 1) throw configuration_error("ModeSet: need at least one mode");
        if (omega.size() != n_modes || k.size() != n_modes || thermal_occ.size() != n_modes ||
            couplings.cols() != n_modes)
            throw configuration_error("ModeSet: inconsistent dimensions");
        if (!omega.allFinite() || !couplings.allFinite() || !thermal_occ.allFinite())
            throw configuration_error("ModeSet: non-finite entries");
    }
};

// Default mode count from the cutoff rule omega_max * a / c >= 4*pi, i.e.
// several oscillations of the coupling profile across the cutoff window.
inline int default_mode_count(const NetworkSpec& spec) {
    return static_cast<int>(std::ceil(4.0 * spec.length_L / spec.cutoff_a));
}

// Linear spectrum omega_n = n*omega_1 with profile-regularized couplings
// g_{i,n} = g_i * sqrt(n) * integral cos(k_n x) f(x - x_i) dx.
template <class Profile = BoxProfile>
ModeSet build_mode_set(const NetworkSpec& spec, int n_modes) {
    spec.validate();
    if (n_modes < 1) throw configuration_error("build_mode_set: n_modes must be >= 1");

    const double w1 = spec.omega1();
    const int nq = spec.n_qubits();
    ModeSet modes;
    modes.n_modes = n_modes;
    modes.omega.resize(n_modes);
    modes.k.resize(n_modes);
    modes.thermal_occ.resize(n_modes);
    modes.couplings.resize(nq, n_modes);
    for (int n = 1; n <= n_modes; ++n) {
        const int col = n - 1;
        modes.omega(col) = n * w1;
        modes.k(col) = n * std::numbers::pi / spec.length_L;
        modes.thermal_occ(col) = thermal_occupation(modes.omega(col), spec.temperature_T);
        for (int i = 0; i < nq; ++i) {
            const auto& q = spec.qubits[i];
            modes.couplings(i, col) =
                q.base_coupling_g * std::sqrt(double(n)) *
                Profile::fourier(modes.k(col), q.position_x, spec.cutoff_a);
        }
    }
    return modes;
}

// Ultra-strong coupling is allowed (the longitudinal model stays exactly
// solvable) but worth surfacing to the scenario runner.
inline std::vector<std::string> coupling_warnings(const ModeSet& modes, double ratio = 1.0) {
    std::vector<std::string> out;
    for (int n = 0; n < modes.n_modes; ++n)
        for (int i = 0; i < modes.couplings.rows(); ++i)
            if (std::abs(modes.couplings(i, n)) >= ratio * modes.omega(n)) {
                out.push_back("ultra-strong coupling: |g_{" + std::to_string(i) + "," +
                              std::to_string(n + 1) + "}| >= " + std::to_string(ratio) +
                              " * omega_n");
                return out;
            }
    return out;
}

} // namespace hotline::core
