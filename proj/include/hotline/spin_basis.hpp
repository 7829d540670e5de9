// spin_basis.hpp — Spin-configuration ordering convention for the qubit register
//
// The register state lives in the sigma^z product basis. Configuration index
// z in [0, 2^N) encodes qubit i in bit i (LSB = qubit 0); bit value 0 means
// sigma^z eigenvalue s_i = +1 (state |0>), bit value 1 means s_i = -1.

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hotline {

using config_t = std::uint32_t;

constexpr std::size_t register_dim(int n_qubits) noexcept {
    return std::size_t{1} << n_qubits;
}

// sigma^z eigenvalue of qubit i in configuration z
constexpr int spin_sign(config_t z, int qubit) noexcept {
    return ((z >> qubit) & 1u) ? -1 : +1;
}

constexpr config_t flip_all(config_t z, int n_qubits) noexcept {
    return z ^ ((config_t{1} << n_qubits) - 1u);
}

constexpr int parity(config_t z) noexcept {
    return (std::popcount(z) & 1) ? -1 : +1;
}

// E_z = sum_i omega_i s_i / 2 for a list of qubit frequencies
inline double configuration_energy(config_t z, const std::vector<double>& omegas) {
    double e = 0.0;
    for (std::size_t i = 0; i < omegas.size(); ++i)
        e += 0.5 * omegas[i] * spin_sign(z, static_cast<int>(i));
    return e;
}

} // namespace hotline
