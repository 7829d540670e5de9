// evolve.hpp — Exact finite-temperature register dynamics at arbitrary times.
//
// Longitudinal coupling makes the model exactly solvable: populations in the
// sigma^z basis are conserved, and each coherence picks up the free phase
// e^{-i(E_z - E_z')t}, the displaced-frame phase e^{i(Phi_z - Phi_z')}, and a
// thermal decoherence factor prod_n exp[-(2 nbar_n + 1)|dalpha_n|^2 / 2] with
// dalpha_n = (lambda_n(z) - lambda_n(z'))(1 - e^{-i omega_n t})/omega_n.
// At stroboscopic times of a linear spectrum all dalpha vanish and the map
// reduces to the pure phase gate. These closed forms are locked against the
// dense truncated-Fock oracle by the equivalence suite.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "hotline/core/network.hpp"
#include "hotline/dynamics/displacement.hpp"
#include "hotline/dynamics/spin_state.hpp"
#include "hotline/errors.hpp"

namespace hotline::dyn {

inline std::vector<SpinRegisterState> evolve_exact(const core::NetworkSpec& spec,
                                                   const core::ModeSet& modes,
                                                   const Eigen::VectorXcd& psi0,
                                                   const std::vector<double>& times) {
    spec.validate();
    modes.validate();
    const int nq = spec.n_qubits();
    const auto dim = static_cast<Eigen::Index>(register_dim(nq));
    if (psi0.size() != dim) throw validation_error("evolve_exact: bad initial state length");
    if (std::abs(psi0.squaredNorm() - 1.0) > 1e-10)
        throw validation_error("evolve_exact: initial spin state not normalized");

    const auto rec = DisplacementRecord::build(modes);
    const auto omegas = spec.qubit_frequencies();
    Eigen::VectorXd energy(dim);
    for (Eigen::Index z = 0; z < dim; ++z)
        energy(z) = configuration_energy(static_cast<config_t>(z), omegas);

    std::vector<SpinRegisterState> out;
    out.reserve(times.size());
    Eigen::VectorXd phi(dim);
    for (double t : times) {
        // per-mode decoherence weight and phase kernel at this time
        Eigen::VectorXd decoh_w(modes.n_modes), phase_w(modes.n_modes);
        for (int n = 0; n < modes.n_modes; ++n) {
            const double w = modes.omega(n);
            const double s = std::sin(0.5 * w * t);
            decoh_w(n) = (2.0 * modes.thermal_occ(n) + 1.0) * 2.0 * s * s / (w * w);
            phase_w(n) = (w * t - std::sin(w * t)) / (w * w);
        }
        for (Eigen::Index z = 0; z < dim; ++z) {
            double acc = 0.0;
            for (int n = 0; n < modes.n_modes; ++n)
                acc += rec.lambda(z, n) * rec.lambda(z, n) * phase_w(n);
            phi(z) = acc;
        }

        Eigen::MatrixXcd rho(dim, dim);
        for (Eigen::Index z = 0; z < dim; ++z) {
            rho(z, z) = std::norm(psi0(z));
            for (Eigen::Index zp = z + 1; zp < dim; ++zp) {
                double damp = 0.0;
                for (int n = 0; n < modes.n_modes; ++n) {
                    const double dl = rec.lambda(z, n) - rec.lambda(zp, n);
                    damp += dl * dl * decoh_w(n);
                }
                const double arg = -(energy(z) - energy(zp)) * t + (phi(z) - phi(zp));
                const cplx coh = psi0(z) * std::conj(psi0(zp)) *
                                 std::polar(std::exp(-damp), arg);
                rho(z, zp) = coh;
                rho(zp, z) = std::conj(coh);
            }
        }
        out.push_back({std::move(rho), nq});
    }
    return out;
}

} // namespace hotline::dyn
