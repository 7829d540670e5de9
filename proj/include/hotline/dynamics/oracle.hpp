// oracle.hpp — Brute-force reference dynamics: dense evolution of the full
// qubit + truncated-Fock Hamiltonian, followed by a partial trace over the
// bosons. Deliberately built from generic Kronecker products and a dense
// eigendecomposition so it shares no code path with the displaced-frame
// evaluator it validates.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

#include "hotline/core/network.hpp"
#include "hotline/dynamics/spin_state.hpp"
#include "hotline/errors.hpp"
#include "hotline/linalg.hpp"
#include "hotline/spin_basis.hpp"

namespace hotline::dyn {

struct OracleOptions {
    int fock_cutoff{12};           // highest retained Fock level per mode
    double dimension_limit{2e5};   // cap on 2^N * (fock_cutoff+1)^n_modes
    double weight_tolerance{1e-2}; // max admissible discarded thermal weight
};

struct OracleResult {
    std::vector<SpinRegisterState> states;
    double truncation_bound{0.0}; // discarded Boltzmann weight of the initial state
};

namespace detail {

inline MatrixXcd annihilator(int levels) {
    MatrixXcd a = MatrixXcd::Zero(levels, levels);
    for (int m = 1; m < levels; ++m) a(m - 1, m) = std::sqrt(double(m));
    return a;
}

} // namespace detail

inline OracleResult evolve_oracle(const core::NetworkSpec& spec, const core::ModeSet& modes,
                                  const Eigen::VectorXcd& psi0, const std::vector<double>& times,
                                  const OracleOptions& opt = {}) {
    spec.validate();
    modes.validate();
    const int nq = spec.n_qubits();
    const int levels = opt.fock_cutoff + 1;
    const auto spin_dim = static_cast<Eigen::Index>(register_dim(nq));
    if (psi0.size() != spin_dim) throw validation_error("evolve_oracle: bad initial state length");
    if (std::abs(psi0.squaredNorm() - 1.0) > 1e-10)
        throw validation_error("evolve_oracle: initial spin state not normalized");

    double total_dim = double(spin_dim);
    for (int n = 0; n < modes.n_modes; ++n) total_dim *= levels;
    if (total_dim > opt.dimension_limit)
        throw dimension_limit_error("evolve_oracle: Hilbert dimension " +
                                    std::to_string(total_dim) + " exceeds limit");
    const auto dim = static_cast<Eigen::Index>(total_dim);
    const Eigen::Index boson_dim = dim / spin_dim;

    // H = sum_i (omega_i/2) sz_i + sum_n omega_n a+a + sum_{i,n} g_in sz_i (a + a+)
    const MatrixXcd a_op = detail::annihilator(levels);
    const MatrixXcd num_op = a_op.adjoint() * a_op;
    const MatrixXcd quad_op = a_op + a_op.adjoint();
    const MatrixXcd id_levels = MatrixXcd::Identity(levels, levels);

    auto boson_embed = [&](const MatrixXcd& op, int mode) {
        MatrixXcd out = MatrixXcd::Identity(1, 1);
        for (int n = 0; n < modes.n_modes; ++n) out = kron(out, n == mode ? op : id_levels);
        return out;
    };

    MatrixXcd H = MatrixXcd::Zero(dim, dim);
    const MatrixXcd id_boson = MatrixXcd::Identity(boson_dim, boson_dim);
    for (int i = 0; i < nq; ++i) {
        const MatrixXcd sz = embed_single_qubit(pauli_z(), i, nq);
        H += kron(0.5 * spec.qubits[i].frequency_omega * sz, id_boson);
        for (int n = 0; n < modes.n_modes; ++n)
            H += modes.couplings(i, n) * kron(sz, boson_embed(quad_op, n));
    }
    const MatrixXcd id_spin = MatrixXcd::Identity(spin_dim, spin_dim);
    for (int n = 0; n < modes.n_modes; ++n)
        H += modes.omega(n) * kron(id_spin, boson_embed(num_op, n));

    // Thermal initial bosonic state: explicit Boltzmann mixture, renormalized,
    // with the discarded weight reported as the truncation bound.
    double kept_weight = 1.0;
    MatrixXcd rho_boson = MatrixXcd::Identity(1, 1);
    for (int n = 0; n < modes.n_modes; ++n) {
        Eigen::VectorXd p(levels);
        if (spec.temperature_T <= 0.0) {
            p.setZero();
            p(0) = 1.0;
        } else {
            const double q = std::exp(-modes.omega(n) / spec.temperature_T);
            double w = 1.0;
            for (int m = 0; m < levels; ++m, w *= q) p(m) = w;
            const double partial = p.sum();
            kept_weight *= partial * (1.0 - q); // full partition sum is 1/(1-q)
            p /= partial;
        }
        rho_boson = kron(rho_boson, p.cast<cplx>().asDiagonal());
    }
    const double truncation_bound = 1.0 - kept_weight;
    if (truncation_bound > opt.weight_tolerance)
        throw validation_error("evolve_oracle: discarded thermal weight " +
                               std::to_string(truncation_bound) + " exceeds tolerance");

    MatrixXcd rho0 = kron(psi0 * psi0.adjoint(), rho_boson);

    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
    if (es.info() != Eigen::Success) throw solver_error("evolve_oracle: eigensolver failed");
    const MatrixXcd& V = es.eigenvectors();
    const Eigen::VectorXd& lam = es.eigenvalues();
    const MatrixXcd rho_eig = V.adjoint() * rho0 * V;

    OracleResult result;
    result.truncation_bound = truncation_bound;
    result.states.reserve(times.size());
    for (double t : times) {
        VectorXcd phase(dim);
        for (Eigen::Index i = 0; i < dim; ++i) phase(i) = std::polar(1.0, -lam(i) * t);
        MatrixXcd sandwiched = rho_eig;
        for (Eigen::Index b = 0; b < dim; ++b)
            for (Eigen::Index a = 0; a < dim; ++a)
                sandwiched(a, b) *= phase(a) * std::conj(phase(b));
        const MatrixXcd rho_t = V * sandwiched * V.adjoint();

        MatrixXcd rho_spin = MatrixXcd::Zero(spin_dim, spin_dim);
        for (Eigen::Index s = 0; s < spin_dim; ++s)
            for (Eigen::Index sp = 0; sp < spin_dim; ++sp) {
                cplx acc = 0.0;
                for (Eigen::Index b = 0; b < boson_dim; ++b)
                    acc += rho_t(s * boson_dim + b, sp * boson_dim + b);
                rho_spin(s, sp) = acc;
            }
        result.states.push_back({std::move(rho_spin), nq});
    }
    return result;
}

} // namespace hotline::dyn
