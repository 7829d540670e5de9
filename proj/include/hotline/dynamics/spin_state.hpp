// spin_state.hpp — Density matrix of the qubit register with validity checks

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "hotline/errors.hpp"
#include "hotline/linalg.hpp"
#include "hotline/spin_basis.hpp"

namespace hotline::dyn {

// 2^N x 2^N density matrix in the sigma^z product basis (see spin_basis.hpp
// for the configuration ordering convention).
struct SpinRegisterState {
    Eigen::MatrixXcd rho;
    int n_qubits{0};

    static constexpr double hermiticity_tol = 1e-12;
    static constexpr double trace_tol = 1e-12;
    static constexpr double eigenvalue_floor = -1e-10;

    void validate() const {
        const auto dim = static_cast<Eigen::Index>(register_dim(n_qubits));
        if (rho.rows() != dim || rho.cols() != dim)
            throw validation_error("SpinRegisterState: dimension mismatch");
        if (!is_hermitian(rho, hermiticity_tol))
            throw validation_error("SpinRegisterState: not Hermitian within 1e-12");
        if (std::abs(rho.trace().real() - 1.0) > trace_tol || std::abs(rho.trace().imag()) > trace_tol)
            throw validation_error("SpinRegisterState: trace != 1 within 1e-12");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < eigenvalue_floor)
            throw validation_error("SpinRegisterState: negative eigenvalue " +
                                   std::to_string(es.eigenvalues().minCoeff()));
    }
};

inline SpinRegisterState pure_state(const Eigen::VectorXcd& psi, int n_qubits) {
    if (psi.size() != static_cast<Eigen::Index>(register_dim(n_qubits)))
        throw validation_error("pure_state: amplitude vector has wrong length");
    if (std::abs(psi.squaredNorm() - 1.0) > 1e-10)
        throw validation_error("pure_state: input is not normalized");
    return {psi * psi.adjoint(), n_qubits};
}

// |0> + i|1> on every qubit: the equatorial product state of the hot-gate runs
inline Eigen::VectorXcd equatorial_plus_i_state(int n_qubits) {
    const auto dim = register_dim(n_qubits);
    Eigen::VectorXcd psi(dim);
    const double norm = std::pow(2.0, -0.5 * n_qubits);
    for (config_t z = 0; z < dim; ++z) {
        int ones = std::popcount(z);
        psi(z) = norm * std::pow(cplx(0.0, 1.0), ones);
    }
    return psi;
}

// |-> = (|0> - |1>)/sqrt(2) on every qubit: the QAOA mixer ground state
inline Eigen::VectorXcd all_minus_state(int n_qubits) {
    const auto dim = register_dim(n_qubits);
    Eigen::VectorXcd psi(dim);
    const double norm = std::pow(2.0, -0.5 * n_qubits);
    for (config_t z = 0; z < dim; ++z) psi(z) = norm * parity(z);
    return psi;
}

} // namespace hotline::dyn
