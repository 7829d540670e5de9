// linalg.hpp — Dense matrix helpers: Kronecker products, Pauli operators,
// distance/overlap measures used across the dynamics and QAOA modules.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hotline {

using cplx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline MatrixXcd pauli_x() { return (MatrixXcd(2, 2) << 0, 1, 1, 0).finished(); }
inline MatrixXcd pauli_y() { return (MatrixXcd(2, 2) << 0, cplx(0, -1), cplx(0, 1), 0).finished(); }
inline MatrixXcd pauli_z() { return (MatrixXcd(2, 2) << 1, 0, 0, -1).finished(); }
inline MatrixXcd identity2() { return MatrixXcd::Identity(2, 2); }

// Operator acting as `op` on qubit `target` of an n-qubit register (LSB = qubit 0)
inline MatrixXcd embed_single_qubit(const MatrixXcd& op, int target, int n_qubits) {
    MatrixXcd out = MatrixXcd::Identity(1, 1);
    for (int q = n_qubits - 1; q >= 0; --q)
        out = kron(out, q == target ? op : identity2());
    return out;
}

inline bool is_hermitian(const MatrixXcd& m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline double purity(const MatrixXcd& rho) {
    return (rho * rho).trace().real();
}

// Trace distance (1/2)||rho - sigma||_1 for Hermitian inputs
inline double trace_distance(const MatrixXcd& rho, const MatrixXcd& sigma) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho - sigma, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// <psi| rho |psi>
inline double fidelity_with_pure(const MatrixXcd& rho, const VectorXcd& psi) {
    return std::real(psi.dot(rho * psi));
}

// Von Neumann entropy in bits; eigenvalues clamped at zero below `clamp_tol`
inline double vn_entropy_bits(const MatrixXcd& rho, double clamp_tol = 1e-12) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double p = es.eigenvalues()(i);
        if (p < -clamp_tol && p < -1e-9)
            throw std::invalid_argument("vn_entropy_bits: significantly negative eigenvalue");
        if (p > clamp_tol) s -= p * std::log2(p);
    }
    return s;
}

} // namespace hotline
