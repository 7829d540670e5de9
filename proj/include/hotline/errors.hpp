// errors.hpp — Exception taxonomy shared by all hotline modules

#pragma once

#include <stdexcept>
#include <string>

namespace hotline {

// Invalid geometry or physical parameters (bad lengths, negative rates, ...)
struct configuration_error : std::invalid_argument {
    explicit configuration_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed state input (unnormalized vector, non-density matrix, ...)
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Zero detuning with nonzero drive amplitude in the modulated frame
struct singular_frame_error : std::invalid_argument {
    explicit singular_frame_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Target matrix cannot be compiled under the requested strategy
struct compilation_error : std::runtime_error {
    explicit compilation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested Hilbert space exceeds the configured oracle limit
struct dimension_limit_error : std::runtime_error {
    explicit dimension_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Root bracketing / iterative solver failure, with diagnostics in the message
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Master-equation propagation failure (tolerance not met, trace drift)
struct integrator_error : std::runtime_error {
    explicit integrator_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Observable not defined for the given register size (e.g. concurrence for N != 2)
struct unsupported_observable_error : std::invalid_argument {
    explicit unsupported_observable_error(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace hotline
