#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Malformed external input (state files, basis specs).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A domain invariant does not hold (non-Hermitian density matrix,
/// non-unit trace, negative eigenvalue beyond tolerance, ...).
struct InvariantError : std::invalid_argument {
    explicit InvariantError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qcorr
