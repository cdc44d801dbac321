#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qcorr {

/// Row-major multi-index helpers: the first subsystem varies slowest,
/// matching the Kronecker-product ordering used throughout.

inline std::size_t dims_product(std::span<const std::size_t> dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) p *= d;
    return p;
}

inline std::vector<std::size_t> index_strides(std::span<const std::size_t> dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
    return strides;
}

inline std::size_t flatten_index(std::span<const std::size_t> idx,
                                 std::span<const std::size_t> strides) {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) flat += idx[i] * strides[i];
    return flat;
}

inline void unflatten_index(std::size_t flat, std::span<const std::size_t> dims,
                            std::span<std::size_t> out) {
    for (std::size_t i = dims.size(); i-- > 0;) {
        out[i] = flat % dims[i];
        flat /= dims[i];
    }
}

/// Advance a mixed-radix counter; returns false after wrapping past the end.
inline bool next_index(std::span<std::size_t> idx, std::span<const std::size_t> dims) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < dims[i]) return true;
        idx[i] = 0;
    }
    return false;
}

}  // namespace qcorr
