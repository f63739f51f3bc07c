#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace commat {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two polynomials from different rings were combined.
class ring_mismatch_error : public error {
public:
    using error::error;
};

/// A substitution map is cyclic or has conflicting rules.
class substitution_error : public error {
public:
    using error::error;
};

/// An exponent or degree would exceed the guarded range.
class exponent_overflow_error : public error {
public:
    using error::error;
};

/// A configurable resource guard (term ceiling, pair limit) was hit.
/// Signals "instance out of supported scale", never a wrong result.
class scale_exceeded_error : public error {
public:
    using error::error;
};

enum class VarKind : std::uint8_t { X = 0, Y = 1 };

/// One indeterminate x_{row,col} or y_{row,col} of K[X, Y], 1-based.
/// The total order is fixed for a session: kind first (all x before
/// all y), then row, then column.
struct VarId {
    VarKind kind{VarKind::X};
    std::uint8_t row{1};
    std::uint8_t col{1};

    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string name() const {
        std::string s(kind == VarKind::X ? "x_" : "y_");
        s += std::to_string(row);
        s += '_';
        s += std::to_string(col);
        return s;
    }
};

inline VarId xvar(int row, int col) {
    return VarId{VarKind::X, static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)};
}

inline VarId yvar(int row, int col) {
    return VarId{VarKind::Y, static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)};
}

/// True for 0 (exact integers) and primes below 2^31.
inline bool valid_characteristic(std::uint32_t c) {
    if (c == 0)
        return true;
    if (c < 2 || c >= (1u << 31))
        return false;
    for (std::uint32_t d = 2; d * d <= c; ++d)
        if (c % d == 0)
            return false;
    return true;
}

/// Descriptor of K[X, Y]: matrix size n and coefficient characteristic.
/// characteristic 0 means exact integers, otherwise a prime p < 2^31.
struct Ring {
    int n = 0;
    std::uint32_t characteristic = 0;

    friend bool operator==(const Ring&, const Ring&) = default;

    int var_count() const { return 2 * n * n; }

    bool contains(VarId v) const {
        return v.row >= 1 && v.col >= 1 && v.row <= n && v.col <= n;
    }

    void require_same(const Ring& other) const {
        if (!(*this == other))
            throw ring_mismatch_error("ring mismatch: (n=" + std::to_string(n) + ", char=" +
                                      std::to_string(characteristic) + ") vs (n=" + std::to_string(other.n) +
                                      ", char=" + std::to_string(other.characteristic) + ")");
    }
};

}  // namespace commat
