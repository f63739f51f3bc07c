#pragma once

#include <string>
#include <vector>

#include "commat/poly.hpp"

namespace commat {

/// n x n grid of polynomials, 1-based access.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(const Ring& ring, int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, Poly::zero(ring)) {}

    int size() const { return n_; }
    Poly& at(int i, int j) { return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }
    const Poly& at(int i, int j) const { return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }

private:
    int n_ = 0;
    std::vector<Poly> cells_;
};

/// The generic matrices X = (x_ij) and Y = (y_ij) over K[X, Y].
struct MatrixPair {
    Ring ring;
    PolyMatrix X;
    PolyMatrix Y;
};

/// Builds the generic pair for the given size and characteristic.
/// n = 2 is constructible for tests; theorem-level operations require
/// n >= 3.
MatrixPair generic_pair(int n, std::uint32_t characteristic);

/// The commutator matrix C = XY - YX.
PolyMatrix commutator(const MatrixPair& pair);

enum class IdealName { I, J, Full };

std::string ideal_name_string(IdealName name);

/// Ordered generator list of one of the three ideals:
///   I    = first n-1 diagonal entries c_11 .. c_{n-1,n-1},
///   J    = anti-diagonal entries c_{1,n}, c_{2,n-1}, ..., c_{n,1},
///   Full = I followed by J, with the duplicate center entry (odd n)
///          kept only in the diagonal block.
struct IdealSpec {
    IdealName name;
    int n;
    std::uint32_t characteristic;
    std::vector<Poly> generators;
};

IdealSpec ideal_spec(const MatrixPair& pair, IdealName name);

std::string ideal_spec_to_json(const IdealSpec& spec);

/// Symbolic premise of the determinantal-block reduction: after zeroing
/// x_11, y_11 and every entry of X and Y with both indices >= 2, each
/// c_ii (2 <= i <= n) must equal det Z_i = x_i1*y_1i - x_1i*y_i1 and
/// c_11 must equal minus their sum.
struct DetblockReport {
    int n;
    bool ok;
    std::vector<std::string> failures;
    /// The section's prose would also annihilate x_i1 and y_1i; the check
    /// implements the evident intended map (keep first row and column of
    /// both matrices). Recorded here rather than silently patched.
    std::string note;
};

DetblockReport detblock_reduction_check(int n);

std::string detblock_report_to_json(const DetblockReport& report);

}  // namespace commat
