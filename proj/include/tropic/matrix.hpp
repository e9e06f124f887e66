#pragma once

#include <optional>
#include <vector>

#include "tropic/rational.hpp"

namespace tropic {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;

QMat qmat_zero(std::size_t rows, std::size_t cols);
QMat qmat_identity(std::size_t n);
QMat qmat_mul(const QMat& a, const QMat& b);
QMat qmat_transpose(const QMat& a);
bool qmat_equal(const QMat& a, const QMat& b);
Rat qmat_det(QMat a);

/// Inverse of a square matrix; throws validation_error when singular.
QMat qmat_inverse(const QMat& a);

/// Basis of the right kernel {x : a x = 0}, as columns.
std::vector<QVec> qmat_kernel(QMat a);

/// Solve a x = b; nullopt when inconsistent. `a` need not be square.
std::optional<QVec> qmat_solve(QMat a, QVec b);

std::size_t qmat_rank(QMat a);

ZMat zmat_identity(std::size_t n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZMat zmat_transpose(const ZMat& a);
QMat zmat_to_q(const ZMat& a);

/// Integer entries of a rational matrix; throws when any entry is non-integral.
ZMat qmat_to_z(const QMat& a);

/// Inverse of a unimodular integer matrix (integer result).
ZMat zmat_unimodular_inverse(const ZMat& a);

/// Smith normal form: d = u * a * v with u, v unimodular and d diagonal
/// with nonnegative entries d1 | d2 | ...
struct SmithResult {
    ZMat u, v, d;
};
SmithResult smith_normal_form(const ZMat& a);

/// A unimodular matrix whose last rows are `b`; requires the rows of `b`
/// to span a saturated (cokernel-free) sublattice, i.e. all Smith invariant
/// factors of b equal 1.
std::optional<ZMat> complete_rows_to_unimodular(const ZMat& b, std::size_t n);

/// Rank of a symmetric PSD matrix via LDL^T with symmetric pivoting;
/// nullopt when the matrix is not positive semidefinite.
std::optional<std::size_t> psd_rank(QMat a);

/// Unit-lower-triangular LDL^T of a positive definite matrix:
/// a = l * diag(d) * l^T. Throws when not PD.
struct LdlResult {
    QMat l;
    QVec d;
};
LdlResult ldl_positive_definite(const QMat& a);

/// x^T a y for symmetric a.
Rat bilinear(const QMat& a, const ZVec& x, const ZVec& y);

} // namespace tropic
