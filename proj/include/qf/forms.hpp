#pragma once

// Positive definite integral quadratic forms and their exact representation
// arithmetic. A form is carried by its Gram matrix A; the value of a vector x
// is Q(x) = x^T A x, so displayed matrices from the literature are consumed
// verbatim under this convention. Everything here is exact: positivity is
// decided by fraction-free elimination and enumerations derive per-coordinate
// bounds from an exact rational LDL^T decomposition, never from floating
// point.

#include "qf/errors.hpp"
#include "qf/int_types.hpp"
#include "qf/value_set.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

namespace qf {

using GramMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

struct EnumerationLimits {
    std::uint64_t max_nodes = 1'000'000'000;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt exact_determinant(const GramMatrix& a);

/// True iff the symmetric integer matrix has all leading principal minors
/// positive. Throws NonSymmetric when the input is not symmetric.
bool is_positive_definite(const GramMatrix& a);

/// Validated positive definite integral lattice, held by its Gram matrix.
class GramForm {
public:
    explicit GramForm(GramMatrix m);

    static GramForm diagonal(std::span<const Int> coeffs);
    static GramForm diagonal(std::initializer_list<Int> coeffs);

    const GramMatrix& matrix() const { return matrix_; }
    int rank() const { return static_cast<int>(matrix_.rows()); }
    const BigInt& det() const { return det_; }
    Int max_diagonal() const;
    Int min_diagonal() const;
    bool is_diagonal() const;

    Int evaluate(const IntVector& x) const;

    friend bool operator==(const GramForm& a, const GramForm& b) {
        return a.matrix_ == b.matrix_;
    }

private:
    GramForm(GramMatrix m, BigInt det) : matrix_(std::move(m)), det_(std::move(det)) {}

    GramMatrix matrix_;
    BigInt det_;
};

/// Nondecreasing positive coefficients a_1 <= ... <= a_k of a diagonal form.
class DiagonalForm {
public:
    explicit DiagonalForm(std::vector<Int> coeffs);
    DiagonalForm(std::initializer_list<Int> coeffs)
        : DiagonalForm(std::vector<Int>(coeffs)) {}

    const std::vector<Int>& coeffs() const { return coeffs_; }
    int rank() const { return static_cast<int>(coeffs_.size()); }
    GramForm to_gram() const;

    friend bool operator==(const DiagonalForm& a, const DiagonalForm& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend auto operator<=>(const DiagonalForm& a, const DiagonalForm& b) {
        return a.coeffs_ <=> b.coeffs_;
    }

private:
    std::vector<Int> coeffs_;
};

struct RepresentationWitness {
    IntVector vector;
    Int value = 0;
};

struct TruantResult {
    Int base = 0;
    Int cap = 0;
    std::optional<Int> missing;  // empty: all of [base, cap] represented

    bool all_represented() const { return !missing.has_value(); }
};

/// Q(f) ∩ [lo, hi] by exhaustive enumeration (dispatches to a value-set sweep
/// over orthogonal components where the matrix decomposes).
ValueSet represented_set(const GramForm& f, Int lo, Int hi,
                         const EnumerationLimits& limits = {});

/// Deterministic witness for m: the lexicographically least solution of
/// Q(x) = m under coordinate-major order, sign-normalized so the leading
/// nonzero coordinate is positive. Empty when m is not represented.
std::optional<RepresentationWitness> represents(const GramForm& f, Int m,
                                                const EnumerationLimits& limits = {});

/// Smallest integer in [n, cap] not represented by f.
TruantResult truant(const GramForm& f, Int n, Int cap,
                    const EnumerationLimits& limits = {});

/// min { Q(x) : x != 0 }.
Int minimum(const GramForm& f, const EnumerationLimits& limits = {});

GramForm orthogonal_sum(const GramForm& a, const GramForm& b);

/// Number of representations r(v) for v = 1..bound, counting x and -x
/// separately.
std::vector<Int> representation_counts(const GramForm& f, Int bound,
                                       const EnumerationLimits& limits = {});

/// All nonzero vectors with Q(x) <= bound, one representative per {x, -x}
/// pair (leading nonzero coordinate positive), in lexicographic order.
std::vector<RepresentationWitness> short_vectors(const GramForm& f, Int bound,
                                                 const EnumerationLimits& limits = {});

/// Value set [0, hi] of a diagonal form by a subset-sum style sweep.
ValueSet diagonal_value_set(std::span<const Int> coeffs, Int hi);

}  // namespace qf
