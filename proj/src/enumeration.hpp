#pragma once

// Internal exact lattice-point walker.
//
// The Gram matrix is factored as an exact rational LDL^T (applied to the
// index-reversed matrix so that coordinate x_0 is the outermost loop). Every
// per-coordinate interval is scaled to integers: with D_j = p_j/q_j, column
// multipliers L_ij = W_ij/d_j and P = lcm_j(q_j d_j^2), the running constraint
//
//     sum_j n_j^2 w_j <= hi * P,   n_j = d_j y_j + sum_{i>j} W_ij y_i,
//     w_j = p_j P / (q_j d_j^2),
//
// is evaluated in plain integer arithmetic. The walk is performed either in
// 128-bit integers (after a setup-time certification that no intermediate can
// overflow) or in arbitrary precision as a fallback. No floating point enters
// any decision; the only float use is an initial estimate inside isqrt, which
// is corrected exactly.

#include "qf/errors.hpp"
#include "qf/forms.hpp"
#include "qf/int_types.hpp"
#include "qf/rational.hpp"

#include <vector>

namespace qf::detail {

enum class LeadingSign { Positive, Negative };

struct RationalLdlt {
    int k = 0;
    std::vector<Rational> diag;                 // D_j
    std::vector<std::vector<Rational>> lower;   // lower[j][i-j-1] = L_ij, i > j
};

// LDL^T of the index-reversed Gram matrix. Throws NotPositiveDefinite when a
// pivot fails to be positive.
RationalLdlt reversed_ldlt(const GramMatrix& a);

template <class I>
struct WalkPlan {
    int k = 0;
    I cap = 0;                        // hi * P
    I divisor = 0;                    // P
    std::vector<I> d;                 // column denominators d_j
    std::vector<I> w;                 // level weights w_j
    std::vector<std::vector<I>> wm;   // wm[i][j] = W_ij for j < i
};

struct BigWalkPlan {
    WalkPlan<BigInt> plan;
    bool fits128 = false;
};

BigWalkPlan build_walk_plan(const GramMatrix& a, Int hi);

template <class I>
WalkPlan<Int128> narrow_plan(const WalkPlan<I>& p);

// Depth-first walk over one representative of every {x, -x} pair with
// 0 < Q(x) <= hi. Emit is called as emit(Int value, const Int* x) when
// WithVector, else emit(Int value); returning false aborts the walk.
template <class I, bool WithVector, class Emit>
void walk(const WalkPlan<I>& plan, LeadingSign sign, std::uint64_t max_nodes,
          Emit&& emit) {
    const int k = plan.k;
    const I zero = 0;
    std::vector<I> used(static_cast<std::size_t>(k) + 1, zero);
    std::vector<I> y(k, zero), off(k, zero), ylo(k, zero), yhi(k, zero);
    std::vector<I> si(static_cast<std::size_t>(k + 1) * k, zero);
    std::vector<char> zp(static_cast<std::size_t>(k) + 1, 0);
    std::vector<Int> xbuf(WithVector ? k : 0);
    zp[k] = 1;

    auto si_at = [&](int i, int j) -> I& { return si[static_cast<std::size_t>(i) * k + j]; };

    std::uint64_t nodes = 0;
    auto enter = [&](int j) {
        I rem = plan.cap - used[j + 1];
        I q = isqrt(rem / plan.w[j]);
        off[j] = si_at(j + 1, j);
        I lo = ceil_div(-q - off[j], plan.d[j]);
        I hi = floor_div(q - off[j], plan.d[j]);
        if (zp[j + 1]) {
            if (sign == LeadingSign::Negative) {
                if (hi > 0) hi = 0;
            } else {
                if (lo < 0) lo = 0;
            }
        }
        ylo[j] = lo;
        yhi[j] = hi;
        y[j] = lo - 1;
    };

    int j = k - 1;
    enter(j);
    while (true) {
        ++y[j];
        if (y[j] > yhi[j]) {
            ++j;
            if (j == k) return;
            continue;
        }
        if (++nodes > max_nodes)
            throw BoundTooLarge("enumeration exceeded node budget");
        I n = plan.d[j] * y[j] + off[j];
        used[j] = used[j + 1] + n * n * plan.w[j];
        bool z = zp[j + 1] && y[j] == 0;
        if (j == 0) {
            if (!z) {
                Int value = static_cast<Int>(used[0] / plan.divisor);
                if constexpr (WithVector) {
                    for (int jj = 0; jj < k; ++jj)
                        xbuf[static_cast<std::size_t>(k) - 1 - jj] = static_cast<Int>(y[jj]);
                    if (!emit(value, xbuf.data())) return;
                } else {
                    if (!emit(value)) return;
                }
            }
        } else {
            zp[j] = z ? 1 : 0;
            for (int jj = 0; jj < j; ++jj)
                si_at(j, jj) = si_at(j + 1, jj) + plan.wm[j][jj] * y[j];
            --j;
            enter(j);
        }
    }
}

// Front end: builds the plan and dispatches to the 128-bit or wide walker.
template <bool WithVector, class Emit>
void enumerate_lattice(const GramMatrix& a, Int hi, LeadingSign sign,
                       const EnumerationLimits& limits, Emit&& emit) {
    if (hi < 0) return;
    BigWalkPlan bp = build_walk_plan(a, hi);
    if (bp.fits128) {
        WalkPlan<Int128> p = narrow_plan(bp.plan);
        walk<Int128, WithVector>(p, sign, limits.max_nodes, std::forward<Emit>(emit));
    } else {
        walk<BigInt, WithVector>(bp.plan, sign, limits.max_nodes, std::forward<Emit>(emit));
    }
}

}  // namespace qf::detail
