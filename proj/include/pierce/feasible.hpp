#pragma once

#include <optional>
#include <vector>

#include "pierce/halfplane.hpp"

namespace pierce {

namespace detail {

// One-variable system {p*x <= q}. Returns a witness or nullopt, using the
// fixed selection rule: midpoint of [lo, hi], lo+1 for [lo, inf), hi-1 for
// (-inf, hi], 0 when unconstrained.
struct VarBounds {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool infeasible = false;

    void add_upper(const Rational& v) {
        if (!hi || v < *hi) hi = v;
    }
    void add_lower(const Rational& v) {
        if (!lo || v > *lo) lo = v;
    }
    void add(const Rational& coeff, const Rational& rhs) {
        if (coeff > 0) add_upper(rhs / coeff);
        else if (coeff < 0) add_lower(rhs / coeff);
        else if (rhs < 0) infeasible = true;
    }

    std::optional<Rational> witness() const {
        if (infeasible) return std::nullopt;
        if (lo && hi) {
            if (*lo > *hi) return std::nullopt;
            return (*lo + *hi) / 2;
        }
        if (lo) return *lo + 1;
        if (hi) return *hi - 1;
        return Rational(0);
    }
};

} // namespace detail

// Feasibility of a finite conjunction of closed half-planes by Fourier-Motzkin
// elimination of y, then x. Exact, and deterministic: the witness depends only
// on the derived interval bounds, so the same constraint list always yields
// the same point. An empty list means the whole plane and yields (0, 0).
inline std::optional<Point> feasible(const std::vector<HalfPlane>& constraints) {
    // y-bounds as affine functions of x: lower slope*x + offset <= y, upper y <= ...
    struct Affine {
        Rational slope;
        Rational offset;
    };
    std::vector<Affine> lowers, uppers;
    detail::VarBounds xb;

    for (const HalfPlane& h : constraints) {
        if (h.b == 0) {
            xb.add(h.a, h.c); // pure x constraint
        } else {
            Affine f{-h.a / h.b, h.c / h.b};
            (h.b > 0 ? uppers : lowers).push_back(std::move(f));
        }
    }

    // Eliminate y: every lower bound must not exceed any upper bound.
    for (const Affine& lo : lowers)
        for (const Affine& up : uppers) xb.add(lo.slope - up.slope, up.offset - lo.offset);

    const auto x = xb.witness();
    if (!x) return std::nullopt;

    detail::VarBounds yb;
    for (const Affine& lo : lowers) yb.add_lower(lo.slope * *x + lo.offset);
    for (const Affine& up : uppers) yb.add_upper(up.slope * *x + up.offset);
    const auto y = yb.witness();
    if (!y) return std::nullopt; // unreachable: x satisfies all eliminants
    return Point{*x, *y};
}

} // namespace pierce
