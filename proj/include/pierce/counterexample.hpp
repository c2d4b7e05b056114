#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pierce/family.hpp"

namespace pierce {

// Parameter sequences for the unpierceable family. The default is
// t_n = 1 - 1/n, s_n = -n; a table config supplies finite lists for indices
// 3..N with the same shape: t strictly increasing inside (0, 1) and s strictly
// decreasing and negative. Arbitrary formulas are deliberately not accepted.
struct SequenceConfig {
    enum class Kind { default_sequences, table };

    Kind kind = Kind::default_sequences;
    std::vector<Rational> t; // table only; index n = 3 + offset
    std::vector<Rational> s;

    static SequenceConfig defaults() { return {}; }

    static SequenceConfig table(std::vector<Rational> t, std::vector<Rational> s) {
        SequenceConfig cfg;
        cfg.kind = Kind::table;
        cfg.t = std::move(t);
        cfg.s = std::move(s);
        cfg.validate();
        return cfg;
    }

    void validate() const {
        if (kind == Kind::default_sequences) return;
        if (t.size() != s.size() || t.empty())
            throw Error(Errc::bad_sequence, "table needs matching nonempty t and s lists");
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] <= 0 || t[i] >= 1)
                throw Error(Errc::bad_sequence, "t[" + std::to_string(i + 3) + "] outside (0,1)");
            if (s[i] >= 0)
                throw Error(Errc::bad_sequence, "s[" + std::to_string(i + 3) + "] not negative");
            if (i > 0 && t[i] <= t[i - 1])
                throw Error(Errc::bad_sequence, "t not strictly increasing at index " +
                                                    std::to_string(i + 3));
            if (i > 0 && s[i] >= s[i - 1])
                throw Error(Errc::bad_sequence, "s not strictly decreasing at index " +
                                                    std::to_string(i + 3));
        }
    }

    int last_index() const {
        return kind == Kind::default_sequences ? -1 : static_cast<int>(t.size()) + 2;
    }

    Rational t_at(int n) const {
        check_index(n);
        if (kind == Kind::default_sequences) return Rational(n - 1, n);
        return t[static_cast<std::size_t>(n - 3)];
    }

    Rational s_at(int n) const {
        check_index(n);
        if (kind == Kind::default_sequences) return Rational(-n);
        return s[static_cast<std::size_t>(n - 3)];
    }

private:
    void check_index(int n) const {
        if (n < 3) throw Error(Errc::bad_params, "sequence index " + std::to_string(n) + " < 3");
        if (kind == Kind::table && n > last_index())
            throw Error(Errc::bad_sequence,
                        "table covers indices 3.." + std::to_string(last_index()) + ", asked for " +
                            std::to_string(n));
    }
};

/// The wedge F_n = {x <= t_n} cap {y >= s_n (x - t_n)}, n >= 3.
inline ConvexRegion wedge_region(int n, const SequenceConfig& cfg) {
    const Rational t = cfg.t_at(n), s = cfg.s_at(n);
    return ConvexRegion{"F" + std::to_string(n), {{1, 0, t}, {s, -1, s * t}}};
}

inline ConvexRegion box_region(std::string label, const Rational& x0, const Rational& x1,
                               const Rational& y0, const Rational& y1) {
    return ConvexRegion{std::move(label), {{1, 0, x1}, {-1, 0, -x0}, {0, 1, y1}, {0, -1, -y0}}};
}

// Prefix F_1..F_N of the unpierceable family: two horizontal segments
// F_1 = [-1,1]x{0} and F_2 = [0,2]x{0}, then for n >= 3 the wedge of points on
// or left of the vertical line through (t_n, 0) and on or above the line of
// slope s_n through the same point.
inline Family generate(int n_max, const SequenceConfig& cfg) {
    if (n_max < 3) throw Error(Errc::bad_params, "need N >= 3, got " + std::to_string(n_max));
    cfg.validate();
    if (cfg.kind == SequenceConfig::Kind::table && cfg.last_index() < n_max)
        throw Error(Errc::bad_sequence, "table too short for N=" + std::to_string(n_max));

    Family f{"counterexample-N" + std::to_string(n_max), {}};
    f.regions.push_back(box_region("F1", -1, 1, 0, 0));
    f.regions.push_back(box_region("F2", 0, 2, 0, 0));
    for (int n = 3; n <= n_max; ++n) f.regions.push_back(wedge_region(n, cfg));
    return f;
}

/// Least y_n with {(0, y) : y >= y_n} inside F_n, namely -s_n * t_n.
inline Rational y_threshold(int n, const SequenceConfig& cfg) {
    return -cfg.s_at(n) * cfg.t_at(n);
}

inline bool in_wedge(const Point& p, int n, const SequenceConfig& cfg) {
    const Rational t = cfg.t_at(n), s = cfg.s_at(n);
    return p.x <= t && p.y >= s * (p.x - t);
}

// Escape computation for one point: the least M >= 3 with p outside F_n for
// every n >= M, together with the quantities of the divergence argument that
// certifies the tail (first index n0 whose t exceeds p.x, the slope s of the
// line from p to (t_n0, 0), and the first index m0 from which the wedge slopes
// drop below s). The proof-bound indices can be enormous even when the escape
// index itself is small, hence the wide integers.
struct EscapeTrace {
    Point point;
    std::optional<Int> n0;
    std::optional<Rational> slope_s;
    std::optional<Int> m0;
    int escape_index = 3;
};

namespace detail {

// The final escape index must stay inside int range; the intermediate bounds
// need not.
constexpr int kMaxEscapeIndex = 1000000000;

inline int checked_escape_index(const Int& v) {
    if (v > kMaxEscapeIndex)
        throw Error(Errc::invalid_input, "escape index beyond the supported range (<= 10^9)");
    return v.convert_to<int>();
}

/// Least integer m with m > r.
inline Int int_above(const Rational& r) { return rational_floor(r) + 1; }

/// Least integer m with m >= r.
inline Int int_at_least(const Rational& r) {
    Int v = rational_floor(r);
    if (Rational(v) != r) ++v;
    return v;
}

/// Wedge membership under the default sequences for arbitrarily large n.
inline bool in_default_wedge(const Point& p, const Int& n) {
    const Rational t(n - 1, n);
    const Rational s(-n);
    return p.x <= t && p.y >= s * (p.x - t);
}

} // namespace detail

// Escape index of a point under the default sequences. Membership in F_n holds
// exactly on an integer interval [A, C] of indices, so after the divergence
// argument caps the tail at max(n0, m0) the exact minimum is recovered by a
// binary search of direct membership tests. `window` further indices beyond
// the result are certified by direct membership.
inline EscapeTrace escape_index(const Point& p, const SequenceConfig& cfg, int window = 20) {
    if (window < 1) throw Error(Errc::bad_params, "window must be >= 1");

    EscapeTrace trace;
    trace.point = p;

    const auto certify = [&](int m) {
        for (int n = m; n <= m + window; ++n) {
            if (cfg.kind == SequenceConfig::Kind::table && n > cfg.last_index()) break;
            if (in_wedge(p, n, cfg))
                throw Error(Errc::invalid_input,
                            "escape certification failed at n=" + std::to_string(n));
        }
    };

    if (cfg.kind == SequenceConfig::Kind::table) {
        // A finite table cannot witness s_n -> -infinity; escape is provable
        // only when no admissible continuation of the table can recapture p.
        const int last = cfg.last_index();
        int table_escape = 3;
        for (int n = last; n >= 3; --n) {
            if (in_wedge(p, n, cfg)) {
                table_escape = n + 1;
                break;
            }
        }
        const bool provable = p.y < 0 || p.x >= 1 || (p.y == 0 && p.x <= cfg.t_at(last));
        if (!provable)
            throw Error(Errc::no_escape_proof,
                        "finite table cannot certify escape of " + to_string(p) +
                            "; relative to the table's last index " + std::to_string(last) +
                            " the point escapes at " + std::to_string(table_escape));
        trace.escape_index = table_escape;
        certify(trace.escape_index);
        return trace;
    }

    if (p.y < 0 || p.x >= 1) {
        trace.escape_index = 3; // no wedge reaches below the x-axis or right of x=1
        certify(3);
        return trace;
    }
    if (p.y == 0) {
        // On the x-axis, F_n meets y=0 only at (t_n, 0); with t_n = 1 - 1/n the
        // point lies in F_m exactly when 1/(1 - p.x) is an integer m >= 3.
        const Rational inv = 1 / (1 - p.x);
        if (rational_den(inv) == 1 && inv >= 3) {
            trace.escape_index = detail::checked_escape_index(rational_num(inv) + 1);
        } else {
            trace.escape_index = 3;
        }
        certify(trace.escape_index);
        return trace;
    }

    // p.y > 0 and p.x < 1: the divergence argument of the infinite construction.
    const Int n0 = std::max(Int(3), detail::int_above(1 / (1 - p.x)));
    const Rational slope = -p.y / (Rational(n0 - 1, n0) - p.x);
    const Int m0 = std::max(Int(3), detail::int_above(-slope));
    trace.n0 = n0;
    trace.slope_s = slope;
    trace.m0 = m0;
    const Int bound = std::max(n0, m0); // p outside F_n for all n >= bound

    // Membership indices form an interval [first, last] inside [3, bound):
    // the x-constraint admits n >= first and the y-gap below the slanted
    // boundary grows with n.
    const Int first = std::max(Int(3), detail::int_at_least(1 / (1 - p.x)));
    if (first >= bound || !detail::in_default_wedge(p, first)) {
        trace.escape_index = 3;
    } else {
        Int lo = first, hi = bound - 1; // in_wedge(lo) true; find the last true index
        while (lo < hi) {
            const Int mid = lo + (hi - lo + 1) / 2;
            if (detail::in_default_wedge(p, mid)) lo = mid;
            else hi = mid - 1;
        }
        trace.escape_index = detail::checked_escape_index(lo + 1);
    }
    certify(trace.escape_index);
    return trace;
}

struct UnpierceabilityCertificate {
    int n_star = 3; // F_{n_star} misses every point of the set
    std::vector<EscapeTrace> traces;
};

// Certificate that a finite point set is no transversal of the family's tail:
// F_{n*} with n* the largest escape index avoids all of them, re-verified by
// direct membership.
inline UnpierceabilityCertificate unpierceability_certificate(const std::vector<Point>& points,
                                                              const SequenceConfig& cfg,
                                                              int window = 20) {
    if (points.empty()) throw Error(Errc::bad_params, "empty point set");
    UnpierceabilityCertificate cert;
    for (const Point& p : points) {
        cert.traces.push_back(escape_index(p, cfg, window));
        cert.n_star = std::max(cert.n_star, cert.traces.back().escape_index);
    }
    for (const Point& p : points)
        if (in_wedge(p, cert.n_star, cfg))
            throw Error(Errc::invalid_input, "certificate verification failed at " + to_string(p));
    return cert;
}

// Appends k distinct compact boxes [0,1] x [-1/i, 1/i], each containing the
// segment [0,1]x{0}, labeled C1..Ck. The extension keeps the (4,3)-property:
// any two of the boxes still share every (t_n, 0).
inline Family extend_with_compacta(const Family& f, int k) {
    if (k < 1) throw Error(Errc::bad_params, "need k >= 1");
    Family out = f;
    for (int i = 1; i <= k; ++i)
        out.regions.push_back(
            box_region("C" + std::to_string(i), 0, 1, Rational(-1, i), Rational(1, i)));
    check_unique_labels(out);
    return out;
}

} // namespace pierce
