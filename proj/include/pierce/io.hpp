#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pierce/counterexample.hpp"
#include "pierce/family.hpp"

namespace pierce {

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace detail

// Family file grammar, line oriented and exact:
//   file   := "family" NAME NL region+
//   region := "region" LABEL NL ("halfplane" RAT RAT RAT NL)+ "end" NL
//   RAT    := INT | INT "/" POSINT
// Blank lines are ignored. Rationals round-trip exactly; no floats anywhere.
inline Family parse_family(std::istream& in) {
    Family fam;
    std::string line;
    int lineno = 0;
    bool saw_family = false;
    bool in_region = false;

    auto fail = [&](const std::string& msg) -> void { throw Error(Errc::parse_error, msg, lineno); };

    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = detail::tokens(line);
        if (toks.empty()) continue;

        if (toks[0] == "family") {
            if (saw_family) fail("duplicate family header");
            if (toks.size() != 2) fail("expected: family NAME");
            fam.name = toks[1];
            saw_family = true;
        } else if (toks[0] == "region") {
            if (!saw_family) fail("region before family header");
            if (in_region) fail("nested region (missing 'end'?)");
            if (toks.size() != 2) fail("expected: region LABEL");
            if (fam.index_of(toks[1]))
                throw Error(Errc::duplicate_label, "'" + toks[1] + "'", lineno);
            fam.regions.push_back(ConvexRegion{toks[1], {}});
            in_region = true;
        } else if (toks[0] == "halfplane") {
            if (!in_region) fail("halfplane outside region");
            if (toks.size() != 4) fail("expected: halfplane A B C");
            auto rat = [&](const std::string& tok) -> Rational {
                try {
                    return parse_rational(tok);
                } catch (const Error&) {
                    fail("bad rational '" + tok + "'");
                    throw; // unreachable
                }
            };
            const Rational a = rat(toks[1]), b = rat(toks[2]), c = rat(toks[3]);
            if (a == 0 && b == 0) fail("half-plane with zero normal");
            fam.regions.back().constraints.emplace_back(a, b, c);
        } else if (toks[0] == "end") {
            if (!in_region) fail("'end' outside region");
            if (toks.size() != 1) fail("unexpected tokens after 'end'");
            if (fam.regions.back().constraints.empty()) fail("region with no halfplane lines");
            in_region = false;
        } else {
            fail("unknown directive '" + toks[0] + "'");
        }
    }
    ++lineno;
    if (!saw_family) fail("missing family header");
    if (in_region) fail("unterminated region (missing 'end')");
    if (fam.regions.empty()) fail("family with no regions");
    return fam;
}

inline Family parse_family(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

// Canonical serialization: constraints normalized, sorted and deduplicated,
// so parse-then-serialize is idempotent.
inline void serialize_family(const Family& fam, std::ostream& out) {
    out << "family " << fam.name << "\n";
    for (const ConvexRegion& r : fam.regions) {
        if (r.constraints.empty())
            throw Error(Errc::invalid_input,
                        "region '" + r.label + "' has no constraints; not representable");
        out << "region " << r.label << "\n";
        for (const HalfPlane& h : canonicalized(r).constraints)
            out << "halfplane " << to_string(h.a) << " " << to_string(h.b) << " " << to_string(h.c)
                << "\n";
        out << "end\n";
    }
}

inline std::string serialize_family(const Family& fam) {
    std::ostringstream out;
    serialize_family(fam, out);
    return out.str();
}

/// Points file: one "x y" rational pair per line; blank lines ignored.
inline std::vector<Point> parse_points(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = detail::tokens(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw Error(Errc::parse_error, "expected: X Y", lineno);
        try {
            pts.push_back(Point{parse_rational(toks[0]), parse_rational(toks[1])});
        } catch (const Error&) {
            throw Error(Errc::parse_error, "bad rational pair '" + line + "'", lineno);
        }
    }
    return pts;
}

// Sequence table file: one "t s" rational pair per line for n = 3, 4, ...;
// blank lines ignored. Validation of monotonicity and signs happens in
// SequenceConfig::table.
inline SequenceConfig parse_sequence_table(std::istream& in) {
    std::vector<Rational> t, s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = detail::tokens(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw Error(Errc::parse_error, "expected: T S", lineno);
        try {
            t.push_back(parse_rational(toks[0]));
            s.push_back(parse_rational(toks[1]));
        } catch (const Error&) {
            throw Error(Errc::parse_error, "bad rational pair '" + line + "'", lineno);
        }
    }
    return SequenceConfig::table(std::move(t), std::move(s));
}

} // namespace pierce
