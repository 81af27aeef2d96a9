#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apll/certificate.hpp"
#include "apll/geometry.hpp"
#include "apll/group.hpp"

namespace apll {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

inline std::int64_t parse_int(const std::string& s, int line, const char* field) {
    std::string t = strip(s);
    if (t.empty())
        throw ParseError("line " + std::to_string(line) + ": empty " + field);
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": bad integer '" + t +
                         "' in " + field);
    }
    if (pos != t.size())
        throw ParseError("line " + std::to_string(line) + ": bad integer '" + t +
                         "' in " + field);
    return v;
}

inline std::string expect_prefix(const std::string& line, const char* prefix,
                                 int line_no) {
    std::string t = strip(line);
    std::string p(prefix);
    if (t.rfind(p, 0) != 0)
        throw ParseError("line " + std::to_string(line_no) + ": expected '" + p +
                         "' prefix");
    return t.substr(p.size());
}

}  // namespace detail

// Element lists are ';'-separated, each element a ','-separated residue
// tuple, e.g. "0;1;6" in a cyclic group or "1,2;0,5" in a two-factor group.
inline GroupElement parse_element(const std::string& text, std::size_t components,
                                  int line_no) {
    auto parts = detail::split(detail::strip(text), ',');
    if (parts.size() != components)
        throw ParseError("line " + std::to_string(line_no) + ": element '" + text +
                         "' has " + std::to_string(parts.size()) + " components, group has " +
                         std::to_string(components));
    GroupElement g;
    for (const auto& p : parts)
        g.residues.push_back(detail::parse_int(p, line_no, "element residue"));
    return g;
}

inline std::string format_element(const GroupElement& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.residues.size(); ++i) {
        if (i) os << ',';
        os << g.residues[i];
    }
    return os.str();
}

// Certificate file:
//   group: d1 d2 ... dk
//   n: <int>
//   T0: <elem>;<elem>;...
//   T1: <elem>;...
inline Certificate read_certificate(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> std::string {
        while (std::getline(in, line)) {
            ++line_no;
            if (!detail::strip(line).empty()) return line;
        }
        throw ParseError("line " + std::to_string(line_no + 1) +
                         ": unexpected end of certificate file");
    };

    std::string group_part = detail::expect_prefix(next_line(), "group:", line_no);
    std::vector<std::int64_t> factors;
    {
        std::istringstream gs(group_part);
        std::string tok;
        while (gs >> tok) factors.push_back(detail::parse_int(tok, line_no, "group factor"));
        if (factors.empty())
            throw ParseError("line " + std::to_string(line_no) + ": no invariant factors");
    }
    Certificate cert;
    try {
        cert.group = make_group(factors);
    } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }

    cert.n = detail::parse_int(detail::expect_prefix(next_line(), "n:", line_no),
                               line_no, "n");

    auto parse_set = [&](const char* prefix) {
        std::string body = detail::strip(detail::expect_prefix(next_line(), prefix, line_no));
        std::vector<GroupElement> out;
        if (body.empty()) return out;
        for (const auto& tok : detail::split(body, ';')) {
            GroupElement g = parse_element(tok, cert.group->component_count(), line_no);
            if (!cert.group->contains(g))
                throw ParseError("line " + std::to_string(line_no) + ": element '" +
                                 tok + "' out of range for the group");
            out.push_back(std::move(g));
        }
        return out;
    };
    cert.t0 = parse_set("T0:");
    cert.t1 = parse_set("T1:");
    cert.canonicalize();
    return cert;
}

inline void write_certificate(std::ostream& os, const Certificate& cert) {
    os << "group:";
    for (auto d : cert.group->invariant_factors()) os << ' ' << d;
    os << "\nn: " << cert.n << "\nT0: ";
    for (std::size_t i = 0; i < cert.t0.size(); ++i) {
        if (i) os << ';';
        os << format_element(cert.t0[i]);
    }
    os << "\nT1: ";
    for (std::size_t i = 0; i < cert.t1.size(); ++i) {
        if (i) os << ';';
        os << format_element(cert.t1[i]);
    }
    os << '\n';
}

// Lattice file: first line n, then n rows of n space-separated integers.
inline LatticeBasis read_lattice(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> std::string {
        while (std::getline(in, line)) {
            ++line_no;
            if (!detail::strip(line).empty()) return line;
        }
        throw ParseError("line " + std::to_string(line_no + 1) +
                         ": unexpected end of lattice file");
    };
    LatticeBasis basis;
    basis.n = detail::parse_int(next_line(), line_no, "dimension");
    if (basis.n < 1)
        throw ParseError("line " + std::to_string(line_no) + ": dimension must be >= 1");
    for (std::int64_t r = 0; r < basis.n; ++r) {
        std::istringstream rs(next_line());
        std::vector<std::int64_t> row;
        std::string tok;
        while (rs >> tok) row.push_back(detail::parse_int(tok, line_no, "basis entry"));
        if (static_cast<std::int64_t>(row.size()) != basis.n)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(basis.n) + " entries, found " +
                             std::to_string(row.size()));
        basis.rows.push_back(std::move(row));
    }
    return basis;
}

}  // namespace apll
