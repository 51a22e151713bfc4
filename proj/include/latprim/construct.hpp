#pragma once

// Lattice constructors: the ideal lattices of Z_n, and a line-oriented text
// format for arbitrary finite multiplicative lattices (see
// docs/lattice-format.md for the grammar).

#include <stdexcept>
#include <string>
#include <string_view>

#include "latprim/lattice.hpp"

namespace latprim {

// Syntax or consistency error while reading a lattice document.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A parsed document whose tables violate a lattice axiom.
class AxiomError : public std::runtime_error {
public:
    AxiomError(std::string what, ValidationReport report)
        : std::runtime_error(std::move(what)), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// The lattice of ideals of Z_n.  Elements are the ideals (d) for each divisor
// d of n, ordered ascending by generator with the zero ideal last; the zero
// ideal is displayed "(0)".  (a) <= (b) iff b | a, (a) v (b) = (gcd(a,b)),
// (a) ^ (b) = (lcm(a,b)), and (a)(b) = (gcd(ab, n)).  The result always
// passes validate().  n must be in [2, 1'000'000].
Lattice zn_ideal_lattice(long long n);

// Parses the text format.  Throws ParseError for syntax/dimension/name
// problems and AxiomError (carrying the ValidationReport) when the document
// is well-formed but not a multiplicative lattice.
Lattice lattice_from_text(std::string_view doc);

// Canonical serialization; lattice_from_text is its inverse.
std::string lattice_to_text(const Lattice& L);

}  // namespace latprim
