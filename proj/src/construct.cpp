#include "latprim/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace latprim {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

Lattice zn_ideal_lattice(long long n) {
    if (n < 2) throw std::invalid_argument("zn_ideal_lattice: n must be >= 2");
    if (n > 1'000'000) throw std::invalid_argument("zn_ideal_lattice: n must be <= 1000000");

    // Divisors ascending, with n itself (the zero ideal) moved to the end.
    std::vector<long long> divs;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::remove(divs.begin(), divs.end(), n), divs.end());
    divs.push_back(n);

    const std::size_t m = divs.size();
    std::unordered_map<long long, ElementId> index_of;
    std::vector<std::string> names(m);
    for (std::size_t i = 0; i < m; ++i) {
        index_of[divs[i]] = static_cast<ElementId>(i);
        names[i] = "(" + std::to_string(divs[i] == n ? 0 : divs[i]) + ")";
    }

    // (a) <= (b) iff b divides a; products and joins stay divisors of n.
    std::vector<std::vector<int>> leq(m, std::vector<int>(m, 0));
    std::vector<std::vector<ElementId>> mul(m, std::vector<ElementId>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            leq[i][j] = (divs[i] % divs[j] == 0) ? 1 : 0;
            mul[i][j] = index_of.at(gcd_ll(divs[i] * divs[j], n));
        }

    Lattice L = assemble_lattice(std::move(names), leq, mul);
    ValidationReport report = validate(L);
    if (!report.ok())
        throw std::logic_error("zn_ideal_lattice: construction failed validation for n=" +
                               std::to_string(n) + " (first axiom: " + report.failures.front().axiom + ")");
    return L;
}

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// Strips '#' comments, splits on whitespace, drops blank lines.
std::vector<Line> tokenize(std::string_view doc) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= doc.size()) {
        std::size_t eol = doc.find('\n', pos);
        std::string_view raw = doc.substr(pos, eol == std::string_view::npos ? doc.size() - pos : eol - pos);
        ++number;
        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line;
        line.number = number;
        std::istringstream ss{std::string(raw)};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

}  // namespace

Lattice lattice_from_text(std::string_view doc) {
    std::vector<Line> lines = tokenize(doc);
    std::size_t cursor = 0;
    auto next = [&]() -> const Line& {
        if (cursor >= lines.size()) {
            int last = lines.empty() ? 1 : lines.back().number;
            throw ParseError(last, "unexpected end of document");
        }
        return lines[cursor++];
    };

    const Line& header = next();
    if (header.tokens.size() != 2 || header.tokens[0] != "LATTICE")
        throw ParseError(header.number, "expected 'LATTICE <order>'");
    long long order = 0;
    try {
        order = std::stoll(header.tokens[1]);
    } catch (const std::exception&) {
        throw ParseError(header.number, "order is not a number: '" + header.tokens[1] + "'");
    }
    if (order < 2 || order > 100000)
        throw ParseError(header.number, "order must be in [2, 100000]");
    const std::size_t m = static_cast<std::size_t>(order);

    const Line& elements_hdr = next();
    if (elements_hdr.tokens.size() != 1 || elements_hdr.tokens[0] != "ELEMENTS")
        throw ParseError(elements_hdr.number, "expected 'ELEMENTS'");

    std::vector<std::string> names;
    std::unordered_map<std::string, ElementId> index_of;
    names.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Line& line = next();
        if (line.tokens.size() != 1)
            throw ParseError(line.number, "expected one element name per line");
        if (index_of.count(line.tokens[0]))
            throw ParseError(line.number, "duplicate element name '" + line.tokens[0] + "'");
        index_of[line.tokens[0]] = static_cast<ElementId>(i);
        names.push_back(line.tokens[0]);
    }

    auto lookup = [&](const Line& line, const std::string& name) -> ElementId {
        auto it = index_of.find(name);
        if (it == index_of.end())
            throw ParseError(line.number, "unknown element name '" + name + "'");
        return it->second;
    };

    const Line& top_line = next();
    if (top_line.tokens.size() != 2 || top_line.tokens[0] != "TOP")
        throw ParseError(top_line.number, "expected 'TOP <name>'");
    ElementId declared_top = lookup(top_line, top_line.tokens[1]);

    const Line& bottom_line = next();
    if (bottom_line.tokens.size() != 2 || bottom_line.tokens[0] != "BOTTOM")
        throw ParseError(bottom_line.number, "expected 'BOTTOM <name>'");
    ElementId declared_bottom = lookup(bottom_line, bottom_line.tokens[1]);

    const Line& leq_hdr = next();
    if (leq_hdr.tokens.size() != 1 || leq_hdr.tokens[0] != "LEQ")
        throw ParseError(leq_hdr.number, "expected 'LEQ'");
    std::vector<std::vector<int>> leq(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        const Line& line = next();
        if (line.tokens.size() != m)
            throw ParseError(line.number, "LEQ row has " + std::to_string(line.tokens.size()) +
                                              " entries, expected " + std::to_string(m));
        for (std::size_t j = 0; j < m; ++j) {
            if (line.tokens[j] != "0" && line.tokens[j] != "1")
                throw ParseError(line.number, "LEQ entries must be 0 or 1");
            leq[i][j] = line.tokens[j] == "1" ? 1 : 0;
        }
    }

    const Line& mul_hdr = next();
    if (mul_hdr.tokens.size() != 1 || mul_hdr.tokens[0] != "MUL")
        throw ParseError(mul_hdr.number, "expected 'MUL'");
    std::vector<std::vector<ElementId>> mul(m, std::vector<ElementId>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        const Line& line = next();
        if (line.tokens.size() != m)
            throw ParseError(line.number, "MUL row has " + std::to_string(line.tokens.size()) +
                                              " entries, expected " + std::to_string(m));
        for (std::size_t j = 0; j < m; ++j) mul[i][j] = lookup(line, line.tokens[j]);
    }

    if (cursor != lines.size())
        throw ParseError(lines[cursor].number, "trailing content after MUL table");

    Lattice L = assemble_lattice(std::move(names), leq, mul);
    ValidationReport report = validate(L);
    if (!report.ok())
        throw AxiomError("document is not a multiplicative lattice (first axiom: " +
                             report.failures.front().axiom + ")",
                         std::move(report));
    if (L.top != declared_top)
        throw ParseError(top_line.number, "declared TOP '" + top_line.tokens[1] +
                                              "' is not the greatest element");
    if (L.bottom != declared_bottom)
        throw ParseError(bottom_line.number, "declared BOTTOM '" + bottom_line.tokens[1] +
                                                 "' is not the least element");
    return L;
}

std::string lattice_to_text(const Lattice& L) {
    std::ostringstream out;
    out << "LATTICE " << L.order() << "\n";
    out << "ELEMENTS\n";
    for (ElementId i = 0; i < L.order(); ++i) out << L.name(i) << "\n";
    out << "TOP " << L.name(L.top) << "\n";
    out << "BOTTOM " << L.name(L.bottom) << "\n";
    out << "LEQ\n";
    for (ElementId i = 0; i < L.order(); ++i) {
        for (ElementId j = 0; j < L.order(); ++j) {
            if (j) out << ' ';
            out << (L.leq(i, j) ? '1' : '0');
        }
        out << "\n";
    }
    out << "MUL\n";
    for (ElementId i = 0; i < L.order(); ++i) {
        for (ElementId j = 0; j < L.order(); ++j) {
            if (j) out << ' ';
            out << L.name(L.mul(i, j));
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace latprim
