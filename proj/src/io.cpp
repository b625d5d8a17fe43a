#include "reflexorb/io.hpp"

#include "reflexorb/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace reflexorb {

namespace {

bool is_integer_token(const std::string& t)
{
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size())
        return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void fail(std::size_t line, const std::string& msg)
{
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Integer> read_integers(const std::string& text, std::size_t line)
{
    std::istringstream ss(text);
    std::vector<Integer> out;
    std::string tok;
    while (ss >> tok) {
        if (!is_integer_token(tok))
            fail(line, "not an integer: '" + tok + "'");
        out.emplace_back(tok[0] == '+' ? tok.substr(1) : tok, 10);
    }
    return out;
}

}  // namespace

std::vector<LatticeVector> parse_vertex_text(std::istream& in)
{
    std::string text;
    std::size_t line_no = 0;
    std::size_t count = 0, dim = 0;
    bool have_header = false;
    std::vector<LatticeVector> rows;
    while (std::getline(in, text)) {
        ++line_no;
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#')
            continue;
        auto values = read_integers(text, line_no);
        if (!have_header) {
            if (values.size() != 2)
                fail(line_no, "header must be 'V n'");
            if (sgn(values[0]) <= 0 || sgn(values[1]) <= 0 || !values[0].fits_ulong_p() ||
                !values[1].fits_ulong_p())
                fail(line_no, "header counts must be positive");
            count = values[0].get_ui();
            dim = values[1].get_ui();
            have_header = true;
            continue;
        }
        if (rows.size() == count)
            fail(line_no, "more rows than the header's V = " + std::to_string(count));
        if (values.size() != dim)
            fail(line_no, "expected " + std::to_string(dim) + " integers, got " + std::to_string(values.size()));
        rows.emplace_back(std::move(values));
    }
    if (!have_header)
        fail(line_no, "missing 'V n' header");
    if (rows.size() != count)
        fail(line_no, "header announces " + std::to_string(count) + " rows, found " + std::to_string(rows.size()));
    return rows;
}

LatticePolytope parse_vertex_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::parse_error, "cannot open " + path.string());
    const auto rows = parse_vertex_text(in);
    return LatticePolytope::from_vertices(rows);
}

std::string format_vertex_matrix(std::span<const LatticeVector> rows)
{
    std::string s = std::to_string(rows.size()) + " " + std::to_string(rows.empty() ? 0 : rows.front().dim()) + "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.dim(); ++i) {
            if (i)
                s += ' ';
            s += r[i].get_str();
        }
        s += '\n';
    }
    return s;
}

std::vector<LatticeVector> wps_rays(std::span<const std::uint64_t> weights)
{
    if (weights.size() < 3)
        throw Error(ErrorCode::parse_error, "need at least three weights (n >= 2)");
    if (std::any_of(weights.begin(), weights.end(), [](auto w) { return w == 0; }))
        throw Error(ErrorCode::parse_error, "weights must be positive");
    // Well-formed: dropping any single weight leaves a coprime set.
    for (std::size_t skip = 0; skip < weights.size(); ++skip) {
        std::uint64_t g = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (i != skip)
                g = std::gcd(g, weights[i]);
        if (g != 1)
            throw Error(ErrorCode::parse_error, "weights are not well-formed");
    }
    const auto min_it = std::min_element(weights.begin(), weights.end());
    if (*min_it != 1)
        throw Error(ErrorCode::parse_error, "the minimal weight must be 1");

    std::vector<std::uint64_t> rest;
    for (auto it = weights.begin(); it != weights.end(); ++it)
        if (it != min_it)
            rest.push_back(*it);
    const std::size_t n = rest.size();
    std::vector<LatticeVector> rays;
    LatticeVector v0(n);
    for (std::size_t i = 0; i < n; ++i)
        v0[i] = -Integer(static_cast<unsigned long>(rest[i]));
    rays.push_back(std::move(v0));
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    return rays;
}

LatticePolytope wps_polytope(std::span<const std::uint64_t> weights)
{
    LatticePolytope p = LatticePolytope::from_vertices(wps_rays(weights));
    if (!is_reflexive(p))
        throw Error(ErrorCode::not_reflexive, "convex hull of the weighted projective space rays is not reflexive");
    return p;
}

}  // namespace reflexorb
