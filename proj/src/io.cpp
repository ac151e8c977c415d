#include "substoch/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace substoch {

namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& msg) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
}

struct LineReader {
    std::istream& in;
    std::string origin;
    std::size_t line_no = 0;

    // Next non-blank line.
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            bool blank = true;
            for (char c : out)
                if (!std::isspace(static_cast<unsigned char>(c))) {
                    blank = false;
                    break;
                }
            if (!blank) return true;
        }
        return false;
    }
};

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::size_t parse_count(const std::string& tok, LineReader& r, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        fail(r.origin, r.line_no, what + " must be a positive integer, got '" + tok + "'");
    }
}

double parse_entry(const std::string& tok, LineReader& r, bool require_nonneg,
                   bool require_positive) {
    double v = 0.0;
    try {
        std::size_t used = 0;
        v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
        fail(r.origin, r.line_no, "expected a number, got '" + tok + "'");
    }
    if (!std::isfinite(v)) fail(r.origin, r.line_no, "entry '" + tok + "' is not finite");
    if (require_positive && !(v > 0.0))
        fail(r.origin, r.line_no, "entry '" + tok + "' must be strictly positive");
    if (require_nonneg && v < 0.0)
        fail(r.origin, r.line_no, "entry '" + tok + "' must be non-negative");
    return v;
}

std::vector<double> parse_one_line_values(LineReader& r, std::size_t n, bool require_positive) {
    std::string line;
    if (!r.next(line)) fail(r.origin, r.line_no + 1, "expected a line of values");
    const auto toks = tokens(line);
    if (toks.size() != n)
        fail(r.origin, r.line_no,
             "expected " + std::to_string(n) + " values, got " + std::to_string(toks.size()));
    std::vector<double> out;
    out.reserve(n);
    for (const auto& t : toks) out.push_back(parse_entry(t, r, true, require_positive));
    return out;
}

std::vector<double> parse_vector_like(std::istream& in, const std::string& origin,
                                      const std::string& header, bool require_positive) {
    LineReader r{in, origin};
    std::string line;
    if (!r.next(line)) fail(origin, 1, "empty file, expected '" + header + " <n>' header");
    const auto toks = tokens(line);
    if (toks.size() != 2 || toks[0] != header)
        fail(origin, r.line_no, "expected header '" + header + " <n>', got '" + line + "'");
    const std::size_t n = parse_count(toks[1], r, "size");
    auto values = parse_one_line_values(r, n, require_positive);
    if (r.next(line)) fail(origin, r.line_no, "unexpected trailing content '" + line + "'");
    return values;
}

}  // namespace

ParsedMatrix parse_matrix(std::istream& in, const std::string& origin) {
    LineReader r{in, origin};
    std::string line;
    if (!r.next(line)) fail(origin, 1, "empty file, expected 'matrix <n> <m>' header");
    const auto toks = tokens(line);
    if (toks.size() != 3 || toks[0] != "matrix")
        fail(origin, r.line_no, "expected header 'matrix <n> <m>', got '" + line + "'");
    ParsedMatrix out;
    out.rows = parse_count(toks[1], r, "row count");
    out.cols = parse_count(toks[2], r, "column count");
    out.entries.reserve(out.rows * out.cols);
    for (std::size_t i = 0; i < out.rows; ++i) {
        auto row = parse_one_line_values(r, out.cols, false);
        out.entries.insert(out.entries.end(), row.begin(), row.end());
    }
    if (r.next(line)) fail(origin, r.line_no, "unexpected trailing content '" + line + "'");
    return out;
}

std::vector<double> parse_vector(std::istream& in, const std::string& origin) {
    return parse_vector_like(in, origin, "vector", false);
}

std::vector<double> parse_weights(std::istream& in, const std::string& origin) {
    return parse_vector_like(in, origin, "weights", true);
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ":0: cannot open file");
    return in;
}

}  // namespace

ParsedMatrix parse_matrix_file(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_matrix(in, path);
}

std::vector<double> parse_vector_file(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_vector(in, path);
}

std::vector<double> parse_weights_file(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_weights(in, path);
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

void print_vector(std::ostream& out, const PositiveVector& x) {
    out << "vector " << x.size() << "\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out << ' ';
        out << format_number(x[i]);
    }
    out << "\n";
}

void print_matrix(std::ostream& out, const PositiveOperator& S) {
    const std::size_t n = S.size();
    out << "matrix " << n << " " << n << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << format_number(S.at(i, j));
        }
        out << "\n";
    }
}

void print_completion(std::ostream& out, const Completion& completion) {
    print_matrix(out, completion.A);
    out << "completion lambda=" << format_number(completion.lambda) << "\n";
}

}  // namespace substoch
