#ifndef SUBSTOCH_IO_HPP
#define SUBSTOCH_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "substoch/cone.hpp"
#include "substoch/weighted_space.hpp"

// Plain-text exchange formats:
//   matrix <n> <m>   followed by n lines of m numbers
//   vector <n>       followed by one line of n numbers
//   weights <n>      followed by one line of n numbers (all > 0)
// Scientific notation is accepted.  Negative entries are rejected wherever
// non-negativity is required.  All output is printed with 17 significant
// digits, enough for an exact double round-trip.

namespace substoch {

struct ParsedMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> entries;
};

ParsedMatrix parse_matrix_file(const std::string& path);
std::vector<double> parse_vector_file(const std::string& path);
std::vector<double> parse_weights_file(const std::string& path);

// In-memory parsers backing the file readers; `origin` names the source in
// diagnostics.
ParsedMatrix parse_matrix(std::istream& in, const std::string& origin);
std::vector<double> parse_vector(std::istream& in, const std::string& origin);
std::vector<double> parse_weights(std::istream& in, const std::string& origin);

std::string format_number(double v);

void print_vector(std::ostream& out, const PositiveVector& x);
void print_matrix(std::ostream& out, const PositiveOperator& S);
/// Matrix format plus the sidecar line "completion lambda=<value>".
void print_completion(std::ostream& out, const Completion& completion);

}  // namespace substoch

#endif
