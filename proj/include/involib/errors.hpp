#ifndef INVOLIB_ERRORS_HPP
#define INVOLIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace involib {

/// Rejected input: zero polynomials, duplicates, inhomogeneous input to a
/// routine that requires homogeneity, non-syzygies passed as syzygies.
class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A completion exceeded its iteration cap. Carries enough context to
/// report non-termination instead of hanging (Pommaret completions of
/// ideals without a finite Pommaret basis end up here).
class iteration_limit_error : public std::runtime_error {
public:
    iteration_limit_error(const std::string& what, long long iterations)
        : std::runtime_error(what), iterations_(iterations) {}
    long long iterations() const { return iterations_; }

private:
    long long iterations_;
};

class operation_cancelled : public std::runtime_error {
public:
    operation_cancelled() : std::runtime_error("operation cancelled") {}
};

/// Syntax or semantic error in a system file, with position information.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) +
                             ", column " + std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_, col_;
};

} // namespace involib

#endif
