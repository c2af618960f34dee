#ifndef DOMPOLY_ERRORS_HPP
#define DOMPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dompoly {

/// A subset enumeration would exceed a configured cap, or a quantity does not
/// fit the one-word mask representation.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// reversed_to_degree was asked for a reversal degree below the actual degree.
class DegreeTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// graph6 input is not decodable (bad length, stray bytes, order above 64).
class MalformedGraph6 : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge list text names an edge from a vertex to itself.
class SelfLoop : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge endpoint outside [0, n).
class VertexOutOfRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Family generator given an unknown name or out-of-range parameters.
class BadSpec : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation requires at least one vertex.
class EmptyGraph : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The designated edge subset spans no odd cycle.
class NotOddCyclic : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lexical error in edge list text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace dompoly

#endif // DOMPOLY_ERRORS_HPP
