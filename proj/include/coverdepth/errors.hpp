#ifndef COVERDEPTH_ERRORS_HPP
#define COVERDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coverdepth
{

/// Malformed or inconsistent user input (bad graph, bad option, unknown name).
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Graph-file parse failure. Carries the 1-based line number of the offending line.
class ParseError : public InputError
{
public:
    enum class Kind
    {
        MalformedHeader,
        MalformedLine,
        VertexOutOfRange,
        LoopEdge,
        DuplicateEdge,
        EdgeCountMismatch
    };

    ParseError(Kind kind, int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line)
    {
    }

    Kind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    Kind kind_;
    int line_;
};

/// The brute-force oracle refused an instance. `estimate` is the projected
/// number of grid evaluations that exceeded the configured budget.
class BudgetExceeded : public std::runtime_error
{
public:
    BudgetExceeded(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate)
    {
    }

    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

/// A construction that must succeed by theory did not. Never caught internally.
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace coverdepth

#endif // COVERDEPTH_ERRORS_HPP
