#ifndef GJ_ERRORS_HPP
#define GJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gj {

// Precondition violations on mathematically well-formed input
// (out-of-range parameter, missing involution, exact mode on a
// non-periodic matrix, ...). CLI exit code 3.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unparsable scalars, JSON that violates a schema,
// inconsistent multiplication tables. CLI exit code 2.
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured feasibility ceiling would be exceeded. CLI exit code 4.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace gj

#endif
