#ifndef WITTKERNEL_ERRORS_HPP
#define WITTKERNEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wk {

// Malformed input text: tokens that do not scan as rationals, forms,
// places or Brauer classes.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside an operation's domain: zero form
// coefficient, malformed Brauer class, modulus mismatch, unsupported rank.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check between two independent routes to the same answer
// failed.  Reaching this is a bug in the library, never bad input; callers
// must surface it, not swallow it.
class TheoremError : public std::logic_error {
public:
    explicit TheoremError(const std::string& what) : std::logic_error(what) {}
};

} // namespace wk

#endif
