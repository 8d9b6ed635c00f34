#pragma once

#include <stdexcept>
#include <string>

namespace sb {

// An argument outside an operation's documented domain.  CLI exit code 2.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured search cap ran out before the answer was found.  The message
// names the search and the cap that was hit.  CLI exit code 3.
class cap_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input magnitude exceeds the range for which an algorithm's answer is
// certified (e.g. deterministic primality beyond its witness-set bound).
// We refuse rather than silently degrade.  CLI exit code 3.
class magnitude_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sb
