#ifndef POLYFUN_ERRORS_HPP
#define POLYFUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyfun {

// Bad user input: malformed documents, unknown names, invalid flag values.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration or size cap would be exceeded. Never a wrong
// answer: the operation refuses instead of guessing.
class CapError : public std::runtime_error {
  public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed. Either a bug or a falsified theorem;
// both must abort the run loudly rather than be reported as data.
class CheckFailed : public std::logic_error {
  public:
    explicit CheckFailed(const std::string& what) : std::logic_error(what) {}
};

} // namespace polyfun

#endif
