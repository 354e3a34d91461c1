#ifndef FROBMF_ERRORS_HPP
#define FROBMF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobmf {

/// Malformed polynomial text.
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation would exceed the configured size bound (r_e too large).
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frobmf

#endif
