#pragma once

#include <stdexcept>
#include <string>

namespace stirsum {

// Invalid argument or request outside an operation's domain (negative index,
// unknown formula id, x <= 0, ...). The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace stirsum
