#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fmc {

// Raised for any violated precondition on mathematical input. The kind string
// is a short machine-readable tag ("not_nested", "chart_region", ...) that the
// CLI forwards in its error JSON.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace fmc
