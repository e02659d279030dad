#pragma once

#include <stdexcept>
#include <string>

namespace fracdim {

/// Failure carrying a stable, machine-readable code ("bad-scale",
/// "empty-grid", ...). what() is "<code>: <detail>".
class Error : public std::runtime_error {
 public:
  explicit Error(std::string code, const std::string& detail = {});

  const std::string& code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

}  // namespace fracdim
