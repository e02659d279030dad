#include "fracdim/error.hpp"

namespace fracdim {

namespace {
std::string compose(const std::string& code, const std::string& detail) {
  return detail.empty() ? code : code + ": " + detail;
}
}  // namespace

Error::Error(std::string code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(std::move(code)), detail_(detail) {}

}  // namespace fracdim
