#pragma once

#include <string>
#include <vector>

#include "fracdim/error.hpp"
#include "fracdim/point_cloud.hpp"

namespace testing_support {

/// Code of the fracdim::Error thrown by f, or "<none>".
template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const fracdim::Error& e) {
    return e.code();
  }
  return "<none>";
}

inline fracdim::metrics::PointCloud cloud(std::size_t dim, std::vector<double> coords) {
  return fracdim::metrics::PointCloud(dim, std::move(coords), "test");
}

}  // namespace testing_support
