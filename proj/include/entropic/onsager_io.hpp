#pragma once

// System descriptor: {"N": n, "L": [row-major n*n], "G": [row-major n*n], "y0": [n]}

#include <nlohmann/json.hpp>

#include <string>

#include "entropic/onsager.hpp"

namespace entropic::onsager {

namespace detail {
using entropic::detail::require;

inline std::vector<double> numbers(const nlohmann::json& j, const char* key, std::size_t count) {
  require(j.contains(key) && j.at(key).is_array(), std::string("onsager descriptor: missing array '") + key + "'");
  const auto& a = j.at(key);
  require(a.size() == count, std::string("onsager descriptor: '") + key + "' must have " + std::to_string(count) +
                                 " entries");
  std::vector<double> out;
  for (const auto& v : a) {
    require(v.is_number(), std::string("onsager descriptor: '") + key + "' entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace detail

inline OnsagerSystem system_from_json(const nlohmann::json& j) {
  detail::require(j.is_object() && j.contains("N") && j.at("N").is_number_integer(),
                  "onsager descriptor: missing integer 'N'");
  const long n = j.at("N").get<long>();
  detail::require(n >= 1, "onsager descriptor: N must be >= 1");
  const auto nn = static_cast<std::size_t>(n);
  const auto l = detail::numbers(j, "L", nn * nn);
  const auto g = detail::numbers(j, "G", nn * nn);
  const auto y = detail::numbers(j, "y0", nn);
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  return OnsagerSystem(Eigen::Map<const RowMajor>(l.data(), n, n), Eigen::Map<const RowMajor>(g.data(), n, n),
                       Eigen::Map<const VectorXd>(y.data(), n));
}

inline nlohmann::json system_to_json(const OnsagerSystem& sys) {
  nlohmann::json l = nlohmann::json::array(), g = nlohmann::json::array(), y = nlohmann::json::array();
  for (Eigen::Index i = 0; i < sys.dim(); ++i) {
    for (Eigen::Index k = 0; k < sys.dim(); ++k) {
      l.push_back(sys.L()(i, k));
      g.push_back(sys.G()(i, k));
    }
    y.push_back(sys.y0()(i));
  }
  return {{"N", sys.dim()}, {"L", l}, {"G", g}, {"y0", y}};
}

}  // namespace entropic::onsager
