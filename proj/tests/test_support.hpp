#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "lisum/zero_catalog.hpp"

namespace testing {

inline std::string data_path(const std::string& name) {
    return std::string(LISUM_DATA_DIR) + "/" + name;
}

inline const std::string& table_path() {
    static const std::string p = data_path("zeros_100k.txt");
    return p;
}

/// The 10^5-zero table, loaded once per process.
inline std::shared_ptr<const lisum::ZeroCatalog> full_catalog() {
    static const auto cat =
        std::make_shared<const lisum::ZeroCatalog>(lisum::ZeroCatalog::ingest(table_path()));
    return cat;
}

/// Distance in units in the last place of b.
inline long double ulps(long double a, long double b) {
    if (a == b) return 0;
    const long double scale = std::fabs(b) > 0 ? std::fabs(b) : std::fabs(a);
    return std::fabs(a - b) / (scale * std::numeric_limits<long double>::epsilon());
}

}  // namespace testing
