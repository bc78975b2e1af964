#pragma once

#include "polyfacet/geometry.hpp"
#include "polyfacet/io.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace polyfacet::testing {

inline std::string data_path(const std::string& name) { return std::string(POLYFACET_DATA_DIR) + "/" + name; }

inline Matrix rows_of(std::initializer_list<std::initializer_list<double>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto d = static_cast<Eigen::Index>(rows.begin()->size());
    Matrix M(n, d);
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        Eigen::Index c = 0;
        for (double x : row) M(r, c++) = x;
        ++r;
    }
    return M;
}

inline Vector vec(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index k = 0;
    for (double x : xs) v(k++) = x;
    return v;
}

struct Golden {
    std::string file;
    Matrix H;
    Vector b;
};

// H-representations printed with the worked examples.
inline std::vector<Golden> golden_fixtures() {
    return {
        {"triangle.ext", rows_of({{0, -1}, {-1, 0}, {1, 1}}), vec({0, 0, 3})},
        {"cube.ext", rows_of({{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}, {0, 0, 2}, {0, 2, 0}, {2, 0, 0}}),
         vec({0, 0, 0, 2, 2, 2})},
        {"octahedron.ext",
         rows_of({{-1, -1, 1}, {1, -1, 1}, {1, 1, 1}, {-1, 1, 1}, {-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1}}),
         Vector::Ones(8)},
        {"cross4.ext",
         rows_of({{-1, -1, -1, 1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, 1}, {1, -1, -1, 1}, {1, -1, 1, 1},
                  {1, 1, -1, 1}, {1, 1, 1, 1}, {-1, -1, 1, -1}, {-1, 1, 1, -1}, {1, -1, 1, -1}, {1, 1, 1, -1},
                  {-1, -1, -1, -1}, {-1, 1, -1, -1}, {1, -1, -1, -1}, {1, 1, -1, -1}}),
         Vector::Ones(16)},
        {"prism.ext",
         rows_of({{0, 0, 1}, {1, 0.25, 0}, {0, -1, 0}, {-1, -1.25, 0}, {-1, -0.25, 0}, {0, 1, 0}, {1, 1.25, 0},
                  {0, 0, -1}}),
         Vector::Ones(8)},
    };
}

inline VertexMatrix load(const std::string& name) { return read_ext(data_path(name)); }

}  // namespace polyfacet::testing
