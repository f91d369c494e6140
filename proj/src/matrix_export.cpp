#include "sympchar/matrix_export.hpp"

#include <sstream>

namespace sympchar::decomp {

std::string to_csv(const IntMatrix& m)
{
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j)
                os << ',';
            os << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json to_triplets(const IntMatrix& m)
{
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                entries.push_back({i + 1, j + 1, m(i, j)});
    return {{"size", m.rows()}, {"indexing", "one-based"}, {"entries", entries}};
}

std::string to_grid(const IntMatrix& m)
{
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j)
                os << ' ';
            const int v = m(i, j);
            if (v == 0)
                os << '.';
            else if (v == -1)
                os << '-';
            else
                os << v;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace sympchar::decomp
