#ifndef RMRES_TESTS_SUPPORT_HPP
#define RMRES_TESTS_SUPPORT_HPP

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rmres/code.hpp"
#include "rmres/error.hpp"
#include "rmres/matrix.hpp"

namespace testing {

template <class F>
rmres::ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const rmres::Error& e) {
        return e.kind();
    }
    FAIL("expected an rmres::Error");
    return rmres::ErrorKind::InternalMismatch;
}

inline rmres::Matrix random_matrix(const rmres::FieldPtr& field, int rows, int cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, field->size() - 1);
    rmres::Matrix m(field, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = static_cast<rmres::Elem>(pick(rng));
    return m;
}

inline rmres::Matrix from_ints(const rmres::FieldPtr& field, const std::vector<std::vector<int>>& rows) {
    rmres::Matrix m(field, static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<rmres::Elem>(rows[i][j]);
    return m;
}

/// Support bitmask of every codeword, enumerated from the generator.
inline std::vector<std::uint32_t> code_supports(const rmres::LinearCode& code) {
    const int q = code.field().size();
    std::vector<std::uint32_t> out;
    rmres::Codeword msg = rmres::Codeword::Zero(code.k());
    while (true) {
        const rmres::Codeword c = code.encode(msg);
        out.push_back(oracle::support_mask(std::vector<int>(c.begin(), c.end())));
        Eigen::Index i = 0;
        while (i < msg.size() && msg(i) == q - 1) msg(i++) = 0;
        if (i == msg.size()) break;
        ++msg(i);
    }
    return out;
}

}  // namespace testing

#endif
