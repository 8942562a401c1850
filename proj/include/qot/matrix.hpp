#ifndef QOT_MATRIX_HPP
#define QOT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace qot {

/// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(data.data() + r * cols, cols);
    }
    std::span<double> row(std::size_t r) {
        return std::span<double>(data.data() + r * cols, cols);
    }
};

}  // namespace qot

#endif
