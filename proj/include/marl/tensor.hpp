#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace marl::nn {

// Dense row-major matrix of 64-bit reals. Row count doubles as the batch
// dimension everywhere in this library.
struct Tensor2 {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Tensor2() = default;
    Tensor2(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}
    Tensor2(int r, int c, std::vector<double> values);

    static Tensor2 zeros(int r, int c) { return Tensor2(r, c); }
    static Tensor2 from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static Tensor2 row(const std::vector<double>& values);

    double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    const double* row_ptr(int r) const { return data.data() + static_cast<size_t>(r) * cols; }
    double* row_ptr(int r) { return data.data() + static_cast<size_t>(r) * cols; }

    size_t size() const { return data.size(); }
    bool same_shape(const Tensor2& o) const { return rows == o.rows && cols == o.cols; }
    bool all_finite() const;
    std::vector<double> row_vector(int r) const;

    bool operator==(const Tensor2& o) const = default;
};

// C = A * B. Shapes (m x k)(k x n) -> (m x n).
Tensor2 matmul(const Tensor2& a, const Tensor2& b);
// C = A^T * B. Shapes (k x m)(k x n) -> (m x n).
Tensor2 matmul_transa(const Tensor2& a, const Tensor2& b);
// C = A * B^T. Shapes (m x k)(n x k) -> (m x n).
Tensor2 matmul_transb(const Tensor2& a, const Tensor2& b);

// x += bias broadcast over rows; bias is 1 x cols.
void add_row_broadcast(Tensor2& x, const Tensor2& bias);
// Column sums as a 1 x cols row.
Tensor2 col_sums(const Tensor2& x);

void check_finite(const Tensor2& x, const char* what);

}  // namespace marl::nn
