#include "marl/tensor.hpp"

#include <cmath>
#include <string>

#include "marl/errors.hpp"

namespace marl::nn {

Tensor2::Tensor2(int r, int c, std::vector<double> values) : rows(r), cols(c), data(std::move(values)) {
    if (data.size() != static_cast<size_t>(r) * c) {
        throw ShapeError("Tensor2: data length " + std::to_string(data.size()) + " != " +
                         std::to_string(r) + "x" + std::to_string(c));
    }
}

Tensor2 Tensor2::from_rows(std::initializer_list<std::initializer_list<double>> rows_init) {
    const int r = static_cast<int>(rows_init.size());
    const int c = r > 0 ? static_cast<int>(rows_init.begin()->size()) : 0;
    Tensor2 t(r, c);
    int i = 0;
    for (const auto& row : rows_init) {
        if (static_cast<int>(row.size()) != c) throw ShapeError("Tensor2::from_rows: ragged rows");
        int j = 0;
        for (double v : row) t.at(i, j++) = v;
        ++i;
    }
    return t;
}

Tensor2 Tensor2::row(const std::vector<double>& values) {
    return Tensor2(1, static_cast<int>(values.size()), values);
}

bool Tensor2::all_finite() const {
    for (double v : data) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

std::vector<double> Tensor2::row_vector(int r) const {
    return std::vector<double>(row_ptr(r), row_ptr(r) + cols);
}

void check_finite(const Tensor2& x, const char* what) {
    if (!x.all_finite()) throw NumericError(std::string(what) + ": non-finite entry");
}

Tensor2 matmul(const Tensor2& a, const Tensor2& b) {
    if (a.cols != b.rows) throw ShapeError("matmul: inner dimensions disagree");
    Tensor2 c(a.rows, b.cols);
    // i-k-j order keeps the inner loop contiguous in both b and c.
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = a.row_ptr(i);
        double* crow = c.row_ptr(i);
        for (int k = 0; k < a.cols; ++k) {
            const double av = arow[k];
            if (av == 0.0) continue;
            const double* brow = b.row_ptr(k);
            for (int j = 0; j < b.cols; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

Tensor2 matmul_transa(const Tensor2& a, const Tensor2& b) {
    if (a.rows != b.rows) throw ShapeError("matmul_transa: outer dimensions disagree");
    Tensor2 c(a.cols, b.cols);
    for (int k = 0; k < a.rows; ++k) {
        const double* arow = a.row_ptr(k);
        const double* brow = b.row_ptr(k);
        for (int i = 0; i < a.cols; ++i) {
            const double av = arow[i];
            if (av == 0.0) continue;
            double* crow = c.row_ptr(i);
            for (int j = 0; j < b.cols; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

Tensor2 matmul_transb(const Tensor2& a, const Tensor2& b) {
    if (a.cols != b.cols) throw ShapeError("matmul_transb: inner dimensions disagree");
    Tensor2 c(a.rows, b.rows);
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = a.row_ptr(i);
        double* crow = c.row_ptr(i);
        for (int j = 0; j < b.rows; ++j) {
            const double* brow = b.row_ptr(j);
            double acc = 0.0;
            for (int k = 0; k < a.cols; ++k) acc += arow[k] * brow[k];
            crow[j] = acc;
        }
    }
    return c;
}

void add_row_broadcast(Tensor2& x, const Tensor2& bias) {
    if (bias.rows != 1 || bias.cols != x.cols) throw ShapeError("add_row_broadcast: bias must be 1 x cols");
    for (int i = 0; i < x.rows; ++i) {
        double* row = x.row_ptr(i);
        for (int j = 0; j < x.cols; ++j) row[j] += bias.data[j];
    }
}

Tensor2 col_sums(const Tensor2& x) {
    Tensor2 s(1, x.cols);
    for (int i = 0; i < x.rows; ++i) {
        const double* row = x.row_ptr(i);
        for (int j = 0; j < x.cols; ++j) s.data[j] += row[j];
    }
    return s;
}

}  // namespace marl::nn
