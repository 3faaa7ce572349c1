#include "qalex/matrix.hpp"

#include <sstream>

namespace qalex {

RFMatrix RFMatrix::identity(int n) {
    RFMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunc(1);
    return m;
}

RFMatrix RFMatrix::operator*(const RFMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InvalidInput("matrix product shape mismatch");
    RFMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const RationalFunc& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    return out;
}

RFMatrix RFMatrix::operator+(const RFMatrix& rhs) const {
    if (cols_ != rhs.cols_ || rows_ != rhs.rows_) throw InvalidInput("matrix sum shape mismatch");
    RFMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

RFMatrix RFMatrix::scaled(const RationalFunc& c) const {
    RFMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

RFMatrix RFMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidInput("inverse of non-square matrix");
    RFMatrix a = *this;
    RFMatrix inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw ExactnessError("singular matrix");
        if (pivot != col)
            for (int j = 0; j < cols_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const RationalFunc piv_inv = a.at(col, col).inverse();
        for (int j = 0; j < cols_; ++j) {
            a.at(col, j) *= piv_inv;
            inv.at(col, j) *= piv_inv;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            const RationalFunc f = a.at(r, col);
            for (int j = 0; j < cols_; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RFMatrix RFMatrix::pow(int e) const {
    if (rows_ != cols_) throw InvalidInput("power of non-square matrix");
    if (e < 0) throw InvalidInput("negative matrix power");
    RFMatrix result = identity(rows_);
    RFMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

int RFMatrix::rank() const {
    RFMatrix a = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        const RationalFunc piv_inv = a.at(rank, col).inverse();
        for (int r = rank + 1; r < rows_; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const RationalFunc f = a.at(r, col) * piv_inv;
            for (int j = col; j < cols_; ++j) a.at(r, j) -= f * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

RationalFunc RFMatrix::det() const {
    if (rows_ != cols_) throw InvalidInput("determinant of non-square matrix");
    RFMatrix a = *this;
    RationalFunc d(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return RationalFunc();
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        const RationalFunc piv_inv = a.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const RationalFunc f = a.at(r, col) * piv_inv;
            for (int j = col; j < cols_; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return d;
}

std::vector<RationalFunc> RFMatrix::solve(std::vector<RationalFunc> b) const {
    if (static_cast<int>(b.size()) != rows_) throw InvalidInput("solve: rhs size mismatch");
    RFMatrix a = *this;
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(row, j));
            std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(row)]);
        }
        const RationalFunc piv_inv = a.at(row, col).inverse();
        for (int j = col; j < cols_; ++j) a.at(row, j) *= piv_inv;
        b[static_cast<std::size_t>(row)] *= piv_inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            const RationalFunc f = a.at(r, col);
            for (int j = col; j < cols_; ++j) a.at(r, j) -= f * a.at(row, j);
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(row)];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows_; ++r)
        if (!b[static_cast<std::size_t>(r)].is_zero())
            throw ExactnessError("solve: inconsistent linear system");
    std::vector<RationalFunc> x(static_cast<std::size_t>(cols_));
    for (int r = 0; r < row; ++r)
        x[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] =
            b[static_cast<std::size_t>(r)];
    return x;
}

std::string RFMatrix::str(Var var) const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << "[ ";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str(var);
        }
        out << " ]\n";
    }
    return out.str();
}

} // namespace qalex
