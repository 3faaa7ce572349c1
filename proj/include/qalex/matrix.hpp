#pragma once

#include <vector>

#include "qalex/laurent.hpp"

namespace qalex {

/// Dense matrix over the exact scalar field C(q). Sized for desk-scale
/// computations; all elimination is exact.
class RFMatrix {
public:
    RFMatrix() = default;
    RFMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size()) {}
    static RFMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RationalFunc& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const RationalFunc& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    RFMatrix operator*(const RFMatrix& rhs) const;
    RFMatrix operator+(const RFMatrix& rhs) const;
    RFMatrix scaled(const RationalFunc& c) const;
    bool operator==(const RFMatrix& rhs) const = default;

    /// Exact inverse by Gauss-Jordan elimination; throws ExactnessError on a
    /// singular matrix.
    RFMatrix inverse() const;
    RFMatrix pow(int e) const; // e >= 0
    int rank() const;
    RationalFunc det() const;

    /// Solves A x = b; throws ExactnessError when no solution exists and
    /// returns one solution otherwise (the system here is always uniquely
    /// solvable or overdetermined-consistent).
    std::vector<RationalFunc> solve(std::vector<RationalFunc> b) const;

    std::string str(Var var = Var::q) const;

private:
    std::size_t size() const { return static_cast<std::size_t>(rows_) * cols_; }
    int rows_ = 0, cols_ = 0;
    std::vector<RationalFunc> data_;
};

} // namespace qalex
