#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mdh/exactnum.hpp"

namespace mdh {

// Dense matrix over Z. Zero rows or columns are allowed; a matrix with 0
// rows (or 0 columns) still remembers the other dimension, which matters
// for composing maps between free modules of rank 0.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    static IntMatrix ones(int rows, int cols);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[index(r, c)]; }
    const Int& at(int r, int c) const { return a_[index(r, c)]; }

    bool is_zero() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    // "[[1,2],[3,4]]"; "[]" for 0 rows.
    std::string str() const;

private:
    std::size_t index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

// Throws when inner dimensions disagree.
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// Invariant factors d1 | d2 | ... | dr of a matrix, all >= 1. The rank over
// Q equals r; the cokernel is Z^(rows-r) + sum Z/di.
struct SnfResult {
    std::vector<Int> invariant_factors;

    int rank() const { return static_cast<int>(invariant_factors.size()); }

    friend bool operator==(const SnfResult& a, const SnfResult& b) {
        return a.invariant_factors == b.invariant_factors;
    }
    friend bool operator!=(const SnfResult& a, const SnfResult& b) { return !(a == b); }
};

// Smith normal form by integer row/column reduction.
SnfResult snf(IntMatrix m);

// Square and invertible over Z: all invariant factors equal 1 and the rank
// is full. Non-square matrices are never unimodular.
bool is_unimodular(const IntMatrix& m);

} // namespace mdh
