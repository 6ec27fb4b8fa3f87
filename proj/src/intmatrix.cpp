#include "mdh/intmatrix.hpp"

namespace mdh {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error("matrix dimensions must be nonnegative");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Int(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(int rows, int cols) {
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntMatrix m(nr, nc);
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != nc) throw Error("ragged rows in matrix literal");
        int c = 0;
        for (long v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : a_)
        if (v != 0) return false;
    return true;
}

std::string IntMatrix::str() const {
    std::string s = "[";
    for (int r = 0; r < rows_; ++r) {
        if (r) s += ",";
        s += "[";
        for (int c = 0; c < cols_; ++c) {
            if (c) s += ",";
            s += at(r, c).str();
        }
        s += "]";
    }
    s += "]";
    return s;
}

std::size_t IntMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw Error("matrix product dimension mismatch: " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
    IntMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& v = a.at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < b.cols(); ++c) out.at(r, c) += v * b.at(k, c);
        }
    return out;
}

namespace {

Int iabs(const Int& v) { return v < 0 ? -v : v; }

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row dst -= q * row src
void row_sub(IntMatrix& m, int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols(); ++c) m.at(dst, c) -= q * m.at(src, c);
}

// col dst -= q * col src
void col_sub(IntMatrix& m, int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows(); ++r) m.at(r, dst) -= q * m.at(r, src);
}

} // namespace

SnfResult snf(IntMatrix m) {
    SnfResult out;
    const int R = m.rows();
    const int C = m.cols();
    int t = 0;
    while (t < R && t < C) {
        // Move a nonzero entry of least absolute value in the trailing block
        // to position (t,t).
        int pr = -1, pc = -1;
        Int best;
        for (int r = t; r < R; ++r)
            for (int c = t; c < C; ++c) {
                const Int& v = m.at(r, c);
                if (v == 0) continue;
                Int a = iabs(v);
                if (pr < 0 || a < best) {
                    pr = r;
                    pc = c;
                    best = a;
                }
            }
        if (pr < 0) break; // trailing block is zero
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        // Clear column t and row t. Truncated division leaves remainders of
        // absolute value below the pivot, so any survivor restarts the pivot
        // search with a strictly smaller candidate; this terminates.
        bool restart = false;
        for (int r = t + 1; r < R; ++r) {
            if (m.at(r, t) == 0) continue;
            row_sub(m, r, t, m.at(r, t) / m.at(t, t));
            if (m.at(r, t) != 0) restart = true;
        }
        if (restart) continue;
        for (int c = t + 1; c < C; ++c) {
            if (m.at(t, c) == 0) continue;
            col_sub(m, c, t, m.at(t, c) / m.at(t, t));
            if (m.at(t, c) != 0) restart = true;
        }
        if (restart) continue;

        // Enforce the divisibility chain: an entry the pivot does not divide
        // is pulled into row t, where the next round shrinks the pivot.
        for (int r = t + 1; r < R && !restart; ++r)
            for (int c = t + 1; c < C && !restart; ++c)
                if (m.at(r, c) % m.at(t, t) != 0) {
                    row_sub(m, t, r, Int(-1));
                    restart = true;
                }
        if (restart) continue;

        out.invariant_factors.push_back(iabs(m.at(t, t)));
        ++t;
    }
    return out;
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    SnfResult s = snf(m);
    if (s.rank() != m.rows()) return false;
    for (const Int& d : s.invariant_factors)
        if (d != 1) return false;
    return true;
}

} // namespace mdh
