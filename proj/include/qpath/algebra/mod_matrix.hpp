// Copyright 2026 The qpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPATH_ALGEBRA_MOD_MATRIX_HPP
#define QPATH_ALGEBRA_MOD_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "qpath/algebra/modint.hpp"
#include "qpath/errors.hpp"

namespace qpath {

/// Residues in [0, d), one per coordinate.
using ModVector = std::vector<std::uint32_t>;

/// Configuration with little-endian index idx (wire 0 is the fastest digit).
inline ModVector unpack_configuration(std::uint64_t idx, std::uint32_t n, std::uint32_t d) {
    ModVector q(n);
    for (std::uint32_t i = 0; i < n; i++) {
        q[i] = static_cast<std::uint32_t>(idx % d);
        idx /= d;
    }
    return q;
}

inline std::uint64_t pack_configuration(const ModVector &q, std::uint32_t d) {
    std::uint64_t idx = 0;
    for (std::size_t i = q.size(); i-- > 0;) {
        idx = idx * d + q[i];
    }
    return idx;
}

/// Dense row-major matrix over Z_d.
class ModMatrix {
   public:
    ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t d)
        : rows_(rows), cols_(cols), d_(d), data_(rows * cols, 0) {
    }

    static ModMatrix identity(std::size_t n, std::uint32_t d) {
        ModMatrix m(n, n, d);
        for (std::size_t i = 0; i < n; i++) {
            m.set(i, i, 1);
        }
        return m;
    }

    static ModMatrix from_rows(const std::vector<std::vector<std::int64_t>> &rows, std::uint32_t d) {
        ModMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), d);
        for (std::size_t i = 0; i < m.rows_; i++) {
            if (rows[i].size() != m.cols_) {
                throw Error(ErrorCode::dimension_mismatch, "ragged matrix rows");
            }
            for (std::size_t j = 0; j < m.cols_; j++) {
                m.set(i, j, rows[i][j]);
            }
        }
        return m;
    }

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    std::uint32_t modulus() const noexcept {
        return d_;
    }

    std::uint32_t operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    ModInt at(std::size_t i, std::size_t j) const {
        return ModInt(data_[i * cols_ + j], d_);
    }
    void set(std::size_t i, std::size_t j, std::int64_t v) {
        data_[i * cols_ + j] = reduce_mod(v, d_);
    }

    friend bool operator==(const ModMatrix &, const ModMatrix &) = default;

    friend ModMatrix operator*(const ModMatrix &a, const ModMatrix &b) {
        if (a.cols_ != b.rows_ || a.d_ != b.d_) {
            throw Error(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
        }
        ModMatrix r(a.rows_, b.cols_, a.d_);
        for (std::size_t i = 0; i < a.rows_; i++) {
            for (std::size_t k = 0; k < a.cols_; k++) {
                std::uint64_t aik = a(i, k);
                if (aik == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; j++) {
                    r.data_[i * r.cols_ + j] =
                        static_cast<std::uint32_t>((r.data_[i * r.cols_ + j] + aik * b(k, j)) % a.d_);
                }
            }
        }
        return r;
    }

    ModVector apply(const ModVector &v) const {
        if (v.size() != cols_) {
            throw Error(ErrorCode::dimension_mismatch, "matrix-vector shape mismatch");
        }
        ModVector r(rows_, 0);
        for (std::size_t i = 0; i < rows_; i++) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < cols_; j++) {
                acc = (acc + std::uint64_t{(*this)(i, j)} * v[j]) % d_;
            }
            r[i] = static_cast<std::uint32_t>(acc);
        }
        return r;
    }

    ModMatrix transpose() const {
        ModMatrix r(cols_, rows_, d_);
        for (std::size_t i = 0; i < rows_; i++) {
            for (std::size_t j = 0; j < cols_; j++) {
                r.data_[j * rows_ + i] = (*this)(i, j);
            }
        }
        return r;
    }

    ModMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        ModMatrix r(nr, nc, d_);
        for (std::size_t i = 0; i < nr; i++) {
            for (std::size_t j = 0; j < nc; j++) {
                r.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
            }
        }
        return r;
    }

    std::vector<std::vector<std::uint32_t>> to_rows() const {
        std::vector<std::vector<std::uint32_t>> out(rows_);
        for (std::size_t i = 0; i < rows_; i++) {
            out[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &out, const ModMatrix &m) {
        out << "[";
        for (std::size_t i = 0; i < m.rows_; i++) {
            out << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; j++) {
                out << (j ? "," : "") << m(i, j);
            }
            out << "]";
        }
        return out << "]";
    }

   private:
    std::size_t rows_, cols_;
    std::uint32_t d_;
    std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form with the accumulated row operations:
/// transform * input == reduced.
struct RowReduction {
    ModMatrix reduced;
    ModMatrix transform;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const noexcept {
        return pivot_cols.size();
    }
};

inline RowReduction row_reduce(const ModMatrix &m) {
    std::uint32_t d = m.modulus();
    RowReduction out{m, ModMatrix::identity(m.rows(), d), {}};
    ModMatrix &a = out.reduced;
    ModMatrix &t = out.transform;
    auto swap_rows = [](ModMatrix &x, std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < x.cols(); j++) {
            auto tmp = x(r1, j);
            x.set(r1, j, x(r2, j));
            x.set(r2, j, tmp);
        }
    };
    // row[dst] += factor * row[src]
    auto axpy = [d](ModMatrix &x, std::size_t dst, std::size_t src, std::uint64_t factor) {
        for (std::size_t j = 0; j < x.cols(); j++) {
            x.set(dst, j, static_cast<std::int64_t>((x(dst, j) + factor * x(src, j)) % d));
        }
    };
    auto scale = [d](ModMatrix &x, std::size_t r, std::uint64_t factor) {
        for (std::size_t j = 0; j < x.cols(); j++) {
            x.set(r, j, static_cast<std::int64_t>(factor * x(r, j) % d));
        }
    };
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); col++) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col) == 0) {
            pivot++;
        }
        if (pivot == a.rows()) {
            continue;
        }
        swap_rows(a, row, pivot);
        swap_rows(t, row, pivot);
        std::uint64_t inv = ModInt(a(row, col), d).inverse().value();
        scale(a, row, inv);
        scale(t, row, inv);
        for (std::size_t r = 0; r < a.rows(); r++) {
            if (r != row && a(r, col) != 0) {
                std::uint64_t f = d - a(r, col);
                axpy(a, r, row, f);
                axpy(t, r, row, f);
            }
        }
        out.pivot_cols.push_back(col);
        row++;
    }
    return out;
}

inline std::size_t rank(const ModMatrix &m) {
    return row_reduce(m).rank();
}

inline std::optional<ModMatrix> inverse(const ModMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
    }
    auto rr = row_reduce(m);
    if (rr.rank() != m.rows()) {
        return std::nullopt;
    }
    return rr.transform;
}

/// Solution set {x : A x = b} of an affine system over Z_d.
struct AffineSolution {
    std::optional<ModVector> particular;
    std::vector<ModVector> basis;

    bool empty() const noexcept {
        return !particular.has_value();
    }
    std::size_t dimension() const noexcept {
        return basis.size();
    }
};

/// Gaussian elimination; free variables are zero in the particular solution
/// and each contributes one basis vector.
inline AffineSolution solve_affine(const ModMatrix &a, const ModVector &b) {
    if (b.size() != a.rows()) {
        throw Error(ErrorCode::dimension_mismatch, "right-hand side length does not match row count");
    }
    std::uint32_t d = a.modulus();
    auto rr = row_reduce(a);
    ModVector tb = rr.transform.apply(b);
    AffineSolution sol;
    for (std::size_t r = rr.rank(); r < a.rows(); r++) {
        if (tb[r] != 0) {
            return sol;
        }
    }
    std::size_t n = a.cols();
    ModVector x(n, 0);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rr.rank(); r++) {
        x[rr.pivot_cols[r]] = tb[r];
        is_pivot[rr.pivot_cols[r]] = true;
    }
    sol.particular = x;
    for (std::size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        ModVector v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < rr.rank(); r++) {
            v[rr.pivot_cols[r]] = reduce_mod(-static_cast<std::int64_t>(rr.reduced(r, f)), d);
        }
        sol.basis.push_back(std::move(v));
    }
    return sol;
}

}  // namespace qpath

#endif
