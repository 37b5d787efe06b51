#pragma once

#include "hilbtaut/rational.hpp"

#include <vector>

namespace hilbtaut {

using QVec = std::vector<Rat>;

// Dense rational matrix, row major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    bool is_zero() const;

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rat& c) const;
    QVec apply(const QVec& v) const;
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct RankKernel {
    int rank = 0;
    std::vector<QVec> kernel;  // basis of the right kernel
};

// Exact elimination; kernel vectors satisfy M v = 0 exactly.
RankKernel rank_kernel(const QMatrix& m);

// Same with a permuted pivot strategy (oracle for the property test):
// columns are visited in the order given; row pivots pick the last
// admissible row instead of the first.
RankKernel rank_kernel_permuted(const QMatrix& m, const std::vector<int>& col_order);

int rank_of(const QMatrix& m);

// Column-echelon reduction of a set of vectors: returns a deterministic
// basis of their span (leading entry 1 at the least possible index,
// echelon from the top).
std::vector<QVec> column_reduce(std::vector<QVec> vecs);

// Coordinates of v in an echelon basis (as produced by column_reduce);
// throws PropertyFalsified if v is not in the span.
QVec coordinates_in_echelon(const std::vector<QVec>& basis, const QVec& v, const char* ctx);

// Sparse column matrix: per source basis vector, a list of (row, coeff).
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, Rat>>> col;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), col(c) {}
    static SparseMat identity(int n);
    void add(int r, int c, const Rat& v) {
        if (v != 0) col[c].emplace_back(r, v);
    }
    QVec apply(const QVec& v) const;
    SparseMat compose(const SparseMat& inner) const;  // this * inner
    QMatrix dense() const;
    Rat trace() const;
    bool is_signed_permutation() const;
    bool equals(const SparseMat& o) const;
};

}  // namespace hilbtaut
