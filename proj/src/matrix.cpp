#include "hilbtaut/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hilbtaut {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
    QMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& w = o.at(k, j);
                if (w != 0) r.at(i, j) += v * w;
            }
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch in sum");
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch in diff");
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMatrix QMatrix::scaled(const Rat& c) const {
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

QVec QMatrix::apply(const QVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("QMatrix: apply shape mismatch");
    QVec r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

namespace {

RankKernel eliminate(QMatrix m, const std::vector<int>& col_order, bool pick_last_row) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_row_of_col(cols, -1);
    std::vector<bool> row_used(rows, false);
    int rank = 0;
    for (int c : col_order) {
        int pr = -1;
        for (int r = 0; r < rows; ++r) {
            if (row_used[r] || m.at(r, c) == 0) continue;
            pr = r;
            if (!pick_last_row) break;
        }
        if (pr < 0) continue;
        row_used[pr] = true;
        pivot_row_of_col[c] = pr;
        ++rank;
        Rat inv = 1 / m.at(pr, c);
        for (int j = 0; j < cols; ++j) m.at(pr, j) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || m.at(r, c) == 0) continue;
            Rat f = m.at(r, c);
            for (int j = 0; j < cols; ++j)
                if (m.at(pr, j) != 0) m.at(r, j) -= f * m.at(pr, j);
        }
    }
    RankKernel rk;
    rk.rank = rank;
    for (int c = 0; c < cols; ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        QVec v(cols);
        v[c] = 1;
        for (int c2 = 0; c2 < cols; ++c2) {
            int pr = pivot_row_of_col[c2];
            if (pr >= 0) v[c2] = -m.at(pr, c);
        }
        rk.kernel.push_back(std::move(v));
    }
    return rk;
}

}  // namespace

RankKernel rank_kernel(const QMatrix& m) {
    std::vector<int> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    return eliminate(m, order, false);
}

RankKernel rank_kernel_permuted(const QMatrix& m, const std::vector<int>& col_order) {
    return eliminate(m, col_order, true);
}

int rank_of(const QMatrix& m) { return rank_kernel(m).rank; }

std::vector<QVec> column_reduce(std::vector<QVec> vecs) {
    std::vector<QVec> basis;
    std::vector<int> leads;
    for (auto& v : vecs) {
        for (size_t b = 0; b < basis.size(); ++b) {
            const Rat& c = v[leads[b]];
            if (c == 0) continue;
            Rat f = c;
            for (size_t i = 0; i < v.size(); ++i)
                if (basis[b][i] != 0) v[i] -= f * basis[b][i];
        }
        int lead = -1;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) { lead = static_cast<int>(i); break; }
        if (lead < 0) continue;
        Rat inv = 1 / v[lead];
        for (auto& x : v) x *= inv;
        // back-substitute into the existing basis to get reduced echelon form
        for (size_t b = 0; b < basis.size(); ++b) {
            const Rat c = basis[b][lead];
            if (c == 0) continue;
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) basis[b][i] -= c * v[i];
        }
        basis.push_back(std::move(v));
        leads.push_back(lead);
    }
    // deterministic order: by leading index
    std::vector<size_t> idx(basis.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return leads[a] < leads[b]; });
    std::vector<QVec> out;
    out.reserve(basis.size());
    for (size_t i : idx) out.push_back(std::move(basis[i]));
    return out;
}

QVec coordinates_in_echelon(const std::vector<QVec>& basis, const QVec& v, const char* ctx) {
    QVec rem = v;
    QVec coords(basis.size());
    for (size_t b = 0; b < basis.size(); ++b) {
        int lead = -1;
        for (size_t i = 0; i < basis[b].size(); ++i)
            if (basis[b][i] != 0) { lead = static_cast<int>(i); break; }
        Rat c = rem[lead];
        coords[b] = c;
        if (c == 0) continue;
        for (size_t i = 0; i < rem.size(); ++i)
            if (basis[b][i] != 0) rem[i] -= c * basis[b][i];
    }
    for (const auto& x : rem)
        if (x != 0) throw PropertyFalsified(std::string(ctx) + ": vector not in invariant span");
    return coords;
}

SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.add(i, i, 1);
    return m;
}

QVec SparseMat::apply(const QVec& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("SparseMat: apply shape mismatch");
    QVec r(rows);
    for (int c = 0; c < cols; ++c) {
        if (v[c] == 0) continue;
        for (const auto& [row, coef] : col[c]) r[row] += coef * v[c];
    }
    return r;
}

SparseMat SparseMat::compose(const SparseMat& inner) const {
    if (cols != inner.rows) throw std::invalid_argument("SparseMat: compose shape mismatch");
    SparseMat r(rows, inner.cols);
    for (int c = 0; c < inner.cols; ++c) {
        std::map<int, Rat> acc;
        for (const auto& [mid, coef] : inner.col[c])
            for (const auto& [row, coef2] : col[mid]) acc[row] += coef2 * coef;
        for (const auto& [row, coef] : acc)
            if (coef != 0) r.col[c].emplace_back(row, coef);
    }
    return r;
}

QMatrix SparseMat::dense() const {
    QMatrix m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (const auto& [row, coef] : col[c]) m.at(row, c) += coef;
    return m;
}

Rat SparseMat::trace() const {
    Rat t = 0;
    for (int c = 0; c < cols && c < rows; ++c)
        for (const auto& [row, coef] : col[c])
            if (row == c) t += coef;
    return t;
}

bool SparseMat::is_signed_permutation() const {
    if (rows != cols) return false;
    std::vector<bool> hit(rows, false);
    for (int c = 0; c < cols; ++c) {
        if (col[c].size() != 1) return false;
        const auto& [row, coef] = col[c][0];
        if (coef != 1 && coef != -1) return false;
        if (hit[row]) return false;
        hit[row] = true;
    }
    return true;
}

bool SparseMat::equals(const SparseMat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (int c = 0; c < cols; ++c) {
        std::map<int, Rat> a, b;
        for (const auto& [r, v] : col[c]) a[r] += v;
        for (const auto& [r, v] : o.col[c]) b[r] += v;
        for (auto it = a.begin(); it != a.end();)
            it = (it->second == 0) ? a.erase(it) : std::next(it);
        for (auto it = b.begin(); it != b.end();)
            it = (it->second == 0) ? b.erase(it) : std::next(it);
        if (a != b) return false;
    }
    return true;
}

}  // namespace hilbtaut
