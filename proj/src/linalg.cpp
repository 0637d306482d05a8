#include "dgw/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace dgw {

void add_entry(SparseVec& y, int index, const Scalar& a) {
    if (a.is_zero()) return;
    auto [it, fresh] = y.try_emplace(index, a);
    if (fresh) return;
    it->second += a;
    if (it->second.is_zero()) y.erase(it);
}

void add_scaled(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero()) return;
    auto hint = y.begin();
    for (const auto& [k, v] : x) {
        hint = y.lower_bound(k);
        if (hint != y.end() && hint->first == k) {
            hint->second += a * v;
            if (hint->second.is_zero()) hint = y.erase(hint);
        } else {
            y.emplace_hint(hint, k, a * v);
        }
    }
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
    SparseVec r;
    if (a.is_zero()) return r;
    for (const auto& [k, v] : x) r.emplace_hint(r.end(), k, v * a);
    return r;
}

SparseVec unit_vector(int index) { return SparseVec{{index, Scalar(1)}}; }

bool vec_equal(const SparseVec& a, const SparseVec& b) { return a == b; }

std::string vec_str(const SparseVec& v) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, c] : v) {
        if (!first) os << ", ";
        first = false;
        os << k << ":" << c;
    }
    os << "}";
    return os.str();
}

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    if (v.is_zero())
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void SparseMatrix::add(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    add_entry(data_[r], c, v);
}

Scalar SparseMatrix::get(int r, int c) const {
    auto it = data_.at(r).find(c);
    return it == data_[r].end() ? Scalar(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

SparseMatrix SparseMatrix::from_columns(int rows, const std::vector<SparseVec>& cols) {
    SparseMatrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        for (const auto& [r, v] : cols[c]) m.set(r, c, v);
    return m;
}

SparseMatrix SparseMatrix::from_rows(int cols, const std::vector<SparseVec>& rows) {
    SparseMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (const auto& [c, v] : rows[r]) m.set(r, c, v);
    return m;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
    return m;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    SparseVec y;
    for (int r = 0; r < rows_; ++r) {
        Scalar acc(0);
        for (const auto& [c, v] : data_[r]) {
            auto it = x.find(c);
            if (it != x.end()) acc += v * it->second;
        }
        if (!acc.is_zero()) y.emplace_hint(y.end(), r, acc);
    }
    return y;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
    return t;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

SparseVec Echelon::reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
        int c = it->first;
        auto p = rows_.find(c);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        Scalar f = -it->second;
        add_scaled(v, f, p->second);
        it = v.upper_bound(c);
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Scalar lead = v.begin()->second;
    if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        for (auto& [k, x] : v) x *= inv;
    }
    int c = v.begin()->first;
    rows_.emplace(c, std::move(v));
    return true;
}

std::map<int, SparseVec> Echelon::rref() const {
    std::map<int, SparseVec> out;
    // back substitution from the last pivot; each row only meets pivots to its right
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SparseVec row = it->second;
        auto e = row.upper_bound(it->first);
        while (e != row.end()) {
            int c = e->first;
            auto p = out.find(c);
            if (p == out.end()) {
                ++e;
                continue;
            }
            Scalar f = -e->second;
            add_scaled(row, f, p->second);
            e = row.upper_bound(c);
        }
        out.emplace(it->first, std::move(row));
    }
    return out;
}

std::size_t rank(const SparseMatrix& m) {
    Echelon e;
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) e.insert(m.row(r));
    return e.rank();
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    Echelon e;
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) e.insert(m.row(r));
    auto R = e.rref();
    std::vector<SparseVec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (R.count(f)) continue;
        SparseVec x{{f, Scalar(1)}};
        for (const auto& [p, row] : R) {
            auto it = row.find(f);
            if (it != row.end()) x[p] = -it->second;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b) {
    const int aug = m.cols();
    Echelon e;
    for (int r = 0; r < m.rows(); ++r) {
        SparseVec row = m.row(r);
        auto it = b.find(r);
        if (it != b.end()) row[aug] = it->second;
        if (!row.empty()) e.insert(std::move(row));
    }
    for (const auto& [k, v] : b)
        if (k < 0 || k >= m.rows()) throw std::out_of_range("rhs index");
    auto R = e.rref();
    if (R.count(aug)) return std::nullopt;
    SparseVec x;
    for (const auto& [p, row] : R) {
        auto it = row.find(aug);
        if (it != row.end()) x[p] = it->second;
    }
    return x;
}

Quotient quotient_basis(int space_dim, const std::vector<SparseVec>& subspace) {
    Quotient q;
    q.space_dim = space_dim;
    for (const auto& v : subspace) {
        for (const auto& [k, c] : v)
            if (k < 0 || k >= space_dim) throw std::out_of_range("vector outside the ambient space");
        q.subspace.insert(v);
    }
    for (int j = 0; j < space_dim; ++j)
        if (!q.subspace.rows().count(j)) q.representatives.push_back(j);
    return q;
}

}  // namespace dgw
