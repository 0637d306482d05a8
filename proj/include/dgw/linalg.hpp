#pragma once

#include "dgw/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgw {

// Sparse vector over the current field; never stores zeros once normalized.
using SparseVec = std::map<int, Scalar>;

void add_scaled(SparseVec& y, const Scalar& a, const SparseVec& x);
void add_entry(SparseVec& y, int index, const Scalar& a);
SparseVec scaled(const SparseVec& x, const Scalar& a);
SparseVec unit_vector(int index);
bool vec_equal(const SparseVec& a, const SparseVec& b);
std::string vec_str(const SparseVec& v);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Scalar& v);
    void add(int r, int c, const Scalar& v);
    Scalar get(int r, int c) const;
    const SparseVec& row(int r) const { return data_[r]; }
    std::size_t nonzeros() const;

    // columns given as sparse vectors of length `rows`
    static SparseMatrix from_columns(int rows, const std::vector<SparseVec>& cols);
    static SparseMatrix from_rows(int cols, const std::vector<SparseVec>& rows);
    static SparseMatrix identity(int n);

    SparseVec apply(const SparseVec& x) const;
    SparseMatrix transpose() const;
    bool operator==(const SparseMatrix& o) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> data_;
};

// Incremental row echelon form. Each stored row is monic at its pivot, the
// pivot being the row's first nonzero column. Inserting vectors in any order
// yields the same pivot set, so quotient representatives are reproducible.
class Echelon {
public:
    // residual of v after eliminating every pivot column, in ascending order
    SparseVec reduce(SparseVec v) const;
    // true when v was independent of the rows already present
    bool insert(SparseVec v);
    std::size_t rank() const { return rows_.size(); }
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    const std::map<int, SparseVec>& rows() const { return rows_; }
    // fully reduced form: every pivot column is zero in all other rows
    std::map<int, SparseVec> rref() const;

private:
    std::map<int, SparseVec> rows_;
};

std::size_t rank(const SparseMatrix& m);
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b);

struct Quotient {
    int space_dim = 0;
    std::vector<int> representatives;  // indices j: e_j completes the subspace
    Echelon subspace;
    // coordinates of v modulo the subspace, indexed by ambient position
    SparseVec project(const SparseVec& v) const { return subspace.reduce(v); }
};

Quotient quotient_basis(int space_dim, const std::vector<SparseVec>& subspace);

}  // namespace dgw
