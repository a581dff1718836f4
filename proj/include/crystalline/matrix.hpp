#pragma once

#include <vector>

#include "crystalline/wittring.hpp"

namespace crystalline {

// Dense matrix over a Galois ring. Row-major, value semantics.
class GrMat {
public:
    GrMat() : fp_(&field_params(2, 1, 1)), rows_(0), cols_(0) {}
    GrMat(const FieldParams& fp, int rows, int cols)
        : fp_(&fp), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, GrElt::zero(fp)) {}

    static GrMat identity(const FieldParams& fp, int n);

    const FieldParams& params() const { return *fp_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GrElt& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const GrElt& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    friend bool operator==(const GrMat& a, const GrMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    const FieldParams* fp_;
    int rows_, cols_;
    std::vector<GrElt> a_;
};

GrMat mat_mul(const GrMat& a, const GrMat& b);
GrMat mat_add(const GrMat& a, const GrMat& b);
GrMat kronecker(const GrMat& a, const GrMat& b);
GrMat frobenius_entrywise(const GrMat& a, long long k);
GrMat embed_entrywise(const GrMat& a, int big_d);

// Characteristic polynomial of a square matrix by the Berkowitz method
// (division-free; the coefficient ring Z/p^m has zero divisors).
// Returns coefficients c_0..c_n of det(xI - A), low degree first, c_n = 1.
std::vector<GrElt> char_poly(const GrMat& a);

GrElt determinant(const GrMat& a);

// i-th compound matrix: all i x i minors, lexicographic order on index subsets.
GrMat compound(const GrMat& a, int i);

// True iff the matrix is invertible over the ring (unit determinant).
bool is_unit_matrix(const GrMat& a);

// Inverse of an invertible matrix over the Galois ring.
GrMat mat_inverse(const GrMat& a);

// Rank of a matrix over the residue field (entries must have m = 1).
int ff_rank(const GrMat& a);

}  // namespace crystalline
