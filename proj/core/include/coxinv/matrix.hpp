#pragma once
// Small dense square matrices over Q(sqrt5), acting on row vectors
// (point -> point * M).  Used for reflection-group elements and Jacobians.

#include "coxinv/golden.hpp"

#include <string>
#include <vector>

namespace coxinv {

class Mat {
  public:
    Mat() : n_(0) {}
    explicit Mat(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, Golden(0)) {}
    static Mat identity(int n);

    int dim() const { return n_; }
    Golden& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Golden& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }

    Mat operator*(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat transpose() const;
    Mat conj() const;  // entrywise sqrt5 -> -sqrt5
    bool operator==(const Mat& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Golden det() const;      // Gaussian elimination, exact
    int rank() const;        // exact
    Golden trace() const;
    bool is_identity() const;
    bool is_orthogonal() const;  // M^T M == I

    std::vector<Golden> apply_row(const std::vector<Golden>& v) const;  // v * M

    // Canonical key: the canonical text of every entry, row major, joined
    // with ';'.  Equal matrices have equal keys.
    std::string key() const;

  private:
    int n_;
    std::vector<Golden> e_;
};

// Determinant of an n x n matrix of values, exact Gaussian elimination.
Golden det_values(std::vector<std::vector<Golden>> m);

}  // namespace coxinv
