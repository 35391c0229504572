#include "coxinv/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace coxinv {

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Golden(1);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Golden& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const Golden& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

Mat Mat::transpose() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::conj() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).conj();
    return r;
}

Golden Mat::trace() const {
    Golden t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool Mat::is_identity() const { return *this == identity(n_); }

bool Mat::is_orthogonal() const { return (transpose() * *this).is_identity(); }

std::vector<Golden> Mat::apply_row(const std::vector<Golden>& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("vector dimension mismatch");
    std::vector<Golden> r(static_cast<std::size_t>(n_), Golden(0));
    for (int i = 0; i < n_; ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) r[j] += v[i] * at(i, j);
    }
    return r;
}

std::string Mat::key() const {
    std::string s;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i || j) s += ";";
            s += at(i, j).str();
        }
    return s;
}

Golden det_values(std::vector<std::vector<Golden>> m) {
    const int n = static_cast<int>(m.size());
    Golden det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Golden(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Golden inv = m[c][c].inv();
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Golden f = m[r][c] * inv;
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

Golden Mat::det() const {
    std::vector<std::vector<Golden>> m(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        m[i].reserve(n_);
        for (int j = 0; j < n_; ++j) m[i].push_back(at(i, j));
    }
    return det_values(std::move(m));
}

int Mat::rank() const {
    std::vector<std::vector<Golden>> m(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        m[i].reserve(n_);
        for (int j = 0; j < n_; ++j) m[i].push_back(at(i, j));
    }
    int rank = 0;
    int row = 0;
    for (int c = 0; c < n_ && row < n_; ++c) {
        int piv = -1;
        for (int r = row; r < n_; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Golden inv = m[row][c].inv();
        for (int r = row + 1; r < n_; ++r) {
            if (m[r][c].is_zero()) continue;
            Golden f = m[r][c] * inv;
            for (int k = c; k < n_; ++k) m[r][k] -= f * m[row][k];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace coxinv
