// Copyright 2026 tritwirl contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace tritwirl {

using cplx = std::complex<double>;

/// Dense square complex matrix. Sizes here are tiny (at most 64 for d=4),
/// so everything is plain row-major storage with no cleverness.
class CMat {
  public:
    CMat() = default;
    explicit CMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    int size() const { return n_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    static CMat identity(int n) {
        CMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    CMat& operator+=(const CMat& o) {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CMat& operator*=(cplx s) {
        for (auto& x : a_) x *= s;
        return *this;
    }
    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(cplx s, CMat a) { return a *= s; }

    friend CMat operator*(const CMat& a, const CMat& b) {
        a.check_same(b);
        const int n = a.n_;
        CMat c(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    CMat adjoint() const {
        CMat m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    double max_abs_diff(const CMat& o) const {
        check_same(o);
        double m = 0.0;
        for (size_t k = 0; k < a_.size(); ++k) m = std::max(m, std::abs(a_[k] - o.a_[k]));
        return m;
    }

    bool is_hermitian(double tol) const {
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        return true;
    }

    /// Replaces the matrix by (A + A*)/2.
    void symmetrize() {
        for (int i = 0; i < n_; ++i) {
            (*this)(i, i) = cplx((*this)(i, i).real(), 0.0);
            for (int j = i + 1; j < n_; ++j) {
                cplx v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
                (*this)(i, j) = v;
                (*this)(j, i) = std::conj(v);
            }
        }
    }

  private:
    void check_same(const CMat& o) const {
        if (n_ != o.n_) throw std::invalid_argument("CMat: size mismatch");
    }

    int n_ = 0;
    std::vector<cplx> a_;
};

struct EigenSystem {
    std::vector<double> values;  // ascending
    CMat vectors;                // columns are eigenvectors, same order
};

namespace detail {

/// Cyclic Jacobi sweep machinery for Hermitian matrices. `vecs`, when
/// non-null, accumulates the rotations.
inline void jacobi_diagonalize(CMat& a, CMat* vecs) {
    const int n = a.size();
    const double off_tol = 1e-14;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < off_tol) return;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < off_tol * 1e-3) continue;
                const cplx phase = apq / mag;  // apq = mag * phase
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (app - aqq) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;        // s * e^{i phi}
                const cplx spc = std::conj(sp);   // s * e^{-i phi}
                // A <- U* A U with U acting on columns (p,q):
                // U = [[c, -sp],[spc, c]]
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + spc * akq;
                    a(k, q) = -sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + sp * aqk;
                    a(q, k) = -spc * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);
                if (vecs) {
                    for (int k = 0; k < n; ++k) {
                        const cplx vkp = (*vecs)(k, p), vkq = (*vecs)(k, q);
                        (*vecs)(k, p) = c * vkp + spc * vkq;
                        (*vecs)(k, q) = -sp * vkp + c * vkq;
                    }
                }
            }
        }
    }
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix, ascending. The input is symmetrized
/// first; deviations beyond `herm_tol` are an error.
inline std::vector<double> hermitian_eigenvalues(CMat h, double herm_tol = 1e-10) {
    if (!h.is_hermitian(herm_tol)) throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
    h.symmetrize();
    detail::jacobi_diagonalize(h, nullptr);
    std::vector<double> ev(h.size());
    for (int i = 0; i < h.size(); ++i) ev[i] = h(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline EigenSystem hermitian_eigensystem(CMat h, double herm_tol = 1e-10) {
    if (!h.is_hermitian(herm_tol)) throw std::invalid_argument("hermitian_eigensystem: matrix not Hermitian");
    h.symmetrize();
    const int n = h.size();
    CMat v = CMat::identity(n);
    detail::jacobi_diagonalize(h, &v);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return h(i, i).real() < h(j, j).real(); });
    EigenSystem sys;
    sys.values.resize(n);
    sys.vectors = CMat(n);
    for (int j = 0; j < n; ++j) {
        sys.values[j] = h(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) sys.vectors(i, j) = v(i, order[j]);
    }
    return sys;
}

}  // namespace tritwirl
