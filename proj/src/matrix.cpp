#include "qframe/matrix.hpp"

#include <cmath>

#include "qframe/errors.hpp"

namespace qframe {

CMatrix CMatrix::identity(size_t n) {
    CMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::dagger() const {
    CMatrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix dimension mismatch");
    CMatrix m(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; ++r)
        for (size_t k = 0; k < a.cols_; ++k) {
            auto v = a.at(r, k);
            if (v == CMatrix::value_type{}) continue;
            for (size_t c = 0; c < b.cols_; ++c) m.at(r, c) += v * b.at(k, c);
        }
    return m;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix dimension mismatch");
    CMatrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix dimension mismatch");
    CMatrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

CMatrix CMatrix::scaled(value_type s) const {
    CMatrix m = *this;
    for (auto& v : m.a_) v *= s;
    return m;
}

CMatrix CMatrix::kron(const CMatrix& b) const {
    CMatrix m(rows_ * b.rows_, cols_ * b.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            for (size_t br = 0; br < b.rows_; ++br)
                for (size_t bc = 0; bc < b.cols_; ++bc)
                    m.at(r * b.rows_ + br, c * b.cols_ + bc) = at(r, c) * b.at(br, bc);
    return m;
}

double CMatrix::frobenius_norm() const {
    double n2 = 0.0;
    for (const auto& v : a_) n2 += std::norm(v);
    return std::sqrt(n2);
}

double CMatrix::spectral_norm() const {
    if (a_.empty()) return 0.0;
    CMatrix g = dagger() * (*this); // Gram matrix, Hermitian PSD
    // deterministic start vector with nonuniform entries
    CVector v(cols_, 0.0);
    for (size_t i = 0; i < cols_; ++i)
        v[i] = 1.0 / std::sqrt(static_cast<double>(cols_ + i + 1));
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        CVector w = mat_vec(g, v);
        double n = vec_norm(w);
        if (n < 1e-300) return 0.0;
        for (auto& x : w) x /= n;
        lambda = n;
        v = std::move(w);
    }
    return std::sqrt(lambda);
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw domain_error("matrix dimension mismatch");
    double m = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - other.a_[i]));
    return m;
}

bool CMatrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    return (dagger() * (*this)).max_abs_diff(identity(rows_)) <= tol;
}

CMatrix::value_type CMatrix::det2() const {
    if (rows_ != 2 || cols_ != 2) throw domain_error("det2 requires a 2x2 matrix");
    return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
}

std::complex<double> CMatrix::trace() const {
    std::complex<double> t = 0.0;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

CVector mat_vec(const CMatrix& m, const CVector& v) {
    if (m.cols() != v.size()) throw domain_error("matrix/vector dimension mismatch");
    CVector out(m.rows(), 0.0);
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

std::complex<double> dot(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw domain_error("vector dimension mismatch");
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double vec_norm(const CVector& v) {
    double n2 = 0.0;
    for (const auto& x : v) n2 += std::norm(x);
    return std::sqrt(n2);
}

CVector kron(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

CVector apply_block(const CMatrix& op, const CVector& state, int total_bits, int offset_bits,
                    int block_bits) {
    const size_t dim = state.size();
    if (dim != (size_t{1} << total_bits)) throw domain_error("state dimension mismatch");
    const size_t block_dim = size_t{1} << block_bits;
    if (op.rows() != block_dim || op.cols() != block_dim)
        throw domain_error("operator does not match block size");
    const int right_bits = total_bits - offset_bits - block_bits;
    if (right_bits < 0) throw domain_error("block outside register");
    const size_t right_dim = size_t{1} << right_bits;
    const size_t left_dim = size_t{1} << offset_bits;

    CVector out(dim, 0.0);
    for (size_t l = 0; l < left_dim; ++l)
        for (size_t r = 0; r < right_dim; ++r)
            for (size_t bi = 0; bi < block_dim; ++bi) {
                std::complex<double> acc = 0.0;
                for (size_t bj = 0; bj < block_dim; ++bj) {
                    size_t src = (l << (block_bits + right_bits)) | (bj << right_bits) | r;
                    acc += op.at(bi, bj) * state[src];
                }
                size_t dst = (l << (block_bits + right_bits)) | (bi << right_bits) | r;
                out[dst] = acc;
            }
    return out;
}

CMatrix random_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    double x0 = g(rng), x1 = g(rng), x2 = g(rng), x3 = g(rng);
    double n = std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3);
    if (n < 1e-12) return CMatrix::identity(2);
    std::complex<double> alpha(x0 / n, x1 / n);
    std::complex<double> beta(x2 / n, x3 / n);
    CMatrix u(2, 2);
    u.at(0, 0) = alpha;
    u.at(0, 1) = -std::conj(beta);
    u.at(1, 0) = beta;
    u.at(1, 1) = std::conj(alpha);
    return u;
}

CMatrix random_sun(std::mt19937_64& rng, size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<CVector> cols(n, CVector(n));
    for (auto& col : cols)
        for (auto& v : col) v = {g(rng), g(rng)};
    for (size_t c = 0; c < n; ++c) {
        for (size_t p = 0; p < c; ++p) {
            auto proj = dot(cols[p], cols[c]);
            for (size_t i = 0; i < n; ++i) cols[c][i] -= proj * cols[p][i];
        }
        double norm = vec_norm(cols[c]);
        for (auto& v : cols[c]) v /= norm;
    }
    CMatrix u(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) u.at(r, c) = cols[c][r];

    // determinant by Gaussian elimination, then strip the phase so det = 1
    std::vector<std::vector<std::complex<double>>> m(n, std::vector<std::complex<double>>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) m[r][c] = u.at(r, c);
    std::complex<double> det = 1.0;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        for (size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        if (std::abs(m[c][c]) < 1e-300) return CMatrix::identity(n);
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            auto f = m[r][c] / m[c][c];
            for (size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    std::complex<double> phase = std::pow(det, 1.0 / static_cast<double>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) u.at(r, c) /= phase;
    return u;
}

} // namespace qframe
