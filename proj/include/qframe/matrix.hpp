#pragma once

#include <complex>
#include <random>
#include <vector>

namespace qframe {

// Dense complex matrix for the small Hilbert spaces in the qukit and
// logical-code modules (dimensions stay single digits to a few thousand for
// state vectors; matrices stay <= 8x8 unless explicitly built larger).
class CMatrix {
public:
    using value_type = std::complex<double>;

    CMatrix() = default;
    CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    value_type& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const value_type& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    CMatrix dagger() const;
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    CMatrix scaled(value_type s) const;
    CMatrix kron(const CMatrix& b) const;

    double frobenius_norm() const;
    // Largest singular value by power iteration on A^dagger A; deterministic.
    double spectral_norm() const;
    double max_abs_diff(const CMatrix& other) const;

    bool is_unitary(double tol) const;
    value_type det2() const; // 2x2 only
    std::complex<double> trace() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<value_type> a_;
};

using CVector = std::vector<std::complex<double>>;

CVector mat_vec(const CMatrix& m, const CVector& v);
std::complex<double> dot(const CVector& a, const CVector& b); // conj(a) . b
double vec_norm(const CVector& v);
CVector kron(const CVector& a, const CVector& b);

// Apply an operator on `block_bits` adjacent qubits (offset = index of the
// block's most significant qubit, counting from the left / most significant
// end of the register) to a state vector over total_bits qubits.
CVector apply_block(const CMatrix& op, const CVector& state, int total_bits, int offset_bits,
                    int block_bits);

// Haar-distributed SU(2) element (quaternion method).
CMatrix random_su2(std::mt19937_64& rng);
// Haar-ish unitary of dimension n (Gaussian + Gram-Schmidt), normalized to
// determinant 1.
CMatrix random_sun(std::mt19937_64& rng, size_t n);

} // namespace qframe
