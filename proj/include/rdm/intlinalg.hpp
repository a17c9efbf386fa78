#pragma once

#include "rdm/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace rdm {

/// Dense integer matrix, row-major. A 0x0 matrix is allowed and acts as the
/// identity of rank zero (det = 1).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    const std::vector<Integer>& entries() const noexcept { return entries_; }

    Integer trace() const;
    IntMatrix transpose() const;
    bool is_zero() const;

    IntMatrix& operator*=(const Integer& s);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::vector<Integer> apply(const std::vector<Integer>& v) const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Integer polynomial, ascending coefficients. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(const Integer& c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    Integer coefficient(std::size_t i) const;
    Integer leading() const;

    Integer evaluate(const Integer& x) const;
    Rational evaluate(const Rational& x) const;
    IntPolynomial derivative() const;
    /// x^deg p(1/x); reverses the coefficient list.
    IntPolynomial reversed() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned n);

struct SmithForm {
    /// d_1 | d_2 | ... | d_min(rows, cols), all non-negative.
    std::vector<Integer> diagonal;
    IntMatrix left;
    IntMatrix right;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& a);

/// det(xI - A).
IntPolynomial char_poly(const IntMatrix& a);

/// det(I - A z) as a polynomial in z; constant term is 1.
IntPolynomial det_one_minus(const IntMatrix& a);

SmithForm smith_normal_form(const IntMatrix& a);

/// Matrix of i x i minors, rows and columns indexed by sorted index subsets
/// in lexicographic order.
IntMatrix exterior_power(const IntMatrix& a, std::size_t i);

IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

IntMatrix mat_pow(const IntMatrix& a, unsigned long n);

/// Inverse of a unimodular matrix. Throws ValidationError if det != +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

struct EigenSigns {
    /// Real eigenvalues < -1, with algebraic multiplicity.
    unsigned p = 0;
    /// Real eigenvalues of absolute value > 1, with algebraic multiplicity.
    unsigned r = 0;
};

/// Exact counts via Sturm sequences on the square-free parts of the gcd
/// filtration of char_poly(A). Throws EigenvalueOnBoundary if +1 or -1 is an
/// eigenvalue.
EigenSigns count_eigen_signs(const IntMatrix& a);

/// Distinct real roots of a square-free polynomial in the open interval
/// (lo, hi); either bound may be omitted for +-infinity. Endpoints must not
/// be roots.
unsigned sturm_root_count(const IntPolynomial& squarefree, const Rational* lo,
                          const Rational* hi);

/// True iff some eigenvalue of A is a root of unity, i.e. det(I - A^m) = 0
/// for some m >= 1. Checks every m whose cyclotomic polynomial fits in
/// degree rows(A).
bool has_root_of_unity_eigenvalue(const IntMatrix& a);

}  // namespace rdm
