#pragma once

#include "rdm/integer.hpp"
#include "rdm/intlinalg.hpp"
#include "rdm/reidemeister.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rdm {

/// Power series truncated after z^N with exact rational coefficients c_0..c_N.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static TruncatedSeries from_polynomial(const IntPolynomial& p, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// exp(f) for f with f_0 = 0.
TruncatedSeries series_exp(const TruncatedSeries& f);
/// log(f) for f with f_0 = 1.
TruncatedSeries series_log(const TruncatedSeries& f);

/// The sign data shared by every formula built from the same matrix M:
/// p = #{real eigenvalues < -1}, r = #{real eigenvalues with |mu| > 1},
/// sigma = (-1)^p.
struct SignConvention {
    unsigned p = 0;
    unsigned r = 0;
    int sigma = 1;
};

struct ZetaFactor {
    IntPolynomial poly;
    int exponent;
    friend bool operator==(const ZetaFactor&, const ZetaFactor&) = default;
};

/// prod_j poly_j(z)^{exponent_j}; every poly has constant term 1.
struct FactoredRationalFunction {
    std::vector<ZetaFactor> factors;
    std::optional<SignConvention> signs;

    /// Merges equal polynomials and drops trivial factors.
    void normalize();
    std::complex<double> evaluate(std::complex<double> z) const;
    /// Expanded numerator and denominator polynomials.
    std::pair<IntPolynomial, IntPolynomial> expanded() const;
    std::string to_string() const;
};

/// Closed form of the Reidemeister zeta function of phi on Z^k x F:
/// (prod_i det(I - (wedge^i M (x) B) sigma z)^{(-1)^{i+1}})^{(-1)^r}.
FactoredRationalFunction zeta_product(const ProductEndomorphism& p);

/// R(phi^n) for n = 1..order via r_product, cross-checked against
/// r_product_oracle wherever the oracle fits in oracle_points. Throws
/// InfiniteReidemeister for the first infinite count and
/// OracleDisagreement on any mismatch.
std::vector<Integer> reidemeister_counts(const ProductEndomorphism& p, std::size_t order,
                                         std::size_t oracle_points = 4000);

/// exp(sum_n counts[n-1] / n z^n).
TruncatedSeries series_from_counts(const std::vector<Integer>& counts);

/// The defining series of the zeta function, from exact counts.
TruncatedSeries zeta_series_oracle(const ProductEndomorphism& p, std::size_t order,
                                   std::size_t oracle_points = 4000);

/// Exact expansion of prod poly^e through sum e log(poly) and exp.
TruncatedSeries expand_rational(const FactoredRationalFunction& rf, std::size_t order);

/// Coefficients n = 1..order of z d/dz log(rf).
std::vector<Rational> log_derivative_coefficients(const FactoredRationalFunction& rf, std::size_t order);

/// prod_k det(I - A_k z)^{(-1)^{k+1}}, A_k acting in degree k.
FactoredRationalFunction lefschetz_zeta(const std::vector<IntMatrix>& matrices);

int mobius(unsigned long n);

struct CongruenceResidue {
    unsigned long n;
    Integer residue;
};

/// For each n, (sum_{d | n} mu(d) counts[n/d - 1]) mod n.
std::vector<CongruenceResidue> congruence_check(const std::vector<Integer>& counts);

struct FunctionalEquation {
    bool is_constant = false;
    /// R(1/(dz)) / R(z)^{(-1)^k} when constant.
    Rational epsilon;
    int exponent = 1;
    Integer d;
};

/// Forms R(1/(dz)) R(z)^{-(-1)^k} symbolically for phi = M on Z^k, d = det M,
/// and decides whether it is constant. Throws ZeroDeterminant if d = 0.
FunctionalEquation functional_equation_check(const IntMatrix& m);

struct TorsionValue {
    /// |R_phi(sigma lambda)|^{(-1)^{r+1}} from the factored zeta function.
    double via_zeta;
    /// prod_i |det(I - lambda X_i)|^{(-1)^i} over the induced maps X_i on the
    /// homology of the dual.
    double via_lefschetz;

    double relative_gap() const;
};

/// Reidemeister torsion of the mapping torus of the dual map at
/// lambda = exp(2 pi i t). Requires det M != 0 and phi_F bijective
/// (NonInvertible otherwise); throws PoleAtEvaluation if any factor is
/// below pole_guard in modulus at the evaluation point.
TorsionValue torsion_special_value(const ProductEndomorphism& p, const Rational& t, double pole_guard = 1e-6);

}  // namespace rdm
