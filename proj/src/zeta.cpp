#include "rdm/zeta.hpp"

#include "rdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rdm {

// ---------------------------------------------------------------------------
// Truncated series

TruncatedSeries TruncatedSeries::from_polynomial(const IntPolynomial& p, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = p.coefficient(i);
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries c(n);
    for (std::size_t i = 0; i <= n; ++i) c.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return c;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries c(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return c;
}

TruncatedSeries operator*(const Rational& s, TruncatedSeries a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        os << (first ? "" : " + ") << coeffs_[i];
        if (i) os << "z^" << i;
        first = false;
    }
    if (first) os << '0';
    os << " + O(z^" << coeffs_.size() << ')';
    return os.str();
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
    if (f[0] != 0) throw ValidationError("series_exp needs a zero constant term");
    const std::size_t n = f.order();
    // g' = f' g  =>  k g_k = sum_{j=1..k} j f_j g_{k-j}
    TruncatedSeries g(n);
    g[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += Rational(static_cast<unsigned long>(j)) * f[j] * g[k - j];
        g[k] = acc / static_cast<unsigned long>(k);
    }
    return g;
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    if (f[0] != 1) throw ValidationError("series_log needs constant term 1");
    const std::size_t n = f.order();
    // f g' = f'  =>  k g_k = k f_k - sum_{j=1..k-1} j g_j f_{k-j}
    TruncatedSeries g(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = Rational(static_cast<unsigned long>(k)) * f[k];
        for (std::size_t j = 1; j < k; ++j) acc -= Rational(static_cast<unsigned long>(j)) * g[j] * f[k - j];
        g[k] = acc / static_cast<unsigned long>(k);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Factored rational functions

void FactoredRationalFunction::normalize() {
    std::vector<ZetaFactor> merged;
    for (auto& f : factors) {
        if (f.poly.coefficient(0) != 1) throw ValidationError("zeta factor " + f.poly.to_string('z') +
                                                              " does not have constant term 1");
        if (f.poly.degree() == 0 || f.exponent == 0) continue;
        auto it = std::find_if(merged.begin(), merged.end(), [&](const ZetaFactor& m) { return m.poly == f.poly; });
        if (it == merged.end()) merged.push_back(f);
        else it->exponent += f.exponent;
    }
    std::erase_if(merged, [](const ZetaFactor& f) { return f.exponent == 0; });
    factors = std::move(merged);
}

std::complex<double> FactoredRationalFunction::evaluate(std::complex<double> z) const {
    std::complex<double> acc = 1.0;
    for (const auto& f : factors) {
        std::complex<double> v = 0.0;
        const auto& c = f.poly.coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + it->get_d();
        acc *= std::pow(v, f.exponent);
    }
    return acc;
}

std::pair<IntPolynomial, IntPolynomial> FactoredRationalFunction::expanded() const {
    IntPolynomial num{1}, den{1};
    for (const auto& f : factors) {
        if (f.exponent > 0) num = num * pow(f.poly, static_cast<unsigned>(f.exponent));
        else den = den * pow(f.poly, static_cast<unsigned>(-f.exponent));
    }
    return {num, den};
}

std::string FactoredRationalFunction::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        os << (i ? " * " : "") << '(' << factors[i].poly.to_string('z') << ')';
        if (factors[i].exponent != 1) os << "^(" << factors[i].exponent << ')';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Zeta functions

FactoredRationalFunction zeta_product(const ProductEndomorphism& p) {
    const IntMatrix& m = p.matrix();
    const EigenSigns es = m.rows() ? count_eigen_signs(m) : EigenSigns{};
    const SignConvention signs{es.p, es.r, es.p % 2 ? -1 : 1};
    const IntMatrix b = class_function_matrix(p.group(), p.finite_part()).matrix;
    const int outer = es.r % 2 ? -1 : 1;

    FactoredRationalFunction rf;
    rf.signs = signs;
    for (std::size_t i = 0; i <= m.rows(); ++i) {
        IntMatrix x = kron(exterior_power(m, i), b);
        x *= Integer(signs.sigma);
        const int inner = i % 2 ? 1 : -1;  // (-1)^{i+1}
        rf.factors.push_back({det_one_minus(x), inner * outer});
    }
    rf.normalize();
    return rf;
}

std::vector<Integer> reidemeister_counts(const ProductEndomorphism& p, std::size_t order, std::size_t oracle_points) {
    std::vector<Integer> counts;
    counts.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Integer direct = r_product(p, n);
        try {
            Integer brute = r_product_oracle(p, n, oracle_points);
            if (brute != direct)
                throw OracleDisagreement("R(phi^" + std::to_string(n) + "): product formula gives " + direct.get_str() +
                                         ", class enumeration gives " + brute.get_str());
        } catch (const OracleTooLarge&) {
        }
        counts.push_back(std::move(direct));
    }
    return counts;
}

TruncatedSeries series_from_counts(const std::vector<Integer>& counts) {
    TruncatedSeries log_series(counts.size());
    for (std::size_t n = 1; n <= counts.size(); ++n)
        log_series[n] = make_rational(counts[n - 1], Integer(static_cast<unsigned long>(n)));
    return series_exp(log_series);
}

TruncatedSeries zeta_series_oracle(const ProductEndomorphism& p, std::size_t order, std::size_t oracle_points) {
    return series_from_counts(reidemeister_counts(p, order, oracle_points));
}

TruncatedSeries expand_rational(const FactoredRationalFunction& rf, std::size_t order) {
    TruncatedSeries log_sum(order);
    for (const auto& f : rf.factors)
        log_sum = log_sum + Rational(f.exponent) * series_log(TruncatedSeries::from_polynomial(f.poly, order));
    return series_exp(log_sum);
}

std::vector<Rational> log_derivative_coefficients(const FactoredRationalFunction& rf, std::size_t order) {
    TruncatedSeries log_sum(order);
    for (const auto& f : rf.factors)
        log_sum = log_sum + Rational(f.exponent) * series_log(TruncatedSeries::from_polynomial(f.poly, order));
    std::vector<Rational> out;
    for (std::size_t n = 1; n <= order; ++n) out.push_back(log_sum[n] * static_cast<unsigned long>(n));
    return out;
}

FactoredRationalFunction lefschetz_zeta(const std::vector<IntMatrix>& matrices) {
    FactoredRationalFunction rf;
    for (std::size_t k = 0; k < matrices.size(); ++k)
        rf.factors.push_back({det_one_minus(matrices[k]), k % 2 ? 1 : -1});
    rf.normalize();
    return rf;
}

// ---------------------------------------------------------------------------
// Congruences

int mobius(unsigned long n) {
    if (n == 0) throw BadIndex("mobius(0)");
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::vector<CongruenceResidue> congruence_check(const std::vector<Integer>& counts) {
    std::vector<CongruenceResidue> out;
    for (unsigned long n = 1; n <= counts.size(); ++n) {
        Integer sum = 0;
        for (unsigned long d = 1; d <= n; ++d)
            if (n % d == 0) sum += mobius(d) * counts[n / d - 1];
        Integer residue;
        mpz_fdiv_r_ui(residue.get_mpz_t(), sum.get_mpz_t(), n);
        out.push_back({n, residue});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Functional equation

FunctionalEquation functional_equation_check(const IntMatrix& m) {
    const Integer d = det(m);
    if (d == 0) throw ZeroDeterminant("det M = 0 for M = " + m.to_string());
    const std::size_t k = m.rows();
    const int s = k % 2 ? -1 : 1;
    const FactoredRationalFunction rf = zeta_product(ProductEndomorphism::abelian(m));

    // P(1/(dz)) = (dz)^{-deg P} P*(z) with P*(z) = sum_i c_{deg-i} d^i z^i.
    IntPolynomial num{1}, den{1};
    long shift = 0;
    auto absorb = [&](const IntPolynomial& q, int e) {
        if (e > 0) num = num * pow(q, static_cast<unsigned>(e));
        else if (e < 0) den = den * pow(q, static_cast<unsigned>(-e));
    };
    for (const auto& f : rf.factors) {
        const long deg = f.poly.degree();
        std::vector<Integer> star(deg + 1);
        Integer dpow = 1;
        for (long i = 0; i <= deg; ++i) {
            star[i] = f.poly.coefficient(static_cast<std::size_t>(deg - i)) * dpow;
            dpow *= d;
        }
        absorb(IntPolynomial(std::move(star)), f.exponent);
        absorb(f.poly, -s * f.exponent);
        shift += deg * f.exponent;
    }
    // Remaining monomial factor (dz)^{-shift}.
    if (shift < 0) num = num * IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(-shift));
    else if (shift > 0) den = den * IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(shift));
    Integer dshift;
    mpz_pow_ui(dshift.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(std::labs(shift)));

    FunctionalEquation out;
    out.exponent = s;
    out.d = d;
    IntPolynomial lhs = num, rhs = den;
    lhs = lhs * IntPolynomial(std::vector<Integer>{den.leading()});
    rhs = rhs * IntPolynomial(std::vector<Integer>{num.leading()});
    out.is_constant = num.degree() == den.degree() && lhs == rhs;
    if (out.is_constant) {
        Rational eps = make_rational(num.leading(), den.leading());
        if (shift > 0) eps /= Rational(dshift);
        else eps *= Rational(dshift);
        out.epsilon = eps;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Torsion

double TorsionValue::relative_gap() const {
    return std::abs(via_zeta - via_lefschetz) / std::max(std::abs(via_zeta), std::abs(via_lefschetz));
}

namespace {

using Complex = std::complex<double>;

// det(I - lambda X) by partial-pivot Gaussian elimination in double.
Complex det_one_minus_scaled(const IntMatrix& x, Complex lambda) {
    const std::size_t n = x.rows();
    std::vector<Complex> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = (i == j ? 1.0 : 0.0) - lambda * x(i, j).get_d();
    Complex result = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
        if (std::abs(a[piv * n + c]) == 0.0) return 0.0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            result = -result;
        }
        result *= a[c * n + c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Complex f = a[r * n + c] / a[c * n + c];
            for (std::size_t j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
        }
    }
    return result;
}

}  // namespace

TorsionValue torsion_special_value(const ProductEndomorphism& p, const Rational& t, double pole_guard) {
    const IntMatrix& m = p.matrix();
    if (det(m) == 0) throw NonInvertible("det M = 0: the dual map is not a covering of finite degree");
    if (!p.finite_part().is_bijective()) throw NonInvertible("finite part is not an automorphism");

    const Complex lambda = std::polar(1.0, 2.0 * std::numbers::pi * t.get_d());
    const FactoredRationalFunction rf = zeta_product(p);
    const SignConvention signs = *rf.signs;

    const Complex z = static_cast<double>(signs.sigma) * lambda;
    double log_modulus = 0.0;
    for (const auto& f : rf.factors) {
        Complex v = 0.0;
        const auto& c = f.poly.coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + it->get_d();
        if (std::abs(v) < pole_guard)
            throw PoleAtEvaluation("factor " + f.poly.to_string('z') + " vanishes at sigma*lambda, t = " + t.get_str());
        log_modulus += f.exponent * std::log(std::abs(v));
    }
    const double via_zeta = std::exp((signs.r % 2 ? 1.0 : -1.0) * log_modulus);

    // Homology of the dual torus times the dual of F: the dual map acts by
    // the transpose of wedge^i M (x) B in degree i.
    const IntMatrix b = class_function_matrix(p.group(), p.finite_part()).matrix;
    double log_torsion = 0.0;
    for (std::size_t i = 0; i <= m.rows(); ++i) {
        const IntMatrix x = kron(exterior_power(m, i), b).transpose();
        const Complex dv = det_one_minus_scaled(x, lambda);
        if (std::abs(dv) < pole_guard)
            throw PoleAtEvaluation("det(I - lambda X_" + std::to_string(i) + ") vanishes at t = " + t.get_str());
        log_torsion += (i % 2 ? -1.0 : 1.0) * std::log(std::abs(dv));
    }
    return TorsionValue{via_zeta, std::exp(log_torsion)};
}

}  // namespace rdm
