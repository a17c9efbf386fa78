#include "rdm/intlinalg.hpp"

#include "rdm/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rdm {

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ValidationError("ragged matrix literal");
        for (long x : row) entries_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ValidationError("ragged matrix: row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Integer IntMatrix::trace() const {
    if (!is_square()) throw NotSquare("trace of a " + std::to_string(rows_) + "x" +
                                      std::to_string(cols_) + " matrix");
    Integer t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix& IntMatrix::operator*=(const Integer& s) {
    for (auto& x : entries_) x *= s;
    return *this;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix sum: shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ValidationError("matrix difference: shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
    return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix product: shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
    if (v.size() != cols_) throw ValidationError("matrix-vector product: shape mismatch");
    std::vector<Integer> out(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPolynomial::leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

Integer IntPolynomial::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(r));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial pow(const IntPolynomial& p, unsigned n) {
    IntPolynomial result{1};
    IntPolynomial base = p;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

std::string IntPolynomial::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer mag = ::abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers for gcd and Sturm sequences.

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
    RatPoly r;
    r.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) r.emplace_back(c);
    return r;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

// Returns (quotient, remainder).
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    trim(num);
    if (num.size() < den.size()) return {RatPoly{}, num};
    RatPoly q(num.size() - den.size() + 1, Rational(0));
    while (!num.empty() && num.size() >= den.size()) {
        const std::size_t shift = num.size() - den.size();
        Rational f = num.back() / den.back();
        q[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        num.pop_back();
        trim(num);
    }
    trim(q);
    return {q, num};
}

RatPoly monic(RatPoly p) {
    trim(p);
    if (p.empty()) return p;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Rational eval(const RatPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sgn(const Rational& x) { return ::sgn(x); }

IntPolynomial to_primitive_int(const RatPoly& p) {
    Integer l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.size());
    for (const auto& c : p) {
        Rational s = c * l;
        out.push_back(s.get_num());
    }
    Integer g = 0;
    for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(out));
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p, derivative(p)};
    trim(chain.back());
    while (!chain.back().empty()) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    if (chain.back().empty()) chain.pop_back();
    return chain;
}

// Sign variations at x; x == nullptr with at_plus_inf selects +-infinity.
unsigned variations(const std::vector<RatPoly>& chain, const Rational* x, bool at_plus_inf) {
    unsigned count = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s;
        if (x) {
            s = sgn(eval(p, *x));
        } else {
            s = sgn(p.back());
            if (!at_plus_inf && (p.size() - 1) % 2 == 1) s = -s;
        }
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

// ---------------------------------------------------------------------------
// Determinants and characteristic polynomials

Integer det(const IntMatrix& a) {
    if (!a.is_square()) throw NotSquare("det of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(t);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntPolynomial char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw NotSquare("char_poly of a non-square matrix");
    const std::size_t n = a.rows();
    // Faddeev-LeVerrier: c_n = 1, M_1 = I, c_{n-k} = -tr(A M_k)/k,
    // M_{k+1} = A M_k + c_{n-k} I.
    std::vector<Integer> c(n + 1, Integer(0));
    c[n] = 1;
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = a * m;
        Integer t = -am.trace();
        if (!mpz_divisible_ui_p(t.get_mpz_t(), k))
            throw std::logic_error("Faddeev-LeVerrier produced a non-integral coefficient");
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), k);
        c[n - k] = t;
        if (k < n) {
            m = std::move(am);
            for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial det_one_minus(const IntMatrix& a) {
    if (!a.is_square()) throw NotSquare("det(I - Az) of a non-square matrix");
    // det(I - Az) = z^n chi_A(1/z): the coefficient list of chi_A reversed,
    // padded so the constant term is the leading 1 of chi_A.
    std::vector<Integer> c = char_poly(a).coefficients();
    std::reverse(c.begin(), c.end());
    return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}
void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}
// row_i += f * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) += f * m(j, c);
}
// col_i += f * col_j
void add_col(IntMatrix& m, std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) += f * m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    IntMatrix s = a;
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);
    const std::size_t steps = std::min(rows, cols);
    std::vector<Integer> diagonal(steps, Integer(0));

    for (std::size_t t = 0; t < steps; ++t) {
        bool all_zero = false;
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = t, pj = t;
            Integer best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (s(i, j) != 0 && (best == 0 || ::abs(s(i, j)) < best)) {
                        best = ::abs(s(i, j));
                        pi = i;
                        pj = j;
                    }
            if (best == 0) {
                all_zero = true;
                break;
            }
            if (pi != t) {
                swap_rows(s, pi, t);
                swap_rows(left, pi, t);
            }
            if (pj != t) {
                swap_cols(s, pj, t);
                swap_cols(right, pj, t);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                add_row(s, i, t, -q);
                add_row(left, i, t, -q);
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                add_col(s, j, t, -q);
                add_col(right, j, t, -q);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                        add_row(s, t, i, Integer(1));
                        add_row(left, t, i, Integer(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (all_zero) break;
        if (s(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) s(t, c) = -s(t, c);
            for (std::size_t c = 0; c < rows; ++c) left(t, c) = -left(t, c);
        }
        diagonal[t] = s(t, t);
    }
    return SmithForm{std::move(diagonal), std::move(left), std::move(right)};
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (!a.is_square()) throw NotSquare("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw ValidationError("matrix is singular");
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m[i][n + j];
            if (x.get_den() != 1) throw ValidationError("matrix is not unimodular");
            out(i, j) = x.get_num();
        }
    return out;
}

// ---------------------------------------------------------------------------
// Exterior powers, Kronecker products, powers

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    if (k > n) return out;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

IntMatrix exterior_power(const IntMatrix& a, std::size_t i) {
    if (!a.is_square()) throw NotSquare("exterior power of a non-square matrix");
    const std::size_t k = a.rows();
    if (i > k)
        throw BadIndex("exterior power " + std::to_string(i) + " of a " + std::to_string(k) +
                       "x" + std::to_string(k) + " matrix");
    if (i == 0) return IntMatrix::identity(1);
    const auto idx = subsets(k, i);
    IntMatrix out(idx.size(), idx.size());
    IntMatrix minor(i, i);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) {
            for (std::size_t u = 0; u < i; ++u)
                for (std::size_t v = 0; v < i; ++v) minor(u, v) = a(idx[r][u], idx[c][v]);
            out(r, c) = det(minor);
        }
    return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Integer& aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t u = 0; u < b.rows(); ++u)
                for (std::size_t v = 0; v < b.cols(); ++v)
                    out(i * b.rows() + u, j * b.cols() + v) = aij * b(u, v);
        }
    return out;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long n) {
    if (!a.is_square()) throw NotSquare("power of a non-square matrix");
    IntMatrix result = IntMatrix::identity(a.rows());
    IntMatrix base = a;
    while (n) {
        if (n & 1ul) result = result * base;
        n >>= 1ul;
        if (n) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Sturm counting

unsigned sturm_root_count(const IntPolynomial& squarefree, const Rational* lo, const Rational* hi) {
    if (squarefree.degree() < 1) return 0;
    const auto chain = sturm_chain(to_rat(squarefree));
    const unsigned at_lo = variations(chain, lo, false);
    const unsigned at_hi = variations(chain, hi, true);
    return at_lo - at_hi;
}

EigenSigns count_eigen_signs(const IntMatrix& a) {
    const IntPolynomial f = char_poly(a);
    if (f.evaluate(Integer(1)) == 0) throw EigenvalueOnBoundary("+1 is an eigenvalue of " + a.to_string());
    if (f.evaluate(Integer(-1)) == 0) throw EigenvalueOnBoundary("-1 is an eigenvalue of " + a.to_string());

    const Rational minus_one(-1), plus_one(1);
    EigenSigns out;
    // A root of multiplicity m survives in f_0, ..., f_{m-1} of the filtration
    // f_{j+1} = gcd(f_j, f_j'); summing distinct-root counts recovers
    // multiplicities.
    RatPoly fj = to_rat(f);
    while (fj.size() > 1) {
        RatPoly g = gcd(fj, derivative(fj));
        RatPoly squarefree = divmod(fj, g).first;
        const IntPolynomial sq = to_primitive_int(squarefree);
        const unsigned below = sturm_root_count(sq, nullptr, &minus_one);
        const unsigned above = sturm_root_count(sq, &plus_one, nullptr);
        out.p += below;
        out.r += below + above;
        fj = std::move(g);
    }
    return out;
}

namespace {

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace

bool has_root_of_unity_eigenvalue(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return false;
    const RatPoly chi = to_rat(char_poly(a));
    // phi(m) >= sqrt(m/2), so phi(m) <= n forces m <= 2 n^2.
    const unsigned long bound = 2ul * n * n + 2;
    // Cyclotomic polynomials bottom-up from x^m - 1 = prod_{d | m} Phi_d.
    std::vector<RatPoly> cyclotomic(bound + 1);
    for (unsigned long m = 1; m <= bound; ++m) {
        RatPoly num(m + 1, Rational(0));
        num[0] = -1;
        num[m] = 1;
        for (unsigned long d = 1; d < m; ++d)
            if (m % d == 0) num = divmod(num, cyclotomic[d]).first;
        cyclotomic[m] = std::move(num);
        if (euler_phi(m) > n) continue;
        if (divmod(chi, cyclotomic[m]).second.empty()) return true;
    }
    return false;
}

}  // namespace rdm
