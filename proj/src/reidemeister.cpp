#include "rdm/reidemeister.hpp"

#include "rdm/errors.hpp"

#include <numeric>

namespace rdm {

// ---------------------------------------------------------------------------
// ProductEndomorphism

ProductEndomorphism::ProductEndomorphism(IntMatrix m, FiniteGroup f, std::vector<Element> psi,
                                         GroupEndomorphism phi_f)
    : m_(std::move(m)), f_(std::move(f)), psi_(std::move(psi)), phi_f_(std::move(phi_f)) {
    if (!m_.is_square()) throw NotSquare("product endomorphism needs a square matrix");
    if (psi_.size() != m_.rows())
        throw ValidationError("psi has " + std::to_string(psi_.size()) + " images for rank " +
                              std::to_string(m_.rows()));
    if (phi_f_.size() != f_.order()) throw ValidationError("finite part does not match the finite group");
    for (auto x : psi_)
        if (x >= f_.order()) throw ValidationError("psi image out of range");
    for (std::size_t i = 0; i < psi_.size(); ++i) {
        for (std::size_t j = i + 1; j < psi_.size(); ++j)
            if (!f_.commute(psi_[i], psi_[j]))
                throw NotAHomomorphism("psi(e_" + std::to_string(i) + ") and psi(e_" + std::to_string(j) +
                                       ") do not commute");
        for (Element x = 0; x < f_.order(); ++x)
            if (!f_.commute(psi_[i], phi_f_(x)))
                throw NotAHomomorphism("psi(e_" + std::to_string(i) + ") does not commute with phi_F(" +
                                       f_.name(x) + ")");
    }
}

ProductEndomorphism ProductEndomorphism::abelian(IntMatrix m) {
    const std::size_t k = m.rows();
    FiniteGroup trivial = FiniteGroup::trivial();
    GroupEndomorphism id = GroupEndomorphism::identity(trivial);
    return ProductEndomorphism(std::move(m), std::move(trivial), std::vector<Element>(k, 0), std::move(id));
}

ProductEndomorphism ProductEndomorphism::finite(FiniteGroup f, GroupEndomorphism phi_f) {
    return ProductEndomorphism(IntMatrix(0, 0), std::move(f), {}, std::move(phi_f));
}

Element ProductEndomorphism::psi_of(const std::vector<Integer>& v) const {
    if (v.size() != rank()) throw ValidationError("vector has wrong rank");
    Element acc = f_.identity();
    for (std::size_t j = 0; j < v.size(); ++j) {
        const Element g = psi_[j];
        Integer e;
        mpz_fdiv_r_ui(e.get_mpz_t(), v[j].get_mpz_t(), f_.element_order(g));
        acc = f_.mul(acc, f_.pow(g, e.get_si()));
    }
    return acc;
}

ProductEndomorphism::Point ProductEndomorphism::operator()(const Point& x) const {
    return Point{m_.apply(x.v), f_.mul(psi_of(x.v), phi_f_(x.f))};
}

ProductEndomorphism ProductEndomorphism::iterate(unsigned long n) const {
    if (n == 0) throw BadIndex("iterate requires n >= 1");
    const std::size_t k = rank();
    std::vector<Element> psi_n(k);
    for (std::size_t j = 0; j < k; ++j) {
        Point x{std::vector<Integer>(k, Integer(0)), f_.identity()};
        x.v[j] = 1;
        for (unsigned long i = 0; i < n; ++i) x = (*this)(x);
        psi_n[j] = x.f;
    }
    return ProductEndomorphism(mat_pow(m_, n), f_, std::move(psi_n), iterate_endo(phi_f_, n));
}

bool ProductEndomorphism::verify_homomorphism() const {
    const std::size_t k = rank();
    std::vector<Point> gens;
    for (std::size_t j = 0; j < k; ++j) {
        Point x{std::vector<Integer>(k, Integer(0)), f_.identity()};
        x.v[j] = 1;
        gens.push_back(std::move(x));
    }
    for (Element f = 0; f < f_.order(); ++f) gens.push_back(Point{std::vector<Integer>(k, Integer(0)), f});
    auto product = [&](const Point& a, const Point& b) {
        Point c{a.v, f_.mul(a.f, b.f)};
        for (std::size_t j = 0; j < k; ++j) c.v[j] += b.v[j];
        return c;
    };
    for (const auto& a : gens)
        for (const auto& b : gens)
            if ((*this)(product(a, b)) != product((*this)(a), (*this)(b))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Finite groups

ClassFunctionMap class_function_matrix(const FiniteGroup& g, const GroupEndomorphism& phi) {
    ConjugacyPartition classes = ordinary_conjugacy_classes(g);
    const std::size_t c = classes.count();
    IntMatrix b(c, c);
    for (std::size_t src = 0; src < c; ++src) b(classes.class_of[phi(classes.representatives[src])], src) = 1;
    return ClassFunctionMap{std::move(b), std::move(classes)};
}

Integer r_finite(const FiniteGroup& g, const GroupEndomorphism& phi) {
    const ConjugacyPartition classes = ordinary_conjugacy_classes(g);
    unsigned long fixed = 0;
    for (std::size_t c = 0; c < classes.count(); ++c)
        if (classes.class_of[phi(classes.representatives[c])] == c) ++fixed;
    return Integer(fixed);
}

// ---------------------------------------------------------------------------
// Free abelian groups

namespace {

Integer one_minus_det(const IntMatrix& m, unsigned long n) {
    return det(IntMatrix::identity(m.rows()) - mat_pow(m, n));
}

Integer sign_power(unsigned long e) { return e % 2 ? Integer(-1) : Integer(1); }

}  // namespace

Integer r_abelian(const IntMatrix& m) {
    Integer d = one_minus_det(m, 1);
    if (d == 0) throw InfiniteReidemeister("det(I - M) = 0 for M = " + m.to_string(), 1);
    return ::abs(d);
}

Integer r_abelian_smith(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(IntMatrix::identity(m.rows()) - m);
    Integer count = 1;
    for (const auto& d : s.diagonal) {
        if (d == 0) throw InfiniteReidemeister("I - M has a zero invariant factor for M = " + m.to_string(), 1);
        count *= d;
    }
    return count;
}

Integer r_abelian_trace(const IntMatrix& m) {
    const EigenSigns signs = count_eigen_signs(m);
    Integer sum = 0;
    for (std::size_t i = 0; i <= m.rows(); ++i) sum += sign_power(i) * exterior_power(m, i).trace();
    if (sum == 0) throw InfiniteReidemeister("alternating exterior trace vanishes for M = " + m.to_string(), 1);
    return sign_power(signs.r + signs.p) * sum;
}

// ---------------------------------------------------------------------------
// Products

Integer r_product(const ProductEndomorphism& p, unsigned long n) {
    if (n == 0) throw BadIndex("r_product requires n >= 1");
    const Integer d = one_minus_det(p.matrix(), n);
    if (d == 0)
        throw InfiniteReidemeister("det(I - M^" + std::to_string(n) + ") = 0 for M = " + p.matrix().to_string(), n);
    return ::abs(d) * r_finite(p.group(), iterate_endo(p.finite_part(), n));
}

Integer r_product_trace(const ProductEndomorphism& p, unsigned long n) {
    if (n == 0) throw BadIndex("r_product_trace requires n >= 1");
    const IntMatrix& m = p.matrix();
    const EigenSigns signs = m.rows() ? count_eigen_signs(m) : EigenSigns{};
    const IntMatrix b = class_function_matrix(p.group(), p.finite_part()).matrix;
    Integer sum = 0;
    for (std::size_t i = 0; i <= m.rows(); ++i)
        sum += sign_power(i) * mat_pow(kron(exterior_power(m, i), b), n).trace();
    if (sum == 0) throw InfiniteReidemeister("signed trace vanishes at n = " + std::to_string(n), n);
    return sign_power(signs.r + signs.p * n) * sum;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::size_t roots() {
        std::size_t count = 0;
        for (std::size_t i = 0; i < parent.size(); ++i) count += find(i) == i;
        return count;
    }
};

}  // namespace

Integer r_product_oracle(const ProductEndomorphism& p, unsigned long n, std::size_t max_points) {
    if (n == 0) throw BadIndex("r_product_oracle requires n >= 1");
    const ProductEndomorphism pn = p.iterate(n);
    const std::size_t k = pn.rank();
    const FiniteGroup& f = pn.group();
    const IntMatrix a = IntMatrix::identity(k) - pn.matrix();
    const Integer d = det(a);
    if (d == 0)
        throw InfiniteReidemeister("det(I - M^" + std::to_string(n) + ") = 0 for M = " + p.matrix().to_string(), n);
    if (::abs(d) * f.order() > max_points)
        throw OracleTooLarge("oracle would enumerate " + Integer(::abs(d) * f.order()).get_str() + " points");

    // L A R = diag(d_i); v == v' mod A Z^k  iff  L(v - v') lies in diag(d) Z^k.
    const SmithForm smith = smith_normal_form(a);
    const IntMatrix left_inv = unimodular_inverse(smith.left);

    std::vector<std::vector<Integer>> reps;
    std::vector<Integer> u(k, Integer(0));
    for (;;) {
        reps.push_back(left_inv.apply(u));
        std::size_t i = 0;
        while (i < k && ++u[i] == smith.diagonal[i]) u[i++] = 0;
        if (i == k) break;
    }

    // For each ordered pair of representatives: psi_n(w) with (I - M^n) w = v2 - v1,
    // or nothing when the system has no integral solution.
    constexpr Element kNoSolution = static_cast<Element>(-1);
    const std::size_t nreps = reps.size();
    std::vector<Element> twist(nreps * nreps, kNoSolution);
    for (std::size_t r1 = 0; r1 < nreps; ++r1)
        for (std::size_t r2 = 0; r2 < nreps; ++r2) {
            std::vector<Integer> delta(k);
            for (std::size_t j = 0; j < k; ++j) delta[j] = reps[r2][j] - reps[r1][j];
            std::vector<Integer> y = smith.left.apply(delta);
            bool integral = true;
            for (std::size_t j = 0; j < k && integral; ++j) {
                if (!mpz_divisible_p(y[j].get_mpz_t(), smith.diagonal[j].get_mpz_t())) integral = false;
                else mpz_divexact(y[j].get_mpz_t(), y[j].get_mpz_t(), smith.diagonal[j].get_mpz_t());
            }
            if (!integral) continue;
            twist[r1 * nreps + r2] = pn.psi_of(smith.right.apply(y));
        }

    const std::size_t order = f.order();
    const GroupEndomorphism& phi = pn.finite_part();
    DisjointSets sets(nreps * order);
    for (std::size_t r1 = 0; r1 < nreps; ++r1)
        for (std::size_t r2 = 0; r2 < nreps; ++r2) {
            const Element s = twist[r1 * nreps + r2];
            if (s == kNoSolution) continue;
            for (Element f1 = 0; f1 < order; ++f1)
                for (Element f2 = 0; f2 < order; ++f2) {
                    const Element rhs_left = f.mul(f2, s);
                    for (Element h = 0; h < order; ++h)
                        if (f.mul(h, f1) == f.mul(rhs_left, phi(h))) {
                            sets.unite(r1 * order + f1, r2 * order + f2);
                            break;
                        }
                }
        }
    return Integer(static_cast<unsigned long>(sets.roots()));
}

}  // namespace rdm
