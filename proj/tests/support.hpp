#pragma once

// Random generators and slow reference computations shared by the unit tests
// and the acceptance runner.

#include "rdm/catalog.hpp"
#include "rdm/errors.hpp"
#include "rdm/finite_group.hpp"
#include "rdm/fox.hpp"
#include "rdm/intlinalg.hpp"
#include "rdm/reidemeister.hpp"
#include "rdm/zeta.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace rdm::testing {

using catalog::NamedGroup;
using catalog::standard_groups;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntMatrix random_matrix(Rng& rng, std::size_t k, long lo, long hi) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = uniform(rng, lo, hi);
    return m;
}

/// det(I - M) != 0 and det(I + M) != 0.
inline bool avoids_plus_minus_one(const IntMatrix& m) {
    IntMatrix id = IntMatrix::identity(m.rows());
    return det(id - m) != 0 && det(id + m) != 0;
}

/// Random k x k matrix, 1 <= k <= kmax, with no eigenvalue +-1.
inline IntMatrix random_hyperbolic_free(Rng& rng, std::size_t kmax, long lo, long hi) {
    for (;;) {
        IntMatrix m = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(kmax))), lo, hi);
        if (avoids_plus_minus_one(m)) return m;
    }
}

/// Cofactor expansion along the first row.
inline Integer laplace_det(const IntMatrix& a) {
    std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = a(r, c);
        Integer term = a(0, j) * laplace_det(minor);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

/// Coefficients c_0..c_order of p(z) as a series.
inline std::vector<Rational> poly_series(const IntPolynomial& p, std::size_t order) {
    std::vector<Rational> s(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order && static_cast<long>(i) <= p.degree(); ++i) s[i] = p.coefficient(i);
    return s;
}

inline std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// 1 / a for a_0 != 0, by long division.
inline std::vector<Rational> series_inverse(const std::vector<Rational>& a) {
    std::vector<Rational> inv(a.size(), Rational(0));
    inv[0] = 1 / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= n; ++i) acc += a[i] * inv[n - i];
        inv[n] = -acc / a[0];
    }
    return inv;
}

/// Expansion of a factored rational function by repeated multiplication and
/// one division; shares no code with the exp/log route.
inline std::vector<Rational> expand_by_division(const FactoredRationalFunction& rf, std::size_t order) {
    std::vector<Rational> num = poly_series(IntPolynomial::monomial(1, 0), order);
    std::vector<Rational> den = num;
    for (const auto& f : rf.factors) {
        std::vector<Rational> s = poly_series(f.poly, order);
        for (int e = 0; e < std::abs(f.exponent); ++e) {
            if (f.exponent > 0) num = series_mul(num, s);
            else den = series_mul(den, s);
        }
    }
    return series_mul(num, series_inverse(den));
}

/// Small finite groups used for random products (orders up to 8).
inline std::vector<NamedGroup> small_groups() {
    std::vector<NamedGroup> out;
    for (auto& g : standard_groups())
        if (g.group.group.order() <= 8) out.push_back(std::move(g));
    return out;
}

/// psi images chosen at random until the product is a homomorphism; falls
/// back to the trivial psi.
inline std::vector<Element> random_psi(Rng& rng, const FiniteGroup& f, const GroupEndomorphism& phi, std::size_t k) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<Element> psi(k);
        for (auto& x : psi) x = static_cast<Element>(uniform(rng, 0, static_cast<long>(f.order()) - 1));
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            for (std::size_t j = 0; j < k && ok; ++j) ok = f.commute(psi[i], psi[j]);
            for (Element g = 0; g < f.order() && ok; ++g) ok = f.commute(psi[i], phi(g));
        }
        if (ok) return psi;
    }
    return std::vector<Element>(k, f.identity());
}

/// Random product endomorphism with k <= kmax, |F| <= 8, det(I - M^n) != 0
/// for n <= nmax and at most max_points points in the largest oracle run.
inline ProductEndomorphism random_product(Rng& rng, std::size_t kmax, unsigned nmax, long entry_bound,
                                          std::size_t max_points) {
    static const std::vector<NamedGroup> groups = small_groups();
    for (;;) {
        const NamedGroup& ng = groups[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(groups.size()) - 1))];
        const FiniteGroup& f = ng.group.group;
        std::vector<GroupEndomorphism> endos = all_endomorphisms(f, ng.group.generators);
        const GroupEndomorphism& phi = endos[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(endos.size()) - 1))];
        std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(kmax)));
        IntMatrix m = random_matrix(rng, k, -entry_bound, entry_bound);
        if (k > 0) {
            if (!avoids_plus_minus_one(m)) continue;
            bool ok = true;
            for (unsigned n = 1; n <= nmax && ok; ++n) {
                Integer d = abs(det(IntMatrix::identity(k) - mat_pow(m, n)));
                ok = d != 0 && d * f.order() <= max_points;
            }
            if (!ok) continue;
        }
        return ProductEndomorphism(m, f, random_psi(rng, f, phi, k), phi);
    }
}

/// Fixed catalog of product cases whose iterates all have finite
/// Reidemeister numbers (no eigenvalue of M is a root of unity).
inline std::vector<std::pair<std::string, ProductEndomorphism>> product_catalog() {
    std::vector<std::pair<std::string, ProductEndomorphism>> out;
    auto add_finite = [&](const std::string& name, const PermutationGroup& pg) {
        auto endos = all_endomorphisms(pg.group, pg.generators);
        for (std::size_t i = 0; i < endos.size() && i < 6; ++i)
            out.emplace_back(name + " endo #" + std::to_string(i), ProductEndomorphism::finite(pg.group, endos[i]));
    };
    add_finite("C6", catalog::cyclic(6));
    add_finite("V4", catalog::klein_four());
    add_finite("S3", catalog::symmetric(3));
    add_finite("Q8", catalog::quaternion());

    const std::vector<IntMatrix> mats = {
        IntMatrix{{-2}}, IntMatrix{{2}}, IntMatrix{{3}}, IntMatrix{{0}},
        IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{0, 1}, {1, 1}}, IntMatrix{{1, 1}, {1, 2}},
        IntMatrix{{0, 2}, {-1, 0}}, IntMatrix{{2, 0}, {0, -3}}, IntMatrix{{3, 1}, {1, 0}},
        IntMatrix{{0, 1, 0}, {0, 0, 1}, {3, -1, 2}},
    };
    for (const auto& m : mats) out.emplace_back("Z^" + std::to_string(m.rows()) + " " + m.to_string(), ProductEndomorphism::abelian(m));

    PermutationGroup v4 = catalog::klein_four();
    GroupEndomorphism swap = endo_from_generator_images(v4.group, v4.generators, {v4.generators[1], v4.generators[0]});
    out.emplace_back("Z x V4 swap, M=[[-2]]", ProductEndomorphism(IntMatrix{{-2}}, v4.group, {v4.group.identity()}, swap));
    out.emplace_back("Z x V4 swap, M=[[2]], psi=e1e2",
                     ProductEndomorphism(IntMatrix{{2}}, v4.group, {v4.group.mul(v4.generators[0], v4.generators[1])}, swap));

    PermutationGroup s3 = catalog::symmetric(3);
    out.emplace_back("Z x S3 id, M=[[-2]]",
                     ProductEndomorphism(IntMatrix{{-2}}, s3.group, {s3.group.identity()}, GroupEndomorphism::identity(s3.group)));
    PermutationGroup c4 = catalog::cyclic(4);
    GroupEndomorphism neg = endo_from_generator_images(c4.group, c4.generators, {c4.group.inv(c4.generators[0])});
    out.emplace_back("Z^2 x C4 inversion",
                     ProductEndomorphism(IntMatrix{{2, 1}, {1, 1}}, c4.group, {c4.generators[0], c4.group.identity()}, neg));
    PermutationGroup q8 = catalog::quaternion();
    out.emplace_back("Z x Q8 inner", ProductEndomorphism(IntMatrix{{3}}, q8.group, {q8.group.identity()},
                                                          GroupEndomorphism::inner(q8.group, q8.generators[0])));
    return out;
}

/// A random freely reduced word of length at most max_len over rank letters.
inline FreeWord random_word(Rng& rng, int rank, std::size_t max_len) {
    std::size_t len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
    std::vector<int> letters;
    while (letters.size() < len) {
        int g = static_cast<int>(uniform(rng, 1, rank));
        int l = uniform(rng, 0, 1) ? g : -g;
        if (!letters.empty() && letters.back() == -l) continue;
        letters.push_back(l);
    }
    return FreeWord(letters);
}

inline FreeGroupEndo random_free_endo(Rng& rng, int rank, std::size_t max_len) {
    std::vector<FreeWord> images;
    for (int i = 0; i < rank; ++i) images.push_back(random_word(rng, rank, max_len));
    return FreeGroupEndo(rank, images);
}

}  // namespace rdm::testing
