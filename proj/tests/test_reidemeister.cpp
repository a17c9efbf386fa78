#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <set>

using namespace rdm;
using namespace rdm::testing;

namespace {

GroupEndomorphism klein_swap(const PermutationGroup& v4) {
    return endo_from_generator_images(v4.group, v4.generators, {v4.generators[1], v4.generators[0]});
}

/// Order of Z^k / (I - M) Z^k as the number of distinct residues of
/// adj(I - M) v mod |det(I - M)| over the box [0, |det|)^k.
Integer coset_count_by_adjugate(const IntMatrix& m) {
    std::size_t k = m.rows();
    IntMatrix a = IntMatrix::identity(k) - m;
    Integer d = det(a);
    Integer n = abs(d);
    // v lies in a Z^k iff adj(a) v = 0 mod d, and |d| Z^k is inside a Z^k.
    IntMatrix adj(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            IntMatrix minor(k - 1, k - 1);
            for (std::size_t r = 0, rr = 0; r < k; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < k; ++c)
                    if (c != i) minor(rr, cc++) = a(r, c);
                ++rr;
            }
            adj(i, j) = ((i + j) % 2 ? -1 : 1) * laplace_det(minor);
        }
    std::set<std::vector<Integer>> residues;
    std::vector<long> v(k, 0);
    long bound = n.get_si();
    for (;;) {
        std::vector<Integer> w(k);
        for (std::size_t i = 0; i < k; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < k; ++j) s += adj(i, j) * v[j];
            s %= n;
            if (s < 0) s += n;
            w[i] = s;
        }
        residues.insert(w);
        std::size_t i = 0;
        while (i < k && ++v[i] == bound) v[i++] = 0;
        if (i == k) break;
    }
    return Integer(static_cast<unsigned long>(residues.size()));
}

}  // namespace

TEST_CASE("fixed conjugacy classes on finite groups") {
    PermutationGroup s3 = catalog::symmetric(3);
    CHECK(r_finite(s3.group, GroupEndomorphism::identity(s3.group)) == 3);
    PermutationGroup v4 = catalog::klein_four();
    CHECK(r_finite(v4.group, klein_swap(v4)) == 2);
    PermutationGroup c6 = catalog::cyclic(6);
    Element g = c6.generators[0];
    CHECK(r_finite(c6.group, endo_from_generator_images(c6.group, c6.generators, {c6.group.mul(g, g)})) == 1);
}

TEST_CASE("class function matrix") {
    PermutationGroup s3 = catalog::symmetric(3);
    ClassFunctionMap id = class_function_matrix(s3.group, GroupEndomorphism::identity(s3.group));
    CHECK(id.matrix == IntMatrix::identity(3));

    PermutationGroup v4 = catalog::klein_four();
    ClassFunctionMap sw = class_function_matrix(v4.group, klein_swap(v4));
    CHECK(sw.matrix.trace() == 2);
    CHECK(mat_pow(sw.matrix, 2) == IntMatrix::identity(4));
}

TEST_CASE("class function matrices: one 1 per column, trace, and powers") {
    for (const auto& ng : small_groups()) {
        const FiniteGroup& g = ng.group.group;
        for (const auto& phi : all_endomorphisms(g, ng.group.generators)) {
            ClassFunctionMap b = class_function_matrix(g, phi);
            for (std::size_t c = 0; c < b.matrix.cols(); ++c) {
                Integer col = 0;
                for (std::size_t r = 0; r < b.matrix.rows(); ++r) {
                    CHECK((b.matrix(r, c) == 0 || b.matrix(r, c) == 1));
                    col += b.matrix(r, c);
                }
                CHECK(col == 1);
            }
            Integer oracle = static_cast<unsigned long>(phi_conjugacy_classes(g, phi).count());
            CHECK(b.matrix.trace() == oracle);
            CHECK(r_finite(g, phi) == oracle);
            for (unsigned n = 2; n <= 4; ++n)
                CHECK(class_function_matrix(g, iterate_endo(phi, n)).matrix == mat_pow(b.matrix, n));
        }
    }
}

TEST_CASE("abelian examples") {
    CHECK(r_abelian(IntMatrix{{2, 1}, {1, 1}}) == 1);
    CHECK(r_abelian(IntMatrix{{0, 1}, {-1, 0}}) == 2);
    CHECK(r_abelian(IntMatrix{{-2}}) == 3);
    CHECK(r_abelian_trace(IntMatrix{{-2}}) == 3);
    CHECK(r_abelian_trace(IntMatrix{{2, 1}, {1, 1}}) == 1);
    CHECK(r_abelian_trace(IntMatrix{{0, 1}, {-1, 0}}) == 2);
    CHECK(r_abelian_smith(IntMatrix{{-2}}) == 3);
    CHECK_THROWS_AS(r_abelian(IntMatrix{{1}}), InfiniteReidemeister);
    try {
        r_abelian(IntMatrix{{1, 0}, {0, 2}});
        FAIL("expected InfiniteReidemeister");
    } catch (const InfiniteReidemeister& e) {
        CHECK(e.iterate() == 1);
    }
}

TEST_CASE("abelian three-way agreement on random matrices") {
    Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m = random_hyperbolic_free(rng, 4, -5, 5);
        Integer r = r_abelian(m);
        CHECK(r == abs(det(IntMatrix::identity(m.rows()) - m)));
        CHECK(r_abelian_smith(m) == r);
        CHECK(r_abelian_trace(m) == r);
    }
}

TEST_CASE("coset count against an adjugate residue census") {
    Rng rng(22);
    int checked = 0;
    while (checked < 40) {
        IntMatrix m = random_hyperbolic_free(rng, 2, -3, 3);
        Integer r = r_abelian(m);
        if (r > 40) continue;
        CHECK(coset_count_by_adjugate(m) == r);
        ++checked;
    }
}

TEST_CASE("product examples") {
    PermutationGroup v4 = catalog::klein_four();
    GroupEndomorphism sw = klein_swap(v4);
    ProductEndomorphism p(IntMatrix{{-2}}, v4.group, {v4.group.identity()}, sw);
    CHECK(p.verify_homomorphism());
    CHECK(r_product(p, 1) == 6);
    CHECK(r_product_oracle(p, 1) == 6);
    CHECK(r_product_trace(p, 1) == 6);
    Integer expected2 = 3 * r_finite(v4.group, iterate_endo(sw, 2));
    CHECK(r_product(p, 2) == expected2);
    CHECK(r_product_trace(p, 2) == expected2);
    CHECK(r_product_oracle(p, 2) == expected2);

    ProductEndomorphism ab = ProductEndomorphism::abelian(IntMatrix{{-2}});
    CHECK(r_product(ab, 1) == 3);
    CHECK(r_product_oracle(ab, 1) == 3);
    for (unsigned n = 1; n <= 6; ++n) CHECK(r_product(ab, n) == r_abelian(mat_pow(IntMatrix{{-2}}, n)));

    PermutationGroup s3 = catalog::symmetric(3);
    for (const auto& phi : all_endomorphisms(s3.group, s3.generators)) {
        ProductEndomorphism fin = ProductEndomorphism::finite(s3.group, phi);
        Integer oracle = static_cast<unsigned long>(phi_conjugacy_classes(s3.group, phi).count());
        CHECK(r_product(fin, 1) == oracle);
        CHECK(r_product_oracle(fin, 1) == oracle);
    }
}

TEST_CASE("product with non-commuting psi is rejected") {
    PermutationGroup s3 = catalog::symmetric(3);
    CHECK_THROWS_AS(ProductEndomorphism(IntMatrix{{2}}, s3.group, {s3.generators[0]},
                                        GroupEndomorphism::identity(s3.group)),
                    NotAHomomorphism);
}

TEST_CASE("psi actually enters the map") {
    PermutationGroup c4 = catalog::cyclic(4);
    Element g = c4.generators[0];
    ProductEndomorphism p(IntMatrix{{3}}, c4.group, {g}, GroupEndomorphism::identity(c4.group));
    ProductEndomorphism::Point x{{Integer(2)}, c4.group.identity()};
    auto y = p(x);
    CHECK(y.v[0] == 6);
    CHECK(y.f == c4.group.mul(g, g));
    CHECK(p.verify_homomorphism());
}

TEST_CASE("product agreement on random endomorphisms") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        ProductEndomorphism p = random_product(rng, 2, 4, 3, 1500);
        CHECK(p.verify_homomorphism());
        for (unsigned n = 1; n <= 4; ++n) {
            Integer r = r_product(p, n);
            CHECK(r_product_trace(p, n) == r);
            CHECK(r_product_oracle(p, n) == r);
        }
    }
}

TEST_CASE("iterate coherence") {
    Rng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        ProductEndomorphism p = random_product(rng, 2, 3, 3, 4000);
        for (unsigned n = 1; n <= 3; ++n) {
            ProductEndomorphism q = p.iterate(n);
            CHECK(q.matrix() == mat_pow(p.matrix(), n));
            CHECK(q.finite_part() == iterate_endo(p.finite_part(), n));
            CHECK(r_product(q, 1) == r_product(p, n));
            CHECK(r_product_oracle(q, 1) == r_product(p, n));
            // the iterate really is phi applied n times
            ProductEndomorphism::Point x{std::vector<Integer>(p.rank(), Integer(1)), p.group().order() - 1};
            ProductEndomorphism::Point y = x;
            for (unsigned i = 0; i < n; ++i) y = p(y);
            CHECK(q(x) == y);
        }
    }
}

TEST_CASE("infinite iterates are reported with their index") {
    ProductEndomorphism p = ProductEndomorphism::abelian(IntMatrix{{0, -1}, {1, -1}});
    CHECK(r_product(p, 1) == 3);
    try {
        r_product(p, 3);
        FAIL("expected InfiniteReidemeister");
    } catch (const InfiniteReidemeister& e) {
        CHECK(e.iterate() == 3);
    }
    CHECK_THROWS_AS(r_product_oracle(p, 3), InfiniteReidemeister);
}

TEST_CASE("oracle size budget") {
    ProductEndomorphism p = ProductEndomorphism::abelian(IntMatrix{{5, 1}, {1, 5}});
    CHECK_THROWS_AS(r_product_oracle(p, 4, 100), OracleTooLarge);
}
