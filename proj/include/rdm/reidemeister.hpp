#pragma once

#include "rdm/finite_group.hpp"
#include "rdm/integer.hpp"
#include "rdm/intlinalg.hpp"

#include <cstddef>
#include <vector>

namespace rdm {

/// Endomorphism of Z^k x F written as phi(v, f) = (M v, psi(v) phi_F(f)).
///
/// psi is determined by the images of the k standard basis vectors. The
/// constructor checks that those images pairwise commute and commute with
/// the image of phi_F, which is exactly the condition for phi to be a
/// homomorphism of the direct product.
class ProductEndomorphism {
public:
    struct Point {
        std::vector<Integer> v;
        Element f;
        friend bool operator==(const Point&, const Point&) = default;
    };

    ProductEndomorphism(IntMatrix m, FiniteGroup f, std::vector<Element> psi, GroupEndomorphism phi_f);

    /// F trivial.
    static ProductEndomorphism abelian(IntMatrix m);
    /// k = 0.
    static ProductEndomorphism finite(FiniteGroup f, GroupEndomorphism phi_f);

    std::size_t rank() const noexcept { return m_.rows(); }
    const IntMatrix& matrix() const noexcept { return m_; }
    const FiniteGroup& group() const noexcept { return f_; }
    const std::vector<Element>& psi() const noexcept { return psi_; }
    const GroupEndomorphism& finite_part() const noexcept { return phi_f_; }

    /// psi(v) = prod_j psi(e_j)^{v_j}.
    Element psi_of(const std::vector<Integer>& v) const;
    Point operator()(const Point& x) const;
    /// The n-th iterate as a product endomorphism (M^n, psi_n, phi_F^n).
    ProductEndomorphism iterate(unsigned long n) const;

    /// Checks phi(x y) = phi(x) phi(y) for all pairs of generators
    /// (basis vectors and elements of F).
    bool verify_homomorphism() const;

private:
    IntMatrix m_;
    FiniteGroup f_;
    std::vector<Element> psi_;
    GroupEndomorphism phi_f_;
};

/// Matrix of the map induced by phi on the characteristic functions of the
/// ordinary conjugacy classes: B[c][c'] = 1 iff phi maps class c' into c.
struct ClassFunctionMap {
    IntMatrix matrix;
    ConjugacyPartition classes;
};

ClassFunctionMap class_function_matrix(const FiniteGroup& g, const GroupEndomorphism& phi);

/// Number of ordinary conjugacy classes fixed by phi.
Integer r_finite(const FiniteGroup& g, const GroupEndomorphism& phi);

/// |det(I - M)|; throws InfiniteReidemeister when it vanishes.
Integer r_abelian(const IntMatrix& m);

/// Order of Z^k / (I - M) Z^k read off the Smith diagonal.
Integer r_abelian_smith(const IntMatrix& m);

/// (-1)^{r+p} sum_i (-1)^i Tr(wedge^i M).
Integer r_abelian_trace(const IntMatrix& m);

/// |det(I - M^n)| * R(phi_F^n).
Integer r_product(const ProductEndomorphism& p, unsigned long n);

/// Exhaustive count of phi^n-twisted classes on coset representatives of
/// Z^k / (I - M^n) Z^k times F. Pairs are compared with the criterion
/// v1 = v2 mod (I - M^n)Z^k and h f1 = f2 psi_n(w) phi_F^n(h) for some h,
/// where (I - M^n) w = v2 - v1. Throws OracleTooLarge above max_points.
Integer r_product_oracle(const ProductEndomorphism& p, unsigned long n, std::size_t max_points = 20000);

/// (-1)^{r+pn} sum_i (-1)^i Tr((wedge^i M (x) B)^n).
Integer r_product_trace(const ProductEndomorphism& p, unsigned long n);

}  // namespace rdm
