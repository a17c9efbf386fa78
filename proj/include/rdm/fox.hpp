#pragma once

#include "rdm/integer.hpp"
#include "rdm/intlinalg.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rdm {

/// A freely reduced word in the free group on generators 1..26. A letter is
/// +g for the generator g and -g for its inverse.
class FreeWord {
public:
    FreeWord() = default;
    /// Freely reduces the given letters.
    explicit FreeWord(const std::vector<int>& letters);

    static FreeWord generator(int g) { return FreeWord(std::vector<int>{g}); }
    /// Lowercase letters are generators a, b, ...; uppercase their inverses.
    /// Throws ValidationError on any other character.
    static FreeWord parse(std::string_view text);

    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }
    /// Largest generator index occurring in the word, 0 for the identity.
    int max_generator() const;

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

    /// Same syntax as parse(); "1" for the identity.
    std::string to_string() const;

private:
    std::vector<int> letters_;
};

/// Canonical freely reduced form of a letter sequence.
FreeWord free_reduce(const std::vector<int>& letters);

/// Sparse element of the integral group ring of a free group.
class GroupRingElement {
public:
    using Terms = std::map<FreeWord, Integer>;

    GroupRingElement() = default;
    GroupRingElement(const FreeWord& w, const Integer& c = 1);
    static GroupRingElement one() { return GroupRingElement(FreeWord{}); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const FreeWord& w) const;

    void add(const FreeWord& w, const Integer& c);
    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator-(GroupRingElement a);
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

/// sum of |coefficients|
Integer ring_norm(const GroupRingElement& x);

/// Endomorphism of the free group of the given rank, a_i -> images[i-1].
struct FreeGroupEndo {
    int rank = 0;
    std::vector<FreeWord> images;

    /// Throws ValidationError if the image count or letters exceed the rank.
    FreeGroupEndo(int rank, std::vector<FreeWord> images);
    static FreeGroupEndo identity(int rank);

    FreeWord operator()(const FreeWord& w) const;
    /// The induced ring endomorphism: substitute, reduce, merge coefficients.
    GroupRingElement operator()(const GroupRingElement& x) const;
};

class GroupRingMatrix {
public:
    GroupRingMatrix() = default;
    GroupRingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    static GroupRingMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    GroupRingElement& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    GroupRingElement trace() const;
    friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b);
    friend bool operator==(const GroupRingMatrix&, const GroupRingMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GroupRingElement> entries_;
};

/// Fox derivative d w / d a_j.
GroupRingElement fox_derivative(const FreeWord& w, int j);

/// (i, j) entry d b_i / d a_j with b_i = phi(a_i).
GroupRingMatrix jacobian(const FreeGroupEndo& phi);

Integer matrix_norm(const GroupRingMatrix& a);
IntMatrix matrix_of_norms(const GroupRingMatrix& a);

/// Entrywise image under phi.
GroupRingMatrix apply(const FreeGroupEndo& phi, const GroupRingMatrix& a);

struct SpectralRadius {
    double value = 0.0;
    /// Collatz-Wielandt enclosure lower <= value <= upper.
    double lower = 0.0;
    double upper = 0.0;
};

/// Perron root of a non-negative square matrix, taken as the maximum over the
/// strongly connected components. Each irreducible block is iterated with
/// the shift A + I, which is primitive, until the Collatz-Wielandt bounds
/// agree to rel_tol.
SpectralRadius spectral_radius(const IntMatrix& a, double rel_tol = 1e-12);

struct RadiusBounds {
    /// 1 / max_d ||z F_d||
    Rational bound_norm;
    /// 1 / max_d s(F_d^norm)
    double bound_spectral;
    SpectralRadius jacobian_radius;
    Integer jacobian_norm;
};

/// Lower bounds for the radius of convergence of the Nielsen zeta function of
/// a bouquet-of-circles map, using the chain matrices F_0 = (1), F_1 = Jacobian.
RadiusBounds nielsen_radius_bounds(const FreeGroupEndo& phi);

/// ||(zA)^n|| where z^-1 g z = phi(g), computed as
/// ||phi^{n-1}(A) phi^{n-2}(A) ... phi(A) A||.
Integer twisted_power_norm(const FreeGroupEndo& phi, const GroupRingMatrix& a, unsigned n);

}  // namespace rdm
