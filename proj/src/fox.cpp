#include "rdm/fox.hpp"

#include "rdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace rdm {

// ---------------------------------------------------------------------------
// Words

FreeWord free_reduce(const std::vector<int>& letters) { return FreeWord(letters); }

FreeWord::FreeWord(const std::vector<int>& letters) {
    letters_.reserve(letters.size());
    for (int x : letters) {
        if (x == 0) throw ValidationError("letter 0 is not a generator");
        if (!letters_.empty() && letters_.back() == -x) letters_.pop_back();
        else letters_.push_back(x);
    }
}

FreeWord FreeWord::parse(std::string_view text) {
    std::vector<int> letters;
    if (text == "1") return FreeWord{};
    for (char c : text) {
        if (c >= 'a' && c <= 'z') letters.push_back(c - 'a' + 1);
        else if (c >= 'A' && c <= 'Z') letters.push_back(-(c - 'A' + 1));
        else throw ValidationError(std::string("bad letter '") + c + "' in word \"" + std::string(text) + "\"");
    }
    return FreeWord(letters);
}

int FreeWord::max_generator() const {
    int m = 0;
    for (int x : letters_) m = std::max(m, std::abs(x));
    return m;
}

FreeWord FreeWord::inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& x : inv) x = -x;
    FreeWord w;
    w.letters_ = std::move(inv);
    return w;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
    std::vector<int> joined = u.letters_;
    joined.insert(joined.end(), v.letters_.begin(), v.letters_.end());
    return FreeWord(joined);
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (int x : letters_) s += x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
    return s;
}

// ---------------------------------------------------------------------------
// Group ring

GroupRingElement::GroupRingElement(const FreeWord& w, const Integer& c) { add(w, c); }

Integer GroupRingElement::coefficient(const FreeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add(const FreeWord& w, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_) out.add(u * v, cu * cv);
    return out;
}

GroupRingElement operator-(GroupRingElement a) {
    for (auto& [w, c] : a.terms_) c = -c;
    return a;
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        const Integer mag = ::abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1) os << mag << (w.is_identity() ? "" : "*");
        if (mag == 1 || !w.is_identity()) os << w.to_string();
    }
    return os.str();
}

Integer ring_norm(const GroupRingElement& x) {
    Integer n = 0;
    for (const auto& [w, c] : x.terms()) n += ::abs(c);
    return n;
}

// ---------------------------------------------------------------------------
// Free group endomorphisms

FreeGroupEndo::FreeGroupEndo(int r, std::vector<FreeWord> imgs) : rank(r), images(std::move(imgs)) {
    if (rank < 0 || rank > 26) throw ValidationError("rank must be in 0..26");
    if (static_cast<int>(images.size()) != rank)
        throw ValidationError("expected " + std::to_string(rank) + " images, got " + std::to_string(images.size()));
    for (const auto& w : images)
        if (w.max_generator() > rank)
            throw ValidationError("image " + w.to_string() + " uses a generator beyond rank " + std::to_string(rank));
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
    std::vector<FreeWord> imgs;
    for (int g = 1; g <= rank; ++g) imgs.push_back(FreeWord::generator(g));
    return FreeGroupEndo(rank, std::move(imgs));
}

FreeWord FreeGroupEndo::operator()(const FreeWord& w) const {
    std::vector<int> out;
    for (int x : w.letters()) {
        if (std::abs(x) > rank) throw ValidationError("word " + w.to_string() + " exceeds rank");
        const FreeWord& img = images[std::abs(x) - 1];
        const FreeWord piece = x > 0 ? img : img.inverse();
        out.insert(out.end(), piece.letters().begin(), piece.letters().end());
    }
    return FreeWord(out);
}

GroupRingElement FreeGroupEndo::operator()(const GroupRingElement& x) const {
    GroupRingElement out;
    for (const auto& [w, c] : x.terms()) out.add((*this)(w), c);
    return out;
}

// ---------------------------------------------------------------------------
// Matrices over the group ring

GroupRingMatrix GroupRingMatrix::identity(std::size_t n) {
    GroupRingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElement::one();
    return m;
}

GroupRingElement GroupRingMatrix::trace() const {
    if (rows_ != cols_) throw NotSquare("trace of a non-square group-ring matrix");
    GroupRingElement t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("group-ring matrix product: shape mismatch");
    GroupRingMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

GroupRingElement fox_derivative(const FreeWord& w, int j) {
    if (j < 1) throw BadIndex("Fox derivative index must be >= 1");
    // d(uv) = du + u dv, da_j/da_j = 1, d(a_j^-1)/da_j = -a_j^-1.
    GroupRingElement out;
    std::vector<int> prefix;
    for (int x : w.letters()) {
        if (x == j) {
            out.add(FreeWord(prefix), Integer(1));
        } else if (x == -j) {
            std::vector<int> p = prefix;
            p.push_back(-j);
            out.add(FreeWord(p), Integer(-1));
        }
        prefix.push_back(x);
    }
    return out;
}

GroupRingMatrix jacobian(const FreeGroupEndo& phi) {
    const auto r = static_cast<std::size_t>(phi.rank);
    GroupRingMatrix d(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) d(i, j) = fox_derivative(phi.images[i], static_cast<int>(j + 1));
    return d;
}

Integer matrix_norm(const GroupRingMatrix& a) {
    Integer n = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) n += ring_norm(a(i, j));
    return n;
}

IntMatrix matrix_of_norms(const GroupRingMatrix& a) {
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = ring_norm(a(i, j));
    return m;
}

GroupRingMatrix apply(const FreeGroupEndo& phi, const GroupRingMatrix& a) {
    GroupRingMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = phi(a(i, j));
    return out;
}

// ---------------------------------------------------------------------------
// Spectral radius

namespace {

// Strongly connected components of the support graph (i -> j iff a(i, j) > 0).
std::vector<std::vector<std::size_t>> components(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> out;
    int counter = 0;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w = 0; w < n; ++w) {
            if (a(v, w) == 0) continue;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            out.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] < 0) visit(v);
    return out;
}

SpectralRadius irreducible_radius(const std::vector<std::vector<double>>& s, double rel_tol) {
    const std::size_t n = s.size();
    std::vector<double> x(n, 1.0), y(n);
    SpectralRadius out;
    for (int iter = 0; iter < 200000; ++iter) {
        double lo = INFINITY, hi = 0.0, norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double acc = x[i];  // shift by the identity
            for (std::size_t j = 0; j < n; ++j) acc += s[i][j] * x[j];
            y[i] = acc;
            lo = std::min(lo, acc / x[i]);
            hi = std::max(hi, acc / x[i]);
            norm = std::max(norm, acc);
        }
        out.lower = lo - 1.0;
        out.upper = hi - 1.0;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (hi - lo <= rel_tol * hi) break;
    }
    out.value = 0.5 * (out.lower + out.upper);
    return out;
}

}  // namespace

SpectralRadius spectral_radius(const IntMatrix& a, double rel_tol) {
    if (!a.is_square()) throw NotSquare("spectral radius of a non-square matrix");
    for (const auto& x : a.entries())
        if (x < 0) throw ValidationError("spectral_radius needs a non-negative matrix");
    SpectralRadius best;
    for (const auto& comp : components(a)) {
        if (comp.size() == 1 && a(comp[0], comp[0]) == 0) continue;  // acyclic vertex
        std::vector<std::vector<double>> s(comp.size(), std::vector<double>(comp.size()));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j) s[i][j] = a(comp[i], comp[j]).get_d();
        const SpectralRadius r = irreducible_radius(s, rel_tol);
        best.value = std::max(best.value, r.value);
        best.lower = std::max(best.lower, r.lower);
        best.upper = std::max(best.upper, r.upper);
    }
    return best;
}

RadiusBounds nielsen_radius_bounds(const FreeGroupEndo& phi) {
    const GroupRingMatrix d = jacobian(phi);
    RadiusBounds out;
    out.jacobian_norm = matrix_norm(d);
    out.jacobian_radius = spectral_radius(matrix_of_norms(d));
    // F_0 = (1) contributes norm 1 and spectral radius 1.
    const Integer max_norm = std::max(Integer(1), out.jacobian_norm);
    out.bound_norm = make_rational(Integer(1), max_norm);
    out.bound_spectral = 1.0 / std::max(1.0, out.jacobian_radius.value);
    return out;
}

Integer twisted_power_norm(const FreeGroupEndo& phi, const GroupRingMatrix& a, unsigned n) {
    if (n == 0) throw BadIndex("twisted_power_norm requires n >= 1");
    if (a.rows() != a.cols()) throw NotSquare("twisted power of a non-square matrix");
    // (zA)^n = z^n phi^{n-1}(A) ... phi(A) A; the z^n prefix preserves norms.
    GroupRingMatrix product = a;
    GroupRingMatrix shifted = a;
    for (unsigned i = 1; i < n; ++i) {
        shifted = apply(phi, shifted);
        product = shifted * product;
    }
    return matrix_norm(product);
}

}  // namespace rdm
