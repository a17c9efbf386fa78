#pragma once

#include "rdm/finite_group.hpp"
#include "rdm/fox.hpp"
#include "rdm/integer.hpp"
#include "rdm/intlinalg.hpp"
#include "rdm/reidemeister.hpp"
#include "rdm/zeta.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rdm {

enum class ProblemKind { finite, abelian, product, free };

std::string to_string(ProblemKind k);

struct FiniteData {
    std::size_t degree = 1;
    std::vector<Permutation> generators;
    /// Image of each generator under the endomorphism, as a permutation.
    std::vector<Permutation> images;
};

struct ProblemOptions {
    std::size_t order = 12;
    std::size_t congruence_range = 12;
    std::vector<Rational> torsion_angles{Rational(1, 2)};
};

/// A validated problem file.
struct ProblemDocument {
    ProblemKind kind = ProblemKind::abelian;
    IntMatrix matrix;                 // abelian, product
    std::optional<FiniteData> finite; // finite, product
    std::vector<Permutation> psi;     // product
    int rank = 0;                     // free
    std::vector<std::string> words;   // free
    ProblemOptions options;
};

/// Parses and validates a JSON problem document. Throws SchemaError for
/// structural problems, ValidationError (or its InfiniteReidemeister
/// subclass) for mathematically invalid input; messages name the field.
ProblemDocument parse_problem(const std::string& text, std::size_t order_cap = kDefaultOrderCap);
ProblemDocument parse_problem(const nlohmann::json& j, std::size_t order_cap = kDefaultOrderCap);
inline ProblemDocument parse_problem(const char* text, std::size_t order_cap = kDefaultOrderCap) {
    return parse_problem(std::string(text), order_cap);
}

/// Canonical JSON form with every option spelled out.
nlohmann::json serialize(const ProblemDocument& doc);

/// Z^k x F data for the finite, abelian and product kinds.
ProductEndomorphism build_product(const ProblemDocument& doc, std::size_t order_cap = kDefaultOrderCap);
FreeGroupEndo build_free(const ProblemDocument& doc);

enum class ReportSection : unsigned {
    counts = 1u << 0,
    zeta = 1u << 1,
    congruences = 1u << 2,
    functional_equation = 1u << 3,
    torsion = 1u << 4,
    bounds = 1u << 5,
    reduction = 1u << 6,
    all = 0x7fu,
};

constexpr ReportSection operator|(ReportSection a, ReportSection b) {
    return static_cast<ReportSection>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has(ReportSection set, ReportSection s) {
    return (static_cast<unsigned>(set) & static_cast<unsigned>(s)) != 0;
}

struct Report {
    nlohmann::json body;
    /// True iff every cross-check in the report agreed.
    bool agreement = true;

    std::string to_text() const;
};

/// Runs every applicable computation in the requested sections together with
/// its independent check. Domain errors (e.g. InfiniteReidemeister)
/// propagate.
Report run(const ProblemDocument& doc, ReportSection sections = ReportSection::all,
           std::size_t order_cap = kDefaultOrderCap);

/// JSON form of a zeta function: [{"coeffs": [...], "exp": e}, ...].
nlohmann::json zeta_to_json(const FactoredRationalFunction& rf);

}  // namespace rdm
