#include "rdm/problem.hpp"

#include "rdm/errors.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace rdm {

using nlohmann::json;

std::string to_string(ProblemKind k) {
    switch (k) {
    case ProblemKind::finite: return "finite";
    case ProblemKind::abelian: return "abelian";
    case ProblemKind::product: return "product";
    case ProblemKind::free: return "free";
    }
    return "?";
}

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& msg) {
    throw SchemaError("field '" + field + "': " + msg);
}

[[noreturn]] void invalid(const std::string& field, const std::string& msg) {
    throw ValidationError("field '" + field + "': " + msg);
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; });
        if (!ok) schema(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) schema(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

Integer parse_integer(const json& v, const std::string& field) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
        return Integer(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        Integer z;
        if (s.empty() || z.set_str(s, 10) != 0) schema(field, "not an integer: \"" + s + "\"");
        return z;
    }
    schema(field, "expected an integer");
}

std::size_t parse_count(const json& v, const std::string& field, std::size_t lo, std::size_t hi) {
    if (!v.is_number_integer()) schema(field, "expected an integer");
    long long x = v.get<long long>();
    if (x < static_cast<long long>(lo) || x > static_cast<long long>(hi))
        invalid(field, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<std::size_t>(x);
}

IntMatrix parse_matrix(const json& v, const std::string& field) {
    if (!v.is_array()) schema(field, "expected an array of rows");
    std::size_t k = v.size();
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& row = v[i];
        std::string rf = field + "[" + std::to_string(i) + "]";
        if (!row.is_array()) schema(rf, "expected an array");
        if (row.size() != k) invalid(rf, "matrix must be square (row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(k) + ")");
        for (std::size_t j = 0; j < k; ++j) m(i, j) = parse_integer(row[j], rf + "[" + std::to_string(j) + "]");
    }
    return m;
}

Permutation parse_permutation(const json& v, const std::string& field, std::size_t degree) {
    if (!v.is_array()) schema(field, "expected an array of point images");
    if (v.size() != degree) invalid(field, "expected " + std::to_string(degree) + " entries");
    Permutation p(degree);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
        std::string ef = field + "[" + std::to_string(i) + "]";
        std::size_t x = parse_count(v[i], ef, 0, degree - 1);
        if (seen[x]) invalid(field, "not a permutation (" + std::to_string(x) + " repeated)");
        seen[x] = true;
        p[i] = static_cast<std::uint32_t>(x);
    }
    return p;
}

std::vector<Permutation> parse_permutations(const json& v, const std::string& field, std::size_t degree) {
    if (!v.is_array()) schema(field, "expected an array of permutations");
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_permutation(v[i], field + "[" + std::to_string(i) + "]", degree));
    return out;
}

Rational parse_angle(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rational(parse_integer(v, field));
    if (!v.is_string()) schema(field, "expected a rational string such as \"1/3\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument&) {
        schema(field, "not a rational: \"" + v.get<std::string>() + "\"");
    }
}

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json perms_json(const std::vector<Permutation>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(p);
    return out;
}

struct BuiltFinite {
    PermutationGroup pg;
    GroupEndomorphism phi;
};

PermutationGroup close_group(const FiniteData& fd, std::size_t cap) {
    try {
        return group_from_permutations(fd.degree, fd.generators, cap);
    } catch (const ClosureTooLarge& e) {
        invalid("group.generators", e.what());
    } catch (const NotAPermutation& e) {
        invalid("group.generators", e.what());
    }
}

BuiltFinite build_finite(const FiniteData& fd, std::size_t cap) {
    PermutationGroup pg = close_group(fd, cap);
    std::vector<Element> images;
    for (std::size_t i = 0; i < fd.images.size(); ++i) {
        auto idx = pg.index_of(fd.images[i]);
        if (!idx) invalid("images[" + std::to_string(i) + "]", cycle_string(fd.images[i]) + " is not an element of the group");
        images.push_back(*idx);
    }
    try {
        return {pg, endo_from_generator_images(pg.group, pg.generators, images)};
    } catch (const NotAHomomorphism& e) {
        invalid("images", std::string("generator images do not define a homomorphism: ") + e.what());
    } catch (const DoesNotGenerate& e) {
        invalid("group.generators", e.what());
    }
}

void ensure_finite_reidemeister(const IntMatrix& m) {
    if (m.rows() == 0) return;
    if (det(IntMatrix::identity(m.rows()) - m) == 0)
        throw InfiniteReidemeister("field 'matrix': det(I - M) = 0, so R(phi) is infinite", 1);
}

}  // namespace

ProblemDocument parse_problem(const std::string& text, std::size_t order_cap) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    return parse_problem(j, order_cap);
}

ProblemDocument parse_problem(const json& j, std::size_t order_cap) {
    if (!j.is_object()) throw SchemaError("problem document must be a JSON object");
    const json& kind = require(j, "kind", "");
    if (!kind.is_string()) schema("kind", "expected a string");
    ProblemDocument doc;
    const auto& ks = kind.get_ref<const std::string&>();
    if (ks == "finite") doc.kind = ProblemKind::finite;
    else if (ks == "abelian") doc.kind = ProblemKind::abelian;
    else if (ks == "product") doc.kind = ProblemKind::product;
    else if (ks == "free") doc.kind = ProblemKind::free;
    else schema("kind", "expected one of finite, abelian, product, free; got \"" + ks + "\"");

    switch (doc.kind) {
    case ProblemKind::abelian:
        check_keys(j, "", {"kind", "matrix", "options"});
        break;
    case ProblemKind::finite:
        check_keys(j, "", {"kind", "group", "images", "options"});
        break;
    case ProblemKind::product:
        check_keys(j, "", {"kind", "matrix", "group", "images", "psi", "options"});
        break;
    case ProblemKind::free:
        check_keys(j, "", {"kind", "rank", "images", "options"});
        break;
    }

    if (doc.kind == ProblemKind::abelian || doc.kind == ProblemKind::product) {
        doc.matrix = parse_matrix(require(j, "matrix", ""), "matrix");
        if (doc.kind == ProblemKind::abelian && doc.matrix.rows() == 0) invalid("matrix", "rank must be at least 1");
    }

    if (doc.kind == ProblemKind::finite || doc.kind == ProblemKind::product) {
        const json& g = require(j, "group", "");
        if (!g.is_object()) schema("group", "expected an object");
        check_keys(g, "group", {"degree", "generators"});
        FiniteData fd;
        fd.degree = parse_count(require(g, "degree", "group"), "group.degree", 1, 64);
        fd.generators = parse_permutations(require(g, "generators", "group"), "group.generators", fd.degree);
        fd.images = parse_permutations(require(j, "images", ""), "images", fd.degree);
        if (fd.images.size() != fd.generators.size())
            invalid("images", "expected one image per generator (" + std::to_string(fd.generators.size()) + ")");
        doc.finite = std::move(fd);
    }

    if (doc.kind == ProblemKind::product) {
        doc.psi = parse_permutations(require(j, "psi", ""), "psi", doc.finite->degree);
        if (doc.psi.size() != doc.matrix.rows())
            invalid("psi", "expected one element per basis vector (" + std::to_string(doc.matrix.rows()) + ")");
    }

    if (doc.kind == ProblemKind::free) {
        doc.rank = static_cast<int>(parse_count(require(j, "rank", ""), "rank", 1, 26));
        const json& w = require(j, "images", "");
        if (!w.is_array()) schema("images", "expected an array of words");
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!w[i].is_string()) schema("images[" + std::to_string(i) + "]", "expected a word such as \"abA\"");
            doc.words.push_back(w[i].get<std::string>());
        }
        if (doc.words.size() != static_cast<std::size_t>(doc.rank))
            invalid("images", "expected one image per generator (" + std::to_string(doc.rank) + ")");
    }

    if (auto it = j.find("options"); it != j.end()) {
        const json& o = *it;
        if (!o.is_object()) schema("options", "expected an object");
        check_keys(o, "options", {"order", "congruence_range", "torsion_angles"});
        if (auto v = o.find("order"); v != o.end()) doc.options.order = parse_count(*v, "options.order", 1, 64);
        if (auto v = o.find("congruence_range"); v != o.end())
            doc.options.congruence_range = parse_count(*v, "options.congruence_range", 1, 64);
        if (auto v = o.find("torsion_angles"); v != o.end()) {
            if (!v->is_array()) schema("options.torsion_angles", "expected an array");
            doc.options.torsion_angles.clear();
            for (std::size_t i = 0; i < v->size(); ++i)
                doc.options.torsion_angles.push_back(
                    parse_angle((*v)[i], "options.torsion_angles[" + std::to_string(i) + "]"));
        }
    }

    // Semantic validation: build the objects once so errors surface here.
    if (doc.kind == ProblemKind::free) {
        build_free(doc);
    } else {
        build_product(doc, order_cap);
    }
    return doc;
}

json serialize(const ProblemDocument& doc) {
    json j;
    j["kind"] = to_string(doc.kind);
    if (doc.kind == ProblemKind::abelian || doc.kind == ProblemKind::product) j["matrix"] = matrix_json(doc.matrix);
    if (doc.finite) {
        j["group"] = {{"degree", doc.finite->degree}, {"generators", perms_json(doc.finite->generators)}};
        j["images"] = perms_json(doc.finite->images);
    }
    if (doc.kind == ProblemKind::product) j["psi"] = perms_json(doc.psi);
    if (doc.kind == ProblemKind::free) {
        j["rank"] = doc.rank;
        j["images"] = doc.words;
    }
    json angles = json::array();
    for (const auto& t : doc.options.torsion_angles) angles.push_back(to_string(t));
    j["options"] = {{"order", doc.options.order},
                    {"congruence_range", doc.options.congruence_range},
                    {"torsion_angles", angles}};
    return j;
}

ProductEndomorphism build_product(const ProblemDocument& doc, std::size_t order_cap) {
    if (doc.kind == ProblemKind::free) throw ValidationError("a free-group problem has no Z^k x F form");
    if (doc.kind == ProblemKind::abelian) {
        ensure_finite_reidemeister(doc.matrix);
        return ProductEndomorphism::abelian(doc.matrix);
    }
    BuiltFinite bf = build_finite(*doc.finite, order_cap);
    if (doc.kind == ProblemKind::finite) return ProductEndomorphism::finite(bf.pg.group, bf.phi);

    ensure_finite_reidemeister(doc.matrix);
    std::vector<Element> psi;
    for (std::size_t i = 0; i < doc.psi.size(); ++i) {
        auto idx = bf.pg.index_of(doc.psi[i]);
        if (!idx) invalid("psi[" + std::to_string(i) + "]", cycle_string(doc.psi[i]) + " is not an element of the group");
        psi.push_back(*idx);
    }
    try {
        return ProductEndomorphism(doc.matrix, bf.pg.group, psi, bf.phi);
    } catch (const NotAHomomorphism& e) {
        invalid("psi", e.what());
    }
}

FreeGroupEndo build_free(const ProblemDocument& doc) {
    std::vector<FreeWord> images;
    for (std::size_t i = 0; i < doc.words.size(); ++i) {
        try {
            images.push_back(FreeWord::parse(doc.words[i]));
        } catch (const ValidationError& e) {
            invalid("images[" + std::to_string(i) + "]", e.what());
        }
    }
    try {
        return FreeGroupEndo(doc.rank, std::move(images));
    } catch (const ValidationError& e) {
        invalid("images", e.what());
    }
}

json zeta_to_json(const FactoredRationalFunction& rf) {
    json out = json::array();
    for (const auto& f : rf.factors) {
        json coeffs = json::array();
        for (int i = 0; i <= f.poly.degree(); ++i) coeffs.push_back(integer_json(f.poly.coefficient(i)));
        out.push_back({{"coeffs", coeffs}, {"exp", f.exponent}});
    }
    return out;
}

namespace {

constexpr double kTorsionTolerance = 1e-9;
// Largest coset x group enumeration the report cross-checks by brute force.
constexpr std::size_t kOraclePoints = 2500;

const char* count_formula(ProblemKind k) {
    switch (k) {
    case ProblemKind::finite: return "number of phi-invariant conjugacy classes";
    case ProblemKind::abelian: return "|det(I - M^n)|";
    default: return "|det(I - M^n)| * R(phi_F^n)";
    }
}

struct CountsResult {
    std::vector<Integer> values;
    json body;
    bool agree = true;
};

CountsResult compute_counts(const ProblemDocument& doc, const ProductEndomorphism& p, std::size_t n_max) {
    CountsResult res;
    json rows = json::array();
    // Exact values first, so an infinite iterate is reported as such before
    // any check that presumes finiteness.
    for (std::size_t n = 1; n <= n_max; ++n) res.values.push_back(r_product(p, n));
    for (std::size_t n = 1; n <= n_max; ++n) {
        const Integer& value = res.values[n - 1];
        json row{{"n", n}, {"value", integer_json(value)}};
        Integer tr = r_product_trace(p, n);
        row["trace_formula"] = integer_json(tr);
        bool ok = tr == value;
        if (doc.kind == ProblemKind::abelian) {
            Integer sm = r_abelian_smith(mat_pow(p.matrix(), static_cast<unsigned>(n)));
            row["smith"] = integer_json(sm);
            ok = ok && sm == value;
        }
        try {
            Integer orc = r_product_oracle(p, n, kOraclePoints);
            row["oracle"] = integer_json(orc);
            ok = ok && orc == value;
        } catch (const OracleTooLarge&) {
            row["oracle"] = nullptr;
        }
        row["agree"] = ok;
        res.agree = res.agree && ok;
        rows.push_back(row);
    }
    json checks = json::array({"signed trace of wedge^i M (x) B", "brute-force twisted class count"});
    if (doc.kind == ProblemKind::abelian) checks.push_back("Smith normal form of I - M^n");
    res.body = {{"formula", count_formula(doc.kind)}, {"checks", checks}, {"values", rows}};
    return res;
}

}  // namespace

Report run(const ProblemDocument& doc, ReportSection sections, std::size_t order_cap) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    Report rep;
    rep.body["kind"] = to_string(doc.kind);
    rep.body["input"] = serialize(doc);

    if (doc.kind == ProblemKind::free) {
        if (has(sections, ReportSection::bounds)) {
            FreeGroupEndo phi = build_free(doc);
            RadiusBounds rb = nielsen_radius_bounds(phi);
            GroupRingMatrix jac = jacobian(phi);
            IntMatrix norms = matrix_of_norms(jac);
            json twisted = json::array();
            bool ok = true;
            std::size_t steps = std::min<std::size_t>(doc.options.order, 8);
            IntMatrix power = IntMatrix::identity(norms.rows());
            for (std::size_t n = 1; n <= steps; ++n) {
                power = power * norms;
                Integer cap = 0;
                for (const auto& e : power.entries()) cap += e;
                Integer tn = twisted_power_norm(phi, jac, static_cast<unsigned>(n));
                bool within = tn <= cap;
                ok = ok && within;
                twisted.push_back({{"n", n}, {"norm", integer_json(tn)}, {"bound", integer_json(cap)}, {"within", within}});
            }
            bool ordered = static_cast<double>(rb.bound_norm.get_d()) <= rb.bound_spectral * (1 + 1e-12);
            ok = ok && ordered;
            rep.body["bounds"] = {
                {"formula", "1 / max(1, ||J||) and 1 / max(1, s(J^norm)), J the Fox jacobian"},
                {"check", "||(zA)^n|| <= sum of entries of (J^norm)^n"},
                {"jacobian_norm", integer_json(rb.jacobian_norm)},
                {"jacobian_spectral_radius", rb.jacobian_radius.value},
                {"spectral_radius_enclosure", {rb.jacobian_radius.lower, rb.jacobian_radius.upper}},
                {"radius_lower_bound_norm", to_string(rb.bound_norm)},
                {"radius_lower_bound_spectral", rb.bound_spectral},
                {"ordered", ordered},
                {"twisted_powers", twisted},
            };
            rep.agreement = rep.agreement && ok;
        }
        rep.body["agreement"] = rep.agreement;
        rep.body["elapsed_seconds"] = std::chrono::duration<double>(clock::now() - t0).count();
        return rep;
    }

    ProductEndomorphism p = build_product(doc, order_cap);
    std::size_t n_max = 0;
    if (has(sections, ReportSection::counts)) n_max = std::max(n_max, std::size_t{1});
    if (has(sections, ReportSection::zeta)) n_max = std::max(n_max, doc.options.order);
    if (has(sections, ReportSection::congruences)) n_max = std::max(n_max, doc.options.congruence_range);

    CountsResult counts;
    if (n_max > 0) {
        if (has(sections, ReportSection::counts)) n_max = std::max(n_max, doc.options.order);
        counts = compute_counts(doc, p, n_max);
        if (has(sections, ReportSection::counts)) rep.body["counts"] = counts.body;
        rep.agreement = rep.agreement && counts.agree;
    }

    if (has(sections, ReportSection::zeta)) {
        FactoredRationalFunction rf = zeta_product(p);
        std::size_t order = doc.options.order;
        TruncatedSeries closed = expand_rational(rf, order);
        TruncatedSeries direct = series_from_counts(
            std::vector<Integer>(counts.values.begin(), counts.values.begin() + static_cast<long>(order)));
        bool ok = closed == direct;
        json z{{"formula", "prod_i det(I - wedge^i M (x) B sigma z)^((-1)^(i+1)(-1)^r)"},
               {"check", "exp(sum_n R(phi^n) z^n / n)"},
               {"factors", zeta_to_json(rf)}, {"closed_form", rf.to_string()}, {"series_order", order},
               {"series", closed.to_string()}, {"series_agree", ok}};
        if (rf.signs) z["signs"] = {{"p", rf.signs->p}, {"r", rf.signs->r}, {"sigma", rf.signs->sigma}};
        rep.body["zeta"] = z;
        rep.agreement = rep.agreement && ok;
    }

    if (has(sections, ReportSection::congruences)) {
        std::vector<Integer> head(counts.values.begin(),
                                  counts.values.begin() + static_cast<long>(doc.options.congruence_range));
        json rows = json::array();
        bool ok = true;
        for (const auto& c : congruence_check(head)) {
            rows.push_back({{"n", c.n}, {"residue", integer_json(c.residue)}});
            ok = ok && c.residue == 0;
        }
        rep.body["congruences"] = {{"formula", "sum_{d|n} mu(d) R(phi^(n/d)) mod n"},
                                   {"check", "exact counts"},
                                   {"residues", rows},
                                   {"all_zero", ok}};
        rep.agreement = rep.agreement && ok;
    }

    if (has(sections, ReportSection::functional_equation) && doc.kind == ProblemKind::abelian) {
        try {
            FunctionalEquation fe = functional_equation_check(doc.matrix);
            json f{{"formula", "R(1/(dz)) / R(z)^((-1)^k), d = det M"},
                   {"check", "symbolic quotient of the closed form"},
                   {"d", integer_json(fe.d)}, {"exponent", fe.exponent}, {"is_constant", fe.is_constant}};
            if (fe.is_constant) f["epsilon"] = to_string(fe.epsilon);
            rep.body["functional_equation"] = f;
        } catch (const ZeroDeterminant& e) {
            rep.body["functional_equation"] = {{"applicable", false}, {"reason", e.what()}};
        }
    }

    if (has(sections, ReportSection::torsion)) {
        json rows = json::array();
        json section;
        bool ok = true;
        try {
            for (const auto& t : doc.options.torsion_angles) {
                json row{{"t", to_string(t)}};
                try {
                    TorsionValue tv = torsion_special_value(p, t);
                    bool agree = tv.relative_gap() <= kTorsionTolerance;
                    row["via_zeta"] = tv.via_zeta;
                    row["via_lefschetz"] = tv.via_lefschetz;
                    row["relative_gap"] = tv.relative_gap();
                    row["agree"] = agree;
                    ok = ok && agree;
                } catch (const PoleAtEvaluation& e) {
                    row["pole"] = e.what();
                }
                rows.push_back(row);
            }
            section = {{"applicable", true},
                       {"formula", "|R(sigma lambda)|^((-1)^(r+1))"},
                       {"check", "prod_i |det(I - lambda X_i)|^((-1)^i) on the dual homology"},
                       {"values", rows}};
        } catch (const NonInvertible& e) {
            section = {{"applicable", false}, {"reason", e.what()}};
        }
        rep.body["torsion"] = section;
        rep.agreement = rep.agreement && ok;
    }

    if (has(sections, ReportSection::reduction) && doc.kind == ProblemKind::finite) {
        const FiniteGroup& g = p.group();
        EventualImage ei = eventual_image(g, p.finite_part());
        std::size_t full = phi_conjugacy_classes(g, p.finite_part()).count();
        std::size_t restricted = phi_conjugacy_classes(ei.subgroup, ei.restriction).count();
        bool ok = full == restricted;
        rep.body["reduction"] = {{"formula", "R of phi restricted to its eventual image"},
                                 {"check", "brute-force twisted classes on the whole group"},
                                 {"group_order", g.order()},
                                 {"eventual_image_order", ei.subgroup.order()},
                                 {"r_full", full},
                                 {"r_restricted", restricted},
                                 {"agree", ok}};
        rep.agreement = rep.agreement && ok;
    }

    rep.body["agreement"] = rep.agreement;
    rep.body["elapsed_seconds"] = std::chrono::duration<double>(clock::now() - t0).count();
    return rep;
}

std::string Report::to_text() const {
    std::ostringstream os;
    const json& b = body;
    os << "kind: " << b.value("kind", "?") << "\n";
    auto str = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (b.contains("counts")) {
        os << "R(phi^n) = " << b["counts"]["formula"].get<std::string>() << "\n";
        for (const auto& row : b["counts"]["values"]) {
            os << "  n=" << row["n"].get<std::size_t>() << "  " << str(row["value"]);
            if (!row["oracle"].is_null()) os << "  (oracle " << str(row["oracle"]) << ")";
            if (!row["agree"].get<bool>()) os << "  MISMATCH";
            os << "\n";
        }
    }
    if (b.contains("zeta")) {
        const auto& z = b["zeta"];
        os << "zeta: " << z["closed_form"].get<std::string>() << "\n";
        if (z.contains("signs"))
            os << "  p=" << z["signs"]["p"] << " r=" << z["signs"]["r"] << " sigma=" << z["signs"]["sigma"] << "\n";
        os << "  series to z^" << z["series_order"] << (z["series_agree"].get<bool>() ? " matches" : " DOES NOT match")
           << " exp(sum R(phi^n) z^n / n)\n";
    }
    if (b.contains("congruences")) {
        const auto& c = b["congruences"];
        os << "congruences: " << (c["all_zero"].get<bool>() ? "hold" : "FAIL") << " for n=1.."
           << c["residues"].size() << "\n";
    }
    if (b.contains("functional_equation")) {
        const auto& f = b["functional_equation"];
        if (f.contains("applicable")) {
            os << "functional equation: not applicable (" << f["reason"].get<std::string>() << ")\n";
        } else if (f["is_constant"].get<bool>()) {
            os << "functional equation: R(1/(" << str(f["d"]) << " z)) = " << f["epsilon"].get<std::string>()
               << " * R(z)^" << f["exponent"] << "\n";
        } else {
            os << "functional equation: quotient is not constant\n";
        }
    }
    if (b.contains("torsion")) {
        const auto& t = b["torsion"];
        if (!t["applicable"].get<bool>()) {
            os << "torsion: not applicable (" << t["reason"].get<std::string>() << ")\n";
        } else {
            for (const auto& row : t["values"]) {
                os << "torsion at t=" << row["t"].get<std::string>() << ": ";
                if (row.contains("pole")) {
                    os << "pole (" << row["pole"].get<std::string>() << ")\n";
                } else {
                    os.precision(15);
                    os << row["via_zeta"].get<double>() << " (zeta) vs " << row["via_lefschetz"].get<double>()
                       << " (homology)" << (row["agree"].get<bool>() ? "" : "  MISMATCH") << "\n";
                }
            }
        }
    }
    if (b.contains("bounds")) {
        const auto& r = b["bounds"];
        os.precision(15);
        os << "jacobian norm: " << str(r["jacobian_norm"]) << "\n"
           << "spectral radius of norm matrix: " << r["jacobian_spectral_radius"].get<double>() << "\n"
           << "radius of convergence >= " << r["radius_lower_bound_norm"].get<std::string>() << " (norm), >= "
           << r["radius_lower_bound_spectral"].get<double>() << " (spectral)\n";
        for (const auto& row : r["twisted_powers"])
            os << "  ||(zA)^" << row["n"] << "|| = " << str(row["norm"]) << " <= " << str(row["bound"])
               << (row["within"].get<bool>() ? "" : "  VIOLATED") << "\n";
    }
    if (b.contains("reduction")) {
        const auto& r = b["reduction"];
        os << "eventual image: order " << r["eventual_image_order"] << " of " << r["group_order"] << ", R = "
           << r["r_restricted"] << " vs " << r["r_full"] << " on the whole group"
           << (r["agree"].get<bool>() ? "" : "  MISMATCH") << "\n";
    }
    os << "agreement: " << (agreement ? "yes" : "NO") << "\n";
    return os.str();
}

}  // namespace rdm
