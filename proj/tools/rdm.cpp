// rdm: Reidemeister numbers, zeta functions and torsion for problem documents.

#include "rdm/errors.hpp"
#include "rdm/problem.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

enum Exit { ok = 0, other = 1, validation = 2, infinite = 3, disagreement = 4 };

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t order_cap_from_env() {
    const char* s = std::getenv("RDM_MAX_GROUP_ORDER");
    if (!s || !*s) return rdm::kDefaultOrderCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0' || v == 0) throw rdm::ValidationError(std::string("RDM_MAX_GROUP_ORDER: not a positive integer: ") + s);
    return static_cast<std::size_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reidemeister numbers, zeta functions, congruences, radius bounds and torsion"};
    app.require_subcommand(1);

    std::string path;
    std::size_t order = 0;
    std::size_t max_order = 0;
    bool as_json = false;
    bool as_text = false;
    std::vector<std::string> angles;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", path, "problem document (default: standard input)");
        sub->add_option("--order", order, "series order N")->check(CLI::Range(1, 64));
        sub->add_option("--max-order", max_order, "largest finite group to enumerate (overrides RDM_MAX_GROUP_ORDER)");
        auto* j = sub->add_flag("--json", as_json, "JSON output");
        auto* t = sub->add_flag("--text", as_text, "plain text output (default)");
        j->excludes(t);
    };

    auto* check = app.add_subcommand("check", "validate a document and print its canonical form");
    auto* compute = app.add_subcommand("compute", "full report");
    auto* zeta = app.add_subcommand("zeta", "counts, zeta function, congruences and functional equation");
    auto* bounds = app.add_subcommand("bounds", "radius of convergence bounds for a free-group endomorphism");
    auto* torsion = app.add_subcommand("torsion", "torsion special values");
    for (auto* sub : {check, compute, zeta, bounds, torsion}) add_common(sub);
    torsion->add_option("--angle", angles, "angle t with lambda = exp(2 pi i t), e.g. 1/3 (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        std::size_t cap = max_order ? max_order : order_cap_from_env();
        rdm::ProblemDocument doc = rdm::parse_problem(read_input(path), cap);
        if (order) doc.options.order = order;
        if (!angles.empty()) {
            doc.options.torsion_angles.clear();
            for (const auto& a : angles) {
                try {
                    doc.options.torsion_angles.push_back(rdm::parse_rational(a));
                } catch (const std::invalid_argument&) {
                    throw rdm::ValidationError("--angle: not a rational: " + a);
                }
            }
        }

        if (check->parsed()) {
            nlohmann::json canon = rdm::serialize(doc);
            if (as_json) std::cout << canon.dump(2) << "\n";
            else std::cout << "valid " << rdm::to_string(doc.kind) << " document\n" << canon.dump() << "\n";
            return ok;
        }

        using S = rdm::ReportSection;
        S sections = S::all;
        if (zeta->parsed()) sections = S::counts | S::zeta | S::congruences | S::functional_equation;
        if (bounds->parsed()) {
            if (doc.kind != rdm::ProblemKind::free) throw rdm::ValidationError("bounds: requires a document of kind free");
            sections = S::bounds;
        }
        if (torsion->parsed()) {
            if (doc.kind == rdm::ProblemKind::free) throw rdm::ValidationError("torsion: not defined for kind free");
            sections = S::torsion;
        }

        rdm::Report rep = rdm::run(doc, sections, cap);
        if (as_json) std::cout << rep.body.dump(2) << "\n";
        else std::cout << rep.to_text();
        if (!rep.agreement) {
            std::cerr << "error: independent checks disagree; see report\n";
            return disagreement;
        }
        return ok;
    } catch (const rdm::InfiniteReidemeister& e) {
        std::cerr << "infinite Reidemeister number (n=" << e.iterate() << "): " << e.what() << "\n";
        return infinite;
    } catch (const rdm::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return validation;
    } catch (const rdm::OracleDisagreement& e) {
        std::cerr << "oracle disagreement: " << e.what() << "\n";
        return disagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return other;
    }
}
