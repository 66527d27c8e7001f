// modgroup: command-line front end. Prints one JSON document per call.
// Exit codes: 0 ok, 1 internal error, 2 parse error, 3 domain error, 4 budget exceeded.
#include "modgroup/errors.hpp"
#include "modgroup/factorization.hpp"
#include "modgroup/mcurve.hpp"
#include "modgroup/necklace.hpp"
#include "modgroup/obstructions.hpp"
#include "modgroup/psl2.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>

using json = nlohmann::ordered_json;
using namespace modgroup;

namespace {

json integer(const Integer& n) {
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
        return static_cast<long long>(n);
    return n.str();
}

json matrix(const GroupElement& g) {
    return json::array({json::array({integer(g.a()), integer(g.b())}), json::array({integer(g.c()), integer(g.d())})});
}

json twist(const TwistVector& v) { return json::array({integer(v.p), integer(v.q)}); }

json class_json(const ConjugacyClass& c) {
    json out;
    out["kind"] = to_string(c.kind);
    if (c.kind == ConjugacyClass::Kind::Parabolic) out["parabolic_index"] = c.parabolic_index;
    if (c.diagram) out["cutting_word"] = c.diagram->letters();
    return out;
}

json classify_cmd(const std::string& input) {
    auto g = parse_element(input);
    auto c = classify(g);
    json out;
    out["input"] = input;
    out["matrix"] = matrix(g);
    out["class"] = to_string(c.kind);
    out["cutting_word"] = c.diagram ? json(c.diagram->letters()) : json(nullptr);
    out["parabolic_index"] = c.kind == ConjugacyClass::Kind::Parabolic ? json(c.parabolic_index) : json(nullptr);
    out["real"] = is_real_element(g);
    out["degree_mod6"] = abelian_degree(g);
    const bool rooted = c.kind == ConjugacyClass::Kind::Parabolic || c.kind == ConjugacyClass::Kind::Hyperbolic;
    out["root_power"] = rooted ? json(primitive_root(g).power) : json(nullptr);
    return out;
}

json factorize_cmd(const std::string& input, bool obstructions, int max_modulus) {
    auto g = parse_element(input);
    json out;
    out["input"] = input;
    out["matrix"] = matrix(g);
    out["exists"] = exists_2factorization(g);
    auto counts = count_classes(g);
    out["strong_count"] = counts.strong;
    out["weak_count"] = counts.weak;
    json reps = json::array();
    for (const auto& c : canonical_2factorizations(g)) {
        if (c.pair.product() != g) throw std::logic_error("representative does not multiply back to the input");
        json factors = json::array();
        for (std::size_t i = 0; i < c.pair.size(); ++i)
            factors.push_back({{"matrix", matrix(c.pair[i])}, {"twist", twist(c.pair.vectors()[i])}});
        reps.push_back({{"label", to_string(c.label)}, {"factors", factors}});
    }
    out["representatives"] = reps;
    auto reality = factorization_reality(g);
    json r;
    r["applicable"] = reality.applicable;
    if (!reality.applicable) r["reason"] = reality.reason;
    r["real_structures"] = reality.real_structures;
    json classes = json::array();
    for (const auto& c : reality.classes)
        classes.push_back({{"label", to_string(c.label)},
                           {"real", c.real},
                           {"partner", c.partner ? json(*c.partner) : json(nullptr)}});
    r["classes"] = classes;
    out["reality"] = r;
    out["trace_test"] = trace_test(g);
    if (obstructions) {
        json q = json::array();
        for (int n = 2; n <= max_modulus; ++n) {
            auto rep = finite_quotient_test(g, n);
            q.push_back({{"modulus", rep.modulus}, {"solvable", rep.solvable}, {"solution_count", rep.solution_count}});
        }
        out["quotient_tests"] = q;
    }
    return out;
}

json enumerate_cmd(int k, int w, const std::string& category_name, unsigned jobs, const std::string& out_path) {
    auto category = parse_category(category_name);
    if (!category) throw ParseError("unknown category '" + category_name + "'");
    EnumerationOptions options;
    options.jobs = jobs;
    options.keep_classes = !out_path.empty();
    auto r = enumerate(k, w, *category, options);
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw DomainError("cannot write " + out_path);
        for (const auto& c : r.classes) file << to_string(c.diagram) << ' ' << to_string(c.pendant) << '\n';
    }
    json out;
    out["k"] = r.k;
    out["w"] = r.w;
    out["category"] = to_string(r.category);
    out["count"] = r.count;
    out["elapsed"] = r.elapsed_seconds;
    return out;
}

json stats_cmd(const std::string& word, std::optional<int> w) {
    auto n = parse_necklace(word);
    auto s = stats(n);
    json out;
    out["diagram"] = to_string(n);
    out["circles"] = s.circles;
    out["squares"] = s.squares;
    out["rights"] = s.rights;
    out["lefts"] = s.lefts;
    out["betti"] = s.betti;
    out["euler"] = s.euler;
    out["essential"] = s.essential;
    if (!w) {
        const int r = static_cast<int>((6 - n.size() % 6) % 6);
        if (r <= 2) w = r;
    }
    if (w) {
        out["w"] = *w;
        out["k"] = necklace_k(n, *w);
        out["maximal"] = is_maximal(n, *w);
        out["passes_essential_obstruction"] = passes_essential_obstruction(n, *w);
    }
    return out;
}

json mcurve_cmd(const std::string& word, bool directed) {
    auto j = parse_junction(word);
    json out;
    out["input"] = to_string(j);
    out["canonical_class"] = to_string(canonical_class(j, directed));
    out["directed"] = directed;
    out["degree"] = j.size();
    out["w"] = j.stars();
    out["monodromy_class"] = class_json(monodromy_class(j));
    auto flat = flat_diagram(j);
    out["flat_diagram"] = {{"category", to_string(flat.category)}, {"representative", to_string(flat.representative)}};
    if (is_zigzag_free(j)) {
        out["branch_word"] = to_string(branch_word(j));
        out["pendant"] = to_string(pendant_label(j));
        out["classes_sharing_real_part"] = classes_sharing_real_part(j);
    } else {
        out["branch_word"] = nullptr;
        out["pendant"] = nullptr;
        out["classes_sharing_real_part"] = nullptr;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modular group factorizations, necklace diagrams and junction words"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indent the JSON output");

    std::string element;
    auto* classify = app.add_subcommand("classify", "Conjugacy class of a word or matrix");
    classify->add_option("element", element, "Word such as \"R^3 L R^2\" or matrix [[a,b],[c,d]]")->required();

    bool check_obstructions = false;
    int max_modulus = 7;
    auto* factorize = app.add_subcommand("factorize", "2-factorizations of a word or matrix");
    factorize->add_option("element", element)->required();
    factorize->add_flag("--check-obstructions", check_obstructions, "Run the finite quotient tests");
    factorize->add_option("--max-modulus", max_modulus, "Largest modulus for the quotient tests")
        ->check(CLI::Range(2, 1000));

    auto* necklace = app.add_subcommand("necklace", "Necklace diagrams");
    necklace->require_subcommand(1);
    int k = 1;
    int w = 0;
    std::string category = "nonoriented";
    std::string out_path;
    unsigned jobs = 0;
    auto* enumerate = necklace->add_subcommand("enumerate", "Count classes of w-pendant necklace diagrams");
    enumerate->add_option("--k", k)->required();
    enumerate->add_option("--w", w)->required();
    enumerate->add_option("--category", category, "oriented or nonoriented");
    enumerate->add_option("--out", out_path, "Write one representative per line");
    enumerate->add_option("--jobs", jobs, "Worker threads, 0 for all cores");
    std::string stones;
    std::optional<int> stats_w;
    auto* stats = necklace->add_subcommand("stats", "Stone counts, Betti number, essential segments");
    stats->add_option("diagram", stones)->required();
    stats->add_option("--w", stats_w, "Pendant count, inferred from the length when omitted");

    std::string junction;
    bool directed = false;
    auto* mcurve = app.add_subcommand("mcurve", "Junction word of a real trigonal M-curve");
    mcurve->add_option("word", junction, "Word over u, d, * (or . for *)")->required();
    mcurve->add_flag("--directed", directed, "Quotient by the composite flip only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json result;
        if (*classify) result = classify_cmd(element);
        else if (*factorize) result = factorize_cmd(element, check_obstructions, max_modulus);
        else if (*enumerate) result = enumerate_cmd(k, w, category, jobs, out_path);
        else if (*stats) result = stats_cmd(stones, stats_w);
        else if (*mcurve) result = mcurve_cmd(junction, directed);
        std::cout << (pretty ? result.dump(2) : result.dump()) << '\n';
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
