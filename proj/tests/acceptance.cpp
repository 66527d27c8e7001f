// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "modgroup/cyclic_diagram.hpp"
#include "modgroup/factorization.hpp"
#include "modgroup/mcurve.hpp"
#include "modgroup/necklace.hpp"
#include "modgroup/obstructions.hpp"
#include "modgroup/psl2.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace modgroup;

namespace {

// Runtime ceilings in seconds, taken from the single-threaded budgets.
constexpr double k1_limit = 1.0;
constexpr double k2w0_limit = 300.0;
constexpr double k2w1_limit = 60.0;
constexpr double oracle_limit = 120.0;
constexpr double para_limit = 60.0;
constexpr double property_limit = 30.0;
constexpr int property_cases = 10000;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& check) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %d %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

EnumerationResult run(int k, int w) {
    EnumerationOptions o;
    o.jobs = 1;
    return enumerate(k, w, Category::NonOriented, o);
}

Outcome counts() {
    std::ostringstream out;
    bool ok = true;
    struct Case {
        int k, w;
        unsigned long long expected;
        double limit;
    };
    for (auto c : {Case{1, 0, 25, k1_limit}, Case{1, 1, 28, k1_limit}, Case{1, 2, 24, k1_limit},
                   Case{2, 0, 8421, k2w0_limit}, Case{2, 1, 15602, k2w1_limit}}) {
        auto r = run(c.k, c.w);
        bool good = r.count == c.expected && r.elapsed_seconds < c.limit;
        ok &= good;
        out << "k=" << c.k << ",w=" << c.w << ":" << r.count << "/" << c.expected << " ";
    }
    return {ok, out.str()};
}

Outcome maximal_and_essential() {
    auto r1 = run(1, 0);
    int maximal = 0;
    int passing1 = 0;
    for (const auto& c : r1.classes) {
        maximal += is_maximal(c.diagram, 0);
        passing1 += passes_essential_obstruction(c.diagram, 0);
    }
    auto r2 = run(2, 0);
    int passing2 = 0;
    for (const auto& c : r2.classes) passing2 += passes_essential_obstruction(c.diagram, 0);
    std::ostringstream out;
    out << "maximal " << maximal << "/4, passing(k=1) " << passing1 << "/17, passing(k=2) " << passing2 << "/3596 of "
        << r2.count;
    return {maximal == 4 && passing1 == 17 && passing2 == 3596 && r2.count == 8421, out.str()};
}

Outcome l4_identity() {
    const auto& L = GroupElement::L();
    const auto& R = GroupElement::R();
    auto s = R.inverse() * L * L;
    auto second_factor = s * R * s.inverse();
    bool identity = R * second_factor == evaluate("L^4");
    Factorization first({R, second_factor});
    auto t = L * R.inverse() * L * L;
    Factorization second({L * R * L.inverse(), t * R * t.inverse()});
    bool products = first.product() == evaluate("L^4") && second.product() == evaluate("L^4");
    bool strong = decide_strong_equivalence(first, second);
    bool weak = decide_weak_equivalence(first, second);
    std::ostringstream out;
    out << "identity=" << identity << " strong=" << strong << " weak=" << weak;
    return {identity && products && !strong && weak, out.str()};
}

bool is_square(const Integer& n) {
    if (n < 0) return false;
    Integer r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

Outcome oracle() {
    auto start = std::chrono::steady_clock::now();
    auto products = oracle_products(6);
    std::size_t bad = 0;
    for (const auto& p : products) {
        bool ok = exists_2factorization(p.product);
        // the SL product t_u t_v has trace 2 - (u ^ v)^2
        auto lift = dehn_twist_lift(p.u) * dehn_twist_lift(p.v);
        auto q = wedge(p.u, p.v);
        ok = ok && lift.trace() == 2 - q * q && is_square(2 - lift.trace());
        for (int n = 2; n <= 7 && ok; ++n) ok = finite_quotient_test(p.product, n).solvable;
        if (ok) {
            Factorization f = Factorization::from_vectors({p.u, p.v});
            int matches = 0;
            for (const auto& c : canonical_2factorizations(p.product)) matches += decide_strong_equivalence(f, c.pair);
            ok = matches == 1;
        }
        bad += !ok;
    }
    double secs = seconds_since(start);
    std::ostringstream out;
    out << products.size() << " products, " << bad << " failures";
    return {bad == 0 && secs < oracle_limit, out.str()};
}

Outcome para_bound() {
    auto start = std::chrono::steady_clock::now();
    std::size_t words = 0;
    std::size_t two = 0;
    std::size_t bad = 0;
    for (int m = 1; m <= 14; ++m)
        for (unsigned bits = 0; bits < (1u << m); ++bits) {
            std::string w;
            for (int i = 0; i < m; ++i) w += (bits >> i) & 1 ? 'R' : 'L';
            CyclicDiagram d(w);
            auto count = para_symmetries(d).size();
            auto r = recognize(d);
            bool vw = std::holds_alternative<VForm>(r) || std::holds_alternative<WForm>(r);
            ++words;
            two += count == 2;
            if (count > 2 || (count == 2) != vw) ++bad;
        }
    double secs = seconds_since(start);
    std::ostringstream out;
    out << words << " words, " << two << " with two para-symmetries, " << bad << " violations";
    return {bad == 0 && secs < para_limit, out.str()};
}

Outcome non_sufficiency() {
    auto g = evaluate("R^3 L R^2");
    auto t = abs(g.trace());
    bool ok = t == 7 && trace_test(g) && is_square(2 + t) && !exists_2factorization(g);
    std::ostringstream out;
    out << "trace " << t << ", trace_test " << trace_test(g) << ", exists " << exists_2factorization(g);
    return {ok, out.str()};
}

Outcome mcurve_anchors() {
    auto ud = parse_junction(".ud.");
    auto du = parse_junction(".du.");
    auto p = parse_junction(".dudduudu.");
    auto q = parse_junction(".duududdu.");
    auto five = canonicalize(parse_necklace("OOOOOSSSSS"), Category::FlatOriented);
    auto pair = canonicalize(parse_necklace("OOOOOSSSSSOSSSOOOOOSSSSSOSSS"), Category::FlatOriented);
    ConjugacyClass w;
    w.kind = ConjugacyClass::Kind::Hyperbolic;
    w.diagram = build_W(WForm::make(1, 3, "LLRR")).canonical();

    bool first = flat_diagram(ud) == five && flat_diagram(du) == five &&
                 canonical_class(ud, true) != canonical_class(du, true);
    bool second = flat_diagram(p) == pair && flat_diagram(q) == pair && monodromy_class(p) == w &&
                  monodromy_class(q) == w && canonical_class(p, false) != canonical_class(q, false) &&
                  pendant_label(p) != pendant_label(q);
    std::ostringstream out;
    out << ".ud./.du. " << (first ? "ok" : "mismatch") << "; pendants " << to_string(pendant_label(p)) << " vs "
        << to_string(pendant_label(q));
    return {first && second, out.str()};
}

Outcome properties() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20261015);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    static const GroupElement gens[] = {GroupElement::L(), GroupElement::R(), GroupElement::L().inverse(),
                                        GroupElement::R().inverse(), GroupElement::X(), GroupElement::Y()};
    auto element = [&](int max_len) {
        GroupElement g;
        for (int i = uniform(0, max_len); i > 0; --i) g = g * gens[uniform(0, 5)];
        return g;
    };
    std::size_t bad = 0;
    std::size_t checked = 0;
    const auto& y = GroupElement::Y();
    for (int i = 0; i < property_cases; ++i) {
        auto g = element(20);
        auto h = element(8);
        bad += evaluate(normal_form(g)) != g;
        bad += !(classify(g.conjugated_by(h)) == classify(g));
        auto tau = conjugate(uniform(0, 1) ? RealStructure::tau1() : RealStructure::tau2(), element(6));
        bad += tau_hat(tau, tau_hat(tau, g)) != g;
        std::vector<Stone> stones;
        for (int k = uniform(1, 14); k > 0; --k) stones.push_back(static_cast<Stone>(uniform(0, 3)));
        Necklace n(std::move(stones));
        bad += monodromy(transform(n, {Transform::Kind::Dual, 0})) != y * monodromy(n) * y;
        bad += monodromy(transform(n, {Transform::Kind::Inverse, 0})) != tau_hat(RealStructure::tau1(), monodromy(n));
        checked += 5;
    }
    double secs = seconds_since(start);
    std::ostringstream out;
    out << checked << " checks over " << property_cases << " cases, " << bad << " failures";
    return {bad == 0 && secs < property_limit, out.str()};
}

}  // namespace

int main() {
    report(1, "necklace class counts", counts);
    report(2, "maximal and essential-segment counts", maximal_and_essential);
    report(3, "L^4 identity, strong vs weak", l4_identity);
    report(4, "oracle products, |p|,|q| <= 6", oracle);
    report(5, "para-symmetry bound, m <= 14", para_bound);
    report(6, "non-sufficiency of the trace test", non_sufficiency);
    report(7, "M-curve anchors", mcurve_anchors);
    report(8, "property suites", properties);
    return failures == 0 ? 0 : 1;
}
