#include "modgroup/factorization.hpp"

#include "modgroup/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modgroup {

Factorization::Factorization(std::vector<GroupElement> factors) : factors_(std::move(factors)) {
    vectors_.reserve(factors_.size());
    for (const auto& f : factors_) {
        auto v = twist_vector(f);
        if (!v) throw DomainError("factor " + to_string(f) + " is not a Dehn twist");
        vectors_.push_back(*v);
    }
}

Factorization Factorization::from_vectors(const std::vector<TwistVector>& vectors) {
    std::vector<GroupElement> factors;
    factors.reserve(vectors.size());
    for (const auto& v : vectors) factors.push_back(dehn_twist(v));
    return Factorization(std::move(factors));
}

GroupElement Factorization::product() const {
    GroupElement out;
    for (const auto& f : factors_) out = out * f;
    return out;
}

Factorization Factorization::conjugated_by(const GroupElement& h) const {
    std::vector<GroupElement> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.conjugated_by(h));
    return Factorization(std::move(out));
}

std::string to_string(const Factorization& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ", ";
        out += "t" + to_string(f.vectors()[i]);
    }
    return out + ")";
}

Factorization hurwitz_move(const Factorization& f, std::size_t i, int dir) {
    if (i < 1 || i >= f.size()) throw DomainError("Hurwitz move index out of range");
    if (dir != 1 && dir != -1) throw DomainError("Hurwitz move direction must be +1 or -1");
    auto factors = f.factors();
    auto& x = factors[i - 1];
    auto& y = factors[i];
    if (dir == 1) {
        // (x, y) -> (x y x^-1, x)
        auto moved = x * y * x.inverse();
        y = x;
        x = moved;
    } else {
        // (x, y) -> (y, y^-1 x y)
        auto moved = y.inverse() * x * y;
        x = y;
        y = moved;
    }
    return Factorization(std::move(factors));
}

std::string to_string(const StrongClassLabel& label) {
    struct {
        std::string operator()(const EmptyLabel&) const { return "Empty"; }
        std::string operator()(const SingleTwistLabel&) const { return "Twist"; }
        std::string operator()(const FullGroupLabel&) const { return "FullGroup"; }
        std::string operator()(const EqualTwistsLabel&) const { return "EqualTwists"; }
        std::string operator()(const AxisLabel& a) const { return "Axis(" + std::to_string(a.axis) + ")"; }
    } visitor;
    return std::visit(visitor, label);
}

Factorization decomposition_pair(std::string_view a_word) {
    const auto& X = GroupElement::X();
    const auto& Y = GroupElement::Y();
    const auto l_inv = GroupElement::L().inverse();
    auto yax = Y * evaluate_lr(a_word) * X;
    return Factorization({X * l_inv * X.inverse(), yax * l_inv * yax.inverse()});
}

namespace {

bool has_cutting_factorizations(const ConjugacyClass& c) {
    if (c.kind == ConjugacyClass::Kind::Parabolic) return c.parabolic_index == -4;
    return c.kind == ConjugacyClass::Kind::Hyperbolic;
}

void check_product(const Factorization& f, const GroupElement& g) {
    if (f.product() != g) throw std::logic_error("canonical factorization does not multiply to " + to_string(g));
}

}  // namespace

bool exists_2factorization(const GroupElement& g) {
    auto c = classify(g);
    switch (c.kind) {
        case ConjugacyClass::Kind::EllipticOrder3Pos: return true;
        case ConjugacyClass::Kind::Parabolic:
            return c.parabolic_index == 2 || c.parabolic_index == -4;
        case ConjugacyClass::Kind::Hyperbolic: return !para_symmetries(*c.diagram).empty();
        default: return false;
    }
}

std::vector<CanonicalFactorization> canonical_2factorizations(const GroupElement& g) {
    std::vector<CanonicalFactorization> out;
    auto c = classify(g);
    if (c.kind == ConjugacyClass::Kind::EllipticOrder3Pos) {
        auto h = conjugator_to_rep(g).h;
        Factorization pair({GroupElement::R().conjugated_by(h), GroupElement::L().inverse().conjugated_by(h)});
        check_product(pair, g);
        out.push_back({FullGroupLabel{}, std::move(pair)});
        return out;
    }
    if (c.kind == ConjugacyClass::Kind::Parabolic && c.parabolic_index == 2) {
        auto h = conjugator_to_rep(g).h;
        auto t = GroupElement::R().conjugated_by(h);
        Factorization pair({t, t});
        check_product(pair, g);
        out.push_back({EqualTwistsLabel{}, std::move(pair)});
        return out;
    }
    if (!has_cutting_factorizations(c)) return out;

    auto cp = *cutting_presentation(g);
    const auto to_g = cp.conj.inverse();  // x -> C x C^-1 is conjugated_by(C^-1)
    if (c.kind == ConjugacyClass::Kind::Parabolic) {
        // L^4 = R . (R^-1 L^2) R (R^-1 L^2)^-1, and its conjugate by L
        const auto& R = GroupElement::R();
        const auto& L = GroupElement::L();
        auto s = R.inverse() * L * L;
        Factorization first({R, s * R * s.inverse()});
        auto second = first.conjugated_by(L.inverse());
        out.push_back({AxisLabel{1}, second.conjugated_by(to_g)});
        out.push_back({AxisLabel{3}, first.conjugated_by(to_g)});
    } else {
        const auto& w = cp.word;
        for (const auto& s : para_symmetries(w)) {
            auto a = extract_A(w, s);
            auto shift = evaluate_lr(std::string_view(w.letters()).substr(0, static_cast<std::size_t>(s.anchor)));
            auto pair = decomposition_pair(a).conjugated_by((cp.conj * shift).inverse());
            out.push_back({AxisLabel{s.axis}, std::move(pair)});
        }
    }
    for (const auto& f : out) check_product(f.pair, g);
    return out;
}

ClassCounts count_classes(const GroupElement& g) {
    auto canon = canonical_2factorizations(g);
    ClassCounts out;
    out.strong = static_cast<int>(canon.size());
    out.weak = out.strong;
    if (out.strong == 2 && decide_weak_equivalence(canon[0].pair, canon[1].pair)) out.weak = 1;
    return out;
}

namespace {

struct Vec {
    Integer p, q;
};

Vec sign_fixed(Vec v) {
    if (v.p < 0 || (v.p == 0 && v.q < 0)) {
        v.p = -v.p;
        v.q = -v.q;
    }
    return v;
}

bool same(const Vec& x, const Vec& y) { return x.p == y.p && x.q == y.q; }

Vec times(const Vec& v, const Matrix2& m) { return sign_fixed({v.p * m.a + v.q * m.c, v.p * m.b + v.q * m.d}); }

Integer norm2(const Vec& v) { return v.p * v.p + v.q * v.q; }

// target == +-start * step^j for some integer j. The squared norm along a
// hyperbolic or parabolic orbit is convex in j, so each direction stops
// once it grows past the target; elliptic orbits are caught by periodicity.
bool on_orbit(const Vec& start, const Matrix2& step, const Matrix2& back, const Vec& target) {
    if (same(start, target)) return true;
    const auto target_norm = norm2(target);
    for (const auto* m : {&step, &back}) {
        Vec v = start;
        Integer previous = norm2(v);
        for (long long k = 1;; ++k) {
            if (k > max_orbit_steps) throw BudgetError("strong equivalence search exceeded its step budget");
            v = times(v, *m);
            if (same(v, start)) break;
            if (same(v, target)) return true;
            auto n = norm2(v);
            if (n > previous && n > target_norm) break;
            previous = std::move(n);
        }
    }
    return false;
}

Vec as_vec(const TwistVector& t) { return {t.p, t.q}; }

void require_pair(const Factorization& f) {
    if (f.size() != 2) throw DomainError("expected a 2-factorization");
}

}  // namespace

bool decide_strong_equivalence(const Factorization& f1, const Factorization& f2) {
    require_pair(f1);
    require_pair(f2);
    const auto g = f1.product();
    if (f2.product() != g) throw DomainError("strongly equivalent factorizations must have the same product");
    // sigma^2 is conjugation by g, and a pair is fixed by its first factor
    // and the product; so compare first factors along two conjugation orbits.
    const auto& step = g.lift();
    const auto back = g.inverse().lift();
    const auto target = as_vec(f2.vectors()[0]);
    const auto moved = hurwitz_move(f1, 1, 1);
    return on_orbit(as_vec(f1.vectors()[0]), step, back, target) ||
           on_orbit(as_vec(moved.vectors()[0]), step, back, target);
}

std::size_t strong_class_index(const Factorization& f) {
    require_pair(f);
    auto canon = canonical_2factorizations(f.product());
    for (std::size_t i = 0; i < canon.size(); ++i)
        if (decide_strong_equivalence(f, canon[i].pair)) return i;
    throw std::logic_error("2-factorization " + to_string(f) + " matches no canonical class");
}

StrongClassLabel strong_class_label(const Factorization& f) {
    auto canon = canonical_2factorizations(f.product());
    return canon[strong_class_index(f)].label;
}

bool decide_weak_equivalence(const Factorization& f1, const Factorization& f2) {
    require_pair(f1);
    require_pair(f2);
    auto g1 = f1.product();
    auto g2 = f2.product();
    auto c = classify(g1);
    if (classify(g2) != c) throw DomainError("weakly equivalent factorizations must have conjugate products");
    auto l1 = strong_class_label(f1);
    auto l2 = strong_class_label(f2);
    if (l1 == l2) return true;
    const auto* a1 = std::get_if<AxisLabel>(&l1);
    const auto* a2 = std::get_if<AxisLabel>(&l2);
    if (!a1 || !a2) throw std::logic_error("distinct labels outside the cutting-word case");
    // both A-words live on the same canonical diagram
    auto word = c.diagram ? *c.diagram : CyclicDiagram("LLLL");
    auto find = [&](int axis) {
        for (const auto& s : para_symmetries(word))
            if (s.axis == axis) return extract_A(word, s);
        throw std::logic_error("label refers to a missing para-symmetry");
    };
    auto x = find(a1->axis);
    auto y = find(a2->axis);
    return x == y || x == transpose(y);
}

Factorization tau_hat(const RealStructure& tau, const Factorization& f) {
    std::vector<GroupElement> out;
    out.reserve(f.size());
    for (auto it = f.factors().rbegin(); it != f.factors().rend(); ++it) out.push_back(tau_hat(tau, *it));
    return Factorization(std::move(out));
}

RealityReport factorization_reality(const GroupElement& g) {
    RealityReport report;
    auto canon = canonical_2factorizations(g);
    if (canon.empty()) {
        report.reason = "no 2-factorization";
        return report;
    }
    if (!is_real_element(g)) {
        report.reason = "element is not real";
        return report;
    }
    std::vector<RealStructure> structures;
    auto c = classify(g);
    if (c.kind == ConjugacyClass::Kind::EllipticOrder3Pos) {
        structures.push_back(conjugate(RealStructure::tau1(), conjugator_to_rep(g).h.inverse()));
        report.real_structures = 2;
    } else if (c.kind == ConjugacyClass::Kind::Parabolic && c.parabolic_index == 2) {
        structures.push_back(conjugate(RealStructure::tau2(), conjugator_to_rep(g).h.inverse()));
        report.real_structures = 2;
    } else {
        // a reflection axis c of w: the prefix of length c + 1 is a palindrome
        // P and P tau2 reverses the cyclic word in place
        auto cp = *cutting_presentation(g);
        const auto& w = cp.word.letters();
        auto axes = reflection_symmetries(cp.word);
        for (int axis : axes) {
            auto prefix = evaluate_lr(std::string_view(w).substr(0, static_cast<std::size_t>(axis) + 1));
            RealStructure sigma(prefix.lift() * RealStructure::tau2().matrix());
            structures.push_back(conjugate(sigma, cp.conj));
        }
        report.real_structures = static_cast<int>(axes.size());
    }
    for (const auto& s : structures)
        if (tau_hat(s, g) != g) throw std::logic_error("real structure does not fix " + to_string(g));

    report.applicable = true;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        ClassReality entry{canon[i].label, false, std::nullopt};
        for (const auto& s : structures) {
            auto image = strong_class_index(tau_hat(s, canon[i].pair));
            if (image == i) {
                entry.real = true;
                entry.partner.reset();
                break;
            }
            if (!entry.partner) entry.partner = image;
        }
        report.classes.push_back(std::move(entry));
    }
    return report;
}

std::vector<TwistVector> primitive_vectors(int bound) {
    if (bound < 1) throw DomainError("oracle bound must be positive");
    std::vector<TwistVector> out;
    for (int p = 0; p <= bound; ++p)
        for (int q = -bound; q <= bound; ++q) {
            if (std::gcd(p, q) != 1 || (p == 0 && q < 0)) continue;
            out.push_back(TwistVector::make(p, q));
        }
    return out;
}

std::vector<OracleProduct> oracle_products(int bound) {
    auto vectors = primitive_vectors(bound);
    std::vector<OracleProduct> out;
    out.reserve(vectors.size() * vectors.size());
    for (const auto& u : vectors) {
        auto tu = dehn_twist(u);
        for (const auto& v : vectors) out.push_back({u, v, tu * dehn_twist(v)});
    }
    return out;
}

}  // namespace modgroup
