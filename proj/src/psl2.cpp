#include "modgroup/psl2.hpp"

#include "modgroup/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>

namespace modgroup {

Matrix2 sign_normalized(Matrix2 m) {
    for (const Integer* e : {&m.a, &m.b, &m.c, &m.d}) {
        if (*e == 0) continue;
        if (*e < 0) m = -m;
        break;
    }
    return m;
}

std::string to_string(const Matrix2& m) {
    return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

GroupElement::GroupElement(const Matrix2& lift) : m_(sign_normalized(lift)) {
    if (m_.det() != 1) throw DomainError("matrix " + to_string(lift) + " does not have determinant 1");
}

const GroupElement& GroupElement::L() {
    static const GroupElement g(1, 1, 0, 1);
    return g;
}
const GroupElement& GroupElement::R() {
    static const GroupElement g(1, 0, 1, 1);
    return g;
}
const GroupElement& GroupElement::X() {
    static const GroupElement g(1, -1, 1, 0);
    return g;
}
const GroupElement& GroupElement::Y() {
    static const GroupElement g(0, 1, -1, 0);
    return g;
}

bool GroupElement::is_identity() const { return m_ == Matrix2{}; }

GroupElement GroupElement::inverse() const { return GroupElement(Matrix2{m_.d, -m_.b, -m_.c, m_.a}); }

GroupElement GroupElement::pow(long long n) const {
    GroupElement base = n < 0 ? inverse() : *this;
    unsigned long long e = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
    GroupElement out;
    while (e != 0) {
        if (e & 1ULL) out = out * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return out;
}

GroupElement GroupElement::conjugated_by(const GroupElement& h) const { return h.inverse() * *this * h; }

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    GroupElement out;
    out.m_ = sign_normalized(x.m_ * y.m_);
    return out;
}

bool operator<(const GroupElement& x, const GroupElement& y) {
    const auto& p = x.m_;
    const auto& q = y.m_;
    if (p.a != q.a) return p.a < q.a;
    if (p.b != q.b) return p.b < q.b;
    if (p.c != q.c) return p.c < q.c;
    return p.d < q.d;
}

std::string to_string(const GroupElement& g) { return to_string(g.lift()); }
std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << to_string(g); }

// ---------------------------------------------------------------- parsing

namespace {

void skip_space(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Integer parse_integer(std::string_view s, std::size_t& i) {
    skip_space(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected an integer at position " + std::to_string(start));
    std::string lit(s.substr(start, i - start));
    if (lit[0] == '+') lit.erase(0, 1);
    return Integer(lit);
}

void expect(std::string_view s, std::size_t& i, char c) {
    skip_space(s, i);
    if (i >= s.size() || s[i] != c)
        throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(i));
    ++i;
}

}  // namespace

LetterWord parse_word(std::string_view text) {
    LetterWord out;
    std::size_t i = 0;
    for (skip_space(text, i); i < text.size(); skip_space(text, i)) {
        char c = text[i];
        if (c != 'L' && c != 'R' && c != 'X' && c != 'Y')
            throw ParseError(std::string("unknown token '") + c + "' at position " + std::to_string(i));
        ++i;
        long long exponent = 1;
        skip_space(text, i);
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_space(text, i);
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            auto lit = text.substr(start, i - start);
            if (!lit.empty() && lit[0] == '+') lit.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(lit.data(), lit.data() + lit.size(), exponent);
            if (lit.empty() || ec != std::errc() || ptr != lit.data() + lit.size())
                throw ParseError("malformed exponent at position " + std::to_string(start));
        }
        out.push_back({c, exponent});
    }
    return out;
}

GroupElement parse_matrix(std::string_view text) {
    std::size_t i = 0;
    expect(text, i, '[');
    expect(text, i, '[');
    Integer a = parse_integer(text, i);
    expect(text, i, ',');
    Integer b = parse_integer(text, i);
    expect(text, i, ']');
    expect(text, i, ',');
    expect(text, i, '[');
    Integer c = parse_integer(text, i);
    expect(text, i, ',');
    Integer d = parse_integer(text, i);
    expect(text, i, ']');
    expect(text, i, ']');
    skip_space(text, i);
    if (i != text.size()) throw ParseError("trailing characters after matrix");
    return GroupElement(Matrix2{a, b, c, d});
}

GroupElement parse_element(std::string_view text) {
    std::size_t i = 0;
    skip_space(text, i);
    if (i < text.size() && text[i] == '[') return parse_matrix(text);
    return evaluate(parse_word(text));
}

GroupElement evaluate(const LetterWord& word) {
    GroupElement out;
    for (const auto& t : word) {
        const GroupElement* base = nullptr;
        switch (t.letter) {
            case 'L': base = &GroupElement::L(); break;
            case 'R': base = &GroupElement::R(); break;
            case 'X': base = &GroupElement::X(); break;
            case 'Y': base = &GroupElement::Y(); break;
            default: throw ParseError(std::string("unknown generator '") + t.letter + "'");
        }
        out = out * base->pow(t.exponent);
    }
    return out;
}

GroupElement evaluate(std::string_view text) { return evaluate(parse_word(text)); }

GroupElement evaluate_lr(std::string_view letters) {
    GroupElement out;
    for (char c : letters) {
        if (c == 'L') out = out * GroupElement::L();
        else if (c == 'R') out = out * GroupElement::R();
        else throw DomainError(std::string("expected L or R, got '") + c + "'");
    }
    return out;
}

// ----------------------------------------------------------- normal form

GroupElement evaluate(const SyllableWord& word) {
    GroupElement out;
    const auto x2 = GroupElement::X() * GroupElement::X();
    for (auto s : word) {
        switch (s) {
            case Syllable::X: out = out * GroupElement::X(); break;
            case Syllable::X2: out = out * x2; break;
            case Syllable::Y: out = out * GroupElement::Y(); break;
        }
    }
    return out;
}

std::string to_string(const SyllableWord& word) {
    std::string out;
    for (auto s : word) {
        if (!out.empty()) out += ' ';
        out += s == Syllable::X ? "X" : s == Syllable::X2 ? "X^2" : "Y";
    }
    return out;
}

namespace {

struct Power {
    char letter;  // L or R
    Integer exponent;
};

// g as a product of powers of L and R, by Euclid on the first column.
std::vector<Power> peel(const GroupElement& g) {
    Integer a = g.a(), b = g.b(), c = g.c(), d = g.d();
    std::vector<Power> applied;  // left factors E_i with E_k ... E_1 g = +-L^e
    while (c != 0) {
        if (a == 0) {
            a += c;
            b += d;
            applied.push_back({'L', 1});
        } else if (abs(a) > abs(c)) {
            Integer q = a / c;
            a -= q * c;
            b -= q * d;
            applied.push_back({'L', -q});
        } else {
            Integer q = c / a;
            c -= q * a;
            d -= q * b;
            applied.push_back({'R', -q});
        }
    }
    std::vector<Power> word;
    word.reserve(applied.size() + 1);
    for (auto& p : applied) word.push_back({p.letter, -p.exponent});
    Integer e = a * b;  // a = d = +-1 here
    if (e != 0) word.push_back({'L', e});
    return word;
}

bool same_factor(Syllable s, Syllable t) { return (s == Syllable::Y) == (t == Syllable::Y); }

int x_exponent(Syllable s) { return s == Syllable::X ? 1 : 2; }

// Product of two syllables of the same factor; nullopt when trivial.
std::optional<Syllable> combine(Syllable s, Syllable t) {
    if (s == Syllable::Y) return std::nullopt;
    int e = (x_exponent(s) + x_exponent(t)) % 3;
    if (e == 0) return std::nullopt;
    return e == 1 ? Syllable::X : Syllable::X2;
}

void push_reduced(SyllableWord& w, Syllable s) {
    if (!w.empty() && same_factor(w.back(), s)) {
        auto merged = combine(w.back(), s);
        w.pop_back();
        if (merged) w.push_back(*merged);
    } else {
        w.push_back(s);
    }
}

struct Reduced {
    enum class Shape { Identity, Elliptic, Cutting } shape = Shape::Identity;
    Syllable elliptic = Syllable::Y;
    std::string letters;  // canonical rotation of the cutting word
    GroupElement conj;    // g = conj * core * conj^-1
};

Reduced reduce(const GroupElement& g) {
    auto nf = normal_form(g);
    std::deque<Syllable> w(nf.begin(), nf.end());
    Reduced out;
    const auto x2 = GroupElement::X() * GroupElement::X();
    auto value = [&](Syllable s) -> const GroupElement& {
        return s == Syllable::X ? GroupElement::X() : s == Syllable::X2 ? x2 : GroupElement::Y();
    };
    // s w' t  ->  w' (t s), conjugating by s
    while (w.size() >= 2 && same_factor(w.front(), w.back())) {
        Syllable s = w.front();
        w.pop_front();
        out.conj = out.conj * value(s);
        auto merged = combine(w.back(), s);
        w.pop_back();
        if (merged) w.push_back(*merged);
    }
    if (w.empty()) return out;
    if (w.size() == 1) {
        out.shape = Reduced::Shape::Elliptic;
        out.elliptic = w.front();
        return out;
    }
    if (w.front() == Syllable::Y) {
        out.conj = out.conj * GroupElement::Y();
        w.pop_front();
        w.push_back(Syllable::Y);
    }
    std::string letters;
    letters.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2) letters += w[i] == Syllable::X ? 'L' : 'R';
    CyclicDiagram diagram(letters);
    auto r = diagram.canonical_offset();
    out.conj = out.conj * evaluate_lr(std::string_view(letters).substr(0, r));
    out.shape = Reduced::Shape::Cutting;
    out.letters = diagram.rotated(static_cast<std::ptrdiff_t>(r)).letters();
    return out;
}

}  // namespace

SyllableWord normal_form(const GroupElement& g) {
    auto word = peel(g);
    Integer total = 0;
    for (const auto& p : word) total += 2 * abs(p.exponent);
    if (total > max_normal_form_length) throw BudgetError("normal form exceeds " + std::to_string(max_normal_form_length) + " syllables");
    SyllableWord out;
    for (const auto& p : word) {
        const bool positive = p.exponent > 0;
        Syllable first, second;
        if (p.letter == 'L') {
            first = positive ? Syllable::X : Syllable::Y;
            second = positive ? Syllable::Y : Syllable::X2;
        } else {
            first = positive ? Syllable::X2 : Syllable::Y;
            second = positive ? Syllable::Y : Syllable::X;
        }
        auto count = static_cast<std::size_t>(abs(p.exponent));
        for (std::size_t k = 0; k < count; ++k) {
            push_reduced(out, first);
            push_reduced(out, second);
        }
    }
    return out;
}

// ------------------------------------------------------- classification

std::string to_string(ConjugacyClass::Kind k) {
    switch (k) {
        case ConjugacyClass::Kind::Identity: return "Identity";
        case ConjugacyClass::Kind::EllipticOrder2: return "EllipticOrder2";
        case ConjugacyClass::Kind::EllipticOrder3Pos: return "EllipticOrder3Pos";
        case ConjugacyClass::Kind::EllipticOrder3Neg: return "EllipticOrder3Neg";
        case ConjugacyClass::Kind::Parabolic: return "Parabolic";
        case ConjugacyClass::Kind::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

std::string to_string(const ConjugacyClass& c) {
    switch (c.kind) {
        case ConjugacyClass::Kind::Parabolic: return "Parabolic(" + std::to_string(c.parabolic_index) + ")";
        case ConjugacyClass::Kind::Hyperbolic: return "Hyperbolic(" + c.diagram->letters() + ")";
        default: return to_string(c.kind);
    }
}

ConjugacyClass classify(const GroupElement& g) {
    auto r = reduce(g);
    ConjugacyClass out;
    switch (r.shape) {
        case Reduced::Shape::Identity: break;
        case Reduced::Shape::Elliptic:
            out.kind = r.elliptic == Syllable::Y ? ConjugacyClass::Kind::EllipticOrder2
                       : r.elliptic == Syllable::X ? ConjugacyClass::Kind::EllipticOrder3Pos
                                                   : ConjugacyClass::Kind::EllipticOrder3Neg;
            break;
        case Reduced::Shape::Cutting: {
            auto m = static_cast<long long>(r.letters.size());
            if (r.letters.find('R') == std::string::npos) {
                out.kind = ConjugacyClass::Kind::Parabolic;
                out.parabolic_index = -m;
            } else if (r.letters.find('L') == std::string::npos) {
                out.kind = ConjugacyClass::Kind::Parabolic;
                out.parabolic_index = m;
            } else {
                out.kind = ConjugacyClass::Kind::Hyperbolic;
                out.diagram = CyclicDiagram(r.letters);
            }
            break;
        }
    }
    return out;
}

ConjugatorToRep conjugator_to_rep(const GroupElement& g) {
    auto r = reduce(g);
    switch (r.shape) {
        case Reduced::Shape::Identity: return {GroupElement{}, GroupElement{}};
        case Reduced::Shape::Elliptic: return {r.conj.inverse(), evaluate(SyllableWord{r.elliptic})};
        case Reduced::Shape::Cutting: break;
    }
    if (r.letters.find('R') == std::string::npos) {
        // L^m = Y^-1 R^-m Y
        auto m = static_cast<long long>(r.letters.size());
        return {GroupElement::Y() * r.conj.inverse(), GroupElement::R().pow(-m)};
    }
    return {r.conj.inverse(), evaluate_lr(r.letters)};
}

std::optional<CuttingPresentation> cutting_presentation(const GroupElement& g) {
    auto r = reduce(g);
    if (r.shape != Reduced::Shape::Cutting) return std::nullopt;
    return CuttingPresentation{CyclicDiagram(r.letters), r.conj};
}

// ---------------------------------------------------------------- twists

TwistVector TwistVector::make(Integer p, Integer q) {
    if (boost::multiprecision::gcd(abs(p), abs(q)) != 1) throw DomainError("twist vector must be primitive");
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    TwistVector v;
    v.p = std::move(p);
    v.q = std::move(q);
    return v;
}

std::string to_string(const TwistVector& v) { return "(" + v.p.str() + "," + v.q.str() + ")"; }

Integer wedge(const TwistVector& u, const TwistVector& v) { return u.p * v.q - u.q * v.p; }

Matrix2 dehn_twist_lift(const TwistVector& v) {
    return Matrix2{1 - v.p * v.q, -v.q * v.q, v.p * v.p, 1 + v.p * v.q};
}

GroupElement dehn_twist(const TwistVector& v) {
    auto checked = TwistVector::make(v.p, v.q);
    return GroupElement(dehn_twist_lift(checked));
}

std::optional<TwistVector> twist_vector(const GroupElement& g) {
    for (int sign : {1, -1}) {
        Matrix2 m = sign > 0 ? g.lift() : -g.lift();
        if (m.trace() != 2 || m.c < 0 || m.b > 0) continue;
        auto p = exact_sqrt(m.c);
        auto q = exact_sqrt(-m.b);
        if (!p || !q || (*p == 0 && *q == 0)) continue;
        if (boost::multiprecision::gcd(*p, *q) != 1) continue;
        // d - a = 2pq fixes the relative sign
        if (m.d - m.a < 0) *q = -*q;
        TwistVector v;
        v.p = *p;
        v.q = *q;
        if (dehn_twist_lift(v) != m) continue;
        return TwistVector::make(*p, *q);
    }
    return std::nullopt;
}

// --------------------------------------------------------- real structures

RealStructure::RealStructure(const Matrix2& m) : m_(sign_normalized(m)) {
    if (m_.det() != -1) throw DomainError("real structure must have determinant -1");
    auto sq = m_ * m_;
    if (sq != Matrix2{} && sq != -Matrix2{}) throw DomainError("real structure must be an involution");
}

const RealStructure& RealStructure::tau1() {
    static const RealStructure t(Matrix2{0, 1, 1, 0});
    return t;
}
const RealStructure& RealStructure::tau2() {
    static const RealStructure t(Matrix2{1, 0, 0, -1});
    return t;
}

GroupElement tau_hat(const RealStructure& tau, const GroupElement& g) {
    return GroupElement(tau.matrix() * g.inverse().lift() * tau.matrix());
}

RealStructure conjugate(const RealStructure& tau, const GroupElement& h) {
    return RealStructure(h.lift() * tau.matrix() * h.inverse().lift());
}

bool is_real_element(const GroupElement& g) {
    auto c = classify(g);
    if (c.kind != ConjugacyClass::Kind::Hyperbolic) return true;
    return !reflection_symmetries(*c.diagram).empty();
}

PrimitiveRoot primitive_root(const GroupElement& g) {
    auto r = reduce(g);
    if (r.shape != Reduced::Shape::Cutting) throw DomainError("primitive root needs a parabolic or hyperbolic element");
    CyclicDiagram w(r.letters);
    auto p = w.period();
    auto root = r.conj * evaluate_lr(std::string_view(r.letters).substr(0, p)) * r.conj.inverse();
    return {root, static_cast<long long>(r.letters.size() / p)};
}

int abelian_degree(const GroupElement& g) {
    Integer total = 0;
    for (const auto& p : peel(g)) total += (p.letter == 'L' ? 5 : 1) * p.exponent;
    Integer r = total % 6;
    if (r < 0) r += 6;
    return static_cast<int>(r);
}

}  // namespace modgroup
