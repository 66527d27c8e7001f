#pragma once

#include "modgroup/cyclic_diagram.hpp"
#include "modgroup/integer.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modgroup {

// Integer 2x2 matrix acting on row vectors from the right. No determinant
// constraint; used for SL lifts and for the determinant -1 real structures.
struct Matrix2 {
    Integer a{1}, b{0}, c{0}, d{1};

    Integer det() const { return a * d - b * c; }
    Integer trace() const { return a + d; }
    Matrix2 operator-() const { return {-a, -b, -c, -d}; }
    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

// Flip the sign so that the first nonzero entry in the order a, b, c, d is positive.
Matrix2 sign_normalized(Matrix2 m);
std::string to_string(const Matrix2& m);  // [[a,b],[c,d]]

// An element of PSL(2,Z) stored as its sign-normalized lift.
class GroupElement {
public:
    GroupElement() = default;  // identity
    // Throws DomainError unless the determinant is 1.
    explicit GroupElement(const Matrix2& lift);
    GroupElement(Integer a, Integer b, Integer c, Integer d) : GroupElement(Matrix2{std::move(a), std::move(b), std::move(c), std::move(d)}) {}

    static const GroupElement& L();
    static const GroupElement& R();
    static const GroupElement& X();
    static const GroupElement& Y();

    const Matrix2& lift() const { return m_; }
    const Integer& a() const { return m_.a; }
    const Integer& b() const { return m_.b; }
    const Integer& c() const { return m_.c; }
    const Integer& d() const { return m_.d; }
    // Trace of the normalized lift; the class only determines it up to sign.
    Integer trace() const { return m_.trace(); }
    bool is_identity() const;

    GroupElement inverse() const;
    GroupElement pow(long long n) const;
    // x.conjugated_by(h) == h^-1 x h
    GroupElement conjugated_by(const GroupElement& h) const;

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend bool operator<(const GroupElement& x, const GroupElement& y);

private:
    Matrix2 m_{};
};

std::string to_string(const GroupElement& g);
std::ostream& operator<<(std::ostream& os, const GroupElement& g);

// Token of the word grammar: a generator with an integer exponent.
struct LetterPower {
    char letter = 'L';  // one of L R X Y
    long long exponent = 1;
};
using LetterWord = std::vector<LetterPower>;

// Tokens `L R X Y`, each optionally followed by `^<int>`, whitespace
// separated or juxtaposed. Throws ParseError.
LetterWord parse_word(std::string_view text);
// `[[a,b],[c,d]]`. Throws ParseError, or DomainError when det != 1.
GroupElement parse_matrix(std::string_view text);
// Either of the above, decided by a leading '['.
GroupElement parse_element(std::string_view text);

GroupElement evaluate(const LetterWord& word);
GroupElement evaluate(std::string_view text);
// Product of a plain string over {L, R}; no exponents, no validation beyond the alphabet.
GroupElement evaluate_lr(std::string_view letters);

enum class Syllable : std::uint8_t { X, X2, Y };
using SyllableWord = std::vector<Syllable>;

GroupElement evaluate(const SyllableWord& word);
std::string to_string(const SyllableWord& word);

// The unique reduced word in Z3 * Z2 for g. Throws BudgetError when it
// would exceed max_normal_form_length syllables.
SyllableWord normal_form(const GroupElement& g);
inline constexpr std::size_t max_normal_form_length = std::size_t{1} << 24;

struct ConjugacyClass {
    enum class Kind { Identity, EllipticOrder2, EllipticOrder3Pos, EllipticOrder3Neg, Parabolic, Hyperbolic };
    Kind kind = Kind::Identity;
    long long parabolic_index = 0;          // nonzero iff Parabolic; g ~ R^index
    std::optional<CyclicDiagram> diagram;   // canonical cutting word, Hyperbolic only

    friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

std::string to_string(ConjugacyClass::Kind k);
std::string to_string(const ConjugacyClass& c);

ConjugacyClass classify(const GroupElement& g);

// g = h^-1 * rep * h with rep the canonical class representative:
// identity, Y, X, X^2, R^n, or the product of the canonical cutting word.
struct ConjugatorToRep {
    GroupElement h;
    GroupElement rep;
};
ConjugatorToRep conjugator_to_rep(const GroupElement& g);

// For parabolic and hyperbolic g: the canonical cutting word w (least
// rotation; an all-L or all-R word for parabolics) and a conjugator with
// g = conj * evaluate_lr(w) * conj^-1.
struct CuttingPresentation {
    CyclicDiagram word;
    GroupElement conj;
};
std::optional<CuttingPresentation> cutting_presentation(const GroupElement& g);

struct TwistVector {
    Integer p{1}, q{0};

    // Validates primitivity and fixes the sign (p > 0, or p == 0 and q > 0).
    static TwistVector make(Integer p, Integer q);
    friend bool operator==(const TwistVector&, const TwistVector&) = default;
};
std::string to_string(const TwistVector& v);
// Symplectic pairing p1 q2 - q1 p2.
Integer wedge(const TwistVector& u, const TwistVector& v);

// [[1 - pq, -q^2], [p^2, 1 + pq]]
Matrix2 dehn_twist_lift(const TwistVector& v);
GroupElement dehn_twist(const TwistVector& v);
// Present iff g is conjugate to R.
std::optional<TwistVector> twist_vector(const GroupElement& g);

// Determinant -1 involution of PGL(2,Z), sign-normalized.
class RealStructure {
public:
    // Throws DomainError unless det == -1 and the square is +-identity.
    explicit RealStructure(const Matrix2& m);
    static const RealStructure& tau1();  // [[0,1],[1,0]]
    static const RealStructure& tau2();  // [[1,0],[0,-1]]
    const Matrix2& matrix() const { return m_; }
    friend bool operator==(const RealStructure&, const RealStructure&) = default;

private:
    Matrix2 m_;
};

// tau * g^-1 * tau
GroupElement tau_hat(const RealStructure& tau, const GroupElement& g);
// The real structure h tau h^-1.
RealStructure conjugate(const RealStructure& tau, const GroupElement& h);

bool is_real_element(const GroupElement& g);

struct PrimitiveRoot {
    GroupElement root;
    long long power = 1;
};
// g = root^power with power maximal. Throws DomainError for elliptic or identity g.
PrimitiveRoot primitive_root(const GroupElement& g);

// Abelianization Γ -> Z/6 with deg R = 1 (so deg X = 2, deg Y = 3, deg L = 5).
int abelian_degree(const GroupElement& g);

}  // namespace modgroup
