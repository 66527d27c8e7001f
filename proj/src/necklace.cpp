#include "modgroup/necklace.hpp"

#include "modgroup/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace modgroup {

char to_char(Stone s) {
    switch (s) {
        case Stone::Circle: return 'O';
        case Stone::Square: return 'S';
        case Stone::Right: return '>';
        case Stone::Left: return '<';
    }
    return '?';
}

Stone dual(Stone s) {
    switch (s) {
        case Stone::Circle: return Stone::Square;
        case Stone::Square: return Stone::Circle;
        case Stone::Right: return Stone::Left;
        case Stone::Left: return Stone::Right;
    }
    return s;
}

Stone inverse(Stone s) {
    switch (s) {
        case Stone::Right: return Stone::Left;
        case Stone::Left: return Stone::Right;
        default: return s;
    }
}

const GroupElement& stone_monodromy(Stone s) {
    static const std::array<GroupElement, 4> table = {
        evaluate("Y X^2 Y X^2 Y"),
        evaluate("X^2 Y X^2"),
        evaluate("X Y"),
        evaluate("Y X"),
    };
    return table[static_cast<std::size_t>(s)];
}

Necklace::Necklace(std::vector<Stone> stones) : stones_(std::move(stones)) {
    if (stones_.empty()) throw DomainError("necklace diagrams are nonempty");
}

Necklace parse_necklace(std::string_view text) {
    std::vector<Stone> out;
    for (std::size_t i = 0; i < text.size();) {
        if (text.substr(i, 3) == "○") {
            out.push_back(Stone::Circle);
            i += 3;
            continue;
        }
        if (text.substr(i, 3) == "□") {
            out.push_back(Stone::Square);
            i += 3;
            continue;
        }
        switch (text[i]) {
            case 'O': out.push_back(Stone::Circle); break;
            case 'S': out.push_back(Stone::Square); break;
            case '>': out.push_back(Stone::Right); break;
            case '<': out.push_back(Stone::Left); break;
            default: throw ParseError(std::string("unknown stone '") + text[i] + "'");
        }
        ++i;
    }
    if (out.empty()) throw ParseError("empty stone word");
    return Necklace(std::move(out));
}

std::string to_string(const Necklace& n) {
    std::string out;
    for (auto s : n.stones()) out += to_char(s);
    return out;
}

GroupElement monodromy(const Necklace& n) {
    GroupElement out;
    for (auto s : n.stones()) out = out * stone_monodromy(s);
    return out;
}

GroupElement twisted_monodromy(const Necklace& n) { return monodromy(n) * GroupElement::Y(); }

namespace {

std::vector<Stone> rotate_left(std::vector<Stone> s, int k) {
    const int n = static_cast<int>(s.size());
    k = ((k % n) + n) % n;
    std::rotate(s.begin(), s.begin() + k, s.end());
    return s;
}

}  // namespace

Necklace transform(const Necklace& n, Transform t) {
    auto s = n.stones();
    switch (t.kind) {
        case Transform::Kind::Dual:
            for (auto& x : s) x = dual(x);
            return Necklace(std::move(s));
        case Transform::Kind::Inverse:
            std::reverse(s.begin(), s.end());
            for (auto& x : s) x = inverse(x);
            return Necklace(std::move(s));
        case Transform::Kind::Shift: return Necklace(rotate_left(std::move(s), t.k));
        case Transform::Kind::TwistedShift: {
            const int steps = t.k;
            for (int i = 0; i < std::abs(steps); ++i) {
                if (steps > 0) {
                    auto first = dual(s.front());
                    s.erase(s.begin());
                    s.push_back(first);
                } else {
                    auto last = dual(s.back());
                    s.pop_back();
                    s.insert(s.begin(), last);
                }
            }
            return Necklace(std::move(s));
        }
    }
    return n;
}

NecklaceStats stats(const Necklace& n) {
    NecklaceStats out;
    for (auto s : n.stones()) {
        switch (s) {
            case Stone::Circle: ++out.circles; break;
            case Stone::Square: ++out.squares; break;
            case Stone::Right: ++out.rights; break;
            case Stone::Left: ++out.lefts; break;
        }
    }
    out.betti = 2 * (out.circles + out.squares) + 4;
    out.euler = 2 * (out.circles - out.squares);
    // endpoint types: 0 for a circle end, 1 for a cross end
    auto start = [](Stone s) { return s == Stone::Square || s == Stone::Right ? 1 : 0; };
    auto end = [](Stone s) { return s == Stone::Square || s == Stone::Left ? 1 : 0; };
    const auto size = n.size();
    for (std::size_t i = 0; i < size; ++i)
        if (end(n[i]) != start(n[(i + 1) % size])) ++out.essential;
    return out;
}

int necklace_k(const Necklace& n, int w) {
    if (w < 0 || w > 2) throw DomainError("w must be 0, 1 or 2");
    const auto total = static_cast<int>(n.size()) + w;
    if (total % 6 != 0) throw DomainError("length " + std::to_string(n.size()) + " is not 6k - " + std::to_string(w));
    return total / 6;
}

bool is_maximal(const Necklace& n, int w) {
    necklace_k(n, w);
    auto s = stats(n);
    return s.lefts + s.rights + w == 2;
}

bool passes_essential_obstruction(const Necklace& n, int w) {
    const int k = necklace_k(n, w);
    auto s = stats(n);
    return s.essential <= 2 * k && s.essential + s.lefts + s.rights <= 6 * k;
}

std::string to_string(Category c) {
    switch (c) {
        case Category::Oriented: return "oriented";
        case Category::NonOriented: return "nonoriented";
        case Category::FlatOriented: return "flat-oriented";
        case Category::FlatNonOriented: return "flat-nonoriented";
        case Category::TwistedOriented: return "twisted-oriented";
        case Category::TwistedNonOriented: return "twisted-nonoriented";
    }
    return "?";
}

std::optional<Category> parse_category(std::string_view text) {
    for (auto c : {Category::Oriented, Category::NonOriented, Category::FlatOriented, Category::FlatNonOriented,
                   Category::TwistedOriented, Category::TwistedNonOriented})
        if (to_string(c) == text) return c;
    return std::nullopt;
}

NecklaceClass canonicalize(const Necklace& n, Category category) {
    const bool with_inverse = category == Category::NonOriented || category == Category::FlatNonOriented ||
                              category == Category::TwistedNonOriented;
    const bool flat = category == Category::FlatOriented || category == Category::FlatNonOriented;
    const bool twisted = category == Category::TwistedOriented || category == Category::TwistedNonOriented;
    const int size = static_cast<int>(n.size());

    std::vector<Necklace> seeds{n};
    if (with_inverse) seeds.push_back(transform(n, {Transform::Kind::Inverse, 0}));
    if (flat) {
        const auto count = seeds.size();
        for (std::size_t i = 0; i < count; ++i) seeds.push_back(transform(seeds[i], {Transform::Kind::Dual, 0}));
    }
    Necklace best = n;
    for (const auto& seed : seeds) {
        if (twisted) {
            auto current = seed;
            for (int t = 0; t < 2 * size; ++t) {
                best = std::min(best, current);
                current = transform(current, {Transform::Kind::TwistedShift, 1});
            }
        } else {
            for (int t = 0; t < size; ++t) best = std::min(best, transform(seed, {Transform::Kind::Shift, t}));
        }
    }
    return {category, best};
}

std::vector<StrongClassLabel> pendants(const Necklace& n, int w) {
    auto g = monodromy(n);
    switch (w) {
        case 0:
            if (g.is_identity()) return {EmptyLabel{}};
            return {};
        case 1:
            if (twist_vector(g)) return {SingleTwistLabel{}};
            return {};
        case 2: {
            std::vector<StrongClassLabel> out;
            for (auto& c : canonical_2factorizations(g)) out.push_back(c.label);
            return out;
        }
        default: throw DomainError("w must be 0, 1 or 2");
    }
}

Factorization carry_pendant(const Necklace& n, const Factorization& f, bool inverted, int shift) {
    auto word = inverted ? transform(n, {Transform::Kind::Inverse, 0}) : n;
    auto pair = inverted ? tau_hat(RealStructure::tau1(), f) : f;
    std::vector<Stone> prefix(word.stones().begin(), word.stones().begin() + shift);
    auto p = prefix.empty() ? GroupElement{} : monodromy(Necklace(std::move(prefix)));
    return pair.conjugated_by(p);
}

unsigned long long enumeration_budget() {
    if (const char* env = std::getenv("MODGROUP_BUDGET")) {
        char* end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return value;
    }
    return default_enumeration_budget;
}

namespace {

struct Mat64 {
    std::int64_t a, b, c, d;
};

Mat64 operator*(const Mat64& x, const Mat64& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// SL lifts of the stone monodromies, in Stone order
constexpr std::array<Mat64, 4> stone64 = {{{2, 1, -1, 0}, {0, 1, -1, 2}, {1, 1, 0, 1}, {1, 0, -1, 1}}};

bool is_square(std::int64_t x, std::int64_t& root) {
    if (x < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    root = r;
    return r * r == x;
}

bool is_identity64(const Mat64& m) {
    return m.b == 0 && m.c == 0 && ((m.a == 1 && m.d == 1) || (m.a == -1 && m.d == -1));
}

bool is_twist64(const Mat64& m) {
    for (int sign : {1, -1}) {
        Mat64 s{sign * m.a, sign * m.b, sign * m.c, sign * m.d};
        if (s.a + s.d != 2 || s.c < 0 || s.b > 0) continue;
        std::int64_t p = 0, q = 0;
        if (!is_square(s.c, p) || !is_square(-s.b, q)) continue;
        if (std::gcd(p, q) == 1) return true;
    }
    return false;
}

bool passes_trace64(const Mat64& m) {
    std::int64_t r = 0;
    const auto t = m.a + m.d;
    return is_square(2 - t, r) || is_square(2 + t, r);
}

struct Codec {
    int n;
    std::uint64_t mask;

    explicit Codec(int length)
        : n(length), mask(length == 32 ? ~0ULL : (1ULL << (2 * length)) - 1) {}

    std::uint64_t rotate(std::uint64_t code, int t) const {
        if (t == 0) return code;
        return ((code << (2 * t)) | (code >> (2 * (n - t)))) & mask;
    }

    std::uint64_t inverse(std::uint64_t code) const {
        std::uint64_t out = 0;
        for (int i = 0; i < n; ++i) {
            auto s = code & 3ULL;
            if (s >= 2) s ^= 1ULL;
            out = (out << 2) | s;
            code >>= 2;
        }
        return out;
    }

    bool is_orbit_min(std::uint64_t code, bool with_inverse) const {
        for (int t = 1; t < n; ++t)
            if (rotate(code, t) < code) return false;
        if (!with_inverse) return true;
        auto inv = inverse(code);
        for (int t = 0; t < n; ++t)
            if (rotate(inv, t) < code) return false;
        return true;
    }

    Necklace decode(std::uint64_t code) const {
        std::vector<Stone> s(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            s[static_cast<std::size_t>(i)] = static_cast<Stone>(code & 3ULL);
            code >>= 2;
        }
        return Necklace(std::move(s));
    }
};

struct BlockResult {
    unsigned long long count = 0;
    std::vector<EnumeratedClass> classes;
};

class Enumerator {
public:
    Enumerator(int w, bool with_inverse, bool keep, int length)
        : w_(w), with_inverse_(with_inverse), keep_(keep), codec_(length) {}

    void run_block(std::uint64_t prefix, int prefix_length, BlockResult& out) const {
        Mat64 product{1, 0, 0, 1};
        for (int i = prefix_length - 1; i >= 0; --i) product = product * stone64[(prefix >> (2 * i)) & 3ULL];
        descend(prefix_length, prefix, product, out);
    }

private:
    void descend(int depth, std::uint64_t code, const Mat64& product, BlockResult& out) const {
        if (depth == codec_.n) {
            leaf(code, product, out);
            return;
        }
        for (std::uint64_t s = 0; s < 4; ++s) descend(depth + 1, (code << 2) | s, product * stone64[s], out);
    }

    void leaf(std::uint64_t code, const Mat64& m, BlockResult& out) const {
        switch (w_) {
            case 0:
                if (!is_identity64(m)) return;
                break;
            case 1:
                if (!is_twist64(m)) return;
                break;
            default:
                if (!passes_trace64(m)) return;
                break;
        }
        if (!codec_.is_orbit_min(code, with_inverse_)) return;
        if (w_ < 2) {
            ++out.count;
            if (keep_)
                out.classes.push_back(
                    {codec_.decode(code), w_ == 0 ? StrongClassLabel{EmptyLabel{}} : StrongClassLabel{SingleTwistLabel{}}});
            return;
        }
        pendant_orbits(code, GroupElement(Matrix2{m.a, m.b, m.c, m.d}), out);
    }

    // Orbits of the stabilizer of the word on its strong classes.
    void pendant_orbits(std::uint64_t code, const GroupElement& g, BlockResult& out) const {
        auto canon = canonical_2factorizations(g);
        if (canon.empty()) return;
        const auto diagram = codec_.decode(code);
        std::vector<std::size_t> parent(canon.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        auto join = [&](std::size_t x, std::size_t y) {
            x = find(x);
            y = find(y);
            if (x != y) parent[std::max(x, y)] = std::min(x, y);
        };
        auto act = [&](bool inverted, int shift) {
            for (std::size_t i = 0; i < canon.size(); ++i) {
                auto image = carry_pendant(diagram, canon[i].pair, inverted, shift);
                join(i, strong_class_index(image));
            }
        };
        if (canon.size() > 1) {
            for (int t = 1; t < codec_.n; ++t)
                if (codec_.rotate(code, t) == code) act(false, t);
            if (with_inverse_) {
                auto inv = codec_.inverse(code);
                for (int t = 0; t < codec_.n; ++t)
                    if (codec_.rotate(inv, t) == code) act(true, t);
            }
        }
        for (std::size_t i = 0; i < canon.size(); ++i) {
            if (find(i) != i) continue;
            ++out.count;
            if (keep_) out.classes.push_back({diagram, canon[i].label});
        }
    }

    int w_;
    bool with_inverse_;
    bool keep_;
    Codec codec_;
};

}  // namespace

EnumerationResult enumerate(int k, int w, Category category, const EnumerationOptions& options) {
    if (k < 1) throw DomainError("k must be positive");
    if (w < 0 || w > 2) throw DomainError("w must be 0, 1 or 2");
    if (category != Category::Oriented && category != Category::NonOriented)
        throw DomainError("enumeration supports the oriented and nonoriented categories");
    const int n = 6 * k - w;
    const auto budget = options.budget.value_or(enumeration_budget());
    // entries of a product of n stones stay below 3^n, safe in 64 bits for n <= 32
    if (n > 32 || (1ULL << (2 * n)) > budget)
        throw BudgetError("4^" + std::to_string(n) + " raw words exceed the budget of " + std::to_string(budget));

    const auto started = std::chrono::steady_clock::now();
    const int prefix_length = std::min(n, 6);
    const std::size_t blocks = std::size_t{1} << (2 * prefix_length);
    std::vector<BlockResult> results(blocks);
    Enumerator engine(w, category == Category::NonOriented, options.keep_classes, n);

    unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, blocks));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t b = next++; b < blocks; b = next++) engine.run_block(b, prefix_length, results[b]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = blocks;
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    EnumerationResult out;
    out.k = k;
    out.w = w;
    out.category = category;
    for (auto& r : results) {
        out.count += r.count;
        for (auto& c : r.classes) out.classes.push_back(std::move(c));
    }
    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

}  // namespace modgroup
