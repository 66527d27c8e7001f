#include "modgroup/cyclic_diagram.hpp"

#include "modgroup/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace modgroup {

namespace {

char flip(char c) { return c == 'L' ? 'R' : 'L'; }

std::size_t mod(std::ptrdiff_t i, std::size_t m) {
    auto r = i % static_cast<std::ptrdiff_t>(m);
    return static_cast<std::size_t>(r < 0 ? r + static_cast<std::ptrdiff_t>(m) : r);
}

std::string repeat(std::string_view s, int times) {
    std::string out;
    for (int i = 0; i < times; ++i) out += s;
    return out;
}

}  // namespace

CyclicDiagram::CyclicDiagram(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw DomainError("cyclic diagram must be nonempty");
    for (char c : letters_)
        if (c != 'L' && c != 'R') throw DomainError("cyclic diagram letters must be L or R");
}

char CyclicDiagram::at(std::ptrdiff_t i) const { return letters_[mod(i, letters_.size())]; }

CyclicDiagram CyclicDiagram::rotated(std::ptrdiff_t k) const {
    auto r = mod(k, letters_.size());
    return CyclicDiagram(letters_.substr(r) + letters_.substr(0, r));
}

std::size_t CyclicDiagram::canonical_offset() const { return least_rotation(letters_) % period(); }

std::size_t CyclicDiagram::period() const {
    // failure function of the word; the period divides the length only if
    // the border allows it
    const auto n = letters_.size();
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && letters_[i] != letters_[k]) k = fail[k];
        if (letters_[i] == letters_[k]) ++k;
        fail[i + 1] = k;
    }
    auto p = n - fail[n];
    return n % p == 0 ? p : n;
}

bool operator==(const CyclicDiagram& x, const CyclicDiagram& y) {
    return x.size() == y.size() && x.canonical().letters() == y.canonical().letters();
}

std::size_t least_rotation(std::string_view s) {
    const auto n = s.size();
    if (n == 0) return 0;
    std::string ss(s);
    ss += s;
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::ptrdiff_t k = 0;
    for (std::ptrdiff_t j = 1; j < static_cast<std::ptrdiff_t>(2 * n); ++j) {
        char sj = ss[static_cast<std::size_t>(j)];
        auto i = f[static_cast<std::size_t>(j - k - 1)];
        while (i != -1 && sj != ss[static_cast<std::size_t>(k + i + 1)]) {
            if (sj < ss[static_cast<std::size_t>(k + i + 1)]) k = j - i - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (sj != ss[static_cast<std::size_t>(k + i + 1)]) {
            if (sj < ss[static_cast<std::size_t>(k)]) k = j;
            f[static_cast<std::size_t>(j - k)] = -1;
        } else {
            f[static_cast<std::size_t>(j - k)] = i + 1;
        }
    }
    return static_cast<std::size_t>(k) % n;
}

std::string transpose(std::string_view word) {
    std::string out(word.rbegin(), word.rend());
    for (auto& c : out) c = flip(c);
    return out;
}

bool is_palindrome(std::string_view word) { return std::equal(word.begin(), word.end(), word.rbegin()); }

std::vector<ParaSymmetry> para_symmetries(const CyclicDiagram& d) {
    std::vector<ParaSymmetry> out;
    const auto m = static_cast<int>(d.size());
    if (m % 2 != 0 || m < 4) return out;
    for (int c = 1; c < m; c += 2) {
        const int j0 = (c - 1) / 2;
        const int j1 = j0 + m / 2;
        if (d.at(j0) != 'L' || d.at(j0 + 1) != 'L' || d.at(j1) != 'L' || d.at(j1 + 1) != 'L') continue;
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
            if (j == j0 || j == j0 + 1 || j == j1 || j == (j1 + 1) % m) continue;
            ok = d.at(c - j) == flip(d.at(j));
        }
        if (ok) out.push_back({c, j0});
    }
    return out;
}

std::vector<int> reflection_symmetries(const CyclicDiagram& d) {
    std::vector<int> out;
    const auto m = static_cast<int>(d.size());
    for (int c = 0; c < m; ++c) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = d.at(c - i) == d.at(i);
        if (ok) out.push_back(c);
    }
    return out;
}

std::string extract_A(const CyclicDiagram& d, const ParaSymmetry& s) {
    auto all = para_symmetries(d);
    if (std::find(all.begin(), all.end(), s) == all.end())
        throw DomainError("axis is not a para-symmetry of the diagram");
    const auto w = d.rotated(s.anchor).letters();
    return w.substr(2, (w.size() - 4) / 2);
}

WForm WForm::make(int numerator, int denominator, std::string insert) {
    if (denominator < 3 || denominator % 2 == 0) throw DomainError("W-form denominator must be odd and >= 3");
    if (numerator < 1 || numerator >= denominator || numerator % 2 == 0)
        throw DomainError("W-form numerator must be odd with 1 <= m < n");
    if (std::gcd(numerator, denominator) != 1) throw DomainError("W-form parameters must be coprime");
    for (char c : insert)
        if (c != 'L' && c != 'R') throw DomainError("W-form insert must be a word over L, R");
    return WForm{numerator, denominator, std::move(insert)};
}

CyclicDiagram build_V(int m) {
    if (m < 0) throw DomainError("V-form index must be nonnegative");
    auto half = "LL" + repeat("LR", m);
    return CyclicDiagram(half + half);
}

namespace {

std::string farey_base(int n) {
    const int k = (n - 1) / 2;
    auto half = "l" + repeat("lr", k);
    return half + half;
}

}  // namespace

CyclicDiagram build_W(const WForm& f) {
    auto checked = WForm::make(f.numerator, f.denominator, f.insert);
    const int n = checked.denominator;
    const auto base = farey_base(n);
    const auto bt = transpose(checked.insert);
    std::string out;
    for (int i = 0; i < 2 * n; ++i) {
        char letter = base[static_cast<std::size_t>((static_cast<long long>(checked.numerator) * i) % (2 * n))];
        out += letter == 'l' ? "LL" : "RR";
        out += i % 2 == 0 ? checked.insert : bt;
    }
    return CyclicDiagram(out);
}

namespace {

std::optional<WForm> match_W(const CyclicDiagram& d) {
    const auto canon = d.canonical();
    const int len = static_cast<int>(canon.size());
    for (int n = 3; 4 * n <= len; n += 2) {
        if ((len - 4 * n) % (2 * n) != 0) continue;
        const int b = (len - 4 * n) / (2 * n);
        const int block = 2 + b;
        const auto base = farey_base(n);
        for (int r = 0; r < len; ++r) {
            const auto w = canon.rotated(r).letters();
            std::string pattern;
            std::string insert = w.substr(2, static_cast<std::size_t>(b));
            const auto insert_t = transpose(insert);
            bool ok = true;
            for (int i = 0; i < 2 * n && ok; ++i) {
                const auto pos = static_cast<std::size_t>(i * block);
                if (w[pos] != w[pos + 1]) {
                    ok = false;
                    break;
                }
                pattern += w[pos] == 'L' ? 'l' : 'r';
                ok = w.compare(pos + 2, static_cast<std::size_t>(b), i % 2 == 0 ? insert : insert_t) == 0;
            }
            if (!ok) continue;
            for (int m = 1; m < n; m += 2) {
                if (std::gcd(m, n) != 1) continue;
                bool same = true;
                for (int i = 0; i < 2 * n && same; ++i)
                    same = pattern[static_cast<std::size_t>(i)] == base[static_cast<std::size_t>((m * i) % (2 * n))];
                if (same) return WForm{m, n, insert};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Recognition recognize(const CyclicDiagram& d) {
    const int len = static_cast<int>(d.size());
    std::optional<VForm> v;
    if (len >= 4 && (len - 4) % 4 == 0 && build_V((len - 4) / 4) == d) v = VForm{(len - 4) / 4};
    auto w = match_W(d);
    if (v && w) throw std::logic_error("diagram matches both V and W patterns: " + d.letters());
    if (v) return *v;
    if (w) return *w;
    if (para_symmetries(d).size() == 1) return OneAxis{};
    return NoAxis{};
}

std::string describe(const Recognition& r) {
    struct {
        std::string operator()(const VForm& v) const { return "V(" + std::to_string(v.m) + ")"; }
        std::string operator()(const WForm& w) const {
            return "W(" + std::to_string(w.numerator) + "/" + std::to_string(w.denominator) + "," + w.insert + ")";
        }
        std::string operator()(const OneAxis&) const { return "OneAxis"; }
        std::string operator()(const NoAxis&) const { return "NoAxis"; }
    } visitor;
    return std::visit(visitor, r);
}

bool is_even_word(std::string_view word) {
    std::size_t i = 0;
    while (i < word.size()) {
        auto j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if ((j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

std::vector<std::size_t> cyclic_runs(const CyclicDiagram& d) {
    const auto& w = d.letters();
    const auto m = w.size();
    std::size_t start = 0;
    while (start < m && w[start] == w[0]) ++start;
    if (start == m) return {m};
    // start is the first position after the leading run; runs begin there
    std::vector<std::size_t> runs;
    std::size_t len = 0;
    for (std::size_t k = 0; k < m; ++k) {
        auto i = (start + k) % m;
        if (k > 0 && w[i] != w[(i + m - 1) % m]) {
            runs.push_back(len);
            len = 0;
        }
        ++len;
    }
    runs.push_back(len);
    return runs;
}

bool is_even_word(const CyclicDiagram& d) {
    auto runs = cyclic_runs(d);
    return std::all_of(runs.begin(), runs.end(), [](std::size_t r) { return r % 2 == 0; });
}

}  // namespace modgroup
