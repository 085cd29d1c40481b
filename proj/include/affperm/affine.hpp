#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace affperm {

/// An element of the affine symmetric group of rank e, i.e. a bijection w of Z
/// with w(x + e) = w(x) + e and w(1) + ... + w(e) = e(e+1)/2, stored by its
/// window [w(1), ..., w(e)].
///
/// Composition is ordinary function composition: compose(u, v)(x) = u(v(x)),
/// and the word s_{i1} ... s_{in} denotes s_{i1} ∘ ... ∘ s_{in}, so the
/// rightmost letter acts first.
class AffinePermutation {
public:
    // Validates; see validate_window.
    AffinePermutation(int e, std::vector<Int> window);

    static AffinePermutation identity(int e) {
        check_modulus(e);
        std::vector<Int> w(static_cast<std::size_t>(e));
        for (int j = 0; j < e; ++j) w[static_cast<std::size_t>(j)] = j + 1;
        return AffinePermutation(e, std::move(w), unchecked{});
    }

    // s_i swaps i + ke and i + 1 + ke.
    static AffinePermutation generator(int e, int i) {
        check_modulus(e);
        if (i < 0 || i >= e) throw DomainError("generator index " + std::to_string(i) + " out of range");
        auto w = identity(e).window_;
        if (i == 0) {
            w.front() = 0;
            w.back() = e + 1;
        } else {
            std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
        }
        return AffinePermutation(e, std::move(w), unchecked{});
    }

    int modulus() const noexcept { return e_; }
    const std::vector<Int>& window() const noexcept { return window_; }

    Int operator()(Int x) const noexcept {
        const Int k = floor_div(x - 1, e_);
        return window_[static_cast<std::size_t>(x - 1 - k * e_)] + k * e_;
    }

    bool is_identity() const noexcept {
        for (int j = 0; j < e_; ++j)
            if (window_[static_cast<std::size_t>(j)] != j + 1) return false;
        return true;
    }

    friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
    friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

private:
    struct unchecked {};
    AffinePermutation(int e, std::vector<Int> window, unchecked) : e_(e), window_(std::move(window)) {}

    friend AffinePermutation make_unchecked(int e, std::vector<Int> window);

    int e_;
    std::vector<Int> window_;
};

inline AffinePermutation make_unchecked(int e, std::vector<Int> window) {
    return AffinePermutation(e, std::move(window), AffinePermutation::unchecked{});
}

// Throws ValidationError naming the first violated condition.
inline AffinePermutation validate_window(int e, const std::vector<Int>& entries) {
    check_modulus(e);
    if (entries.size() != static_cast<std::size_t>(e))
        throw ValidationError(WindowViolation::wrong_length,
                              "window has " + std::to_string(entries.size()) + " entries, expected " +
                                  std::to_string(e));
    Int sum = 0;
    for (Int x : entries) sum += x;
    const Int expected = static_cast<Int>(e) * (e + 1) / 2;
    if (sum != expected)
        throw ValidationError(WindowViolation::sum_mismatch,
                              "window sum is " + std::to_string(sum) + ", expected " + std::to_string(expected));
    std::vector<bool> seen(static_cast<std::size_t>(e), false);
    for (Int x : entries) {
        auto r = static_cast<std::size_t>(mod(x, e));
        if (seen[r])
            throw ValidationError(WindowViolation::repeated_residue,
                                  "window repeats residue class " + std::to_string(r) + " mod " + std::to_string(e));
        seen[r] = true;
    }
    return make_unchecked(e, entries);
}

inline AffinePermutation::AffinePermutation(int e, std::vector<Int> window)
    : AffinePermutation(validate_window(e, window)) {}

inline Int apply(const AffinePermutation& w, Int x) { return w(x); }

inline AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v) {
    if (u.modulus() != v.modulus()) throw ModulusMismatch(u.modulus(), v.modulus());
    std::vector<Int> w(static_cast<std::size_t>(u.modulus()));
    for (int j = 1; j <= u.modulus(); ++j) w[static_cast<std::size_t>(j - 1)] = u(v(j));
    return make_unchecked(u.modulus(), std::move(w));
}

inline AffinePermutation inverse(const AffinePermutation& w) {
    const int e = w.modulus();
    std::vector<Int> inv(static_cast<std::size_t>(e));
    for (int j = 1; j <= e; ++j) {
        // w(j) = r + k e with r in 1..e, hence w^{-1}(r) = j - k e.
        const Int x = w(j);
        const Int k = floor_div(x - 1, e);
        inv[static_cast<std::size_t>(x - 1 - k * e)] = j - k * e;
    }
    return make_unchecked(e, std::move(inv));
}

// w s_i
inline AffinePermutation times_generator(const AffinePermutation& w, int i) {
    return compose(w, AffinePermutation::generator(w.modulus(), i));
}

// s_i w
inline AffinePermutation generator_times(int i, const AffinePermutation& w) {
    return compose(AffinePermutation::generator(w.modulus(), i), w);
}

/// A sequence of generator indices s_{i1} s_{i2} ... s_{in}.
struct CoxeterWord {
    std::vector<int> letters;

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;
};

inline AffinePermutation word_to_permutation(int e, const CoxeterWord& word) {
    check_modulus(e);
    for (int i : word.letters)
        if (i < 0 || i >= e)
            throw DomainError("letter " + std::to_string(i) + " out of range for e=" + std::to_string(e));
    std::vector<Int> w(static_cast<std::size_t>(e));
    for (int j = 1; j <= e; ++j) {
        Int x = j;
        for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
            const Int r = mod(x, e);
            if (r == *it) ++x;
            else if (r == (*it + 1) % e) --x;
        }
        w[static_cast<std::size_t>(j - 1)] = x;
    }
    return make_unchecked(e, std::move(w));
}

// Number of affine inversions: sum over i<j of |floor((w(j) - w(i)) / e)|.
inline Int length(const AffinePermutation& w) {
    const auto& win = w.window();
    const Int e = w.modulus();
    Int total = 0;
    for (std::size_t i = 0; i < win.size(); ++i)
        for (std::size_t j = i + 1; j < win.size(); ++j) {
            const Int q = floor_div(win[j] - win[i], e);
            total += q < 0 ? -q : q;
        }
    return total;
}

// l(w s_i) < l(w)  <=>  w(i) > w(i+1).
inline bool right_descent(const AffinePermutation& w, int i) {
    if (i < 0 || i >= w.modulus()) throw DomainError("generator index out of range");
    return w(i) > w(i + 1);
}

// l(s_i w) < l(w)  <=>  w^{-1}(i) > w^{-1}(i+1).
inline bool left_descent(const AffinePermutation& w, int i) { return right_descent(inverse(w), i); }

inline void check_charge(int e, Int c) {
    if (c < 0 || c >= e)
        throw DomainError("charge " + std::to_string(c) + " out of range [0, " + std::to_string(e - 1) + "]");
}

inline bool is_grassmannian(const AffinePermutation& w, Int c) {
    check_charge(w.modulus(), c);
    for (Int j = c + 1; j < c + w.modulus(); ++j)
        if (w(j) > w(j + 1)) return false;
    return true;
}

/// Minimal length representative of w modulo the parabolic subgroup that
/// omits s_c: the values w(c+1), ..., w(c+e) sorted into increasing order.
inline AffinePermutation grassmannian_project(const AffinePermutation& w, Int c) {
    const int e = w.modulus();
    check_charge(e, c);
    std::vector<Int> vals;
    for (Int j = c + 1; j <= c + e; ++j) vals.push_back(w(j));
    std::sort(vals.begin(), vals.end());
    std::vector<Int> win(static_cast<std::size_t>(e));
    for (Int k = 0; k < e; ++k) {
        const Int pos = c + 1 + k;  // in 1..2e-1
        if (pos <= e) win[static_cast<std::size_t>(pos - 1)] = vals[static_cast<std::size_t>(k)];
        else win[static_cast<std::size_t>(pos - e - 1)] = vals[static_cast<std::size_t>(k)] - e;
    }
    return make_unchecked(e, std::move(win));
}

/// One reduced word, obtained by repeatedly stripping the smallest right
/// descent.
inline CoxeterWord reduced_word(const AffinePermutation& w) {
    CoxeterWord word;
    AffinePermutation cur = w;
    while (!cur.is_identity()) {
        int i = 0;
        while (!right_descent(cur, i)) ++i;
        word.letters.push_back(i);
        cur = times_generator(cur, i);
    }
    std::reverse(word.letters.begin(), word.letters.end());
    return word;
}

inline std::string to_string(const AffinePermutation& w) {
    std::string s = "[";
    for (std::size_t k = 0; k < w.window().size(); ++k) {
        if (k) s += ',';
        s += std::to_string(w.window()[k]);
    }
    return s + "]";
}

// "1.2.0"; the empty word prints as "id".
inline std::string to_string(const CoxeterWord& word) {
    if (word.empty()) return "id";
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) s += '.';
        s += std::to_string(word.letters[k]);
    }
    return s;
}

// "[a1, ..., ae]"; brackets are mandatory.
inline AffinePermutation parse_window(std::string_view text, int e) {
    return validate_window(e, detail::parse_int_list(text, '[', ']'));
}

/// Accepts "s1 s2 s0", "1.2.0", "1 2 0", and "id" or "" for the empty word.
inline CoxeterWord parse_word(std::string_view text, int e) {
    check_modulus(e);
    CoxeterWord word;
    std::size_t pos = 0;
    detail::skip_ws(text, pos);
    if (text.substr(pos) == "id") return word;
    bool need_separator = false;
    while (pos < text.size()) {
        const char ch = text[pos];
        if (ch == ' ' || ch == '\t' || ch == '.' || ch == ',') {
            ++pos;
            need_separator = false;
            continue;
        }
        if (need_separator) throw ParseError(pos, "expected a separator between letters");
        const std::size_t start = pos;
        if (ch == 's') ++pos;
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
            throw ParseError(pos, "expected a generator index");
        Int i = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') i = i * 10 + (text[pos++] - '0');
        if (i >= e) throw ParseError(start, "generator index " + std::to_string(i) + " out of range");
        word.letters.push_back(static_cast<int>(i));
        need_separator = true;
    }
    return word;
}

} // namespace affperm
