#include "thompson/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace thompson {

bool Word::is_finite_alphabet() const noexcept {
    return std::all_of(letters.begin(), letters.end(), [](const GenLetter& l) { return l.index <= 1; });
}

Word Word::inverse() const {
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverted());
    return out;
}

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

} // namespace

Word parse_word(std::string_view text) {
    Word w;
    std::size_t pos = 0;
    auto skip_blanks = [&] {
        while (pos < text.size() && is_blank(text[pos])) ++pos;
    };
    skip_blanks();
    while (pos < text.size()) {
        if (text[pos] != 'x') throw ParseError("expected 'x'", pos);
        ++pos;
        if (pos < text.size() && text[pos] == '-') throw ParseError("negative generator index", pos);
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("expected generator index", pos);
        }
        std::uint32_t index = 0;
        auto [iend, iec] = std::from_chars(text.data() + pos, text.data() + text.size(), index);
        if (iec != std::errc()) throw ParseError("generator index out of range", pos);
        pos = static_cast<std::size_t>(iend - text.data());

        long long exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            bool negative = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                negative = text[pos] == '-';
                ++pos;
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
                throw ParseError("expected exponent", pos);
            }
            long long magnitude = 0;
            auto [eend, eec] = std::from_chars(text.data() + pos, text.data() + text.size(), magnitude);
            if (eec != std::errc() || magnitude > 1'000'000) throw ParseError("exponent out of range", start);
            pos = static_cast<std::size_t>(eend - text.data());
            exponent = negative ? -magnitude : magnitude;
        }
        if (pos < text.size() && !is_blank(text[pos])) throw ParseError("expected space between terms", pos);
        for (long long k = 0; k < std::abs(exponent); ++k) w.letters.push_back({index, exponent < 0});
        skip_blanks();
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty()) out.push_back(' ');
        out += "x" + std::to_string(l.index);
        if (l.inverse) out += "^-1";
    }
    return out;
}

namespace {

bool strictly_increasing_positive(const std::vector<Term>& part) {
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (part[i].exponent == 0) return false;
        if (i > 0 && part[i - 1].index >= part[i].index) return false;
    }
    return true;
}

bool contains_index(const std::vector<Term>& part, std::uint32_t index) {
    return std::any_of(part.begin(), part.end(), [&](const Term& t) { return t.index == index; });
}

} // namespace

bool is_valid(const NormalForm& nf) {
    if (!strictly_increasing_positive(nf.positive) || !strictly_increasing_positive(nf.negative)) return false;
    for (const auto& t : nf.positive) {
        if (contains_index(nf.negative, t.index) && !contains_index(nf.positive, t.index + 1) &&
            !contains_index(nf.negative, t.index + 1)) {
            return false;
        }
    }
    return true;
}

void validate(const NormalForm& nf) {
    if (!is_valid(nf)) throw Error("malformed normal form '" + to_string(nf) + "'");
}

std::string to_string(const NormalForm& nf) {
    std::string out;
    auto emit = [&](const Term& t, bool negative) {
        if (!out.empty()) out.push_back(' ');
        out += "x" + std::to_string(t.index);
        if (negative) {
            out += "^-" + std::to_string(t.exponent);
        } else if (t.exponent != 1) {
            out += "^" + std::to_string(t.exponent);
        }
    };
    for (const auto& t : nf.positive) emit(t, false);
    for (auto it = nf.negative.rbegin(); it != nf.negative.rend(); ++it) emit(*it, true);
    return out;
}

Word to_word(const NormalForm& nf) {
    Word w;
    for (const auto& t : nf.positive) {
        for (std::uint32_t k = 0; k < t.exponent; ++k) w.letters.push_back({t.index, false});
    }
    for (auto it = nf.negative.rbegin(); it != nf.negative.rend(); ++it) {
        for (std::uint32_t k = 0; k < it->exponent; ++k) w.letters.push_back({it->index, true});
    }
    return w;
}

std::vector<std::uint32_t> exponent_vector(const std::vector<Term>& part) {
    std::vector<std::uint32_t> out;
    for (const auto& t : part) {
        if (out.size() <= t.index) out.resize(t.index + 1, 0);
        out[t.index] += t.exponent;
    }
    return out;
}

std::vector<Term> terms_from_exponents(const std::vector<std::uint32_t>& exponents) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > 0) out.push_back({static_cast<std::uint32_t>(i), exponents[i]});
    }
    return out;
}

// Tree construction from exponents works on the preorder code
//   1^{a_0} 0 1^{a_1} 0 ... 1^{a_{L-1}} 0
// where a_n counts carets whose leftmost leaf is n. `open` tracks pending
// subtrees; a chain that starts while open == 1 starts on the right side, so
// its top caret does not count toward the leaf's exponent.

std::size_t minimal_leaf_count(const std::vector<std::uint32_t>& exponents) {
    std::size_t last = exponents.size();
    while (last > 0 && exponents[last - 1] == 0) --last;
    std::size_t open = 1;
    std::size_t leaves = 0;
    for (std::size_t n = 0; n < last; ++n, ++leaves) {
        std::size_t chain = exponents[n] + (open == 1 ? 1 : 0);
        open = open + chain - 1;
    }
    // Remaining leaves carry exponent 0 and close pending subtrees.
    return leaves + open;
}

BinaryTree tree_from_exponents(const std::vector<std::uint32_t>& exponents, std::size_t leaves) {
    if (leaves < minimal_leaf_count(exponents)) {
        throw Error("leaf count " + std::to_string(leaves) + " too small for the requested exponents");
    }
    std::string code;
    std::size_t open = 1;
    for (std::size_t n = 0; n < leaves; ++n) {
        std::uint32_t e = n < exponents.size() ? exponents[n] : 0;
        std::size_t chain = 0;
        if (n + 1 == leaves) {
            chain = 0;
        } else if (open == 1) {
            chain = e + 1;
        } else {
            chain = e;
        }
        code.append(chain, '1');
        code.push_back('0');
        open = open + chain - 1;
    }
    return BinaryTree::from_preorder(std::move(code));
}

TreePair normal_form_to_tree_pair(const NormalForm& nf) {
    validate(nf);
    auto pos_exp = exponent_vector(nf.positive);
    auto neg_exp = exponent_vector(nf.negative);
    std::size_t leaves = std::max(minimal_leaf_count(pos_exp), minimal_leaf_count(neg_exp));
    TreePair p(tree_from_exponents(neg_exp, leaves), tree_from_exponents(pos_exp, leaves));
    if (!is_reduced(p)) throw Error("normal form produced an unreduced pair");
    return p;
}

NormalForm tree_pair_to_normal_form(const TreePair& p) {
    if (!is_reduced(p)) throw Error("tree pair is not reduced: " + to_string(p));
    return NormalForm{terms_from_exponents(leaf_exponents(p.pos)), terms_from_exponents(leaf_exponents(p.neg))};
}

namespace {

// One local rewrite at position i; returns false when s[i], s[i+1] is stable.
bool rewrite_adjacent(std::vector<GenLetter>& s, std::size_t i) {
    GenLetter a = s[i];
    GenLetter b = s[i + 1];
    if (a.index == b.index && a.inverse != b.inverse) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        return true;
    }
    if (a.inverse && !b.inverse) {
        if (a.index < b.index) {
            // x_a^-1 x_b = x_{b+1} x_a^-1
            s[i] = {b.index + 1, false};
            s[i + 1] = a;
        } else {
            // x_a^-1 x_b = x_b x_{a+1}^-1
            s[i] = b;
            s[i + 1] = {a.index + 1, true};
        }
        return true;
    }
    if (!a.inverse && !b.inverse && a.index > b.index) {
        // x_a x_b = x_b x_{a+1}
        s[i] = b;
        s[i + 1] = {a.index + 1, false};
        return true;
    }
    if (a.inverse && b.inverse && a.index < b.index) {
        // x_a^-1 x_b^-1 = x_{b+1}^-1 x_a^-1
        s[i] = {b.index + 1, true};
        s[i + 1] = a;
        return true;
    }
    return false;
}

void sort_to_seminormal(std::vector<GenLetter>& s, std::size_t& steps, std::size_t max_steps) {
    std::size_t i = 0;
    while (i + 1 < s.size()) {
        if (rewrite_adjacent(s, i)) {
            if (++steps > max_steps) throw Error("rewriting exceeded the step limit");
            i = i > 0 ? i - 1 : 0;
        } else {
            ++i;
        }
    }
}

// Largest index i present with both signs while i+1 is absent, or -1.
long long uniqueness_violation(const std::vector<GenLetter>& s) {
    long long found = -1;
    for (const auto& l : s) {
        if (l.inverse) continue;
        const std::uint32_t i = l.index;
        bool has_inverse = false;
        bool has_next = false;
        for (const auto& m : s) {
            if (m.index == i && m.inverse) has_inverse = true;
            if (m.index == i + 1) has_next = true;
        }
        if (has_inverse && !has_next) found = std::max(found, static_cast<long long>(i));
    }
    return found;
}

} // namespace

NormalForm rewrite_to_normal_form(const Word& w, std::size_t max_steps) {
    std::vector<GenLetter> s = w.letters;
    std::size_t steps = 0;
    sort_to_seminormal(s, steps, max_steps);

    for (long long v = uniqueness_violation(s); v >= 0; v = uniqueness_violation(s)) {
        const auto i = static_cast<std::uint32_t>(v);
        // s = P N with P ascending, N descending; the letters strictly between
        // the last x_i and the first x_i^-1 all have index >= i+2, and
        // x_i u x_i^-1 = (u with every index lowered by one).
        std::size_t last_pos = 0;
        std::size_t first_neg = 0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k].index == i && !s[k].inverse) last_pos = k;
        }
        for (std::size_t k = s.size(); k-- > 0;) {
            if (s[k].index == i && s[k].inverse) first_neg = k;
        }
        for (std::size_t k = last_pos + 1; k < first_neg; ++k) --s[k].index;
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(first_neg));
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(last_pos));
        if (++steps > max_steps) throw Error("rewriting exceeded the step limit");
        sort_to_seminormal(s, steps, max_steps);
    }

    NormalForm nf;
    for (const auto& l : s) {
        auto& part = l.inverse ? nf.negative : nf.positive;
        auto it = std::find_if(part.begin(), part.end(), [&](const Term& t) { return t.index == l.index; });
        if (it == part.end()) {
            part.push_back({l.index, 1});
        } else {
            ++it->exponent;
        }
    }
    auto by_index = [](const Term& a, const Term& b) { return a.index < b.index; };
    std::sort(nf.positive.begin(), nf.positive.end(), by_index);
    std::sort(nf.negative.begin(), nf.negative.end(), by_index);
    return nf;
}

} // namespace thompson
