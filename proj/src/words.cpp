#include "parikh/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace parikh {

Alphabet::Alphabet(int size) : size_(size) {
    if (size < 1)
        throw DomainError("alphabet size must be at least 1, got " + std::to_string(size));
}

std::string Alphabet::letter_name(Letter a) const {
    if (!contains(a))
        throw DomainError("letter index " + std::to_string(a) + " outside alphabet of size " +
                          std::to_string(size_));
    if (size_ <= 26)
        return std::string(1, static_cast<char>('a' + a - 1));
    return std::to_string(a);
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
    for (Letter a : letters_) {
        if (!alphabet_.contains(a))
            throw DomainError("letter index " + std::to_string(a) +
                              " outside alphabet of size " + std::to_string(alphabet_.size()));
    }
}

int Word::count(Letter a) const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), a));
}

int position_of(const Word& w, Letter a, int k) {
    if (k < 1)
        throw DomainError("occurrence index must be positive, got " + std::to_string(k));
    int seen = 0;
    for (int i = 0; i < w.length(); ++i) {
        if (w.at(i) == a && ++seen == k)
            return i + 1;
    }
    throw DomainError("word has fewer than " + std::to_string(k) + " occurrences of letter " +
                      std::to_string(a));
}

BigCount subword_count(const Word& w, const Word& u) {
    const int m = u.length();
    // counts[j] = occurrences of u[0..j-1] in the prefix processed so far.
    std::vector<BigCount> counts(static_cast<std::size_t>(m) + 1);
    counts[0] = 1;
    for (int i = 0; i < w.length(); ++i) {
        for (int j = m; j >= 1; --j) {
            if (u.at(j - 1) == w.at(i))
                counts[static_cast<std::size_t>(j)] += counts[static_cast<std::size_t>(j) - 1];
        }
    }
    return counts[static_cast<std::size_t>(m)];
}

Word project(const Word& w, const std::set<Letter>& keep) {
    for (Letter a : keep) {
        if (!w.alphabet().contains(a))
            throw DomainError("projection letter " + std::to_string(a) +
                              " outside alphabet of size " + std::to_string(w.alphabet().size()));
    }
    std::vector<Letter> out;
    for (Letter a : w.letters())
        if (keep.count(a))
            out.push_back(a);
    return Word(w.alphabet(), std::move(out));
}

Word core(const Word& w, const Word& v) {
    if (v.empty())
        throw DomainError("core pattern must be nonempty");
    const int n = w.length();
    const int m = v.length();
    // prefix[i]: longest prefix of v embeddable in w[0..i); suffix[i]: longest
    // suffix of v embeddable in w[i..n). Greedy matching is maximal.
    std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int t = prefix[static_cast<std::size_t>(i) - 1];
        if (t < m && w.at(i - 1) == v.at(t))
            ++t;
        prefix[static_cast<std::size_t>(i)] = t;
    }
    std::vector<int> suffix(static_cast<std::size_t>(n) + 2, 0);
    for (int i = n; i >= 1; --i) {
        int t = suffix[static_cast<std::size_t>(i) + 1];
        if (t < m && w.at(i - 1) == v.at(m - 1 - t))
            ++t;
        suffix[static_cast<std::size_t>(i)] = t;
    }
    std::vector<Letter> kept;
    for (int p = 1; p <= n; ++p) {
        // Position p plays role j in some occurrence iff v[j-1] matches and
        // both sides embed the rest.
        const int lo = std::max(1, m - suffix[static_cast<std::size_t>(p) + 1]);
        const int hi = std::min(m, prefix[static_cast<std::size_t>(p) - 1] + 1);
        for (int j = lo; j <= hi; ++j) {
            if (v.at(j - 1) == w.at(p - 1)) {
                kept.push_back(w.at(p - 1));
                break;
            }
        }
    }
    return Word(w.alphabet(), std::move(kept));
}

std::set<Letter> support(const Word& w) {
    return std::set<Letter>(w.letters().begin(), w.letters().end());
}

Word letter_range_word(const Alphabet& alphabet, Letter lo, Letter hi) {
    if (lo < 1 || hi > alphabet.size() || lo > hi)
        throw DomainError("invalid letter range " + std::to_string(lo) + ".." + std::to_string(hi));
    std::vector<Letter> letters;
    for (Letter a = lo; a <= hi; ++a)
        letters.push_back(a);
    return Word(alphabet, std::move(letters));
}

Word parse_word(std::string_view text, std::optional<int> alphabet_size) {
    std::vector<Letter> letters;
    bool numeric = text.find_first_of("0123456789,") != std::string_view::npos;
    if (numeric) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc() || ptr != item.data() + item.size() || value < 1)
                throw DomainError("invalid letter index '" + std::string(item) + "' in word");
            letters.push_back(value);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
            if (pos == text.size())
                throw DomainError("trailing comma in word text");
        }
    } else {
        for (char c : text) {
            if (c < 'a' || c > 'z')
                throw DomainError(std::string("invalid character '") + c +
                                  "' in word (expected a-z or comma-separated indices)");
            letters.push_back(c - 'a' + 1);
        }
    }
    int max_letter = 1;
    for (Letter a : letters)
        max_letter = std::max(max_letter, a);
    int size = alphabet_size.value_or(max_letter);
    if (size < max_letter)
        throw DomainError("alphabet size " + std::to_string(size) +
                          " smaller than max letter used (" + std::to_string(max_letter) + ")");
    return Word(Alphabet(size), std::move(letters));
}

std::string word_text(const Word& w) {
    if (w.alphabet().size() <= 26) {
        std::string out;
        for (Letter a : w.letters())
            out.push_back(static_cast<char>('a' + a - 1));
        return out;
    }
    std::ostringstream out;
    for (int i = 0; i < w.length(); ++i) {
        if (i)
            out << ',';
        out << w.at(i);
    }
    return out.str();
}

} // namespace parikh
