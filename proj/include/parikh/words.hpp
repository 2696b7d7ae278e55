#pragma once

// Ordered alphabets, words, scattered-subword counting, projections and cores.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "parikh/errors.hpp"

namespace parikh {

/// 1-based index into an ordered alphabet.
using Letter = int;

/// Scattered-subword counts grow exponentially with word length.
using BigCount = boost::multiprecision::cpp_int;

/// Fixed ordered alphabet a_1 < a_2 < ... < a_s, letters addressed as 1..s.
class Alphabet {
public:
    explicit Alphabet(int size);

    int size() const { return size_; }
    bool contains(Letter a) const { return a >= 1 && a <= size_; }

    /// Display name of a letter: 'a'..'z' while the alphabet fits, the
    /// numeric index otherwise.
    std::string letter_name(Letter a) const;

    bool operator==(const Alphabet&) const = default;

private:
    int size_;
};

/// Finite word over an ordered alphabet; may be empty (the word lambda).
class Word {
public:
    Word() : alphabet_(1) {} // the empty word over a one-letter alphabet
    Word(Alphabet alphabet, std::vector<Letter> letters);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    /// Letter at 0-based index i.
    Letter at(int i) const { return letters_[static_cast<std::size_t>(i)]; }

    /// Number of occurrences of a single letter.
    int count(Letter a) const;

    bool operator==(const Word&) const = default;

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

/// 1-based position of the k-th occurrence of `a` in `w`.
/// Throws DomainError when `a` has fewer than k occurrences.
int position_of(const Word& w, Letter a, int k);

/// Number of occurrences of `u` as a scattered subword of `w`; |w|_lambda = 1.
BigCount subword_count(const Word& w, const Word& u);

/// Subsequence of `w` consisting of the letters in `keep`; alphabet unchanged.
Word project(const Word& w, const std::set<Letter>& keep);

/// The v-core of w: the subsequence of positions of `w` taking part in at
/// least one occurrence of `v` as a subword. Empty when |w|_v = 0.
/// Throws DomainError when v is empty.
Word core(const Word& w, const Word& v);

/// Set of letters occurring in `w`.
std::set<Letter> support(const Word& w);

/// Word made of the single consecutive run a_lo a_{lo+1} ... a_hi.
Word letter_range_word(const Alphabet& alphabet, Letter lo, Letter hi);

/// Parse the CLI text form: lowercase letters ("abba") or comma-separated
/// indices ("3,1,2"). Alphabet size explicit or inferred as the max letter.
Word parse_word(std::string_view text, std::optional<int> alphabet_size = std::nullopt);

/// Inverse of parse_word. Letters for s <= 26, comma-separated indices above.
std::string word_text(const Word& w);

} // namespace parikh
