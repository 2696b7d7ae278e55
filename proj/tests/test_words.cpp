#include <doctest.h>

#include "parikh/oracle.hpp"
#include "parikh/words.hpp"

using namespace parikh;

namespace {

Word w(const std::string& text, int alphabet = 0) {
    return parse_word(text, alphabet ? std::optional<int>(alphabet) : std::nullopt);
}

} // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("alphabet validation and names") {
    CHECK_THROWS_AS(Alphabet(0), DomainError);
    CHECK(Alphabet(4).letter_name(3) == "c");
    CHECK(Alphabet(30).letter_name(27) == "27");
    CHECK_THROWS_AS(Alphabet(2).letter_name(3), DomainError);
}

TEST_CASE("word construction rejects letters outside the alphabet") {
    CHECK_THROWS_AS(Word(Alphabet(2), {1, 3}), DomainError);
    CHECK_THROWS_AS(Word(Alphabet(2), {0}), DomainError);
    CHECK(Word(Alphabet(2), {}).empty());
}

TEST_CASE("position of the k-th occurrence") {
    CHECK(position_of(w("abbaba"), 2, 2) == 3);  // pos_b(abbaba, 2)
    CHECK(position_of(w("caabcaba"), 1, 3) == 6); // pos_a(caabcaba, 3)
    CHECK(position_of(w("a"), 1, 1) == 1);
    CHECK_THROWS_AS(position_of(w("abbaba"), 1, 4), DomainError);
    CHECK_THROWS_AS(position_of(w("bbb", 2), 1, 1), DomainError); // letter absent
    CHECK_THROWS_AS(position_of(w("abc"), 1, 0), DomainError);
}

TEST_CASE("subword counting") {
    CHECK(subword_count(w("abcabc"), Word(Alphabet(3), {})) == 1); // |w|_lambda
    CHECK(subword_count(Word(Alphabet(1), {}), Word(Alphabet(1), {})) == 1);
    CHECK(subword_count(w("abbaba"), w("ab", 2)) == 4);
    CHECK(subword_count(w("bbccabdc"), w("abcd")) == 0);
    CHECK(subword_count(Word(Alphabet(2), {}), w("a", 2)) == 0);
}

TEST_CASE("subword counting matches the tuple-enumerating oracle") {
    for (const Word& word : enumerate_words_list({2, 0, 7, false})) {
        for (const Word& pattern : enumerate_words_list({2, 0, 3, false})) {
            CAPTURE(word_text(word));
            CAPTURE(word_text(pattern));
            REQUIRE(subword_count(word, pattern) == naive_subword_count(word, pattern));
        }
    }
}

TEST_CASE("subword counts can exceed 64 bits") {
    std::vector<Letter> letters;
    for (int i = 0; i < 40; ++i) {
        letters.push_back(1);
        letters.push_back(2);
    }
    Word big(Alphabet(2), letters);
    // the a's of (ab)^40 contain C(40,20) scattered copies of a^20
    std::vector<Letter> pat(20, 1);
    CHECK(subword_count(big, Word(Alphabet(2), pat)) == BigCount("137846528820"));
}

TEST_CASE("projection") {
    CHECK(word_text(project(w("babcb"), {1, 2})) == "babb");
    Word v = w("bacbbabcccbac");
    CHECK(project(v, {1, 2, 3}) == v); // full alphabet is the identity
    CHECK(project(v, {}).empty());
    CHECK_THROWS_AS(project(w("ab"), {5}), DomainError);
}

TEST_CASE("projection is a monoid morphism") {
    auto words = enumerate_words_list({3, 0, 4, false});
    std::set<Letter> keep{1, 3};
    for (const Word& u : words) {
        for (const Word& v : words) {
            std::vector<Letter> uv = u.letters();
            uv.insert(uv.end(), v.letters().begin(), v.letters().end());
            std::vector<Letter> expected = project(u, keep).letters();
            auto right = project(v, keep).letters();
            expected.insert(expected.end(), right.begin(), right.end());
            REQUIRE(project(Word(Alphabet(3), uv), keep).letters() == expected);
        }
    }
}

TEST_CASE("cores of the worked example word") {
    Word v = w("bacbbabcccbac");
    CHECK(word_text(core(v, w("b", 3))) == "bbbbb");
    CHECK(word_text(core(v, w("ab", 3))) == "abbabb");
    CHECK(word_text(core(v, w("bc", 3))) == "bcbbbcccbc");
    CHECK(word_text(core(v, w("abc"))) == "abbabcccbc");
    CHECK(word_text(core(v, w("cab"))) == "cabb");
    CHECK(word_text(core(v, w("cca"))) == "cccca");
}

TEST_CASE("core of an absent pattern is empty, empty pattern rejected") {
    CHECK(core(w("bb", 2), w("ab", 2)).empty());
    CHECK_THROWS_AS(core(w("ab"), Word(Alphabet(2), {})), DomainError);
}

TEST_CASE("core preserves the count and is idempotent") {
    for (const Word& word : enumerate_words_list({3, 1, 6, false})) {
        for (const Word& pattern : enumerate_words_list({3, 1, 3, false})) {
            Word c = core(word, pattern);
            REQUIRE(subword_count(c, pattern) == subword_count(word, pattern));
            REQUIRE(core(c, pattern) == c);
        }
    }
}

TEST_CASE("support") {
    CHECK(support(Word(Alphabet(4), {})).empty());
    CHECK(support(w("bbccabdc")) == std::set<Letter>{1, 2, 3, 4});
    CHECK(support(w("aaa")) == std::set<Letter>{1});
}

TEST_CASE("word text parsing") {
    CHECK(w("abba").alphabet().size() == 2);
    CHECK(w("abba", 5).alphabet().size() == 5);
    CHECK(w("3,1,2").letters() == std::vector<Letter>{3, 1, 2});
    CHECK(word_text(w("3,1,2")) == "cab");
    Word wide(Alphabet(30), {27, 1});
    CHECK(word_text(wide) == "27,1");
    CHECK(parse_word("27,1", 30) == wide);
    CHECK_THROWS_AS(parse_word("ab", 1), DomainError);  // alphabet too small
    CHECK_THROWS_AS(parse_word("aBc"), DomainError);    // bad character
    CHECK_THROWS_AS(parse_word("1,,2"), DomainError);   // empty item
    CHECK_THROWS_AS(parse_word("1,2,"), DomainError);   // trailing comma
    CHECK_THROWS_AS(parse_word("0"), DomainError);      // letters are 1-based
    CHECK(parse_word("").empty());
}

TEST_SUITE_END();
