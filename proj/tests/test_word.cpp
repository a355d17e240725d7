#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "sturmian/word.hpp"

using namespace sturmian;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    std::string s;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) s += bit(rng) ? 'b' : 'a';
    return Word(s);
}

// Fibonacci word prefix, long enough for the stream tests below.  Rebuilt
// from scratch on every call; Fibonacci prefixes nest, so that is consistent.
WordStream fibonacci_stream() {
    return WordStream([](std::string& buf, std::size_t target) {
        std::string cur = "ab", prev = "a";
        while (cur.size() < target) {
            std::string next = cur + prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        buf = std::move(cur);
    });
}

} // namespace

TEST_CASE("letters and word construction") {
    REQUIRE(to_char(Letter::a) == 'a');
    REQUIRE(other(Letter::a) == Letter::b);
    REQUIRE(other(Letter::b) == Letter::a);
    REQUIRE_THROWS_AS(letter_from_char('x'), ParseError);
    REQUIRE_THROWS_AS(Word("abc"), ParseError);

    Word w("abba");
    REQUIRE(w.size() == 4);
    REQUIRE(w[0] == Letter::a);
    REQUIRE(w[1] == Letter::b);
    REQUIRE_THROWS_AS(w.at(4), IndexOutOfRange);
    REQUIRE(Word().empty());
    REQUIRE(Word(Letter::b).str() == "b");
}

TEST_CASE("concat, repeat, reverse, exchange") {
    Word u("ab"), v("ba");
    REQUIRE(concat(u, v).str() == "abba");
    REQUIRE((u + Word()).str() == "ab");
    REQUIRE(Word::repeat(u, 3).str() == "ababab");
    REQUIRE(Word::repeat(u, 0).empty());
    REQUIRE_THROWS_AS(Word::repeat(u, -1), IndexOutOfRange);
    REQUIRE(Word("abb").reversed().str() == "bba");
    REQUIRE(Word("aab").exchanged().str() == "bba");
}

TEST_CASE("strip_prefix and strip_suffix") {
    Word w("abaab");
    REQUIRE(strip_prefix(Word("aba"), w).str() == "ab");
    REQUIRE(strip_prefix(Word(), w) == w);
    REQUIRE_THROWS_AS(strip_prefix(Word("b"), w), NotAPrefix);
    REQUIRE(strip_suffix(w, Word("aab")).str() == "ab");
    REQUIRE(strip_suffix(w, Word()) == w);
    REQUIRE_THROWS_AS(strip_suffix(w, Word("ba")), NotASuffix);
    REQUIRE_THROWS_AS(strip_suffix(Word("a"), Word("aa")), NotASuffix);
}

TEST_CASE("conjugation of finite words") {
    Word w("aabab");
    REQUIRE(conjugate(w, 0) == w);
    REQUIRE(conjugate(w, 2).str() == "babaa");
    REQUIRE(conjugate(w, 5) == w);
    REQUIRE_THROWS_AS(conjugate(w, -1), IndexOutOfRange);
    REQUIRE_THROWS_AS(conjugate(w, 6), IndexOutOfRange);
}

TEST_CASE("palindrome test") {
    REQUIRE(is_palindrome(Word("babab")));
    REQUIRE(is_palindrome(Word()));
    REQUIRE(is_palindrome(Word("a")));
    REQUIRE_FALSE(is_palindrome(Word("ab")));
    REQUIRE(is_palindrome(Word("aabababaabababaa")));
}

TEST_CASE("distinct factors") {
    WordStream f = fibonacci_stream();
    REQUIRE(distinct_factors(f.prefix(200), 3).size() == 4);
    REQUIRE(distinct_factors(Word("aaaa"), 2).size() == 1);
    REQUIRE_THROWS_AS(distinct_factors(Word("ab"), 0), IndexOutOfRange);
    REQUIRE_THROWS_AS(distinct_factors(Word("ab"), 3), IndexOutOfRange);
}

TEST_CASE("streams: prefix memoization and combinators") {
    WordStream f = fibonacci_stream();
    Word p5 = f.prefix(5);
    Word p40 = f.prefix(40);
    REQUIRE(p40.starts_with(p5));
    REQUIRE(p5.str() == "abaab");

    REQUIRE(shift(f, 1).prefix(9).str() == "baababaab");
    REQUIRE_THROWS_AS(shift(f, -2), IndexOutOfRange);

    REQUIRE(prepend(Word("bb"), f).prefix(6).str() == "bbabaa");
    REQUIRE(prepend(Word("bb"), f).prefix(1).str() == "b");

    REQUIRE(strip_prefix(Word("abaab"), f).prefix(4) == shift(f, 5).prefix(4));
    REQUIRE_THROWS_AS(strip_prefix(Word("bb"), f), NotAPrefix);

    REQUIRE(exchanged(f).prefix(8).str() == Word(f.prefix_str(8)).exchanged().str());

    REQUIRE(periodic(Word("ab")).prefix(5).str() == "ababa");
    REQUIRE_THROWS_AS(periodic(Word()), EmptyImage);

    REQUIRE(f.at(0) == Letter::a);
    REQUIRE(f.at(3) == Letter::a);
}

TEST_CASE("word identities on random inputs") {
    std::mt19937_64 rng(0x5eed0001);
    for (int trial = 0; trial < 300; ++trial) {
        Word u = random_word(rng, 12);
        Word v = random_word(rng, 12);
        REQUIRE(strip_prefix(u, u + v) == v);
        REQUIRE(strip_suffix(u + v, v) == u);
        REQUIRE(conjugate(u + v, static_cast<std::int64_t>(u.size())) == v + u);
        REQUIRE(u.reversed().reversed() == u);
        REQUIRE(u.exchanged().exchanged() == u);
        REQUIRE((u + v).reversed() == v.reversed() + u.reversed());
        REQUIRE(is_palindrome(u) == (u == u.reversed()));
    }
}

TEST_CASE("factor counts grow with the window") {
    WordStream f = fibonacci_stream();
    Word w = f.prefix(400);
    for (std::size_t n = 1; n <= 8; ++n) {
        auto small = distinct_factors(w.substr(0, 120), n).size();
        auto large = distinct_factors(w, n).size();
        REQUIRE(small <= large);
        REQUIRE(large == n + 1);
    }
}
