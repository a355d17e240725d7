#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <utility>

#include "sturmian/generator.hpp"
#include "sturmian/morphism.hpp"

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

} // namespace

TEST_CASE("generators of the standard monoid") {
    const Morphism& E = Morphism::exchange();
    const Morphism& phi = Morphism::phi();

    REQUIRE(E.image_a().str() == "b");
    REQUIRE(E.image_b().str() == "a");
    REQUIRE(E.certificate() == "E");
    REQUIRE(phi.image_a().str() == "ab");
    REQUIRE(phi.image_b().str() == "a");
    REQUIRE(phi.certificate() == "p");

    REQUIRE(compose(E, E) == Morphism());
    REQUIRE(Morphism().certificate().empty());
    REQUIRE(Morphism()(Word("abba")).str() == "abba");

    const Morphism& pt = Morphism::phi_tilde();
    REQUIRE(pt.image_a().str() == "ba");
    REQUIRE(pt.image_b().str() == "a");
    REQUIRE_FALSE(pt.has_certificate());
    REQUIRE_THROWS_AS(pt.certificate(), NoCertificate);
}

TEST_CASE("certificates compose left to right") {
    REQUIRE(Morphism::from_certificate("pEE") == Morphism::phi());
    auto f = Morphism::from_certificate("pEEpEpE");
    REQUIRE(f.image_a().str() == "ab");
    REQUIRE(f.image_b().str() == "ababa");
    REQUIRE(Morphism::from_certificate("") == Morphism());
    REQUIRE_THROWS_AS(Morphism::from_certificate("pxE"), ParseError);

    REQUIRE_NOTHROW(Morphism(Word("ab"), Word("ababa"), "pEEpEpE"));
    REQUIRE_THROWS_AS(Morphism(Word("ab"), Word("ababa"), "pE"), CertificateMismatch);
}

TEST_CASE("composition and powers") {
    const Morphism& E = Morphism::exchange();
    const Morphism& phi = Morphism::phi();

    auto phiE = compose(phi, E);
    REQUIRE(phiE.image_a().str() == "a");
    REQUIRE(phiE.image_b().str() == "ab");
    REQUIRE(phiE.certificate() == "pE");
    REQUIRE(phiE == Morphism::from_certificate("pE"));

    auto Ephi = compose(E, phi);
    REQUIRE(Ephi.image_a().str() == "ba");
    REQUIRE(Ephi.image_b().str() == "b");
    REQUIRE(Ephi.certificate() == "Ep");

    REQUIRE(power(phi, 0) == Morphism());
    REQUIRE(power(phi, 2).image_a().str() == "aba");
    REQUIRE(power(phi, 2).image_b().str() == "ab");
    REQUIRE(power(phi, 5).image_a().size() == 13);
    REQUIRE(power(phi, 5).image_b().size() == 8);
    REQUIRE_THROWS_AS(power(phi, -1), IndexOutOfRange);

    // composing with a certificate-free factor drops the certificate
    REQUIRE_FALSE(compose(Morphism::phi_tilde(), E).has_certificate());
}

TEST_CASE("application to words and streams") {
    const Morphism& phi = Morphism::phi();
    REQUIRE(phi(Word("bab")).str() == "aaba");
    REQUIRE(phi(Letter::b).str() == "a");
    REQUIRE(apply(phi, Word("ab")).str() == "aba");
    REQUIRE(phi(Word()).empty());
    REQUIRE_THROWS_AS(Morphism(Word(), Word("a")), EmptyImage);

    REQUIRE(phi(periodic(Word("ab"))).prefix(9).str() == "abaabaaba");
    REQUIRE(apply(phi, periodic(Word("b"))).prefix(4).str() == "aaaa");
}

TEST_CASE("parse and print") {
    auto f = Morphism::parse("a->ab;b->aba");
    REQUIRE(f.str() == "a->ab;b->aba");
    REQUIRE_FALSE(f.has_certificate());
    REQUIRE_THROWS_AS(Morphism::parse("ab;aba"), ParseError);
    REQUIRE_THROWS_AS(Morphism::parse("a->ab"), ParseError);
    REQUIRE_THROWS_AS(Morphism::parse("a->ax;b->a"), ParseError);
}

TEST_CASE("fixed points") {
    const Morphism& phi = Morphism::phi();
    REQUIRE(is_prolongable(phi, Letter::a));
    REQUIRE_FALSE(is_prolongable(phi, Letter::b));
    REQUIRE(fixed_point(phi, Letter::a).prefix(34).str() ==
            "abaababaabaababaababaabaababaabaab");
    REQUIRE_THROWS_AS(fixed_point(Morphism::exchange(), Letter::a), NotProlongable);
    REQUIRE_THROWS_AS(fixed_point(Morphism::phi_tilde(), Letter::a), NotProlongable);
}

TEST_CASE("right conjugates of phi") {
    const Morphism& phi = Morphism::phi();
    REQUIRE(num_conjugates(phi) == 2);
    REQUIRE(right_conjugate(phi, 0) == phi);
    REQUIRE(right_conjugate(phi, 0).certificate() == "p");
    REQUIRE(right_conjugate(phi, 1) == Morphism::phi_tilde());
    REQUIRE_THROWS_AS(right_conjugate(phi, 2), IndexOutOfRange);
    REQUIRE_THROWS_AS(right_conjugate(phi, -1), IndexOutOfRange);
}

TEST_CASE("right conjugates of a standard morphism") {
    auto sigma = build_sigma(SturmCF::parse("0;(2)"));
    REQUIRE(sigma.image_a().str() == "ab");
    REQUIRE(sigma.image_b().str() == "aba");
    REQUIRE(num_conjugates(sigma) == 4);

    std::vector<std::pair<std::string, std::string>> expected = {
        {"ab", "aba"}, {"ba", "baa"}, {"ab", "aab"}, {"ba", "aba"}};
    std::set<std::pair<std::string, std::string>> seen;
    for (std::int64_t k = 0; k < 4; ++k) {
        auto conj = right_conjugate(sigma, k);
        REQUIRE(conj.image_a().str() == expected[static_cast<std::size_t>(k)].first);
        REQUIRE(conj.image_b().str() == expected[static_cast<std::size_t>(k)].second);
        seen.insert({conj.image_a().str(), conj.image_b().str()});
    }
    REQUIRE(seen.size() == 4);
}

TEST_CASE("conjugation defining identity on random words") {
    std::mt19937_64 rng(0x5eed0003);
    std::vector<Morphism> cases = {
        Morphism::phi(),
        build_sigma(SturmCF::parse("0;(2)")),
        build_sigma(SturmCF::parse("0;2,(3)")),
        build_sigma_hat(SturmCF::parse("0;2,(3)")),
        build_sigma(SturmCF::parse("0;3,(2,3)")),
    };
    for (const auto& psi : cases) {
        auto reps = Word::repeat(psi.image_a(), num_conjugates(psi));
        for (std::int64_t k = 0; k < num_conjugates(psi); ++k) {
            Word u = reps.substr(0, static_cast<std::size_t>(k));
            auto conj = right_conjugate(psi, k);
            for (int trial = 0; trial < 25; ++trial) {
                Word w = random_word(rng, 20);
                REQUIRE(psi(w) + u == u + conj(w));
            }
        }
    }
}

TEST_CASE("no common prefix stops conjugation") {
    Morphism f(Word("ab"), Word("ba"));
    REQUIRE(num_conjugates(f) == 3);
    REQUIRE_THROWS_AS(right_conjugate(f, 1), NoCommonPrefix);
}

TEST_CASE("reduced certificates") {
    REQUIRE(reduced_certificate(Morphism::from_certificate("pEEp")) == "pp");
    REQUIRE(reduced_certificate(Morphism::from_certificate("EpEEpE")) == "EppE");
    REQUIRE(reduced_certificate(Morphism::from_certificate("EE")).empty());
    REQUIRE(reduced_certificate(Morphism::phi()) == "p");
    REQUIRE_THROWS_AS(reduced_certificate(Morphism::phi_tilde()), NoCertificate);
}

TEST_CASE("infinite word generation predicate") {
    REQUIRE(generates_infinite_word(Morphism::phi()));
    REQUIRE(generates_infinite_word(Morphism::from_certificate("EpE")));
    REQUIRE(generates_infinite_word(Morphism::from_certificate("EppE")));
    REQUIRE(generates_infinite_word(Morphism::from_certificate("pEEpEpE")));

    REQUIRE_FALSE(generates_infinite_word(Morphism()));
    REQUIRE_FALSE(generates_infinite_word(Morphism::exchange()));
    REQUIRE_FALSE(generates_infinite_word(Morphism::from_certificate("EE")));
    REQUIRE_FALSE(generates_infinite_word(Morphism::from_certificate("Ep")));
    REQUIRE_FALSE(generates_infinite_word(Morphism::from_certificate("pE")));
    REQUIRE_FALSE(generates_infinite_word(Morphism::from_certificate("EpEp")));
    REQUIRE_FALSE(generates_infinite_word(Morphism::from_certificate("pEpE")));
    REQUIRE_FALSE(generates_infinite_word(Morphism::from_certificate("pEpEpE")));
}
