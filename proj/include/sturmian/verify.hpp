#pragma once

/**
 * @file verify.hpp
 * @brief Named self-check suites over a single expansion.
 *
 * Each suite replays one family of identities against independently computed
 * words and reports a case count, a failure count, and the first
 * counterexample.  Suites that need structure the expansion lacks (a type (i)
 * form, or the [0;2,(r)] shape) mark themselves skipped instead of failing.
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "continued_fraction.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "generator.hpp"
#include "morphism.hpp"
#include "word.hpp"

namespace sturmian {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_counterexample;
    bool skipped = false;
    std::string note;
};

namespace detail {

class SuiteRecorder {
public:
    explicit SuiteRecorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& describe) {
        ++result_.cases;
        if (!ok) {
            ++result_.failures;
            if (result_.first_counterexample.empty()) result_.first_counterexample = describe;
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

/// Largest n <= 12 with q_{n+2} within the letter budget.
inline i64 palindrome_depth(const SturmCF& cf) {
    const i64 budget = 20'000'000;
    i64 n = -2;
    try {
        while (n < 12 && convergent(cf, n + 3).q <= budget) ++n;
    } catch (const Overflow&) {
    }
    return n;
}

} // namespace detail

inline std::vector<std::string> verification_suites() {
    return {"palindrome", "lengths",      "fixedpoint", "lemma22",
            "theorem-main", "theorem-hat", "melancon",   "mechanical"};
}

inline SuiteResult run_suite(const std::string& name, const SturmCF& cf, std::size_t max_len) {
    detail::SuiteRecorder rec(name);
    auto skip = [&](const std::string& why) {
        SuiteResult r = rec.take();
        r.skipped = true;
        r.note = why;
        return r;
    };

    if (name == "mechanical") {
        QuadraticSurd alpha = surd_value(cf);
        std::size_t len = std::min<std::size_t>(max_len, 5000);
        WordStream c = characteristic_word(cf);
        Word want_floor = Word(Letter::a) + c.prefix(len);
        Word want_ceil = Word(Letter::b) + c.prefix(len);
        rec.check(mechanical_word(alpha, Rational(), MechanicalVariant::Floor)
                          .prefix(len + 1) == want_floor,
                  "floor mechanical word differs from a c within " + std::to_string(len));
        rec.check(mechanical_word(alpha, Rational(), MechanicalVariant::Ceiling)
                          .prefix(len + 1) == want_ceil,
                  "ceiling mechanical word differs from b c within " + std::to_string(len));
        return rec.take();
    }

    if (classify(cf) != SturmType::TypeI) return skip("requires a type (i) expansion");

    if (name == "palindrome" || name == "lengths") {
        i64 depth = detail::palindrome_depth(cf);
        for (i64 n = -2; n <= depth; ++n) {
            Word w = singular_word(cf, n);
            Word v = adjoining_singular(cf, n);
            std::string where = "n=" + std::to_string(n);
            if (name == "palindrome") {
                rec.check(is_palindrome(w), where + ": w_n is not a palindrome");
                rec.check(is_palindrome(v), where + ": v_n is not a palindrome");
            } else {
                if (n >= 0) {
                    Word s = standard_word(cf, n);
                    i64 q = convergent(cf, n).q;
                    rec.check(static_cast<i64>(s.size()) == q, where + ": |s_n| != q_n");
                    rec.check(static_cast<i64>(w.size()) == q, where + ": |w_n| != q_n");
                }
                if (n >= -1) {
                    i64 expect = convergent(cf, n + 2).q - convergent(cf, n + 1).q;
                    rec.check(static_cast<i64>(v.size()) == expect,
                              where + ": |v_n| != q_{n+2} - q_{n+1}");
                }
            }
        }
        return rec.take();
    }

    if (name == "fixedpoint") {
        std::size_t len = std::min<std::size_t>(max_len, 20000);
        Morphism sigma = build_sigma(cf);
        Morphism hat = build_sigma_hat(cf);
        WordStream c = characteristic_word(cf);
        rec.check(sigma(c).prefix(len) == c.prefix(len),
                  "sigma does not fix c within " + std::to_string(len));
        rec.check(fixed_point(sigma, Letter::a).prefix(len) == c.prefix(len),
                  "fixed point of sigma at a differs from c");
        rec.check(hat(exchanged(c)).prefix(len) == exchanged(c).prefix(len),
                  "sigma_hat does not fix E(c)");
        rec.check(fixed_point(hat, Letter::b).prefix(len) == exchanged(c).prefix(len),
                  "fixed point of sigma_hat at b differs from E(c)");
        rec.check(generates_infinite_word(sigma), "sigma fails the generator-word criterion");
        return rec.take();
    }

    if (name == "lemma22") {
        std::size_t len = std::min<std::size_t>(max_len, 1500);
        Morphism sigma = build_sigma(cf);
        WordStream c = characteristic_word(cf);
        for (i64 m = 1; m <= 3; ++m) {
            Morphism pw = power(sigma, m);
            i64 k_hi = std::min<i64>(num_conjugates(pw) - 1, 300);
            for (i64 k = 0; k <= k_hi; ++k) {
                Word got = right_conjugate(pw, k)(c).prefix(len);
                Word want = shift(c, k).prefix(len);
                rec.check(got == want,
                          "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                              ": (sigma^m)_k(c) is not the k-th shift of c");
            }
        }
        return rec.take();
    }

    if (name == "theorem-main" || name == "theorem-hat") {
        bool hat = name == "theorem-hat";
        try {
            slope_parameter(cf);
        } catch (const UnsupportedExpansion&) {
            return skip("requires an expansion of the form 0;2,(r)");
        }
        std::size_t len = std::min<std::size_t>(max_len, 1200);
        WordStream base = characteristic_word(cf);
        if (hat) base = exchanged(base);
        for (i64 m = 0; m <= 5; ++m) {
            i64 lo = convergent(cf, m).q - 1;
            i64 hi = convergent(cf, m + 1).q - 2;
            i64 stride = (hi - lo) / 400 + 1;
            for (i64 k = lo; k <= hi; k += stride) {
                ConjugateDecomposition dec(cf, k, hat);
                std::string where = "m=" + std::to_string(m) + " k=" + std::to_string(k);
                bool ok = true;
                try {
                    dec.verify_prefix(len);
                } catch (const CertificateMismatch&) {
                    ok = false;
                }
                rec.check(ok && dec.m() == m,
                          where + ": factor product differs from the conjugate");
            }
        }
        return rec.take();
    }

    if (name == "melancon") {
        WordStream c = characteristic_word(cf);
        // Groups reach v_{2J+1}, so budget J against q_{2J+3}.
        i64 J = -1;
        try {
            while (J < 10 && convergent(cf, 2 * (J + 1) + 3).q <= 4'000'000) ++J;
        } catch (const Overflow&) {
        }
        MelanconFactorization fac = melancon_factors(cf, J);
        Word flat;
        for (const Factor& f : fac.flat) flat = flat + f.word;
        rec.check(flat == c.prefix(flat.size()),
                  "flat adjoining product is not a prefix of c");
        Word grouped;
        for (const MelanconGroup& g : fac.groups) {
            Word block = g.v + g.w;
            rec.check(Word::repeat(block, g.exponent) ==
                          adjoining_singular(cf, 2 * g.g) + adjoining_singular(cf, 2 * g.g + 1),
                      "g=" + std::to_string(g.g) +
                          ": (v_{2g} w_{2g+1})^{d_{2g+3}} != v_{2g} v_{2g+1}");
            grouped = grouped + Word::repeat(block, g.exponent);
        }
        rec.check(grouped == c.prefix(grouped.size()),
                  "grouped adjoining product is not a prefix of c");
        return rec.take();
    }

    throw ParseError("unknown verification suite '" + name + "'");
}

inline std::vector<SuiteResult> run_suites(const std::string& selector, const SturmCF& cf,
                                           std::size_t max_len) {
    std::vector<SuiteResult> out;
    if (selector == "all") {
        for (const std::string& name : verification_suites())
            out.push_back(run_suite(name, cf, max_len));
    } else {
        out.push_back(run_suite(selector, cf, max_len));
    }
    return out;
}

} // namespace sturmian
