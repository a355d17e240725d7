#pragma once

/**
 * @file generator.hpp
 * @brief Standard sequences, characteristic words, mechanical words, and the
 *        shift morphism sigma attached to a type (i) expansion.
 *
 * A directive sequence (d_1, d_2, d_3, ...) with d_1 >= 0 and d_i >= 1 for
 * i >= 2 drives the standard sequence
 *
 *     s_{-1} = b,  s_0 = a,  s_n = s_{n-1}^{d_n} s_{n-2},
 *
 * whose limit is the characteristic word of alpha = [0; 1+d_1, d_2, d_3, ...].
 * |s_n| = q_n, the denominator of the n-th convergent.
 *
 * For a type (i) Sturm number alpha = [0; 1+d_1, (d_2, ..., d_n)] the morphism
 *
 *     sigma: a -> s_{n-1},  b -> s_{n-1}^{d_n - d_1} s_{n-2}
 *
 * is standard, satisfies sigma(s_k) = s_{k + (n-1)} for all k >= 0, and fixes
 * c_alpha.  Its mirror sigma_hat = E sigma E fixes the exchanged word
 * E(c_alpha) = c_{1 - alpha}.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "continued_fraction.hpp"
#include "errors.hpp"
#include "morphism.hpp"
#include "word.hpp"

namespace sturmian {

class DirectiveSequence {
public:
    /// (a_1 - 1, a_2, a_3, ...) of the expansion, extended periodically.
    static DirectiveSequence from_cf(const SturmCF& cf) {
        DirectiveSequence d;
        d.cf_ = cf;
        return d;
    }

    /// A finite directive list; reading past the end throws DirectiveTooShort.
    static DirectiveSequence from_list(std::vector<i64> entries) {
        if (entries.empty()) throw DirectiveTooShort("directive list must be nonempty");
        if (entries.front() < 0)
            throw ParseError("directive entry d_1 must be nonnegative");
        for (std::size_t i = 1; i < entries.size(); ++i)
            if (entries[i] < 1) throw ParseError("directive entries d_2, d_3, ... must be >= 1");
        DirectiveSequence d;
        d.list_ = std::move(entries);
        return d;
    }

    /// Comma-separated integers, e.g. "1,2,2".
    static DirectiveSequence parse(std::string_view text) {
        std::vector<i64> entries;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            auto piece = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                          : comma - pos);
            std::size_t used = 0;
            i64 value = 0;
            try {
                value = std::stoll(std::string(piece), &used);
            } catch (const std::logic_error&) {
                throw ParseError("malformed directive entry '" + std::string(piece) + "'");
            }
            if (used != piece.size())
                throw ParseError("malformed directive entry '" + std::string(piece) + "'");
            entries.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return from_list(std::move(entries));
    }

    bool infinite() const noexcept { return cf_.has_value(); }

    /// d_i, 1-based.
    i64 at(i64 i) const {
        if (i < 1) throw IndexOutOfRange("directive index starts at 1");
        if (cf_) {
            i64 a = cf_->partial_quotient(i);
            return i == 1 ? a - 1 : a;
        }
        if (static_cast<std::size_t>(i) > list_.size())
            throw DirectiveTooShort("directive sequence has only " +
                                    std::to_string(list_.size()) + " entries");
        return list_[static_cast<std::size_t>(i - 1)];
    }

    std::optional<std::size_t> length() const {
        if (cf_) return std::nullopt;
        return list_.size();
    }

private:
    DirectiveSequence() = default;

    std::optional<SturmCF> cf_;
    std::vector<i64> list_;
};

/// Memoized s_{-1}, s_0, s_1, ... over a directive sequence.
class StandardSequence {
public:
    explicit StandardSequence(DirectiveSequence directive)
        : directive_(std::move(directive)), words_{Word(Letter::b), Word(Letter::a)} {}

    /// s_n, n >= -1.
    const Word& at(i64 n) {
        if (n < -1) throw IndexOutOfRange("standard word index starts at -1");
        while (static_cast<i64>(words_.size()) - 2 < n) {
            auto next = static_cast<i64>(words_.size()) - 1;  // index being built
            words_.push_back(Word::repeat(words_[words_.size() - 1], directive_.at(next)) +
                             words_[words_.size() - 2]);
        }
        return words_[static_cast<std::size_t>(n + 1)];
    }

    const DirectiveSequence& directive() const noexcept { return directive_; }

private:
    DirectiveSequence directive_;
    std::vector<Word> words_;  // words_[i] = s_{i-1}
};

inline Word standard_word(const DirectiveSequence& d, i64 n) {
    StandardSequence seq(d);
    return seq.at(n);
}

inline Word standard_word(const SturmCF& cf, i64 n) {
    return standard_word(DirectiveSequence::from_cf(cf), n);
}

/**
 * The limit of the standard sequence as a stream.  s_n is a prefix of
 * s_{n+1} for n >= 1, so growth starts from s_1; a finite directive that runs
 * out before the requested prefix throws DirectiveTooShort.
 */
inline WordStream characteristic_word(const DirectiveSequence& d) {
    auto seq = std::make_shared<StandardSequence>(d);
    auto level = std::make_shared<i64>(1);
    return WordStream([seq, level](std::string& buf, std::size_t target) {
        while (seq->at(*level).size() < target) ++*level;
        buf = seq->at(*level).str();
    });
}

inline WordStream characteristic_word(const SturmCF& cf) {
    return characteristic_word(DirectiveSequence::from_cf(cf));
}

enum class MechanicalVariant { Floor, Ceiling };

/**
 * The mechanical word with slope alpha and intercept rho: letter n is a
 * exactly when the floor (resp. ceiling) of (n+1) alpha + rho and of
 * n alpha + rho agree.  With rho = 0 the floor variant is a c_alpha and the
 * ceiling variant is b c_alpha.
 */
inline WordStream mechanical_word(const QuadraticSurd& alpha, const Rational& rho,
                                  MechanicalVariant variant) {
    if (alpha.floor_affine(1) != 0)
        throw InvalidSurd("mechanical slope must lie in (0,1)");
    bool ceiling = variant == MechanicalVariant::Ceiling;
    return WordStream([alpha, rho, ceiling](std::string& buf, std::size_t target) {
        auto eval = [&](i64 n) {
            return ceiling ? alpha.ceil_affine(n, rho) : alpha.floor_affine(n, rho);
        };
        i64 prev = eval(static_cast<i64>(buf.size()));
        while (buf.size() < target) {
            i64 next = eval(static_cast<i64>(buf.size()) + 1);
            buf += (next == prev ? 'a' : 'b');
            prev = next;
        }
    });
}

/// sigma for the type (i) expansion, with its generator certificate
///     sigma = (phi E)^{d_1} E (phi E)^{d_2} E ... (phi E)^{d_{n-1}} E (phi E)^{d_n - d_1},
/// cross-checked against the images it must have.
inline Morphism build_sigma(const SturmCF& cf) {
    std::vector<i64> d = type_i_directive(cf);
    auto n = static_cast<std::size_t>(d.size());
    std::string cert;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (i64 rep = 0; rep < d[i]; ++rep) cert += "pE";
        cert += 'E';
    }
    for (i64 rep = 0; rep < d[n - 1] - d[0]; ++rep) cert += "pE";
    Morphism sigma = Morphism::from_certificate(cert);

    StandardSequence s(DirectiveSequence::from_cf(cf));
    Word expect_a = s.at(static_cast<i64>(n) - 1);
    Word expect_b = Word::repeat(expect_a, d[n - 1] - d[0]) + s.at(static_cast<i64>(n) - 2);
    if (sigma.image_a() != expect_a || sigma.image_b() != expect_b)
        throw CertificateMismatch("generator product disagrees with the images of sigma");
    return sigma;
}

/// sigma_hat = E sigma E; fixes c_{1-alpha} = E(c_alpha).
inline Morphism build_sigma_hat(const SturmCF& cf) {
    Morphism sigma = build_sigma(cf);
    Morphism hat = compose(compose(Morphism::exchange(), sigma), Morphism::exchange());
    if (hat.image_a() != sigma.image_b().exchanged() ||
        hat.image_b() != sigma.image_a().exchanged())
        throw CertificateMismatch("sigma_hat images disagree with the mirror of sigma");
    return hat;
}

/// Checks sigma^m(s_k) = s_{k + m(n-1)}, the shift property of sigma.
inline bool sigma_shifts_standard(const SturmCF& cf, i64 k, i64 m) {
    if (k < 0 || m < 0)
        throw IndexOutOfRange("shift property indices must be nonnegative");
    std::vector<i64> d = type_i_directive(cf);
    Morphism sig_m = power(build_sigma(cf), m);
    StandardSequence s(DirectiveSequence::from_cf(cf));
    return sig_m(s.at(k)) == s.at(k + m * (static_cast<i64>(d.size()) - 1));
}

} // namespace sturmian
