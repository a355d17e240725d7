#pragma once

/**
 * @file morphism.hpp
 * @brief Morphisms on {a,b}*, the standard monoid <E, phi>, and right
 *        conjugation.
 *
 * A Morphism is determined by the images of a and b (both nonempty).  When a
 * morphism is built from the generators E (letter exchange) and phi
 * (a -> ab, b -> a) it carries a certificate: a string over {'E','p'} naming
 * the generator product, leftmost factor applied last.  The only relation in
 * the monoid is E E = identity, so certificates reduced modulo that relation
 * are canonical.
 *
 * The k-th right conjugate psi_k of psi is defined by psi(w) u = u psi_k(w)
 * for all w, where u is the length-k common prefix of psi(a)^inf and
 * psi(b)^inf; k ranges over 0 .. |psi(ab)| - 2.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "word.hpp"

namespace sturmian {

class Morphism {
public:
    /// Identity morphism; certificate is the empty product.
    Morphism() : ia_(Letter::a), ib_(Letter::b), cert_(""), has_cert_(true) {}

    Morphism(Word image_a, Word image_b)
        : ia_(std::move(image_a)), ib_(std::move(image_b)) {
        check_images();
    }

    /// Construction with a claimed certificate; verified against the images.
    Morphism(Word image_a, Word image_b, std::string certificate)
        : ia_(std::move(image_a)), ib_(std::move(image_b)),
          cert_(std::move(certificate)), has_cert_(true) {
        check_images();
        Morphism built = from_certificate(cert_);
        if (built.ia_ != ia_ || built.ib_ != ib_)
            throw CertificateMismatch("certificate '" + cert_ +
                                      "' does not compose to the stated images");
    }

    static const Morphism& exchange() {
        static const Morphism m(Word(Letter::b), Word(Letter::a), "E");
        return m;
    }

    static const Morphism& phi() {
        static const Morphism m(Word("ab"), Word(Letter::a), "p");
        return m;
    }

    /// phi with its first image reversed: a -> ba, b -> a.  This is the first
    /// right conjugate of phi; it is Sturmian but not standard, so it carries
    /// no certificate.
    static const Morphism& phi_tilde() {
        static const Morphism m(Word("ba"), Word(Letter::a));
        return m;
    }

    /**
     * Fold a word over {'E','p'}, leftmost generator applied last.  Scanning
     * left to right keeps the running product M = G_1 ... G_i; appending a
     * generator right-composes, which acts on the images directly:
     * 'p' maps (Ma, Mb) to (Ma Mb, Ma) and 'E' swaps them.
     */
    static Morphism from_certificate(std::string_view cert) {
        Word ia(Letter::a), ib(Letter::b);
        for (char c : cert) {
            switch (c) {
                case 'E':
                    std::swap(ia, ib);
                    break;
                case 'p': {
                    Word na = ia + ib;
                    ib = std::move(ia);
                    ia = std::move(na);
                    break;
                }
                default:
                    throw ParseError(std::string("certificate letter must be 'E' or 'p', got '") +
                                     c + "'");
            }
        }
        Morphism out(std::move(ia), std::move(ib));
        out.cert_ = std::string(cert);
        out.has_cert_ = true;
        return out;
    }

    const Word& image(Letter c) const { return c == Letter::a ? ia_ : ib_; }
    const Word& image_a() const noexcept { return ia_; }
    const Word& image_b() const noexcept { return ib_; }

    bool has_certificate() const noexcept { return has_cert_; }

    const std::string& certificate() const {
        if (!has_cert_) throw NoCertificate("morphism carries no generator certificate");
        return cert_;
    }

    Word operator()(const Word& w) const {
        std::string out;
        out.reserve(w.size() * std::max(ia_.size(), ib_.size()));
        for (char ch : w.str()) out += (ch == 'a' ? ia_ : ib_).str();
        return Word(out);
    }

    Word operator()(Letter c) const { return image(c); }

    WordStream operator()(const WordStream& s) const {
        Morphism m = *this;
        auto consumed = std::make_shared<std::size_t>(0);
        return WordStream([m, s, consumed](std::string& buf, std::size_t target) {
            while (buf.size() < target) {
                std::size_t chunk = std::max<std::size_t>(64, target - buf.size());
                std::string src = s.prefix_str(*consumed + chunk);
                for (std::size_t i = *consumed; i < src.size() && buf.size() < target; ++i) {
                    buf += (src[i] == 'a' ? m.ia_ : m.ib_).str();
                    ++*consumed;
                }
            }
        });
    }

    std::string str() const { return "a->" + ia_.str() + ";b->" + ib_.str(); }

    /// Grammar: "a-><word>;b-><word>".
    static Morphism parse(std::string_view text) {
        auto semi = text.find(';');
        if (semi == std::string_view::npos ||
            text.substr(0, 3) != "a->" || text.substr(semi + 1, 3) != "b->")
            throw ParseError("morphism must look like 'a->W1;b->W2'");
        return Morphism(Word(text.substr(3, semi - 3)),
                        Word(text.substr(semi + 4)));
    }

    /// Equality of images; certificates are a construction detail.
    friend bool operator==(const Morphism& f, const Morphism& g) {
        return f.ia_ == g.ia_ && f.ib_ == g.ib_;
    }

private:
    void check_images() const {
        if (ia_.empty() || ib_.empty())
            throw EmptyImage("morphism images must be nonempty");
    }

    Word ia_, ib_;
    std::string cert_;
    bool has_cert_ = false;
};

inline Word apply(const Morphism& m, const Word& w) { return m(w); }
inline WordStream apply(const Morphism& m, const WordStream& s) { return m(s); }

/// Function composition: compose(f, g) applies g first.
inline Morphism compose(const Morphism& f, const Morphism& g) {
    Word ia = f(g.image_a());
    Word ib = f(g.image_b());
    if (f.has_certificate() && g.has_certificate())
        return Morphism(std::move(ia), std::move(ib), f.certificate() + g.certificate());
    return Morphism(std::move(ia), std::move(ib));
}

/// m-fold composition, m >= 0; power(f, 0) is the identity.
inline Morphism power(const Morphism& f, std::int64_t m) {
    if (m < 0) throw IndexOutOfRange("morphism power must be nonnegative");
    Morphism out;
    for (std::int64_t i = 0; i < m; ++i) out = compose(out, f);
    return out;
}

/// True when f(c) starts with c and is longer than one letter.
inline bool is_prolongable(const Morphism& f, Letter c) {
    const Word& im = f.image(c);
    return im.size() >= 2 && im[0] == c;
}

/// The infinite word f^inf(c).  Requires f prolongable on c.
inline WordStream fixed_point(const Morphism& f, Letter c) {
    if (!is_prolongable(f, c))
        throw NotProlongable("morphism is not prolongable on '" +
                             std::string(1, to_char(c)) + "'");
    auto cur = std::make_shared<Word>(f.image(c));
    Morphism m = f;
    return WordStream([m, cur](std::string& buf, std::size_t target) {
        while (cur->size() < target) *cur = m(*cur);
        buf = cur->str();
    });
}

/// Number of right conjugates: |f(ab)| - 1 (indices 0 .. |f(ab)| - 2).
inline std::int64_t num_conjugates(const Morphism& f) {
    return static_cast<std::int64_t>(f.image_a().size() + f.image_b().size()) - 1;
}

/**
 * The k-th right conjugate f_k, satisfying f(w) u = u f_k(w) where u is the
 * length-k common prefix of f(a)^inf and f(b)^inf.  Throws NoCommonPrefix if
 * those powers disagree before position k.
 */
inline Morphism right_conjugate(const Morphism& f, std::int64_t k) {
    if (k < 0 || k > num_conjugates(f) - 1)
        throw IndexOutOfRange("conjugate index must lie in [0, |f(ab)|-2]");
    if (k == 0) return f;
    auto cover = [&](const Word& w) {
        Word out = w;
        while (out.size() < static_cast<std::size_t>(k)) out = out + w;
        return out;
    };
    Word pa = cover(f.image_a());
    Word pb = cover(f.image_b());
    for (std::int64_t i = 0; i < k; ++i) {
        if (pa[static_cast<std::size_t>(i)] != pb[static_cast<std::size_t>(i)])
            throw NoCommonPrefix("images share only " + std::to_string(i) +
                                 " leading letters, need " + std::to_string(k));
    }
    Word u = pa.substr(0, static_cast<std::size_t>(k));
    return Morphism(strip_prefix(u, f.image_a() + u), strip_prefix(u, f.image_b() + u));
}

/// Certificate with every "EE" cancelled; canonical in the standard monoid.
inline std::string reduced_certificate(const Morphism& f) {
    std::string out;
    for (char c : f.certificate()) {
        if (c == 'E' && !out.empty() && out.back() == 'E')
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

/**
 * Membership test for {phi, E phi, phi E, E phi E}+ minus ({E phi}+ u {phi E}+)
 * on the reduced certificate: true exactly when some power of f (up to letter
 * exchange bookkeeping) has an infinite fixed word.
 */
inline bool generates_infinite_word(const Morphism& f) {
    std::string r = reduced_certificate(f);
    if (r.find('p') == std::string::npos) return false;
    auto alternates = [&](char first, char second) {
        if (r.size() % 2 != 0) return false;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != (i % 2 == 0 ? first : second)) return false;
        return true;
    };
    return !alternates('E', 'p') && !alternates('p', 'E');
}

} // namespace sturmian
