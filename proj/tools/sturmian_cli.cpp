// Command-line frontend: generation, morphism inspection, singular words,
// conjugate decompositions, the conjugate table, and the verification suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturmian/sturmian.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sturmian;

std::size_t output_cap() {
    const char* raw = std::getenv("STURMIAN_CAP");
    if (!raw) return 1'000'000;
    try {
        long long v = std::stoll(raw);
        if (v < 1) throw std::invalid_argument("");
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        throw ParseError("STURMIAN_CAP must be a positive integer");
    }
}

void require_within_cap(std::size_t want, const char* what) {
    std::size_t cap = output_cap();
    if (want > cap)
        throw CapExceeded(std::string(what) + " of " + std::to_string(want) +
                          " letters exceeds the cap of " + std::to_string(cap) +
                          " (raise STURMIAN_CAP to override)");
}

std::string display_word(const Word& w) { return w.empty() ? "ε" : w.str(); }

std::string sigma_name(bool hat, bool unicode) {
    if (unicode) return hat ? "σ̂" : "σ";
    return hat ? "sigma_hat" : "sigma";
}

struct GenOptions {
    std::string cf_text;
    std::string directive_text;
    std::string mechanical;
    std::string rho_text = "0";
    std::int64_t length = 0;
    std::string format = "text";
};

int run_gen(const GenOptions& opt) {
    require_within_cap(static_cast<std::size_t>(opt.length), "requested length");
    auto len = static_cast<std::size_t>(opt.length);
    json out;
    std::string variant = "characteristic";
    Word word;
    if (!opt.directive_text.empty()) {
        DirectiveSequence d = DirectiveSequence::parse(opt.directive_text);
        word = characteristic_word(d).prefix(len);
        json dirs = json::array();
        for (std::size_t i = 1; i <= d.length().value(); ++i)
            dirs.push_back(d.at(static_cast<std::int64_t>(i)));
        out["directive"] = std::move(dirs);
    } else {
        SturmCF cf = SturmCF::parse(opt.cf_text);
        out["alpha"] = cf.str();
        if (!opt.mechanical.empty()) {
            variant = "mechanical-" + opt.mechanical;
            Rational rho = Rational::parse(opt.rho_text);
            out["rho"] = rho.str();
            auto kind = opt.mechanical == "floor" ? MechanicalVariant::Floor
                                                  : MechanicalVariant::Ceiling;
            word = mechanical_word(surd_value(cf), rho, kind).prefix(len);
        } else {
            word = characteristic_word(cf).prefix(len);
        }
    }
    if (opt.format == "json") {
        out["variant"] = variant;
        out["length"] = opt.length;
        out["word"] = word.str();
        std::cout << out.dump() << '\n';
    } else {
        std::cout << word.str() << '\n';
    }
    return 0;
}

struct MorphismOptions {
    std::string cf_text;
    std::optional<std::int64_t> power_m;
    std::optional<std::int64_t> conj_k;
    std::string format = "text";
    bool unicode = false;
};

int run_morphism(const MorphismOptions& opt) {
    SturmCF cf = SturmCF::parse(opt.cf_text);
    Morphism sigma = build_sigma(cf);
    Morphism hat = build_sigma_hat(cf);
    std::int64_t m = opt.power_m.value_or(1);
    std::optional<Morphism> pw;
    if (opt.power_m) pw = power(sigma, *opt.power_m);
    std::optional<Morphism> conj;
    if (opt.conj_k) conj = right_conjugate(power(sigma, m), *opt.conj_k);

    if (opt.format == "json") {
        json out;
        out["alpha"] = cf.str();
        out["sigma"] = {{"a", sigma.image_a().str()},
                        {"b", sigma.image_b().str()},
                        {"certificate", sigma.certificate()}};
        out["sigma_hat"] = {{"a", hat.image_a().str()},
                            {"b", hat.image_b().str()},
                            {"certificate", hat.certificate()}};
        out["generates_infinite_word"] = generates_infinite_word(sigma);
        if (pw) out["power"] = {{"m", *opt.power_m},
                                {"a", pw->image_a().str()},
                                {"b", pw->image_b().str()}};
        if (conj) out["conjugate"] = {{"m", m},
                                      {"k", *opt.conj_k},
                                      {"a", conj->image_a().str()},
                                      {"b", conj->image_b().str()}};
        std::cout << out.dump() << '\n';
        return 0;
    }

    std::string sg = sigma_name(false, opt.unicode);
    std::cout << "alpha = " << cf.str() << '\n'
              << sg << ": " << sigma.str() << '\n'
              << sigma_name(true, opt.unicode) << ": " << hat.str() << '\n'
              << "certificate: " << sigma.certificate() << '\n'
              << "generates_infinite_word: "
              << (generates_infinite_word(sigma) ? "true" : "false") << '\n';
    if (pw)
        std::cout << sg << '^' << *opt.power_m << ": " << pw->str() << '\n';
    if (conj)
        std::cout << '(' << sg << '^' << m << ")_" << *opt.conj_k << ": " << conj->str()
                  << '\n';
    return 0;
}

struct SingularOptions {
    std::string cf_text;
    std::int64_t depth = 8;
    std::string format = "text";
};

int run_singular(const SingularOptions& opt) {
    SturmCF cf = SturmCF::parse(opt.cf_text);
    if (opt.depth < -2) throw IndexOutOfRange("depth must be >= -2");
    require_within_cap(static_cast<std::size_t>(convergent(cf, opt.depth + 2).q),
                       "largest singular word");
    json singular = json::array(), adjoining = json::array();
    std::vector<std::pair<Word, Word>> rows;
    for (std::int64_t n = -2; n <= opt.depth; ++n) {
        rows.emplace_back(singular_word(cf, n), adjoining_singular(cf, n));
        singular.push_back({{"n", n}, {"word", rows.back().first.str()}});
        adjoining.push_back({{"n", n}, {"word", rows.back().second.str()}});
    }
    if (opt.format == "json") {
        json out;
        out["alpha"] = cf.str();
        out["singular"] = std::move(singular);
        out["adjoining"] = std::move(adjoining);
        std::cout << out.dump() << '\n';
        return 0;
    }
    std::cout << "alpha = " << cf.str() << '\n';
    for (std::int64_t n = -2; n <= opt.depth; ++n)
        std::cout << "w_{" << n << "} = "
                  << display_word(rows[static_cast<std::size_t>(n + 2)].first) << '\n';
    for (std::int64_t n = -2; n <= opt.depth; ++n)
        std::cout << "v_{" << n << "} = "
                  << display_word(rows[static_cast<std::size_t>(n + 2)].second) << '\n';
    return 0;
}

/// Type (i) input decomposes c_alpha; type (ii) input is routed through its
/// complement and decomposes c itself via the mirrored theorem.
ConjugateDecomposition make_decomposition(const SturmCF& cf, std::int64_t k) {
    switch (classify(cf)) {
        case SturmType::TypeI:
            return conjugate_decomposition(cf, k);
        case SturmType::TypeII:
            return conjugate_decomposition_hat(complement(cf), k);
        default:
            throw UnsupportedExpansion("decomposition requires a Sturm number, got " + cf.str());
    }
}

struct DecomposeOptions {
    std::string cf_text;
    std::int64_t k = 0;
    std::int64_t depth = 6;
    std::int64_t max_len = 100000;
    std::string format = "text";
    bool unicode = false;
};

int run_decompose(const DecomposeOptions& opt) {
    SturmCF cf = SturmCF::parse(opt.cf_text);
    if (opt.depth < 1) throw IndexOutOfRange("depth must be >= 1");
    ConjugateDecomposition dec = make_decomposition(cf, opt.k);
    auto count = static_cast<std::size_t>(opt.depth);
    std::size_t total = 0;
    for (std::size_t i = 0; i < count; ++i) {
        require_within_cap(total, "factor output");
        total += dec.factor(i).word.size();
    }
    require_within_cap(total, "factor output");
    std::size_t verified = std::min<std::size_t>(total, static_cast<std::size_t>(opt.max_len));
    if (dec.concatenated(count).substr(0, verified) != dec.conjugated_word().prefix(verified))
        throw CertificateMismatch("decomposition does not concatenate to the conjugate");

    if (opt.format == "json") {
        json out;
        out["alpha"] = cf.str();
        out["k"] = dec.k();
        out["m"] = dec.m();
        out["p"] = dec.p();
        out["conj_index"] = dec.conj_index();
        json factors = json::array();
        for (std::size_t i = 0; i < count; ++i)
            factors.push_back({{"j", dec.factor(i).j}, {"word", dec.factor(i).word.str()}});
        out["factors"] = std::move(factors);
        out["verified_prefix_len"] = verified;
        std::cout << out.dump() << '\n';
        return 0;
    }

    std::cout << "alpha = " << cf.str() << '\n'
              << "k = " << dec.k() << '\n'
              << "m = " << dec.m() << '\n'
              << "p = " << dec.p() << '\n'
              << "conjugate_index = " << dec.conj_index() << '\n'
              << "removed_prefix = " << display_word(dec.removed_prefix()) << '\n';
    for (std::size_t i = 0; i < count; ++i) {
        const Factor& f = dec.factor(i);
        std::cout << factor_symbol(f, dec.hat(), opt.unicode) << " = " << display_word(f.word)
                  << '\n';
    }
    std::cout << "verified_prefix_len = " << verified << '\n';
    return 0;
}

struct TableOptions {
    std::string cf_text;
    std::int64_t k_max = 0;
    std::int64_t depth = 4;
    std::string format = "text";
    bool unicode = false;
};

int run_table(const TableOptions& opt) {
    SturmCF cf = SturmCF::parse(opt.cf_text);
    if (opt.k_max < 0) throw IndexOutOfRange("k_max must be nonnegative");
    if (opt.depth < 1) throw IndexOutOfRange("depth must be >= 1");
    require_within_cap(static_cast<std::size_t>(opt.k_max), "removed prefix");
    json rows = json::array();
    std::vector<std::string> lines;
    for (std::int64_t k = 0; k <= opt.k_max; ++k) {
        ConjugateDecomposition dec = make_decomposition(cf, k);
        auto count = static_cast<std::size_t>(opt.depth);
        json symbols = json::array();
        std::string syms;
        for (std::size_t i = 0; i < count; ++i) {
            std::string sym = factor_symbol(dec.factor(i), dec.hat(), opt.unicode);
            symbols.push_back(sym);
            if (i) syms += ' ';
            syms += sym;
        }
        Word removed = dec.removed_prefix();
        rows.push_back({{"k", dec.k()},
                        {"m", dec.m()},
                        {"p", dec.p()},
                        {"conj_index", dec.conj_index()},
                        {"removed_prefix", removed.str()},
                        {"factors", std::move(symbols)}});
        std::ostringstream line;
        line << "k=" << dec.k() << "  m=" << dec.m() << "  (" << display_word(removed)
             << ")^{-1}c = " << syms << " ...";
        lines.push_back(line.str());
    }
    if (opt.format == "json") {
        json out;
        out["alpha"] = cf.str();
        out["rows"] = std::move(rows);
        std::cout << out.dump() << '\n';
        return 0;
    }
    std::cout << "alpha = " << cf.str() << '\n';
    for (const std::string& line : lines) std::cout << line << '\n';
    return 0;
}

struct VerifyOptions {
    std::string cf_text;
    std::string suite = "all";
    std::int64_t max_len = 5000;
    std::string format = "text";
};

int run_verify(const VerifyOptions& opt) {
    SturmCF cf = SturmCF::parse(opt.cf_text);
    if (opt.max_len < 1) throw IndexOutOfRange("max-len must be positive");
    require_within_cap(static_cast<std::size_t>(opt.max_len), "verification length");
    std::vector<SuiteResult> results =
        run_suites(opt.suite, cf, static_cast<std::size_t>(opt.max_len));
    std::size_t failures = 0;
    for (const SuiteResult& r : results) failures += r.failures;

    if (opt.format == "json") {
        json suites = json::array();
        for (const SuiteResult& r : results) {
            json row;
            row["name"] = r.name;
            row["cases"] = r.cases;
            row["failures"] = r.failures;
            row["counterexample"] =
                r.first_counterexample.empty() ? json() : json(r.first_counterexample);
            row["skipped"] = r.skipped;
            if (r.skipped) row["note"] = r.note;
            suites.push_back(std::move(row));
        }
        json out;
        out["alpha"] = cf.str();
        out["max_len"] = opt.max_len;
        out["suites"] = std::move(suites);
        out["total_failures"] = failures;
        std::cout << out.dump() << '\n';
        return failures ? 1 : 0;
    }

    std::cout << "alpha = " << cf.str() << '\n';
    for (const SuiteResult& r : results) {
        if (r.skipped) {
            std::cout << "suite " << r.name << ": skipped (" << r.note << ")\n";
            continue;
        }
        std::cout << "suite " << r.name << ": " << r.cases << " cases, " << r.failures
                  << " failures\n";
        if (!r.first_counterexample.empty())
            std::cout << "  counterexample: " << r.first_counterexample << '\n';
    }
    std::cout << "verify: " << results.size() << " suites, " << failures << " failures\n";
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic Sturmian words, standard morphisms, and conjugate decompositions"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "Generate a word prefix");
    auto* gen_cf = cmd_gen->add_option("--cf", gen.cf_text, "Continued fraction, e.g. \"0;2,(1)\"");
    auto* gen_dir = cmd_gen->add_option("--directive", gen.directive_text,
                                        "Finite directive sequence, e.g. \"1,2,2\"");
    gen_cf->excludes(gen_dir);
    cmd_gen->add_option("--length", gen.length, "Prefix length")->required();
    cmd_gen->add_option("--mechanical", gen.mechanical, "Mechanical variant")
        ->check(CLI::IsMember({"floor", "ceiling"}))
        ->needs(gen_cf);
    cmd_gen->add_option("--rho", gen.rho_text, "Mechanical intercept, e.g. \"1/3\"");
    cmd_gen->add_option("--format", gen.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    MorphismOptions mor;
    auto* cmd_mor = app.add_subcommand("morphism", "Show sigma and sigma_hat");
    cmd_mor->add_option("--cf", mor.cf_text, "Continued fraction")->required();
    std::int64_t mor_power = 0, mor_k = 0;
    auto* mor_power_opt = cmd_mor->add_option("--power", mor_power, "Also show sigma^m");
    auto* mor_k_opt = cmd_mor->add_option("--k", mor_k, "Also show the k-th right conjugate");
    cmd_mor->add_option("--format", mor.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_mor->add_flag("--unicode", mor.unicode, "Use Greek symbol names");

    SingularOptions sing;
    auto* cmd_sing = app.add_subcommand("singular", "List singular and adjoining words");
    cmd_sing->add_option("--cf", sing.cf_text, "Continued fraction")->required();
    cmd_sing->add_option("--depth", sing.depth, "Largest index to print");
    cmd_sing->add_option("--format", sing.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    DecomposeOptions dec;
    auto* cmd_dec = app.add_subcommand("decompose", "Decompose the k-th conjugate");
    cmd_dec->add_option("--cf", dec.cf_text, "Continued fraction")->required();
    cmd_dec->add_option("--k", dec.k, "Conjugate number")->required();
    cmd_dec->add_option("--depth", dec.depth, "Number of factors");
    cmd_dec->add_option("--max-len", dec.max_len, "Largest verified prefix length");
    cmd_dec->add_option("--format", dec.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_dec->add_flag("--unicode", dec.unicode, "Use Greek symbol names");

    TableOptions tab;
    auto* cmd_tab = app.add_subcommand("table", "Tabulate conjugates k = 0..k_max");
    cmd_tab->add_option("--cf", tab.cf_text, "Continued fraction")->required();
    cmd_tab->add_option("--k_max", tab.k_max, "Largest conjugate number")->required();
    cmd_tab->add_option("--depth", tab.depth, "Factor symbols per row");
    cmd_tab->add_option("--format", tab.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_tab->add_flag("--unicode", tab.unicode, "Use Greek symbol names");

    VerifyOptions ver;
    auto* cmd_ver = app.add_subcommand("verify", "Run verification suites");
    cmd_ver->add_option("--cf", ver.cf_text, "Continued fraction")->required();
    cmd_ver->add_option("--suite", ver.suite, "Suite name or \"all\"");
    cmd_ver->add_option("--max-len", ver.max_len, "Prefix length for stream comparisons");
    cmd_ver->add_option("--format", ver.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: ParseError: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cmd_gen->parsed()) {
            if (gen_cf->count() == 0 && gen_dir->count() == 0)
                throw ParseError("gen needs --cf or --directive");
            return run_gen(gen);
        }
        if (cmd_mor->parsed()) {
            if (mor_power_opt->count()) mor.power_m = mor_power;
            if (mor_k_opt->count()) mor.conj_k = mor_k;
            return run_morphism(mor);
        }
        if (cmd_sing->parsed()) return run_singular(sing);
        if (cmd_dec->parsed()) return run_decompose(dec);
        if (cmd_tab->parsed()) return run_table(tab);
        if (cmd_ver->parsed()) return run_verify(ver);
    } catch (const sturmian::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
