#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>

#include "thompson/distortion.hpp"
#include "thompson/embeddings.hpp"
#include "thompson/group.hpp"
#include "thompson/metrics.hpp"
#include "thompson/render.hpp"

namespace thompson::cli {

namespace {

const std::set<std::string> kCommands{"nf",        "mul",       "inv",   "pow",    "metric", "ball",
                                      "embed-phi", "embed-psi", "sweep", "render", "verify"};

struct Options {
    std::vector<std::string> words;
    std::vector<std::string> items;
    std::string word;
    long long pow = 1;
    std::optional<long long> t;
    std::optional<std::size_t> radius;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "text";
    std::string addresses;
    std::string embedding = "phi";
    std::string source = "trees";
    std::size_t samples = 1000;
    std::size_t n = 0;
    long long max_t = 20;
    bool nontrivial = false;
    bool positive_t = false;
};

GroupElement element_of(const std::string& text) { return evaluate(parse_word(text)); }

std::size_t checked_radius(const std::optional<std::size_t>& radius, std::size_t fallback) {
    const std::size_t r = radius.value_or(fallback);
    if (r > kDefaultRadiusCap) {
        throw Error("radius " + std::to_string(r) + " exceeds the oracle cap " + std::to_string(kDefaultRadiusCap));
    }
    return r;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    return start < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                            [](char c) { return c >= '0' && c <= '9'; });
}

long long to_integer(const std::string& s) {
    long long v = 0;
    const char* begin = s.data() + (s[0] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("integer out of range: " + s);
    return v;
}

// Writes to --out when given, otherwise to `out`.
template <class Fn>
void emit(const Options& o, std::ostream& out, Fn&& write) {
    if (o.out_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(o.out_path);
    if (!file) throw Error("cannot open output file '" + o.out_path + "'");
    write(file);
}

void print_metric(const GroupElement& g, const Options& o, std::ostream& out) {
    const auto b = length_bounds(g);
    out << "N=" << g.caret_count();
    if (b.defined) {
        out << " bounds=(" << b.lower << ", " << b.upper << ")";
    } else {
        out << " bounds=undefined";
    }
    if (o.radius) {
        const std::size_t r = checked_radius(o.radius, 0);
        if (auto len = exact_length(g, r)) {
            out << " exact=" << *len;
        } else {
            out << " exact>" << r;
        }
    }
    out << '\n';
}

void run_ball(const Options& o, std::ostream& out) {
    const std::size_t radius = checked_radius(o.radius, 2);
    CayleyBall ball;
    ball.grow_to(radius);
    emit(o, out, [&](std::ostream& os) {
        if (o.format == "csv") {
            os << "length,normal_form\n";
            for (std::size_t r = 0; r <= radius; ++r) {
                for (const auto& g : ball.sphere(r)) os << r << ',' << to_string(g.normal_form()) << '\n';
            }
            return;
        }
        std::size_t total = 0;
        os << "radius sphere ball\n";
        for (std::size_t r = 0; r <= radius; ++r) {
            total += ball.sphere(r).size();
            os << r << ' ' << ball.sphere(r).size() << ' ' << total << '\n';
        }
    });
}

void run_psi(const Options& o, std::ostream& out) {
    if (o.addresses.empty() && o.items.empty()) throw Error("embed-psi needs --addresses");
    ProductElement e;
    bool seen_integer = false;
    for (const auto& item : o.items) {
        if (is_integer(item)) {
            seen_integer = true;
            e.z_factors.push_back(to_integer(item));
        } else {
            if (seen_integer) throw Error("F factors (words) must precede Z factors (integers)");
            e.f_factors.push_back(element_of(item));
        }
    }
    const GroupElement g = product_embed(PrefixSet::parse(o.addresses), e);
    out << to_string(g.normal_form()) << '\n' << "N=" << g.caret_count() << '\n';
}

void run_sweep(const Options& o, std::ostream& out) {
    SamplerConfig cfg;
    cfg.seed = o.seed.value_or(0);
    cfg.samples = o.samples;
    cfg.max_abs_t = o.max_t;
    cfg.nontrivial_factors = o.nontrivial;
    cfg.positive_t_only = o.positive_t;
    cfg.ball_radius = checked_radius(o.radius, 8);
    if (o.source == "ball") {
        cfg.source = FactorSource::Ball;
    } else if (o.source != "trees") {
        throw Error("unknown factor source '" + o.source + "'");
    }
    EmbeddingSpec spec;
    if (o.embedding == "phi") {
        spec = EmbeddingSpec::burillo();
    } else if (o.embedding == "psi") {
        const PrefixSet ps = PrefixSet::parse(o.addresses);
        if (ps.size() == 0) throw Error("psi needs at least one address");
        spec = EmbeddingSpec::product(ps, ps.size() - 1, o.n);
    } else {
        throw Error("unknown embedding '" + o.embedding + "'");
    }
    CayleyBall oracle;
    const auto samples = distortion_sweep(spec, cfg, oracle);
    emit(o, out, [&](std::ostream& os) { write_csv(os, samples); });
}

bool run_verify(std::ostream& out) {
    const RelatorReport report = verify_relators();
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
        if (c.passed) {
            ++passed;
        } else {
            out << "FAIL " << c.name << '\n';
        }
    }
    out << "relators: " << passed << '/' << report.checks.size() << '\n';
    out << (report.all_passed() ? "PASS" : "FAIL") << '\n';
    return report.all_passed();
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "usage: thompson <command> [args]; commands: nf mul inv pow metric ball embed-phi embed-psi sweep "
               "render verify\n";
        return kExitUsage;
    }
    if (kCommands.count(args[0]) == 0 && args[0] != "--help" && args[0] != "-h") {
        err << "error: unknown command '" << args[0] << "'\n";
        return kExitUsage;
    }

    CLI::App app{"Thompson's group F: tree pairs, normal forms, metrics and embeddings", "thompson"};
    app.require_subcommand(1);
    Options o;

    auto* nf = app.add_subcommand("nf", "print the normal form of a word");
    nf->add_option("word", o.word, "word, e.g. \"x0 x1^-1\"")->required();

    auto* mul = app.add_subcommand("mul", "normal form of the product of words");
    mul->add_option("words", o.words, "factors, left to right")->required();

    auto* inv = app.add_subcommand("inv", "normal form of the inverse");
    inv->add_option("word", o.word)->required();

    auto* pow = app.add_subcommand("pow", "normal form of a power");
    pow->add_option("word", o.word)->required();
    pow->add_option("--pow", o.pow, "exponent")->required();

    auto* metric = app.add_subcommand("metric", "caret count, word-length bounds, optional exact length");
    metric->add_option("word", o.word)->required();
    metric->add_option("--pow", o.pow, "raise the word to this power first");
    metric->add_option("--radius", o.radius, "search radius for the exact length");

    auto* ball = app.add_subcommand("ball", "sphere sizes of the Cayley graph ball");
    ball->add_option("--radius", o.radius, "ball radius (default 2)");
    ball->add_option("--format", o.format, "text|csv");
    ball->add_option("--out", o.out_path, "output path");

    auto* phi = app.add_subcommand("embed-phi", "Phi(w, t) = phi^2(w) (x0 x1^-1)^t");
    phi->add_option("word", o.word)->required();
    phi->add_option("t", o.t)->required();

    auto* psi = app.add_subcommand("embed-psi", "Psi(w_1..w_m, t_1..t_n) over an address set");
    psi->add_option("--addresses", o.addresses, "s_1,...,s_{m+1}")->required();
    psi->add_option("factors", o.items, "m words followed by n integers");

    auto* sweep = app.add_subcommand("sweep", "distortion sweep as CSV");
    sweep->add_option("--embedding", o.embedding, "phi|psi");
    sweep->add_option("--addresses", o.addresses, "psi address set s_1,...,s_{m+1}");
    sweep->add_option("--n", o.n, "number of Z factors for psi");
    sweep->add_option("--samples", o.samples, "number of samples");
    sweep->add_option("--seed", o.seed, "random seed (default 0)");
    sweep->add_option("--radius", o.radius, "oracle radius for exact lengths (default 8)");
    sweep->add_option("--source", o.source, "trees|ball");
    sweep->add_option("--max-t", o.max_t, "largest |t|");
    sweep->add_flag("--nontrivial", o.nontrivial, "only non-identity F factors and nonzero t");
    sweep->add_flag("--positive-t", o.positive_t, "only t > 0");
    sweep->add_option("--out", o.out_path, "output path");

    auto* render = app.add_subcommand("render", "render the reduced tree pair");
    render->add_option("word", o.word)->required();
    render->add_option("--format", o.format, "text|dot");
    render->add_option("--out", o.out_path, "output path");

    auto* verify = app.add_subcommand("verify", "evaluate the defining relators");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    try {
        if (nf->parsed()) {
            out << to_string(to_normal_form(parse_word(o.word))) << '\n';
        } else if (mul->parsed()) {
            GroupElement g;
            for (const auto& w : o.words) g = multiply(g, element_of(w));
            out << to_string(g.normal_form()) << '\n';
        } else if (inv->parsed()) {
            out << to_string(inverse(element_of(o.word)).normal_form()) << '\n';
        } else if (pow->parsed()) {
            out << to_string(power(element_of(o.word), o.pow).normal_form()) << '\n';
        } else if (metric->parsed()) {
            print_metric(power(element_of(o.word), o.pow), o, out);
        } else if (ball->parsed()) {
            run_ball(o, out);
        } else if (phi->parsed()) {
            const GroupElement g = burillo_embed(element_of(o.word), *o.t);
            out << to_string(g.normal_form()) << '\n' << "N=" << g.caret_count() << '\n';
        } else if (psi->parsed()) {
            run_psi(o, out);
        } else if (sweep->parsed()) {
            run_sweep(o, out);
        } else if (render->parsed()) {
            const GroupElement g = element_of(o.word);
            emit(o, out, [&](std::ostream& os) {
                const auto text = render_tree_pair(g, parse_render_format(o.format));
                os << text;
                if (text.empty() || text.back() != '\n') os << '\n';
            });
        } else if (verify->parsed()) {
            return run_verify(out) ? kExitOk : kExitFailure;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace thompson::cli
