#pragma once

/**
 * @file rees_cli.hpp
 * @brief The `rees` command line, as a function so tests can drive it.
 *
 * run() never throws: library errors become exit code 1 with a JSON error
 * object on stdout, usage errors exit 2 with the usage text on stderr.
 */

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rees/rees.hpp"
#include "rees/verify.hpp"

namespace rees::cli {

using json = nlohmann::ordered_json;

/// A flag or config problem; maps to exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct options {
    std::string out = "text";
    std::string config_path;
    int precision = default_precision;

    std::string sgp = "<2,3>";
    std::string ideal;
    std::string ring = "zmod:8";
    std::string a = "0";
    std::string b = "0";
    std::string field = "fp:5";
    int m = 0;
    int n = 0;
    int n_max = 6;
    int p_max = 100;
    bool oracle = false;
    bool duplication = false;
    std::string suite = "all";
    std::vector<std::string> operands;
};

namespace detail {

inline std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto text = std::string(rees::detail::trim(line));
        if (text.empty() || text.front() == '#') continue;
        auto eq = text.find('=');
        if (eq == std::string::npos)
            throw usage_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        out[std::string(rees::detail::trim(text.substr(0, eq)))] = std::string(rees::detail::trim(text.substr(eq + 1)));
    }
    return out;
}

inline int to_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw usage_error("'" + key + "' expects an integer, got '" + value + "'");
    }
}

inline std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    for (int v : rees::detail::parse_int_list(text)) out.push_back(v);
    return out;
}

inline json semigroup_json(const numerical_semigroup& s) {
    json j;
    j["literal"] = s.to_string();
    j["generators"] = s.generators();
    j["frobenius"] = s.frobenius();
    j["gaps"] = s.gaps();
    j["genus"] = s.genus();
    j["type"] = s.type();
    j["symmetric"] = s.is_symmetric();
    return j;
}

inline std::string semigroup_text(const numerical_semigroup& s) {
    std::ostringstream os;
    os << s.to_string() << "\n"
       << "frobenius: " << s.frobenius() << "\n"
       << "gaps: {" << rees::detail::join_ints(s.gaps()) << "}\n"
       << "genus: " << s.genus() << "\n"
       << "type: " << s.type() << "\n"
       << "symmetric: " << (s.is_symmetric() ? "true" : "false") << "\n";
    return os.str();
}

inline std::string bool_text(bool v) { return v ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Subcommands. Each returns the document to print in json mode and writes
// its text/csv rendering to `text`.

inline json run_sgp(const std::string& action, const options& o, std::ostream& text) {
    auto s = parse_semigroup(o.sgp);
    json j;
    j["config"] = {{"command", "sgp " + action}, {"sgp", s.to_string()}};
    if (action == "info") {
        j["semigroup"] = semigroup_json(s);
        text << semigroup_text(s);
    } else if (action == "dup") {
        if (o.ideal.empty()) throw usage_error("sgp dup needs --ideal");
        if (o.m == 0) throw usage_error("sgp dup needs --m");
        auto e = parse_ideal(o.ideal, &s);
        auto d = duplication(s, e, o.m);
        j["config"]["ideal"] = e.to_string();
        j["config"]["m"] = o.m;
        j["semigroup"] = semigroup_json(d.semigroup);
        j["warnings"] = d.warnings;
        text << semigroup_text(d.semigroup);
        for (const auto& w : d.warnings) text << "warning: " << w << "\n";
    } else if (action == "apery") {
        int n = o.n == 0 ? s.multiplicity() : o.n;
        auto ap = s.apery_set(n);
        j["config"]["n"] = n;
        j["apery"] = ap;
        text << "{" << rees::detail::join_ints(ap) << "}\n";
    } else if (action == "canonical") {
        auto k = canonical_ideal(s);
        j["canonical"] = k.to_string();
        j["generators"] = k.minimal_generators();
        text << k.to_string() << "\n";
    } else if (action == "type") {
        if (o.ideal.empty()) {
            j["type"] = s.type();
            j["pseudo_frobenius"] = s.pseudo_frobenius();
            text << s.type() << "\n";
        } else {
            auto e = parse_ideal(o.ideal, &s);
            auto t = cm_type_terms(s, e);
            j["config"]["ideal"] = e.to_string();
            j["type"] = t.total();
            j["colon_term"] = t.colon_term;
            j["socle_term"] = t.socle_term;
            j["canonical"] = t.socle_term == 1;
            text << t.total() << "\n";
        }
    } else {
        throw usage_error("unknown sgp action '" + action + "'");
    }
    return j;
}

template <base_ring R>
json element_json(const family_element<R>& x) {
    return {{"r", x.ring().to_string(x.r())}, {"i", x.ring().to_string(x.i())}};
}

template <base_ring R>
typename R::ideal_type ring_ideal(const R& ring, const options& o) {
    if constexpr (requires { ring.semigroup(); }) {
        if (o.ideal.empty()) return ring.make_ideal(relative_ideal::whole(ring.semigroup()));
        return ring.make_ideal(parse_ideal(o.ideal, &ring.semigroup()));
    } else {
        std::vector<typename R::value_type> gens;
        if (o.ideal.empty()) {
            gens.push_back(ring.one());
        } else {
            for (long long g : parse_ll_list(o.ideal)) gens.push_back(ring.from_int(g));
        }
        return ring.make_ideal(gens);
    }
}

template <base_ring R>
json run_ring_in(const std::string& op, R ring, const options& o, std::ostream& text) {
    auto ideal = ring_ideal(ring, o);
    auto ctx = make_context(ring, ideal, ring.parse(o.a), ring.parse(o.b));
    const R& R_ = ctx->ring;

    std::vector<family_element<R>> args;
    for (const auto& lit : o.operands) args.push_back(parse_element(ctx, lit));
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw usage_error("ring " + op + " takes " + std::to_string(k) + " element(s), got " +
                              std::to_string(args.size()));
    };

    json j;
    j["ctx"] = {{"ring", R_.name()}, {"ideal", ctx->ideal.to_string()}, {"a", R_.to_string(ctx->a)},
                {"b", R_.to_string(ctx->b)}};
    if constexpr (requires { ring.precision(); }) j["ctx"]["precision"] = ring.precision();
    j["op"] = op;
    j["args"] = json::array();
    for (const auto& x : args) j["args"].push_back(x.to_string());

    if (op == "mul" || op == "add" || op == "sub") {
        need(2);
        auto r = op == "mul" ? args[0] * args[1] : op == "add" ? args[0] + args[1] : args[0] - args[1];
        j["result"] = element_json(r);
        text << r.to_string() << "\n";
    } else if (op == "invert") {
        need(1);
        auto r = invert(args[0]);
        j["result"] = element_json(r);
        text << r.to_string() << "\n";
    } else if (op == "unit") {
        need(1);
        bool u = is_unit(args[0]);
        j["result"] = {{"unit", u}, {"determinant", R_.to_string(determinant(args[0]))}};
        text << bool_text(u) << "\n";
    } else if (op == "det") {
        need(1);
        auto d = determinant(args[0]);
        j["result"] = {{"determinant", R_.to_string(d)}};
        text << R_.to_string(d) << "\n";
    } else if (op == "conj") {
        need(1);
        auto r = conjugate(args[0]);
        j["result"] = element_json(r);
        text << r.to_string() << "\n";
    } else if (op == "rationalize") {
        need(2);
        auto f = rationalize(args[0], args[1]);
        j["result"] = {{"numerator", element_json(f.numerator)}, {"denominator", R_.to_string(f.denominator)}};
        text << "(" << f.numerator.to_string() << ")/(" << R_.to_string(f.denominator) << ")\n";
    } else if (op == "idealization") {
        need(1);
        auto r = to_idealization(args[0]);
        j["result"] = {{"r", R_.to_string(r.r)}, {"i", R_.to_string(r.i)}};
        text << "(" << R_.to_string(r.r) << ", " << R_.to_string(r.i) << ")\n";
    } else if (op == "duplication") {
        need(1);
        auto r = to_duplication(args[0]);
        j["result"] = {{"first", R_.to_string(r.first)}, {"second", R_.to_string(r.second)}};
        text << "(" << R_.to_string(r.first) << ", " << R_.to_string(r.second) << ")\n";
    } else if (op == "parse") {
        need(1);
        j["result"] = element_json(args[0]);
        text << args[0].to_string() << "\n";
    } else {
        throw usage_error("unknown ring operation '" + op + "'");
    }
    return j;
}

inline json run_ring(const std::string& op, const options& o, std::ostream& text) {
    const std::string& name = o.ring;
    if (name == "int") return run_ring_in(op, integer_ring{}, o, text);
    if (name.rfind("zmod:", 0) == 0) {
        auto n = rees::detail::parse_bigint(name.substr(5));
        if (n < 2 || n > max_modulus)
            fail(error_kind::invalid_argument, "modulus must lie in [2, " + std::to_string(max_modulus) + "]");
        return run_ring_in(op, zmod_ring(static_cast<std::int64_t>(n)), o, text);
    }
    if (name == "series:q")
        return run_ring_in(op, series_ring<rational_field>(rational_field{}, parse_semigroup(o.sgp), o.precision), o,
                           text);
    if (name.rfind("series:fp:", 0) == 0) {
        auto p = rees::detail::parse_bigint(name.substr(10));
        if (p < 2 || p > (bigint(1) << 31)) fail(error_kind::invalid_argument, name + " is not a supported field");
        prime_field f(static_cast<std::int64_t>(p));
        return run_ring_in(op, series_ring<prime_field>(f, parse_semigroup(o.sgp), o.precision), o, text);
    }
    throw usage_error("unknown ring '" + name + "' (expected int, zmod:N, series:q or series:fp:P)");
}

inline prime_field parse_prime_field(const std::string& name) {
    if (name.rfind("fp:", 0) != 0) throw usage_error("--field expects fp:P, got '" + name + "'");
    auto p = rees::detail::parse_bigint(name.substr(3));
    if (p < 2 || p > (bigint(1) << 31)) fail(error_kind::invalid_argument, name + " is not a supported field");
    return prime_field(static_cast<std::int64_t>(p));
}

inline json hilbert_json(const hilbert_record& h) {
    json j;
    j["rows"] = json::array();
    for (std::size_t n = 0; n < h.values.size(); ++n) j["rows"].push_back({{"n", n}, {"H", h.values[n]}});
    j["stabilized_at"] = h.stabilized_at ? json(*h.stabilized_at) : json(nullptr);
    j["multiplicity"] = h.multiplicity ? json(*h.multiplicity) : json(nullptr);
    return j;
}

inline json run_invariants(const std::string& action, const options& o, std::ostream& text) {
    auto s = parse_semigroup(o.sgp);
    if (o.ideal.empty()) throw usage_error("invariants needs --ideal");
    auto e = parse_ideal(o.ideal, &s);
    json j;
    j["config"] = {{"command", "invariants " + action}, {"sgp", s.to_string()}, {"ideal", e.to_string()},
                   {"a", o.a}, {"b", o.b}};
    if (action == "hilbert") {
        j["config"]["nmax"] = o.n_max;
        j["config"]["oracle"] = o.oracle;
        auto h = hilbert_family(s, e, o.n_max);
        j["hilbert"] = hilbert_json(h);
        std::vector<int> vals = h.values;
        text << "H = " << rees::detail::join_ints(vals) << "\n";
        if (o.oracle) {
            auto f = parse_prime_field(o.field);
            series_ring<prime_field> ring(f, s, o.precision);
            auto ctx = make_context(ring, ring.make_ideal(e), ring.parse(o.a), ring.parse(o.b));
            auto bf = brute_force_hilbert(ctx, o.n_max);
            j["config"]["field"] = f.name();
            j["config"]["precision"] = o.precision;
            j["oracle"] = hilbert_json(bf);
            j["agree"] = bf.values == h.values;
            text << "oracle H = " << rees::detail::join_ints(bf.values) << " (" << f.name() << ")\n"
                 << "agree: " << bool_text(bf.values == h.values) << "\n";
        }
    } else if (action == "type") {
        auto t = cm_type_terms(s, e);
        j["type"] = t.total();
        j["colon_term"] = t.colon_term;
        j["socle_term"] = t.socle_term;
        text << t.total() << "\n";
    } else if (action == "gorenstein") {
        bool g = is_gorenstein(s, e);
        j["gorenstein"] = g;
        text << bool_text(g) << "\n";
    } else if (action == "embdim") {
        int v = embdim_family(s, e);
        j["embdim"] = v;
        text << v << "\n";
    } else if (action == "multiplicity") {
        int v = multiplicity_family(s, e);
        j["multiplicity"] = v;
        text << v << "\n";
    } else {
        throw usage_error("unknown invariants action '" + action + "'");
    }
    return j;
}

inline json run_fibers(const options& o, std::ostream& text) {
    auto a = rees::detail::parse_bigint(o.a);
    auto b = rees::detail::parse_bigint(o.b);
    const bigint limit = bigint(1) << 30;
    if (abs(a) > limit || abs(b) > limit) fail(error_kind::overflow, "|a|, |b| must stay below 2^30");
    if (o.p_max < 2 || o.p_max > (1 << 24)) throw usage_error("--pmax must lie in [2, 2^24]");
    std::vector<std::int64_t> gens;
    if (o.duplication) {
        if (o.ideal.empty()) throw usage_error("--duplication needs --ideal g1,g2,...");
        for (long long g : parse_ll_list(o.ideal)) gens.push_back(g);
    }
    const auto ai = static_cast<std::int64_t>(a), bi = static_cast<std::int64_t>(b);

    json j;
    j["config"] = {{"command", "fibers"}, {"a", ai}, {"b", bi}, {"pmax", o.p_max}, {"duplication", o.duplication}};
    if (o.duplication) j["config"]["ideal"] = gens;
    j["factors_over_q"] = factors_over_rationals(ai, bi);
    j["rows"] = json::array();
    text << "p,disc,splitting,quadratic,family\n";
    for (std::int64_t p = 2; p <= o.p_max; ++p) {
        if (!is_prime(p)) continue;
        std::optional<std::span<const std::int64_t>> dup;
        if (o.duplication) dup = std::span<const std::int64_t>(gens);
        auto r = count_primes_over(p, ai, bi, dup);
        j["rows"].push_back({{"p", r.p},
                             {"disc", r.discriminant},
                             {"splitting", std::string(to_string(r.splitting))},
                             {"quadratic", r.primes_over_quadratic},
                             {"family", std::string(to_string(r.primes_over_family))}});
        text << r.p << "," << r.discriminant << "," << to_string(r.splitting) << "," << r.primes_over_quadratic
             << "," << to_string(r.primes_over_family) << "\n";
    }
    return j;
}

inline json run_verify(const options& o, std::ostream& text, bool& all_passed) {
    auto results = verify::run_suite(o.suite);
    json j;
    j["config"] = {{"command", "verify"}, {"suite", o.suite}};
    j["checks"] = json::array();
    all_passed = true;
    for (const auto& r : results) {
        // Timings are left out of JSON so repeated runs stay byte-identical.
        j["checks"].push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        char line[64];
        std::snprintf(line, sizeof line, "[%s] %2d %-20s %7.3fs  ", r.passed ? "PASS" : "FAIL", r.id,
                      r.name.c_str(), r.seconds);
        text << line << r.detail << "\n";
        all_passed = all_passed && r.passed;
    }
    j["passed"] = all_passed;
    return j;
}

} // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    options o;
    CLI::App app{"Exact arithmetic for the rings R(I)_{a,b}, their invariants and numerical duplications", "rees"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", o.out, "Output mode")->check(CLI::IsMember({"text", "json", "csv"}));
    auto* config_opt = app.add_option("--config", o.config_path, "key=value file (precision, field, nmax, pmax, out)");
    auto* precision_opt = app.add_option("--precision", o.precision, "Series precision (default 64 or $REES_PRECISION)");

    std::string action;
    auto* sgp = app.add_subcommand("sgp", "Numerical semigroups and their ideals");
    sgp->add_option("action", action, "info | dup | apery | canonical | type")->required();
    sgp->add_option("--sgp", o.sgp, "Semigroup literal, e.g. \"<2,3>\"");
    sgp->add_option("--ideal", o.ideal, "Ideal: generators \"3,5\" or \"ideal(3;3)\"");
    sgp->add_option("--m", o.m, "Odd member of S for the duplication");
    sgp->add_option("--n", o.n, "Apery modulus (default: multiplicity)");

    auto* ring = app.add_subcommand("ring", "Arithmetic in R(I)_{a,b}");
    ring->add_option("op", action,
                     "mul | add | sub | invert | unit | det | conj | rationalize | idealization | duplication | parse")
        ->required();
    ring->add_option("elements", o.operands, "Element literals such as 3+2t");
    ring->add_option("--ring", o.ring, "int | zmod:N | series:q | series:fp:P");
    ring->add_option("--sgp", o.sgp, "Semigroup of a series ring");
    ring->add_option("--ideal", o.ideal, "Ideal generators");
    ring->add_option("--a", o.a, "Coefficient a of t^2+at+b");
    ring->add_option("--b", o.b, "Coefficient b of t^2+at+b");

    auto* inv = app.add_subcommand("invariants", "Invariants of k[[S]](I)_{a,b} for a monomial ideal");
    inv->add_option("action", action, "hilbert | type | gorenstein | embdim | multiplicity")->required();
    inv->add_option("--sgp", o.sgp, "Semigroup literal");
    inv->add_option("--ideal", o.ideal, "Value set of the ideal");
    inv->add_option("--a", o.a, "Coefficient a (series literal, oracle only)");
    inv->add_option("--b", o.b, "Coefficient b (series literal, oracle only)");
    auto* oracle_flag = inv->add_flag("--oracle", o.oracle, "Also compute H by linear algebra over --field");
    auto* field_opt = inv->add_option("--field", o.field, "fp:P for the oracle");
    auto* nmax_opt = inv->add_option("--nmax", o.n_max, "Largest n for H(n)");

    auto* fib = app.add_subcommand("fibers", "Primes over pZ for p up to --pmax");
    fib->add_option("--a", o.a, "Integer a");
    fib->add_option("--b", o.b, "Integer b");
    auto* pmax_opt = fib->add_option("--pmax", o.p_max, "Largest prime");
    fib->add_flag("--duplication", o.duplication, "Apply the duplication rule, (a,b) = (-1,0)");
    fib->add_option("--ideal", o.ideal, "Generators g1,g2,... of I");

    auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
    ver->add_option("--suite", o.suite, "all, a check id, or a check name");
    (void)oracle_flag;

    auto out_opt = app.get_option("--out");
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    // Precedence: flag > config file > REES_PRECISION > built-in default.
    try {
        if (precision_opt->count() == 0) {
            if (const char* env = std::getenv("REES_PRECISION")) o.precision = detail::to_int("REES_PRECISION", env);
        }
        if (config_opt->count() > 0) {
            for (const auto& [key, value] : detail::read_config(o.config_path)) {
                if (key == "precision") {
                    if (precision_opt->count() == 0) o.precision = detail::to_int(key, value);
                } else if (key == "field") {
                    if (field_opt->count() == 0) o.field = value;
                } else if (key == "nmax") {
                    if (nmax_opt->count() == 0) o.n_max = detail::to_int(key, value);
                } else if (key == "pmax") {
                    if (pmax_opt->count() == 0) o.p_max = detail::to_int(key, value);
                } else if (key == "out") {
                    if (out_opt->count() == 0) o.out = value;
                } else {
                    throw usage_error("unknown config key '" + key + "'");
                }
            }
        }
        if (o.out != "text" && o.out != "json" && o.out != "csv") throw usage_error("bad output mode '" + o.out + "'");
        if (o.precision <= 0 || o.precision > max_precision)
            throw usage_error("precision must lie in [1, " + std::to_string(max_precision) + "]");
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::ostringstream text;
    json doc;
    int code = 0;
    try {
        if (*sgp) {
            doc = detail::run_sgp(action, o, text);
        } else if (*ring) {
            doc = detail::run_ring(action, o, text);
        } else if (*inv) {
            doc = detail::run_invariants(action, o, text);
        } else if (*fib) {
            doc = detail::run_fibers(o, text);
        } else {
            bool passed = false;
            doc = detail::run_verify(o, text, passed);
            code = passed ? 0 : 1;
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const rees::error& e) {
        json j;
        j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 1;
    }

    if (o.out == "json")
        out << doc.dump(2) << "\n";
    else
        out << text.str();
    return code;
}

} // namespace rees::cli
