#include "mouldinv/cli.hpp"

#include "mouldinv/fixtures.hpp"
#include "mouldinv/oracles.hpp"
#include "mouldinv/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace mouldinv {

namespace {

constexpr int kMaxCap = 40;

}  // namespace

InputFile parse_input(const std::string& text, const std::string& path)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    auto where = [&](const std::string& key) { return path + ": field '" + key + "'"; };
    InputFile r;
    if (!j.is_object()) throw std::runtime_error(path + ": top level must be an object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw std::runtime_error(where("kind") + " missing");
    std::string kind = j["kind"];
    if (kind == "g")
        r.in.kind = Basis::G;
    else if (kind == "gstar")
        r.in.kind = Basis::GStar;
    else
        throw std::runtime_error(where("kind") + ": expected \"g\" or \"gstar\"");
    r.in.cap = j.value("cap", 12);
    if (r.in.cap < 2 || r.in.cap > kMaxCap)
        throw std::runtime_error(where("cap") + ": must lie in 2.." + std::to_string(kMaxCap));
    auto index = [&](const std::string& key, const std::string& s) {
        int v = 0;
        try {
            size_t pos = 0;
            v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw std::runtime_error(where(key) + ": bad index '" + s + "'");
        }
        if (v < 2) throw std::runtime_error(where(key) + ": index " + s + " below 2");
        return v;
    };
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_object()) throw std::runtime_error(where("coeffs") + ": expected an object");
        for (auto& [k, v] : j["coeffs"].items()) {
            if (!v.is_string()) throw std::runtime_error(where("coeffs." + k) + ": rational string required");
            int s = index("coeffs", k);
            Rational q;
            try {
                q = parse_rational(v.get<std::string>());
            } catch (const std::exception& e) {
                throw std::runtime_error(where("coeffs." + k) + ": " + e.what());
            }
            if (q != 0) {
                r.in.coeffs[s] = q;
                r.support.insert(s);
            }
        }
    }
    if (j.contains("symbolic")) {
        if (!j["symbolic"].is_array()) throw std::runtime_error(where("symbolic") + ": expected an array");
        if (!r.in.coeffs.empty()) throw std::runtime_error(path + ": give either coeffs or symbolic, not both");
        r.symbolic = true;
        for (auto& v : j["symbolic"]) {
            if (!v.is_number_integer()) throw std::runtime_error(where("symbolic") + ": integer indices required");
            r.support.insert(index("symbolic", std::to_string(v.get<int>())));
        }
    }
    for (auto& k : j.items())
        if (k.key() != "kind" && k.key() != "coeffs" && k.key() != "symbolic" && k.key() != "cap")
            throw std::runtime_error(where(k.key()) + ": unknown field");
    return r;
}

namespace {

InputFile read_input(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_input(buf.str(), path);
}

Seq seq_arg(const std::string& s)
{
    try {
        return parse_seq(s);
    } catch (const std::exception& e) {
        throw std::runtime_error("--seq '" + s + "': " + e.what());
    }
}

Scheme scheme_of(const std::string& s)
{
    if (s == "symmetric") return Scheme::Symmetric;
    if (s == "symmetric-prime") return Scheme::SymmetricPrime;
    if (s == "direct-plus") return Scheme::DirectPlus;
    if (s == "direct-minus") return Scheme::DirectMinus;
    throw std::runtime_error("unknown scheme " + s);
}

}  // namespace

CollectorExpansion build_collector(const InputFile& f, Scheme scheme, int W, bool reduce)
{
    Support gens;
    for (int s : f.support)
        if (s <= W) gens.insert(s);
    const bool direct = scheme == Scheme::DirectPlus || scheme == Scheme::DirectMinus;
    if (direct) {
        if (f.in.kind != Basis::G) throw std::runtime_error("direct schemes take kind \"g\" inputs");
        auto e = collector_direct(gens, scheme == Scheme::DirectPlus ? 1 : -1, W);
        return reduce ? reduce_collector(e) : e;
    }
    const bool prime = scheme == Scheme::SymmetricPrime;
    if (f.in.kind == Basis::GStar) {
        auto e = collector_symmetric(gens, W, prime);
        return reduce ? reduce_collector(e) : e;
    }
    // g-basis input: express g_* as polynomials in the g_s first
    FormalDiffeo<Poly> g(W);
    for (int s : gens) g.set(s, Poly::var(s));
    auto gs = generator_from_diffeo(g);
    std::map<int, Poly> subs;
    Support star;
    for (int s = 2; s <= W; ++s) {
        Poly p = gs.coeff(s).truncated(W);
        if (!p.is_zero()) {
            subs[s] = p;
            star.insert(s);
        }
    }
    auto e = collector_symmetric(star, W, prime);
    if (reduce) e = reduce_collector(e);
    return substitute(e, subs, Basis::G, W);
}

namespace {

void check_weight(int W, const InputFile& f)
{
    if (W < 1) throw std::runtime_error("--weight must be positive");
    if (W > f.in.cap) throw std::runtime_error("weight cap exceeded: --weight " + std::to_string(W) + " > input cap " +
                                               std::to_string(f.in.cap));
}

std::string counts_row(const Seq& s)
{
    ReduceOptions full, unc;
    unc.tan = TanConvention::Uncontracted;
    std::ostringstream o;
    o << "(" << join(s, ",") << ") " << term_count(reduce_Te_red1(s)) << " " << reduce_Te(s).term_count() << " "
      << term_count(reduce_Tan_red1(s, TanConvention::Full)) << " " << reduce_Tan(s, unc).term_count();
    return o.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multitangent reductions, collectors and invariants of identity-tangent diffeomorphisms", "mouldinv"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* red = app.add_subcommand("reduce", "Reduce Te or Tan to monotangents");
    std::string family = "te", tan_conv = "full", cchoice = "gamma";
    std::vector<std::string> seqs;
    bool counts = false, normalized = false;
    red->add_option("--family", family)->check(CLI::IsMember({"te", "tan"}));
    red->add_option("--seq", seqs, "Index sequence, e.g. 2,6,4")->required();
    red->add_option("--tan-convention", tan_conv)->check(CLI::IsMember({"full", "uncontracted"}));
    red->add_flag("--normalized", normalized, "Allow divergent end indices");
    red->add_option("--c", cchoice, "Normalization constant")->check(CLI::IsMember({"gamma", "zero", "symbolic"}));
    red->add_flag("--counts", counts, "Print #red1(Te) #red2(Te) #red1(Tan) #red2(Tan)");
    add_format(red);

    auto* tit = app.add_subcommand("tan-in-te", "Index-generic Tan in terms of Te");
    int length = 0;
    bool count_only = false;
    tit->add_option("--length", length)->required()->check(CLI::Range(1, kFormalMaxLength));
    tit->add_flag("--count", count_only, "Only print the number of terms");
    add_format(tit);

    auto* col = app.add_subcommand("collector", "Collector expansion of a diffeo");
    std::string input, scheme = "symmetric";
    int W = 10;
    bool unreduced = false;
    col->add_option("--input", input)->required();
    col->add_option("--weight", W, "Weight cap W");
    col->add_option("--scheme", scheme)->check(
        CLI::IsMember({"symmetric", "symmetric-prime", "direct-plus", "direct-minus"}));
    col->add_flag("--unreduced", unreduced, "Keep multitangent form");
    add_format(col);

    auto* inv = app.add_subcommand("invariants", "Numeric invariants A, A+, A- from the collector");
    std::vector<long> omegas{-1, 1};
    double tol = 1e-6;
    inv->add_option("--input", input)->required();
    inv->add_option("--weight", W);
    inv->add_option("--omega", omegas, "Frequencies n (omega = 2 pi i n)");
    inv->add_option("--tol", tol);
    add_format(inv);

    auto* orc = app.add_subcommand("oracle", "Independent numerical oracles");
    std::string method = "both";
    long omega = -1;
    FourierConfig fc;
    BorelConfig bc;
    bool plain = false;
    double im_z0 = 0;
    orc->add_option("--input", input)->required();
    orc->add_option("--method", method)->check(CLI::IsMember({"fourier", "borel", "both"}));
    orc->add_option("--omega", omega);
    orc->add_option("--k", fc.k);
    orc->add_option("--nodes", fc.nodes);
    orc->add_option("--im-z0", im_z0, "Base point height; sign defaults to the half-plane of omega");
    orc->add_flag("--plain", plain, "Literal iteration without end correction");
    orc->add_option("--N", bc.N);
    orc->add_option("--window", bc.window);

    auto* ver = app.add_subcommand("verify", "Run golden fixtures");
    std::string suite = "all", fixdir;
    ver->add_option("--suite", suite)->check(CLI::IsMember({"all", "tables", "reductions", "counts", "collectors"}));
    ver->add_option("--fixtures", fixdir, "Fixture directory (default $MOULDINV_FIXTURES)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*red) {
            ReduceOptions opts;
            opts.normalized = normalized;
            opts.norm.c = cchoice == "gamma" ? CChoice::Gamma : cchoice == "zero" ? CChoice::Zero : CChoice::Symbolic;
            opts.tan = tan_conv == "full" ? TanConvention::Full : TanConvention::Uncontracted;
            json arr = json::array();
            for (auto& sq : seqs) {
                Seq s = seq_arg(sq);
                if (counts) {
                    out << counts_row(s) << "\n";
                    continue;
                }
                bool tan = family == "tan";
                auto c = tan ? reduce_Tan(s, opts) : reduce_Te(s, opts);
                const char* head = tan ? "Tanze" : "Teze";
                if (format == "json")
                    arr.push_back(reduction_to_json(head, s, c));
                else
                    out << render_reduction(head, s, c);
            }
            if (format == "json" && !counts) out << arr.dump(2) << "\n";
        } else if (*tit) {
            const auto& terms = expand_Tan_in_Te(length);
            std::string lhs = "Tan^{";
            for (int i = 1; i <= length; ++i) lhs += (i > 1 ? ",n" : "n") + std::to_string(i);
            lhs += "}";
            if (format == "json") {
                json j = formal_to_json(length, terms);
                if (count_only) j.erase("terms");
                out << j.dump(2) << "\n";
            } else if (count_only)
                out << lhs << " : " << terms.size() << " terms\n";
            else
                out << lhs << " = " << render_formal(terms) << "\n";
        } else if (*col) {
            auto f = read_input(input);
            check_weight(W, f);
            auto e = build_collector(f, scheme_of(scheme), W, !unreduced);
            if (format == "json")
                out << collector_to_json(e).dump(2) << "\n";
            else
                out << render_collector(e);
        } else if (*inv) {
            auto f = read_input(input);
            check_weight(W, f);
            if (f.symbolic) throw std::runtime_error("invariants need numeric coeffs");
            auto s = invariants_numeric(f.in, omegas, W, tol);
            if (format == "json")
                out << invariants_to_json(s).dump(2) << "\n";
            else {
                for (auto& v : s.values) {
                    out << "omega " << v.n << "  W " << s.W << "  est_err " << render_number(v.est_err) << "\n";
                    out << "  A      = " << render_complex(v.A) << "\n";
                    out << "  Aplus  = " << render_complex(v.Aplus) << "\n";
                    out << "  Aminus = " << render_complex(v.Aminus) << "\n";
                }
                for (auto& w : s.warnings) err << "warning: " << w << "\n";
            }
        } else if (*orc) {
            auto f = read_input(input);
            if (f.symbolic) throw std::runtime_error("oracles need numeric coeffs");
            auto g = diffeo_of(f.in);
            auto pair = [](cld z) {
                return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
            };
            json j;
            j["omega"] = omega;
            if (method != "borel") {
                fc.end_correction = !plain;
                fc.im_z0 = im_z0 != 0 ? static_cast<long double>(std::abs(im_z0)) : 1.0L;
                if (omega > 0) fc.im_z0 = -fc.im_z0;
                auto r = fourier_oracle(g, Frequency{omega}, fc);
                json t = json::array({{{"k", r.k}, {"value", pair(r.value)}},
                                      {{"k", 2 * r.k}, {"value", pair(r.value_2k)}}});
                long double digits = r.k_change > 0 ? -std::log10(r.k_change / std::abs(r.value)) : 18;
                j["fourier"] = {{"quantity", omega < 0 ? "Aplus" : "Aminus"},
                                {"estimate", pair(r.value_2k)},
                                {"convergence", t},
                                {"digits", static_cast<double>(digits)},
                                {"end_correction", fc.end_correction}};
            }
            if (method != "fourier") {
                auto r = borel_asymptotics_oracle(g, bc);
                j["borel"] = {{"A_minus_2pi_i", pair(r.A_minus)},
                              {"A_plus_2pi_i", pair(r.A_plus)},
                              {"residual", static_cast<double>(r.residual)},
                              {"digits", static_cast<double>(r.digits)},
                              {"N", bc.N},
                              {"window", bc.window},
                              {"warnings", r.warnings}};
            }
            out << j.dump(2) << "\n";
        } else if (*ver) {
            std::string dir = fixdir.empty() ? fixture_dir() : fixdir;
            auto rs = run_fixtures(suite, dir);
            int fails = 0;
            for (auto& r : rs) {
                out << (r.pass ? "PASS " : "FAIL ") << r.id << " (" << render_number(r.seconds) << " s) " << r.detail
                    << "\n";
                fails += !r.pass;
            }
            out << rs.size() - fails << "/" << rs.size() << " fixtures passed\n";
            if (rs.empty() || fails) return 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace mouldinv
