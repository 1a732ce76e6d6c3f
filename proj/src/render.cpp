#include "mouldinv/render.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mouldinv {

namespace {

// Leading sign handled by the caller; unit coefficients are dropped in front of symbols.
void append_term(std::string& out, const Rational& c, const std::string& symbol)
{
    Rational a = abs(c);
    if (out.empty())
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    if (symbol.empty())
        out += to_string(a);
    else if (a == 1)
        out += symbol;
    else
        out += to_string(a) + " " + symbol;
}

std::string zeta_symbol(const ZetaKey& k)
{
    std::string s;
    if (k.tpow) s = k.tpow == 1 ? "T" : "T^" + std::to_string(k.tpow);
    if (!k.word.empty()) s += (s.empty() ? "" : " ") + render_word(k.word);
    return s;
}

}  // namespace

std::string render_word(const Word& w, const std::string& head) { return head + "^{" + join(w, ",") + "}"; }

std::string render_zeta(const ZetaExpr& e)
{
    std::string out;
    for (auto& [k, c] : e.terms()) append_term(out, c, zeta_symbol(k));
    return out.empty() ? "0" : out;
}

std::string render_monomial(const Monomial& m, Basis basis)
{
    const std::string head = basis == Basis::GStar ? "g*" : "g";
    std::string out;
    for (size_t i = 0; i < m.size();) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!out.empty()) out += " ";
        out += head + std::to_string(m[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out.empty() ? "1" : out;
}

std::string render_formal(const std::vector<FormalTerm>& terms)
{
    std::string out;
    for (auto& t : terms) append_term(out, t.coeff, render_symbol(t));
    return out.empty() ? "0" : out;
}

std::string render_reduction(const std::string& head, const Seq& s, const MonotangentCombo& c)
{
    std::string out;
    const std::string stem = head + "^{" + join(s, ",") + "}";
    if (!c.constant.is_zero()) out += stem + "_0 = " + render_zeta(c.constant) + "\n";
    for (auto& [sigma, z] : c.terms) out += stem + "_" + std::to_string(sigma) + " = " + render_zeta(z) + "\n";
    return out;
}

std::string render_collector(const CollectorExpansion& e)
{
    std::string out;
    const bool tan = e.scheme == Scheme::Symmetric || e.scheme == Scheme::SymmetricPrime;
    for (auto& [k, z] : e.terms) {
        std::string sym = e.reduced ? "Te^" + std::to_string(k.seq[0])
                                    : std::string(tan ? "Tan" : "Te") + "^{" + join(k.seq, ",") + "}";
        out += sym + " [" + render_zeta(z) + "] " + render_monomial(k.mono, e.basis) + "\n";
    }
    return out;
}

std::string render_number(long double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15Lg", x);
    return buf;
}

std::string render_complex(cld z)
{
    std::string im = render_number(std::abs(z.imag()));
    return render_number(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + im + "i";
}

json zeta_to_json(const ZetaExpr& e)
{
    json out = json::array();
    for (auto& [k, c] : e.terms()) {
        json t = {{"word", k.word}, {"coeff", to_string(c)}};
        if (k.tpow) t["tpow"] = k.tpow;
        out.push_back(t);
    }
    return out;
}

json reduction_to_json(const std::string& head, const Seq& s, const MonotangentCombo& c)
{
    json rows = json::array();
    for (auto& [sigma, z] : c.terms) rows.push_back({{"sigma", sigma}, {"coeff", zeta_to_json(z)}});
    json out = {{"family", head}, {"seq", s}, {"rows", rows}};
    if (!c.constant.is_zero()) out["constant"] = zeta_to_json(c.constant);
    return out;
}

json formal_to_json(int r, const std::vector<FormalTerm>& terms)
{
    json arr = json::array();
    for (auto& t : terms) arr.push_back({{"blocks", t.blocks}, {"symbol", render_symbol(t)}, {"coeff", to_string(t.coeff)}});
    return {{"length", r}, {"count", terms.size()}, {"terms", arr}};
}

json collector_to_json(const CollectorExpansion& e)
{
    static const char* schemes[] = {"symmetric", "symmetric-prime", "direct-plus", "direct-minus"};
    json arr = json::array();
    for (auto& [k, z] : e.terms)
        arr.push_back({{"seq", k.seq}, {"monomial", k.mono}, {"weight", monomial_weight(k.mono)}, {"coeff", zeta_to_json(z)}});
    return {{"scheme", schemes[static_cast<int>(e.scheme)]},
            {"basis", e.basis == Basis::GStar ? "gstar" : "g"},
            {"reduced", e.reduced},
            {"cap", e.cap},
            {"terms", arr}};
}

json invariants_to_json(const InvariantSet& s)
{
    auto pair = [](cld z) { return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())}); };
    json arr = json::array();
    for (auto& v : s.values)
        arr.push_back({{"omega", v.n},
                       {"A", pair(v.A)},
                       {"Aplus", pair(v.Aplus)},
                       {"Aminus", pair(v.Aminus)},
                       {"W", s.W},
                       {"est_err", static_cast<double>(v.est_err)}});
    return {{"method", s.method}, {"values", arr}, {"warnings", s.warnings}};
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument(what + " at column " + std::to_string(i + 1) + " in '" + s + "'");
    }
    void ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c)
    {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool at_digit()
    {
        ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    long integer()
    {
        if (!at_digit()) fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return v;
    }
    Word word(char close)
    {
        Word w;
        do w.push_back(static_cast<int>(integer()));
        while (eat(','));
        if (!eat(close)) fail(std::string("expected '") + close + "'");
        return w;
    }
    int power()
    {
        if (!eat('^')) return 1;
        return static_cast<int>(integer());
    }
    // product of factors; returns false when nothing was read
    bool factor(long double& v)
    {
        ws();
        if (s.compare(i, 2, "Ze") == 0) {
            i += 2;
            if (!eat('^')) fail("expected '^'");
            Word w;
            if (eat('{'))
                w = word('}');
            else
                w.push_back(static_cast<int>(integer()));
            v *= eval_numeric(w);
            return true;
        }
        if (i < s.size() && (s[i] == 'z' || s[i] == 'T')) {
            bool t = s[i] == 'T';
            ++i;
            long double base = 0;
            if (!t) {
                if (!eat('(')) fail("expected '('");
                base = eval_numeric(word(')'));
            }
            v *= std::pow(base, power());
            return true;
        }
        return false;
    }
    long double term()
    {
        long double v = 1;
        bool any = false;
        if (at_digit()) {
            long double p = static_cast<long double>(integer());
            if (eat('/')) p /= static_cast<long double>(integer());
            v = p;
            any = true;
        }
        while (factor(v)) any = true;
        if (!any) fail("expected term");
        return v;
    }
    long double expr()
    {
        long double total = 0;
        bool first = true;
        for (;;) {
            ws();
            if (i >= s.size()) break;
            int sign = 1;
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else if (!first)
                fail("expected '+' or '-'");
            total += sign * term();
            first = false;
        }
        if (first) fail("empty expression");
        return total;
    }
};

}  // namespace

long double eval_zeta_text(const std::string& text)
{
    Parser p{text};
    if (text.find_first_not_of(" \t") == std::string::npos) p.fail("empty expression");
    if (p.s == "0") return 0;
    return p.expr();
}

}  // namespace mouldinv
