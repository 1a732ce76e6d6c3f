#include "mouldinv/fixtures.hpp"

#include "mouldinv/cli.hpp"
#include "mouldinv/render.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#ifndef MOULDINV_DEFAULT_FIXTURES
#define MOULDINV_DEFAULT_FIXTURES "fixtures"
#endif

namespace mouldinv {

std::string fixture_dir()
{
    const char* env = std::getenv("MOULDINV_FIXTURES");
    return env && *env ? env : MOULDINV_DEFAULT_FIXTURES;
}

namespace {

std::vector<std::string> norm_lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string n;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) n += c;
        if (!n.empty()) out.push_back(n);
    }
    return out;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "Te^2 [6 z(3)] g*2 g*4" -> ("Te^2|g*2 g*4", value)
std::map<std::string, long double> collector_values(const std::string& text)
{
    std::map<std::string, long double> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        auto a = line.find('['), b = line.rfind(']');
        if (a == std::string::npos || b == std::string::npos || b < a)
            throw std::invalid_argument("line " + std::to_string(no) + ": expected 'Te^s [coeff] monomial'");
        std::string head = line.substr(0, a), mono = line.substr(b + 1);
        auto key = norm_lines(head).at(0) + "|";
        std::istringstream ms(mono);
        std::string tok;
        while (ms >> tok) key += tok + " ";
        long double v;
        try {
            v = eval_zeta_text(line.substr(a + 1, b - a - 1));
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(no) + ": " + e.what());
        }
        out[key] += v;
    }
    return out;
}

std::string substitute_dir(const std::string& arg, const std::string& dir)
{
    const std::string tag = "{fixtures}";
    auto p = arg.find(tag);
    return p == std::string::npos ? arg : arg.substr(0, p) + dir + arg.substr(p + tag.size());
}

}  // namespace

bool compare_text(const std::string& got, const std::string& golden, std::string& detail)
{
    auto g = norm_lines(got), w = norm_lines(golden);
    for (size_t i = 0; i < std::max(g.size(), w.size()); ++i) {
        if (i >= g.size() || i >= w.size() || g[i] != w[i]) {
            detail = "line " + std::to_string(i + 1) + ": got '" + (i < g.size() ? g[i] : "<eof>") + "', expected '" +
                     (i < w.size() ? w[i] : "<eof>") + "'";
            return false;
        }
    }
    detail = std::to_string(w.size()) + " lines";
    return true;
}

bool compare_collector(const std::string& got, const std::string& golden, long double rel, long double abs_floor,
                       std::string& detail)
{
    auto g = collector_values(got), w = collector_values(golden);
    auto drop = [&](std::map<std::string, long double>& m) {
        for (auto it = m.begin(); it != m.end();)
            it = std::fabs(it->second) <= abs_floor ? m.erase(it) : std::next(it);
    };
    drop(g);
    drop(w);
    std::vector<std::string> bad;
    for (auto& [k, v] : w) {
        auto it = g.find(k);
        if (it == g.end())
            bad.push_back("missing term " + k);
        else if (std::fabs(it->second - v) > std::max(abs_floor, rel * std::fabs(v)))
            bad.push_back("term " + k + ": got " + render_number(it->second) + ", expected " + render_number(v));
    }
    for (auto& [k, v] : g)
        if (!w.count(k)) bad.push_back("unexpected term " + k + " = " + render_number(v));
    if (!bad.empty()) {
        detail = std::to_string(bad.size()) + " of " + std::to_string(w.size()) + " terms differ";
        for (auto& b : bad) detail += "\n    " + b;
        return false;
    }
    detail = std::to_string(w.size()) + " terms";
    return true;
}

std::vector<FixtureResult> run_fixtures(const std::string& suite, const std::string& dir)
{
    json manifest = json::parse(slurp(dir + "/manifest.json"));
    std::vector<FixtureResult> out;
    for (auto& f : manifest.at("fixtures")) {
        if (suite != "all" && f.at("suite").get<std::string>() != suite) continue;
        FixtureResult r;
        r.id = f.at("id").get<std::string>();
        auto t0 = std::chrono::steady_clock::now();
        try {
            std::vector<std::string> args;
            for (auto& a : f.at("args")) args.push_back(substitute_dir(a.get<std::string>(), dir));
            std::ostringstream o, e;
            int status = run_cli(args, o, e);
            std::string golden = slurp(dir + "/" + f.at("golden").get<std::string>());
            std::string how = f.value("compare", "text");
            if (status != 0)
                r.detail = "exit status " + std::to_string(status) + ": " + e.str();
            else if (how == "text")
                r.pass = compare_text(o.str(), golden, r.detail);
            else if (how == "collector")
                r.pass = compare_collector(o.str(), golden, f.value("rel", 1e-10), f.value("abs", 1e-12), r.detail);
            else
                r.detail = "unknown comparator " + how;
        } catch (const std::exception& ex) {
            r.detail = ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(r);
    }
    return out;
}

}  // namespace mouldinv
