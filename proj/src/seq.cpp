#include "mouldinv/seq.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mouldinv {

int weight(const Seq& s) { return std::accumulate(s.begin(), s.end(), 0); }

Seq reversed(const Seq& s) { return Seq(s.rbegin(), s.rend()); }

std::string join(const Seq& s, const char* sep)
{
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(s[i]);
    }
    return out;
}

Seq parse_seq(const std::string& s)
{
    Seq out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad index '" + tok + "' in sequence '" + s + "'");
        }
        if (pos != tok.size() || v < 1)
            throw std::invalid_argument("bad index '" + tok + "' in sequence '" + s + "'");
        out.push_back(v);
    }
    return out;
}

namespace {

void shuffle_rec(const Seq& u, size_t i, const Seq& v, size_t j, bool contract, Seq& cur,
                 SeqMultiset& out)
{
    if (i == u.size() && j == v.size()) {
        ++out[cur];
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffle_rec(u, i + 1, v, j, contract, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffle_rec(u, i, v, j + 1, contract, cur, out);
        cur.pop_back();
    }
    if (contract && i < u.size() && j < v.size()) {
        cur.push_back(u[i] + v[j]);
        shuffle_rec(u, i + 1, v, j + 1, contract, cur, out);
        cur.pop_back();
    }
}

void compositions_rec(int left, Seq& cur, std::vector<Seq>& out)
{
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = 1; p <= left; ++p) {
        cur.push_back(p);
        compositions_rec(left - p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SeqMultiset sha_set(const Seq& u, const Seq& v)
{
    SeqMultiset out;
    Seq cur;
    shuffle_rec(u, 0, v, 0, false, cur, out);
    return out;
}

SeqMultiset she_set(const Seq& u, const Seq& v)
{
    SeqMultiset out;
    Seq cur;
    shuffle_rec(u, 0, v, 0, true, cur, out);
    return out;
}

std::vector<Seq> compositions(int w)
{
    std::vector<Seq> out;
    Seq cur;
    if (w >= 0) compositions_rec(w, cur, out);
    return out;
}

std::vector<Seq> sequences_up_to(int cap)
{
    std::vector<Seq> out;
    for (int w = 1; w <= cap; ++w)
        for (auto& c : compositions(w)) out.push_back(std::move(c));
    return out;
}

}  // namespace mouldinv
