#include "mouldinv/formal.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace mouldinv {

namespace {

// Packs up to 7 nonzero 7-bit masks; the first zero field ends the sequence.
using Key = std::uint64_t;
constexpr int kBits = 7;
constexpr std::int64_t kDen = 5040 * 420;

Key push(Key k, int len, unsigned mask) { return k | (Key(mask) << (kBits * len)); }

std::vector<unsigned> unpack(Key k)
{
    std::vector<unsigned> out;
    while (k) {
        out.push_back(static_cast<unsigned>(k & ((1u << kBits) - 1)));
        k >>= kBits;
    }
    return out;
}

struct QuasiShuffler {
    const std::vector<std::vector<unsigned>>* words;
    std::array<size_t, kFormalMaxLength> pos{};
    std::unordered_map<Key, std::int64_t>* acc;
    std::int64_t weight;

    void run(Key key, int len)
    {
        const size_t k = words->size();
        unsigned open = 0;
        for (size_t i = 0; i < k; ++i)
            if (pos[i] < (*words)[i].size()) open |= 1u << i;
        if (!open) {
            (*acc)[key] += weight;
            return;
        }
        for (unsigned sub = open; sub; sub = (sub - 1) & open) {
            unsigned letter = 0;
            for (size_t i = 0; i < k; ++i)
                if (sub & (1u << i)) letter |= (*words)[i][pos[i]++];
            run(push(key, len, letter), len + 1);
            for (size_t i = 0; i < k; ++i)
                if (sub & (1u << i)) --pos[i];
        }
    }
};

std::vector<int> slots_of(unsigned mask)
{
    std::vector<int> out;
    for (int j = 0; j < kFormalMaxLength; ++j)
        if (mask & (1u << j)) out.push_back(j);
    return out;
}

bool canonical_less(const FormalTerm& a, const FormalTerm& b)
{
    if (a.blocks.size() != b.blocks.size()) return a.blocks.size() > b.blocks.size();
    for (size_t i = 0; i < a.blocks.size(); ++i) {
        auto x = slots_of(a.blocks[i]), y = slots_of(b.blocks[i]);
        if (x != y) return x < y;
    }
    return false;
}

std::vector<FormalTerm> compute(int r)
{
    std::unordered_map<Key, std::int64_t> acc;
    // (E-1): consecutive groups of slots, coefficient prod 1/len!
    for (unsigned cut = 0; cut < (1u << (r - 1)); ++cut) {
        std::vector<unsigned> letters;
        std::int64_t efact = 1;
        unsigned cur = 1;
        int len = 1;
        for (int i = 1; i < r; ++i) {
            if (cut & (1u << (i - 1))) {
                letters.push_back(cur);
                efact *= factorial(len).get_num().get_si();
                cur = 0;
                len = 0;
            }
            cur |= 1u << i;
            ++len;
        }
        letters.push_back(cur);
        efact *= factorial(len).get_num().get_si();
        const int m = static_cast<int>(letters.size());
        // logmu: factor the letter word into k consecutive pieces, then quasi-shuffle them.
        for (unsigned cut2 = 0; cut2 < (1u << (m - 1)); ++cut2) {
            std::vector<std::vector<unsigned>> words{{letters[0]}};
            for (int i = 1; i < m; ++i) {
                if (cut2 & (1u << (i - 1))) words.emplace_back();
                words.back().push_back(letters[i]);
            }
            const auto k = static_cast<std::int64_t>(words.size());
            QuasiShuffler qs;
            qs.words = &words;
            qs.acc = &acc;
            qs.weight = (k % 2 ? 1 : -1) * (kDen / (k * efact));
            qs.run(0, 0);
        }
    }
    std::vector<FormalTerm> out;
    for (auto& [key, num] : acc) {
        if (num == 0) continue;
        out.push_back(FormalTerm{unpack(key), Rational(num, kDen)});
        out.back().coeff.canonicalize();
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::mutex formal_mutex;
std::map<int, std::vector<FormalTerm>> formal_memo;

}  // namespace

const std::vector<FormalTerm>& expand_Tan_in_Te(int r)
{
    if (r < 1 || r > kFormalMaxLength)
        throw std::out_of_range("Tan-in-Te expansion supports lengths 1.." + std::to_string(kFormalMaxLength));
    std::lock_guard<std::mutex> lock(formal_mutex);
    auto it = formal_memo.find(r);
    if (it == formal_memo.end()) it = formal_memo.emplace(r, compute(r)).first;
    return it->second;
}

Seq instantiate(const FormalTerm& t, const Seq& s)
{
    Seq out;
    for (unsigned b : t.blocks) {
        int v = 0;
        for (int j : slots_of(b)) {
            if (j >= static_cast<int>(s.size())) throw std::out_of_range("formal term longer than sequence");
            v += s[j];
        }
        out.push_back(v);
    }
    return out;
}

std::string render_symbol(const FormalTerm& t)
{
    std::string out = "Te^{";
    for (size_t i = 0; i < t.blocks.size(); ++i) {
        if (i) out += ",";
        auto sl = slots_of(t.blocks[i]);
        for (size_t j = 0; j < sl.size(); ++j) {
            if (j) out += "+";
            out += "n" + std::to_string(sl[j] + 1);
        }
    }
    return out + "}";
}

}  // namespace mouldinv
