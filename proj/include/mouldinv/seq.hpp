#pragma once

#include <map>
#include <string>
#include <vector>

namespace mouldinv {

using Seq = std::vector<int>;
using SeqMultiset = std::map<Seq, long>;

int weight(const Seq& s);
Seq reversed(const Seq& s);
std::string join(const Seq& s, const char* sep = ",");
Seq parse_seq(const std::string& s);

// Plain shuffles, and shuffles with order-compatible pairwise contractions.
SeqMultiset sha_set(const Seq& u, const Seq& v);
SeqMultiset she_set(const Seq& u, const Seq& v);

// All compositions (ordered, positive parts) with weight exactly w.
std::vector<Seq> compositions(int w);
// All sequences with weight between 1 and cap.
std::vector<Seq> sequences_up_to(int cap);

}  // namespace mouldinv
