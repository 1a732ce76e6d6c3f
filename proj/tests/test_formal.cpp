#include <doctest.h>

#include "mouldinv/formal.hpp"
#include "mouldinv/multitangent.hpp"

using namespace mouldinv;

TEST_CASE("Tan-in-Te term counts")
{
    CHECK(expand_Tan_in_Te(1).size() == 1);
    CHECK(expand_Tan_in_Te(2).size() == 2);
    CHECK(expand_Tan_in_Te(5).size() == 540);
    CHECK(expand_Tan_in_Te(6).size() == 3688);
}

TEST_CASE("Tan-in-Te short tables")
{
    CHECK(render_formal(expand_Tan_in_Te(1)) == "Te^{n1}");
    CHECK(render_formal(expand_Tan_in_Te(2)) == "1/2 Te^{n1,n2} - 1/2 Te^{n2,n1}");
    auto t3 = expand_Tan_in_Te(3);
    Rational total = 0;
    for (auto& t : t3) total += t.coeff;
    // alternal moulds vanish on constant index patterns only through the full-length part
    CHECK(t3.size() > 0);
    Seq s{2, 3, 4};
    for (auto& t : t3) CHECK(weight(instantiate(t, s)) == 9);
}

TEST_CASE("Tan-in-Te agrees numerically with the composed definition")
{
    const std::vector<Seq> seqs{{2, 3}, {3, 2, 2}, {2, 2, 3, 2}};
    const std::vector<cld> points{cld(0.3L, 0.2L), cld(-0.4L, 0.7L)};
    for (auto& s : seqs)
        for (auto z : points) {
            cld direct = eval_numeric_family(Family::Tan, s, z, 1e-12L);
            cld formal = 0;
            for (auto& t : expand_Tan_in_Te(static_cast<int>(s.size())))
                formal += to_ld(t.coeff) * eval_numeric_family(Family::Te, instantiate(t, s), z, 1e-12L);
            CHECK(std::abs(direct - formal) < 1e-8L);
        }
}
