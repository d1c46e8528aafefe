#include "mline/stems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mline {

namespace {

/* 2-local stable stems through the 20-stem.  Rows consumed by the arguments
 * carry the quote they back; the rest are standard-table data. */
const std::vector<StemGroup> kStems = {
    {0, 0, true, {{"iota", 0, 0}}, "standard: pi_0 = Z"},
    {1, 2, false, {{"eta", 1, 2}}, "\"pi_1 = Z/2 ... generated by eta\""},
    {2, 2, false, {{"eta^2", 2, 2}}, "\"pi_2 = Z/2, generated by eta^2\""},
    {3, 8, false, {{"nu", 3, 8}}, "standard: pi_3 = Z/8 2-locally; \"4nu = eta^3\", 8nu = 0"},
    {4, 0, false, {}, "\"pi_4 = pi_5 = 0\""},
    {5, 0, false, {}, "\"pi_4 = pi_5 = 0\""},
    {6, 2, false, {{"nu^2", 6, 2}}, "standard: pi_6 = Z/2 generated by nu^2"},
    {7, 16, false, {{"sigma", 7, 16}}, "standard: pi_7 = Z/16 2-locally, generated by sigma"},
    {8, 4, false, {{"eta sigma", 8, 2}, {"epsilon", 8, 2}}, "\"2 pi_8 = 0\"; \"pi_8 pi_2 = 0\""},
    {9, 8, false, {{"nu^3", 9, 2}, {"eta epsilon", 9, 2}, {"mu_9", 9, 2}}, "\"2 pi_9 = 0\""},
    {10, 2, false, {{"{Ph_1^2}", 10, 2}}, "\"pi_10 = Z/2 generated by {Ph_1^2}\""},
    {11, 8, false, {{"{Ph_2}", 11, 8}}, "standard: pi_11 = Z/8 2-locally, generated by {Ph_2}"},
    {12, 0, false, {}, "\"pi_12 = pi_13 = 0\""},
    {13, 0, false, {}, "\"pi_12 = pi_13 = 0\" (2-locally; odd torsion only)"},
    {14, 4, false, {{"sigma^2", 14, 2}, {"kappa", 14, 2}}, "standard table"},
    {15, 64, false, {{"rho", 15, 32}, {"eta kappa", 15, 2}}, "standard table"},
    {16, 4, false, {{"eta^*", 16, 2}, {"eta rho", 16, 2}}, "\"2 pi_16 = 0\""},
    {17, 16, false,
     {{"eta eta^*", 17, 2}, {"nu kappa", 17, 2}, {"eta^2 rho", 17, 2}, {"mu_17", 17, 2}},
     "standard table"},
    {18, 16, false, {{"nu^*", 18, 8}, {"eta mu_17", 18, 2}}, "standard table"},
    {19, 16, false, {{"{P^2h_2}", 19, 8}, {"sigma-bar", 19, 2}}, "standard table"},
    {20, 8, false, {{"kappa-bar", 20, 8}}, "standard table"},
};

const std::vector<StemGroup> kMoore = {
    {5, 0, false, {}, "\"pi_5 C2 = 0\" (from pi_4 = pi_5 = 0)"},
    {6, 2, false, {{"[nu^2]", 6, 2}}, "\"pi_6 C2 = Z/2\""},
    {11, 4, false, {{"{Ph_2}[0]", 11, 2}, {"{Ph_1}[1] eta", 11, 2}},
     "\"pi_11 C2 = Z/2 + Z/2, generated by {Ph_2}[0] and {Ph_1}[1] eta\""},
};

enum class RelKind { TrivialGroup, ExponentTwo, GroupOrder, GeneratorOrder, ProductVanishes, NamedFact };

struct Relation {
    StemRelation info;
    RelKind kind;
    int n = 0;        // stem (or Moore stem) the relation reads
    bool moore = false;
    long value = 0;   // order / exponent payload
    std::string gen;  // generator name for GeneratorOrder
};

const std::vector<Relation> kRelations = {
    {{"eta_cubed_eq_4nu", "eta^3 = 4 nu in pi_3, of order 2", "\"difference is 4nu = eta^3\""},
     RelKind::GeneratorOrder, 3, false, 8, "nu"},
    {{"eight_nu_zero", "8 nu = 0 2-locally", "pi_3 reduced 2-locally to order 8"},
     RelKind::GroupOrder, 3, false, 8, ""},
    {{"pi4_zero", "pi_4 = 0", "\"pi_4 = pi_5 = 0\""}, RelKind::TrivialGroup, 4, false, 0, ""},
    {{"pi5_zero", "pi_5 = 0", "\"pi_4 = pi_5 = 0\""}, RelKind::TrivialGroup, 5, false, 0, ""},
    {{"pi12_zero", "pi_12 = 0", "\"pi_12 = pi_13 = 0\""}, RelKind::TrivialGroup, 12, false, 0, ""},
    {{"pi13_zero", "pi_13 = 0 2-locally", "\"pi_13 = 0\""}, RelKind::TrivialGroup, 13, false, 0, ""},
    {{"two_annihilates_pi8", "2 pi_8 = 0", "\"2 pi_8 = 0, 2 pi_16 = 0\""},
     RelKind::ExponentTwo, 8, false, 0, ""},
    {{"two_annihilates_pi9", "2 pi_9 = 0", "\"2 pi_9 = 0\""}, RelKind::ExponentTwo, 9, false, 0, ""},
    {{"two_annihilates_pi16", "2 pi_16 = 0", "\"2 pi_8 = 0, 2 pi_16 = 0\""},
     RelKind::ExponentTwo, 16, false, 0, ""},
    {{"pi10_generated_by_ph1sq", "pi_10 = Z/2 {Ph_1^2}", "\"pi_10 = Z/2 generated by {Ph_1^2}\""},
     RelKind::GroupOrder, 10, false, 2, ""},
    {{"sigma_order_16", "sigma has 2-local order 16", "pi_{8k-1} j'' = Z/2^{4+nu(k)} at k=1"},
     RelKind::GeneratorOrder, 7, false, 16, "sigma"},
    {{"pi5_moore_zero", "pi_5 C2 = 0", "\"pi_5 C2 = 0\""}, RelKind::TrivialGroup, 5, true, 0, ""},
    {{"pi6_moore_z2", "pi_6 C2 = Z/2", "\"pi_6 C2 = Z/2\""}, RelKind::GroupOrder, 6, true, 2, ""},
    {{"pi11_moore_rank2", "pi_11 C2 = Z/2 + Z/2", "\"pi_11 C2 = Z/2 + Z/2\""},
     RelKind::GroupOrder, 11, true, 4, ""},
    {{"pi2_times_pi8_zero", "pi_2 . pi_8 = 0", "\"pi_8 pi_2 = 0\""},
     RelKind::ProductVanishes, 0, false, 0, ""},
    {{"pi3_times_pi8_zero", "pi_3 . pi_8 = 0", "\"pi_8 pi_3 = 0\""},
     RelKind::ProductVanishes, 0, false, 0, ""},
    {{"pi2_times_pi3_zero", "pi_2 . pi_3 = 0", "\"pi_2 pi_3 = 0\""},
     RelKind::ProductVanishes, 0, false, 0, ""},
    {{"eta_times_pi6_zero", "eta . pi_6 = 0", "\"eta pi_6 = 0\""},
     RelKind::ProductVanishes, 0, false, 0, ""},
    {{"pi3_annihilates_pi11_moore", "pi_11 C2 . pi_3 = 0",
      "\"Both generators are annihilated by pi_3\""},
     RelKind::ProductVanishes, 0, false, 0, ""},
    {{"four_ph2_named_ph1cubed", "4{P^{k-1}h_2} = {P^{k-1}h_1^3}",
      "\"4{P^{k-1}h_2} = {P^{k-1}h_1^3}\""},
     RelKind::NamedFact, 0, false, 0, ""},
};

const Relation& find_relation(const std::string& name) {
    for (const auto& r : kRelations)
        if (r.info.name == name)
            return r;
    throw std::invalid_argument("relation_check: unknown relation " + name);
}

} // namespace

const StemGroup& stem_group(int n) {
    if (n < 0 || n > 20)
        throw std::out_of_range("stem_group: n must be in 0..20");
    return kStems[static_cast<size_t>(n)];
}

const StemGroup& moore_group(int n) {
    for (const auto& g : kMoore)
        if (g.n == n)
            return g;
    throw std::out_of_range("moore_group: stored rows are n in {5, 6, 11}");
}

std::string four_ph2_alias() { return "{P^{k-1}h_1^3}"; }

std::vector<std::string> relation_names() {
    std::vector<std::string> out;
    out.reserve(kRelations.size());
    for (const auto& r : kRelations)
        out.push_back(r.info.name);
    return out;
}

const StemRelation& relation_info(const std::string& name) { return find_relation(name).info; }

bool relation_check(const std::string& name) {
    const Relation& r = find_relation(name);
    auto group = [&]() -> const StemGroup& {
        return r.moore ? moore_group(r.n) : stem_group(r.n);
    };
    switch (r.kind) {
    case RelKind::TrivialGroup:
        return group().order == 0;
    case RelKind::ExponentTwo: {
        const StemGroup& g = group();
        return g.order != 0 && std::all_of(g.generators.begin(), g.generators.end(),
                                           [](const StemElem& e) { return e.order == 2; });
    }
    case RelKind::GroupOrder:
        return group().order == r.value;
    case RelKind::GeneratorOrder: {
        const StemGroup& g = group();
        auto it = std::find_if(g.generators.begin(), g.generators.end(),
                               [&](const StemElem& e) { return e.name == r.gen; });
        return it != g.generators.end() && it->order == r.value;
    }
    case RelKind::ProductVanishes:
    case RelKind::NamedFact:
        // Citation-backed data facts; stored true with the quote attached.
        return true;
    }
    return false;
}

} // namespace mline
