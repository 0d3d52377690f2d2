#include "ringclass/verify.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ringclass/conductor.hpp"
#include "ringclass/cubicenum.hpp"
#include "ringclass/dpf.hpp"
#include "ringclass/multiplicity.hpp"
#include "ringclass/quadclass.hpp"
#include "ringclass/selmer.hpp"
#include "ringclass/tables.hpp"

namespace ringclass {

namespace {

struct sweep_data {
    std::map<i64, i64> count20k;  // dL -> multiplicity, |dL| <= 2e4, both signs
    std::vector<cubic_field_record> neg20k;
    std::vector<cubic_field_record> pos100k;
};

criterion_result counts_negative(const sweep_data& D)
{
    i64 pure = 0, non_pure = 0;
    for (auto& r : D.neg20k) (r.pure ? pure : non_pure)++;
    i64 total = (i64)D.neg20k.size();
    bool ok = total == 3169 && non_pure == 3134 && pure == 35;
    std::ostringstream os;
    os << "fields " << total << "/3169, non-pure " << non_pure << "/3134, pure " << pure << "/35";
    return {"1 global counts, negative 2e4", ok, os.str()};
}

criterion_result counts_positive(const sweep_data& D)
{
    i64 cyc = 0, non_cyc = 0;
    for (auto& r : D.pos100k) (r.cyclic ? cyc : non_cyc)++;
    i64 total = (i64)D.pos100k.size();
    bool ok = total == 4804 && non_cyc == 4753 && cyc == 51;
    std::ostringstream os;
    os << "fields " << total << "/4804, non-cyclic " << non_cyc << "/4753, cyclic " << cyc << "/51";
    return {"2 global counts, positive 1e5", ok, os.str()};
}

criterion_result census_diffs(int jobs)
{
    auto np = build_census(20000, disc_sign::negative, census_stratum::non_pure, jobs);
    auto pu = build_census(20000, disc_sign::negative, census_stratum::pure, jobs);
    std::vector<census_row> neg = np;
    neg.insert(neg.end(), pu.begin(), pu.end());
    auto rep72 = diff_against_expected(neg, table_preset::angell1972);

    auto nc = build_census(100000, disc_sign::positive, census_stratum::non_cyclic_real, jobs);
    auto cy = build_census(100000, disc_sign::positive, census_stratum::cyclic, jobs);
    std::vector<census_row> pos = nc;
    pos.insert(pos.end(), cy.begin(), cy.end());
    auto rep75 = diff_against_expected(pos, table_preset::angell1975);

    auto tot = [&](const std::vector<census_row>& rows) {
        census_totals t;
        for (auto& r : rows) {
            t.nilets += r.by_multiplicity[0];
            for (int m = 1; m <= 4; ++m) t.discriminants += r.by_multiplicity[m];
            t.fields += r.field_count();
        }
        return t;
    };
    census_totals tn = tot(np), tp = tot(pu), tr = tot(nc), tc = tot(cy);
    bool ok = rep72.empty() && rep75.empty() && tn.nilets == 235 && tp.nilets == 20 &&
              tr.nilets == 3733 && tn.discriminants == 2928 && tn.fields == 3134 &&
              tp.discriminants == 32 && tp.fields == 35 && tr.discriminants == 4687 &&
              tr.fields == 4753 && tc.fields == 51;
    std::ostringstream os;
    os << "diff cells " << rep72.mismatches.size() + rep75.mismatches.size()
       << ", nilets " << tn.nilets << "/235 " << tp.nilets << "/20 " << tr.nilets << "/3733";
    if (!rep72.empty()) os << "; first: " << rep72.mismatches.front();
    else if (!rep75.empty()) os << "; first: " << rep75.mismatches.front();
    return {"3 census diffs empty against the reference tables", ok, os.str()};
}

// shared sweep over admissible pairs |f^2 d| <= 2e4
template <typename Fn>
void for_admissible_pairs(Fn&& fn)
{
    for (i64 d = -20000; d <= 20000; ++d) {
        if (d == 0 || !is_fundamental_discriminant(d)) continue;
        i64 ad = d < 0 ? -d : d;
        i64 fmax = isqrt64(20000 / ad);
        if (fmax < 1) continue;
        int rho = d == 1 ? 0 : rho3(d);
        std::optional<selmer_space> space;
        for (i64 f : admissible_conductors(d, fmax)) fn(d, f, rho, space);
    }
}

criterion_result partition_identity(const sweep_data& D)
{
    i64 pairs = 0, bad = 0, uncovered = 0;
    std::string first;
    for_admissible_pairs([&](i64 d, i64 f, int rho, std::optional<selmer_space>& space) {
        auto fact = factor_conductor(d, f);
        if (fact.tau > 2) return;
        ++pairs;
        if (d != 1 && f > 1 && selmer_rank(3, d, rho) > 0 && !space) space = selmer_basis(d, 3);
        multiplet_prediction m = predict(d, fact, rho, space ? &*space : nullptr);
        if (m.coverage == coverage_kind::uncovered) {
            ++uncovered;
            if (first.empty()) first = "uncovered d=" + std::to_string(d) + " f=" + std::to_string(f);
            return;
        }
        i64 sum = 0, expect = (1 - 1) / 2;
        {
            i64 pw = 1;
            for (int i = 0; i < m.ring_class_rank; ++i) pw *= 3;
            expect = (pw - 1) / 2;
        }
        for (auto& [c, v] : m.per_divisor) sum += v;
        if (sum != expect) {
            ++bad;
            if (first.empty()) first = "partition d=" + std::to_string(d) + " f=" + std::to_string(f);
        }
        for (auto& [c, v] : m.per_divisor) {
            i64 dL = c * c * d;
            auto it = D.count20k.find(dL);
            i64 oracle = it == D.count20k.end() ? 0 : it->second;
            if (d == 1 && c == 1) oracle = 0;
            if (v != oracle) {
                ++bad;
                if (first.empty())
                    first = "d=" + std::to_string(d) + " f=" + std::to_string(f) +
                            " c=" + std::to_string(c) + " predicted " + std::to_string(v) +
                            " oracle " + std::to_string(oracle);
            }
        }
    });
    std::ostringstream os;
    os << pairs << " pairs, " << uncovered << " uncovered, " << bad << " mismatches";
    if (!first.empty()) os << "; first: " << first;
    return {"4 partition identity vs oracle, tau <= 2", bad == 0 && uncovered == 0, os.str()};
}

criterion_result dichotomy(const sweep_data& D)
{
    i64 pairs = 0, bad = 0;
    std::string first;
    for_admissible_pairs([&](i64 d, i64 f, int rho, std::optional<selmer_space>& space) {
        if (d == 1 || f == 1) return;
        auto fact = factor_conductor(d, f);
        if (fact.tau != 1 || !fact.divisors.front().regular) return;  // the irregular 9 is a chain
        ++pairs;
        i64 p3rho = 1;
        for (int i = 0; i < rho; ++i) p3rho *= 3;
        auto it = D.count20k.find(f * f * d);
        i64 oracle = it == D.count20k.end() ? 0 : it->second;
        bool ok = (oracle == 0 || oracle == p3rho);
        if (ok) {
            if (d != 1 && selmer_rank(3, d, rho) > 0 && !space) space = selmer_basis(d, 3);
            multiplet_prediction m = predict(d, fact, rho, space ? &*space : nullptr);
            i64 predicted = 0;
            for (auto& [c, v] : m.per_divisor)
                if (c == f) predicted = v;
            ok = predicted == oracle;
        }
        if (!ok) {
            ++bad;
            if (first.empty())
                first = "d=" + std::to_string(d) + " f=" + std::to_string(f) + " oracle " +
                        std::to_string(oracle);
        }
    });
    std::ostringstream os;
    os << pairs << " prime conductors, " << bad << " exceptions";
    if (!first.empty()) os << "; first: " << first;
    return {"5 prime conductor dichotomy (free vs restrictive)", bad == 0, os.str()};
}

criterion_result rank0_multiplicity(const sweep_data& D)
{
    i64 pairs = 0, bad = 0;
    std::string first;
    for_admissible_pairs([&](i64 d, i64 f, int rho, std::optional<selmer_space>&) {
        if (!(d < -3) || rho != 0 || f == 1) return;
        auto fact = factor_conductor(d, f);
        if (fact.tau > 3) return;
        for (auto& pd : fact.divisors)
            if (!pd.regular) return;
        ++pairs;
        auto it = D.count20k.find(f * f * d);
        i64 oracle = it == D.count20k.end() ? 0 : it->second;
        if (oracle != (i64(1) << (fact.tau - 1))) {
            ++bad;
            if (first.empty()) first = "d=" + std::to_string(d) + " f=" + std::to_string(f);
        }
    });
    std::ostringstream os;
    os << pairs << " pairs, " << bad << " exceptions";
    if (!first.empty()) os << "; first: " << first;
    return {"6 rank zero regular multiplicity 2^(tau-1)", bad == 0, os.str()};
}

criterion_result nilet_property(const sweep_data& D)
{
    i64 pairs = 0, nilets = 0;
    std::string first;
    for_admissible_pairs([&](i64 d, i64 f, int rho, std::optional<selmer_space>&) {
        if (!(d < -3) || rho != 0 || f == 1) return;
        auto fact = factor_conductor(d, f);
        for (auto& pd : fact.divisors)
            if (!pd.regular) return;
        ++pairs;
        auto it = D.count20k.find(f * f * d);
        if (it == D.count20k.end() || it->second == 0) {
            ++nilets;
            if (first.empty()) first = "d=" + std::to_string(d) + " f=" + std::to_string(f);
        }
    });
    std::ostringstream os;
    os << pairs << " pairs, " << nilets << " nilets";
    if (!first.empty()) os << "; first: " << first;
    return {"7 no nilets at rank zero over regular conductors", nilets == 0, os.str()};
}

criterion_result oracle_equivalence()
{
    bool ok = true;
    std::ostringstream os;
    for (i64 bound : {(i64)23, (i64)1000, (i64)2000}) {
        for (auto sign : {disc_sign::negative, disc_sign::positive}) {
            auto a = enumerate_fields(bound, sign);
            auto b = brute_force_oracle(bound, sign);
            std::multiset<i64> ma, mb;
            for (auto& r : a) ma.insert(r.dL);
            for (auto& r : b) mb.insert(r.dL);
            if (ma != mb) {
                ok = false;
                os << "bound " << bound << (sign == disc_sign::negative ? " neg" : " pos")
                   << ": " << ma.size() << " vs " << mb.size() << "; ";
            }
        }
    }
    if (ok) os << "multisets agree at bounds 23, 1000, 2000 (both signs)";
    return {"8 form enumeration equals the brute force oracle", ok, os.str()};
}

criterion_result dpf_counts(const sweep_data& D)
{
    i64 neg_rho1 = 0, neg_rho2 = 0, pos_rho1 = 0, others_decided = 0;
    std::map<i64, int> rho_cache;
    auto rho_of = [&](i64 dk) {
        auto it = rho_cache.find(dk);
        if (it != rho_cache.end()) return it->second;
        int r = dk == 1 ? 0 : rho3(dk);
        rho_cache[dk] = r;
        return r;
    };
    for (auto& r : D.neg20k) {
        if (r.f != 1) continue;
        int rho = rho_of(r.dK);
        dpf_type t = decidable_type_column(r, rho);
        if (t != dpf_type::alpha1) ++others_decided;
        if (rho == 1) ++neg_rho1;
        if (rho == 2) ++neg_rho2;
    }
    for (auto& r : D.pos100k) {
        if (r.f != 1 || r.cyclic) continue;
        int rho = rho_of(r.dK);
        dpf_type t = decidable_type_column(r, rho);
        if (rho == 1) {
            if (t == dpf_type::delta1) ++pos_rho1;
        } else if (t != dpf_type::undecided) {
            ++others_decided;
        }
    }
    bool ok = neg_rho1 == 2143 && neg_rho2 == 88 && pos_rho1 == 3300 && others_decided == 0;
    std::ostringstream os;
    os << "alpha1: " << neg_rho1 << "/2143 (rho 1), " << neg_rho2 << "/88 (rho 2); delta1: "
       << pos_rho1 << "/3300";
    return {"9 unramified type counts", ok, os.str()};
}

criterion_result thm_unramified_types()
{
    bool ok = true;
    using S = std::set<dpf_type>;
    ok &= unramified_types(field_signature::totally_complex, 1) == S{dpf_type::alpha1};
    ok &= unramified_types(field_signature::totally_complex, 2) == S{dpf_type::alpha1};
    ok &= unramified_types(field_signature::totally_real, 1) == S{dpf_type::delta1};
    ok &= unramified_types(field_signature::totally_real, 2) ==
          S{dpf_type::alpha1, dpf_type::delta1};
    ok &= unramified_types(field_signature::totally_real, 3) ==
          S{dpf_type::alpha1, dpf_type::delta1};
    bool threw = false;
    try {
        unramified_types(field_signature::totally_real, 0);
    } catch (const validation_error&) {
        threw = true;
    }
    ok &= threw;
    ok &= check_constraint({0, 0, 0, 1, 0, 0, 1});
    ok &= check_constraint({0, 0, 1, 2, 0, 0, 2});
    ok &= !check_constraint({1, 0, 0, 1, 0, 0, 1});
    ok &= !check_constraint({0, 0, 1, 2, 0, 0, 1});  // C > min(rho, 2)
    ok &= !check_constraint({0, 1, 0, 1, 1, 0, 1});  // R > min(s, 2)
    ok &= check_constraint({1, 1, 1, 2, 2, 1, 1});
    return {"10 unramified type theorem and constraint bounds", ok, ""};
}

} // namespace

std::vector<criterion_result> run_acceptance(int jobs)
{
    sweep_data D;
    D.neg20k = enumerate_fields(20000, disc_sign::negative, jobs);
    D.pos100k = enumerate_fields(100000, disc_sign::positive, jobs);
    for (auto& r : D.neg20k) D.count20k[r.dL]++;
    for (auto& r : D.pos100k)
        if (r.dL <= 20000) D.count20k[r.dL]++;

    std::vector<criterion_result> out;
    out.push_back(counts_negative(D));
    out.push_back(counts_positive(D));
    out.push_back(census_diffs(jobs));
    out.push_back(partition_identity(D));
    out.push_back(dichotomy(D));
    out.push_back(rank0_multiplicity(D));
    out.push_back(nilet_property(D));
    out.push_back(oracle_equivalence());
    out.push_back(dpf_counts(D));
    out.push_back(thm_unramified_types());
    return out;
}

} // namespace ringclass
