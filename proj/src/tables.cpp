#include "ringclass/tables.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <thread>

#include "ringclass/conductor.hpp"
#include "ringclass/quadclass.hpp"

namespace ringclass {

std::string condition_label(row_condition c)
{
    switch (c) {
        case row_condition::none: return "";
        case row_condition::qm1: return "= -1 (mod 3)";
        case row_condition::lp1: return "= +1 (mod 3)";
        case row_condition::mixed: return "-+1 (mod 3)";
        case row_condition::d3p: return "d = +3 (mod 9)";
        case row_condition::d3m: return "d = -3 (mod 9)";
        case row_condition::d1m: return "d = -1 (mod 3)";
        case row_condition::d1p: return "d = +1 (mod 3)";
        case row_condition::dm3: return "d = -3";
        case row_condition::d1: return "d = 1";
    }
    return "";
}

conductor_shape shape_of_pair(i64 d, i64 f, int rho)
{
    conductor_shape s;
    s.rho = rho;
    if (f == 1) {
        s.pattern = "1";
        s.condition = row_condition::none;
        return s;
    }
    int e3 = 0;
    i64 rest = f;
    while (rest % 3 == 0) {
        rest /= 3;
        ++e3;
    }
    int nq = 0, nl = 0;
    for (auto& [q, e] : factorize(rest)) {
        (void)e;
        (mod_floor(q, 3) == 2 ? nq : nl)++;
    }
    static const char* qpart[] = {"", "q", "q1q2", "q1q2q3"};
    static const char* lpart[] = {"", "l", "l1l2", "l1l2l3"};
    assert(nq <= 3 && nl <= 3);
    s.pattern = std::string(e3 == 1 ? "3" : e3 == 2 ? "9" : "") + qpart[nq] + lpart[nl];

    if (d == 1) {
        s.condition = e3 ? row_condition::d1 : row_condition::lp1;
    } else if (d == -3) {
        if (e3)
            s.condition = row_condition::dm3;
        else
            s.condition = nq && nl ? row_condition::mixed
                                   : (nq ? row_condition::qm1 : row_condition::lp1);
    } else if (e3 > 0 && nq + nl >= 2) {
        // rows with a wild part and two tame primes are labelled by the tame residues
        s.condition =
            nq && nl ? row_condition::mixed : (nq ? row_condition::qm1 : row_condition::lp1);
    } else if (e3 == 1) {
        s.condition = mod_floor(d, 9) == 3 ? row_condition::d3p : row_condition::d3m;
    } else if (e3 == 2) {
        if (mod_floor(d, 9) == 6)
            s.condition = row_condition::d3m;
        else
            s.condition = mod_floor(d, 3) == 1 ? row_condition::d1p : row_condition::d1m;
    } else {
        s.condition =
            nq && nl ? row_condition::mixed : (nq ? row_condition::qm1 : row_condition::lp1);
    }
    return s;
}

namespace {

census_stratum stratum_of(i64 d)
{
    if (d == 1) return census_stratum::cyclic;
    if (d == -3) return census_stratum::pure;
    return d < 0 ? census_stratum::non_pure : census_stratum::non_cyclic_real;
}

void accumulate(std::map<conductor_shape, census_row>& rows, census_stratum stratum, i64 d,
                i64 bound, const std::map<i64, i64>& field_count)
{
    int rho = d == 1 ? 0 : rho3(d);
    assert(rho <= 2 && "multiplicities above 4 would leave the table layout");
    i64 ad = d < 0 ? -d : d;
    i64 fmax = isqrt64(bound / ad);
    for (i64 f : admissible_conductors(d, fmax)) {
        if (f == 1 && rho == 0) continue;  // no fields, not a formal discriminant either
        if (f == 1 && d == 1) continue;    // no cyclic cubic of conductor 1
        i64 dL = f * f * d;
        auto it = field_count.find(dL);
        i64 m = it == field_count.end() ? 0 : it->second;
        assert(m <= 4);
        conductor_shape s = shape_of_pair(d, f, rho);
        census_row& row = rows[s];
        row.stratum = stratum;
        row.shape = s;
        row.total += 1;
        row.by_multiplicity[(size_t)m] += 1;
    }
}

} // namespace

std::vector<census_row> build_census(i64 bound, disc_sign sign, census_stratum stratum, int jobs)
{
    return build_census(bound, sign, stratum, nullptr, jobs);
}

std::vector<census_row> build_census(i64 bound, disc_sign sign, census_stratum stratum,
                                     std::vector<census_row>* omitted, int jobs)
{
    if (bound < 1) return {};
    std::map<i64, i64> field_count;
    for (auto& r : enumerate_fields(bound, sign, jobs)) field_count[r.dL]++;

    std::vector<i64> ds;
    if (sign == disc_sign::negative) {
        for (i64 d = -3; d >= -bound; --d)
            if (is_fundamental_discriminant(d) && stratum_of(d) == stratum) ds.push_back(d);
    } else {
        for (i64 d = 1; d <= bound; ++d)
            if (is_fundamental_discriminant(d) && stratum_of(d) == stratum) ds.push_back(d);
    }

    std::map<conductor_shape, census_row> rows;
    if (jobs <= 1) {
        for (i64 d : ds) accumulate(rows, stratum, d, bound, field_count);
    } else {
        std::vector<std::map<conductor_shape, census_row>> parts(jobs);
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back([&, j] {
                for (size_t i = j; i < ds.size(); i += jobs)
                    accumulate(parts[j], stratum, ds[i], bound, field_count);
            });
        for (auto& t : threads) t.join();
        for (auto& part : parts)
            for (auto& [s, row] : part) {
                census_row& dst = rows[s];
                dst.stratum = row.stratum;
                dst.shape = s;
                dst.total += row.total;
                for (int m = 0; m < 5; ++m) dst.by_multiplicity[m] += row.by_multiplicity[m];
            }
    }

    // The reference accounting: a field-free row over base fields of Selmer
    // rank >= 2 does not enter the table (its pairs are surfaced separately).
    std::vector<census_row> out;
    for (auto& [s, row] : rows) {
        int sigma = s.rho + (stratum == census_stratum::non_cyclic_real ? 1 : 0);
        if (stratum == census_stratum::pure) sigma = 1;
        bool fieldless = row.field_count() == 0;
        if (fieldless && sigma >= 2 && stratum != census_stratum::cyclic) {
            if (omitted) omitted->push_back(row);
            continue;
        }
        out.push_back(row);
    }
    return out;
}

census_totals field_totals(i64 bound, disc_sign sign, census_stratum stratum)
{
    census_totals t;
    for (auto& row : build_census(bound, sign, stratum)) {
        t.nilets += row.by_multiplicity[0];
        for (int m = 1; m <= 4; ++m) t.discriminants += row.by_multiplicity[m];
        t.fields += row.field_count();
    }
    return t;
}

i64 preset_bound(table_preset p) { return p == table_preset::angell1972 ? 20000 : 100000; }
disc_sign preset_sign(table_preset p)
{
    return p == table_preset::angell1972 ? disc_sign::negative : disc_sign::positive;
}

namespace {

census_row mk(census_stratum st, const char* pattern, row_condition cond, int rho, i64 total,
              std::array<i64, 5> m)
{
    census_row r;
    r.stratum = st;
    r.shape = {pattern, cond, rho};
    r.total = total;
    r.by_multiplicity = m;
    return r;
}

std::vector<census_row> expected_1972()
{
    using rc = row_condition;
    auto NP = census_stratum::non_pure;
    auto PU = census_stratum::pure;
    return {
        // simply real non-pure, rank 0
        mk(NP, "q", rc::qm1, 0, 454, {0, 454, 0, 0, 0}),
        mk(NP, "3", rc::d3p, 0, 62, {0, 62, 0, 0, 0}),
        mk(NP, "3", rc::d3m, 0, 58, {0, 58, 0, 0, 0}),
        mk(NP, "9", rc::d3m, 0, 7, {0, 0, 0, 7, 0}),
        mk(NP, "9", rc::d1m, 0, 23, {0, 23, 0, 0, 0}),
        mk(NP, "9", rc::d1p, 0, 20, {0, 20, 0, 0, 0}),
        mk(NP, "l", rc::lp1, 0, 64, {0, 64, 0, 0, 0}),
        mk(NP, "q1q2", rc::qm1, 0, 6, {0, 0, 6, 0, 0}),
        mk(NP, "3q", rc::d3p, 0, 7, {0, 0, 7, 0, 0}),
        mk(NP, "3q", rc::d3m, 0, 3, {0, 0, 3, 0, 0}),
        mk(NP, "9q", rc::d1m, 0, 3, {0, 0, 3, 0, 0}),
        mk(NP, "9q", rc::d1p, 0, 3, {0, 0, 3, 0, 0}),
        mk(NP, "3l", rc::d3p, 0, 1, {0, 0, 1, 0, 0}),
        mk(NP, "ql", rc::mixed, 0, 1, {0, 0, 1, 0, 0}),
        // rank 1
        mk(NP, "1", rc::none, 1, 2143, {0, 2143, 0, 0, 0}),
        mk(NP, "q", rc::qm1, 1, 196, {162, 0, 0, 34, 0}),
        mk(NP, "3", rc::d3p, 1, 24, {22, 0, 0, 2, 0}),
        mk(NP, "3", rc::d3m, 1, 22, {16, 0, 0, 6, 0}),
        mk(NP, "9", rc::d1m, 1, 5, {5, 0, 0, 0, 0}),
        mk(NP, "9", rc::d1p, 1, 9, {8, 0, 0, 1, 0}),
        mk(NP, "l", rc::lp1, 1, 22, {19, 0, 0, 3, 0}),
        mk(NP, "q1q2", rc::qm1, 1, 2, {1, 0, 0, 1, 0}),
        mk(NP, "3q", rc::d3p, 1, 3, {1, 0, 0, 2, 0}),
        mk(NP, "9q", rc::d1p, 1, 1, {0, 0, 0, 1, 0}),
        mk(NP, "ql", rc::mixed, 1, 2, {1, 0, 0, 1, 0}),
        // rank 2
        mk(NP, "1", rc::none, 2, 22, {0, 0, 0, 0, 22}),
        // pure cubic table, d = -3
        mk(PU, "q", rc::qm1, 0, 11, {8, 3, 0, 0, 0}),
        mk(PU, "9", rc::dm3, 0, 1, {0, 1, 0, 0, 0}),
        mk(PU, "l", rc::lp1, 0, 10, {7, 3, 0, 0, 0}),
        mk(PU, "q1q2", rc::qm1, 0, 6, {1, 5, 0, 0, 0}),
        mk(PU, "3q", rc::dm3, 0, 5, {1, 4, 0, 0, 0}),
        mk(PU, "9q", rc::dm3, 0, 2, {0, 0, 2, 0, 0}),
        mk(PU, "3l", rc::dm3, 0, 3, {1, 2, 0, 0, 0}),
        mk(PU, "9l", rc::dm3, 0, 1, {0, 0, 1, 0, 0}),
        mk(PU, "ql", rc::mixed, 0, 8, {2, 6, 0, 0, 0}),
        mk(PU, "q1q2l", rc::mixed, 0, 1, {0, 1, 0, 0, 0}),
        mk(PU, "3q1q2", rc::dm3, 0, 2, {0, 2, 0, 0, 0}),
        mk(PU, "3ql", rc::dm3, 0, 2, {0, 2, 0, 0, 0}),
    };
}

std::vector<census_row> expected_1975()
{
    using rc = row_condition;
    auto NC = census_stratum::non_cyclic_real;
    auto CY = census_stratum::cyclic;
    return {
        // totally real non-cyclic, rank 0
        mk(NC, "q", rc::qm1, 0, 3025, {2219, 806, 0, 0, 0}),
        mk(NC, "3", rc::d3p, 0, 396, {287, 109, 0, 0, 0}),
        mk(NC, "3", rc::d3m, 0, 389, {284, 105, 0, 0, 0}),
        mk(NC, "9", rc::d3m, 0, 48, {9, 38, 0, 1, 0}),
        mk(NC, "9", rc::d1m, 0, 136, {102, 34, 0, 0, 0}),
        mk(NC, "9", rc::d1p, 0, 127, {96, 31, 0, 0, 0}),
        mk(NC, "l", rc::lp1, 0, 402, {316, 86, 0, 0, 0}),
        mk(NC, "q1q2", rc::qm1, 0, 70, {30, 38, 2, 0, 0}),
        mk(NC, "3q", rc::d3p, 0, 46, {23, 23, 0, 0, 0}),
        mk(NC, "3q", rc::d3m, 0, 45, {19, 25, 1, 0, 0}),
        mk(NC, "9q", rc::d3m, 0, 5, {0, 0, 4, 1, 0}),
        mk(NC, "9q", rc::d1m, 0, 14, {6, 8, 0, 0, 0}),
        mk(NC, "9q", rc::d1p, 0, 15, {5, 10, 0, 0, 0}),
        mk(NC, "9l", rc::d1m, 0, 1, {0, 1, 0, 0, 0}),
        mk(NC, "3l", rc::d3p, 0, 6, {1, 5, 0, 0, 0}),
        mk(NC, "3l", rc::d3m, 0, 5, {2, 3, 0, 0, 0}),
        mk(NC, "ql", rc::mixed, 0, 43, {13, 29, 1, 0, 0}),
        mk(NC, "3q1q2", rc::qm1, 0, 2, {0, 1, 1, 0, 0}),
        // rank 1
        mk(NC, "1", rc::none, 1, 3300, {0, 3300, 0, 0, 0}),
        mk(NC, "q", rc::qm1, 1, 275, {261, 0, 0, 14, 0}),
        mk(NC, "3", rc::d3m, 1, 35, {34, 0, 0, 1, 0}),
        mk(NC, "l", rc::lp1, 1, 28, {25, 0, 0, 3, 0}),
        mk(NC, "3q", rc::d3m, 1, 2, {1, 0, 0, 1, 0}),
        // rank 2
        mk(NC, "1", rc::none, 2, 5, {0, 0, 0, 0, 5}),
        // cyclic
        mk(CY, "9", rc::d1, 0, 1, {0, 1, 0, 0, 0}),
        mk(CY, "l", rc::lp1, 0, 30, {0, 30, 0, 0, 0}),
        mk(CY, "9l", rc::d1, 0, 4, {0, 0, 4, 0, 0}),
        mk(CY, "l1l2", rc::lp1, 0, 6, {0, 0, 6, 0, 0}),
    };
}

} // namespace

const std::vector<census_row>& expected_rows(table_preset p)
{
    static const std::vector<census_row> t72 = expected_1972();
    static const std::vector<census_row> t75 = expected_1975();
    return p == table_preset::angell1972 ? t72 : t75;
}

namespace {

std::string row_key(const census_row& r)
{
    std::ostringstream os;
    switch (r.stratum) {
        case census_stratum::non_pure: os << "nonPure"; break;
        case census_stratum::pure: os << "pure"; break;
        case census_stratum::cyclic: os << "cyclic"; break;
        case census_stratum::non_cyclic_real: os << "nonCyclicReal"; break;
    }
    os << "/" << r.shape.pattern;
    std::string cond = condition_label(r.shape.condition);
    if (!cond.empty()) os << "/" << cond;
    os << "/rho" << r.shape.rho;
    return os.str();
}

} // namespace

diff_report diff_against_expected(const std::vector<census_row>& census, table_preset preset)
{
    diff_report rep;
    std::map<std::string, const census_row*> got;
    for (auto& r : census) got[row_key(r)] = &r;
    std::map<std::string, const census_row*> want;
    for (auto& r : expected_rows(preset)) want[row_key(r)] = &r;

    for (auto& [key, exp] : want) {
        auto it = got.find(key);
        if (it == got.end()) {
            rep.mismatches.push_back("missing row " + key + " (expected total " +
                                     std::to_string(exp->total) + ")");
            continue;
        }
        const census_row& g = *it->second;
        if (g.total != exp->total)
            rep.mismatches.push_back("row " + key + ": total " + std::to_string(g.total) +
                                     " expected " + std::to_string(exp->total));
        for (int m = 0; m < 5; ++m)
            if (g.by_multiplicity[m] != exp->by_multiplicity[m])
                rep.mismatches.push_back("row " + key + ": m=" + std::to_string(m) + " count " +
                                         std::to_string(g.by_multiplicity[m]) + " expected " +
                                         std::to_string(exp->by_multiplicity[m]));
    }
    for (auto& [key, g] : got)
        if (!want.count(key))
            rep.mismatches.push_back("unexpected row " + key + " (total " +
                                     std::to_string(g->total) + ")");
    return rep;
}

std::string census_to_csv(const std::vector<census_row>& rows)
{
    std::ostringstream os;
    os << "pattern,condition,rho,total,m0,m1,m2,m3,m4,fields\n";
    for (auto& r : rows) {
        os << r.shape.pattern << ",\"" << condition_label(r.shape.condition) << "\"," << r.shape.rho
           << ',' << r.total;
        for (int m = 0; m < 5; ++m) os << ',' << r.by_multiplicity[m];
        os << ',' << r.field_count() << '\n';
    }
    return os.str();
}

std::string census_to_json(const std::vector<census_row>& rows)
{
    std::ostringstream os;
    for (auto& r : rows) {
        os << "{\"pattern\":\"" << r.shape.pattern << "\",\"condition\":\""
           << condition_label(r.shape.condition) << "\",\"rho\":" << r.shape.rho
           << ",\"total\":" << r.total << ",\"m\":[";
        for (int m = 0; m < 5; ++m) os << (m ? "," : "") << r.by_multiplicity[m];
        os << "],\"fields\":" << r.field_count() << "}\n";
    }
    return os.str();
}

std::string census_to_text(const std::vector<census_row>& rows)
{
    std::ostringstream os;
    os << "  f          condition        rho   total      m0      m1      m2      m3      m4  fields\n";
    i64 tot = 0;
    std::array<i64, 5> ms{};
    i64 fc = 0;
    for (auto& r : rows) {
        char buf[160];
        snprintf(buf, sizeof buf, "  %-10s %-16s %3d %7lld %7lld %7lld %7lld %7lld %7lld %7lld\n",
                 r.shape.pattern.c_str(), condition_label(r.shape.condition).c_str(), r.shape.rho,
                 (long long)r.total, (long long)r.by_multiplicity[0], (long long)r.by_multiplicity[1],
                 (long long)r.by_multiplicity[2], (long long)r.by_multiplicity[3],
                 (long long)r.by_multiplicity[4], (long long)r.field_count());
        os << buf;
        tot += r.total;
        for (int m = 0; m < 5; ++m) ms[m] += r.by_multiplicity[m];
        fc += r.field_count();
    }
    char buf[160];
    snprintf(buf, sizeof buf, "  %-10s %-16s %3s %7lld %7lld %7lld %7lld %7lld %7lld %7lld\n",
             "summary", "", "", (long long)tot, (long long)ms[0], (long long)ms[1], (long long)ms[2],
             (long long)ms[3], (long long)ms[4], (long long)fc);
    os << buf;
    return os.str();
}

} // namespace ringclass
