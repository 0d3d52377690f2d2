#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "ringclass/conductor.hpp"
#include "ringclass/cubicenum.hpp"
#include "ringclass/dpf.hpp"
#include "ringclass/multiplicity.hpp"
#include "ringclass/quadclass.hpp"
#include "ringclass/selmer.hpp"
#include "ringclass/tables.hpp"
#include "ringclass/verify.hpp"

using namespace ringclass;

namespace {

int default_jobs()
{
    if (const char* env = std::getenv("RINGCLASS_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

disc_sign parse_sign(const std::string& s)
{
    if (s == "negative" || s == "neg" || s == "-") return disc_sign::negative;
    if (s == "positive" || s == "pos" || s == "+") return disc_sign::positive;
    throw validation_error("sign must be negative or positive");
}

std::string quad_int_str(const quad_int& u, i64 d)
{
    std::ostringstream os;
    os << "(" << u.x.get_str() << " + " << u.y.get_str() << "*sqrt(" << d << "))/2";
    return os.str();
}

int cmd_enumerate(i64 bound, const std::string& sign_s, const std::string& format, int jobs)
{
    disc_sign sign = parse_sign(sign_s);
    auto v = enumerate_fields(bound, sign, jobs);
    if (format == "csv") {
        std::cout << record_csv_header() << "\n";
        for (auto& r : v) std::cout << record_to_csv(r) << "\n";
    } else if (format == "json") {
        for (auto& r : v) std::cout << record_to_json(r) << "\n";
    } else {
        for (auto& r : v) {
            std::printf("dL=%-8lld f=%-4lld dK=%-8lld x^3%+lldx^2%+lldx%+lld %s%s%s\n",
                        (long long)r.dL, (long long)r.f, (long long)r.dK, (long long)r.a2,
                        (long long)r.a1, (long long)r.a0,
                        r.signature == cubic_signature::totally_real ? "totallyReal" : "simplyReal",
                        r.cyclic ? " cyclic" : "", r.pure ? " pure" : "");
        }
        std::printf("total %zu fields with |dL| <= %lld\n", v.size(), (long long)bound);
    }
    return 0;
}

int cmd_rank(i64 d)
{
    quad_field_data K = make_field_data(d);
    std::printf("d = %lld\n", (long long)d);
    std::printf("h = %lld\n", (long long)K.h);
    std::printf("rho3 = %d\n", K.rho3);
    std::printf("sigma3 = %d\n", K.sigma3);
    if (d != 1) {
        quad_class_group cl(d);
        auto gens = cl.generators();
        std::printf("class group: ");
        if (gens.empty()) {
            std::printf("trivial\n");
        } else {
            for (size_t i = 0; i < gens.size(); ++i)
                std::printf("%sC%lld", i ? " x " : "", (long long)gens[i].second);
            std::printf("\n");
        }
    }
    if (K.unit) {
        std::printf("fundamental unit = (%s + %s*sqrt(%lld))/2, norm %d\n",
                    K.unit->x.get_str().c_str(), K.unit->y.get_str().c_str(), (long long)d,
                    K.unit->norm);
    }
    return 0;
}

int cmd_selmer(i64 d, i64 f)
{
    if (!is_admissible(d, f))
        throw validation_error("f = " + std::to_string(f) + " is not 3-admissible over d = " +
                               std::to_string(d));
    auto fact = factor_conductor(d, f);
    selmer_space S = selmer_basis(d, 3 * f);
    std::printf("d = %lld, f = %lld, sigma3 = %d\n", (long long)d, (long long)f, S.dimension());
    for (auto& u : S.basis) {
        const char* kind = u.source == virtual_unit_source::unit      ? "unit"
                           : u.source == virtual_unit_source::torsion ? "torsion"
                                                                      : "classGenerator";
        std::printf("  basis %s: %s (norm %s)\n", kind, quad_int_str(u.element, d).c_str(),
                    qnorm(d, u.element).get_str().c_str());
    }
    auto rep = ring_space(S, fact);
    for (auto& [c, dim] : rep.subspace_dims)
        std::printf("  V3(%lld): dim %d%s\n", (long long)c, dim,
                    rep.free_flags.at(c) ? " (free)" : "");
    std::printf("  defect delta3(%lld) = %d\n", (long long)f, rep.defect);
    return 0;
}

int cmd_multiplicity(i64 d, i64 f, int jobs)
{
    if (!is_admissible(d, f))
        throw validation_error("f = " + std::to_string(f) + " is not 3-admissible over d = " +
                               std::to_string(d));
    multiplet_prediction m = predict(d, f);
    const char* cov = "";
    switch (m.coverage) {
        case coverage_kind::unramified: cov = "unramified"; break;
        case coverage_kind::single_regular: cov = "regular prime conductor"; break;
        case coverage_kind::irregular_nine: cov = "irregular conductor 9"; break;
        case coverage_kind::two_prime: cov = "two prime divisors"; break;
        case coverage_kind::rank0_regular: cov = "rank zero, regular"; break;
        case coverage_kind::cyclic: cov = "cyclic"; break;
        case coverage_kind::partition: cov = "partition completion"; break;
        case coverage_kind::uncovered: cov = "uncovered"; break;
    }
    std::printf("d = %lld, f = %lld: %s, ring class rank %d\n", (long long)d, (long long)f, cov,
                m.ring_class_rank);
    i64 bound = 0;
    for (auto& [c, v] : m.per_divisor) bound = std::max(bound, c * c * (d < 0 ? -d : d));
    std::map<i64, i64> count;
    if (bound >= 1)
        for (auto& r :
             enumerate_fields(bound, d < 0 ? disc_sign::negative : disc_sign::positive, jobs))
            count[r.dL]++;
    bool all_match = true;
    for (auto& [c, v] : m.per_divisor) {
        i64 dL = c * c * d;
        i64 oracle = (d == 1 && c == 1) ? 0 : (count.count(dL) ? count[dL] : 0);
        std::printf("  m3(K, %lld) = %lld   (dL = %lld, enumeration finds %lld)\n", (long long)c,
                    (long long)v, (long long)dL, (long long)oracle);
        if (v != oracle) all_match = false;
    }
    if (m.coverage == coverage_kind::uncovered) {
        std::printf("  (no theorem covers this configuration; only m(1) is shown)\n");
        return 0;
    }
    if (!all_match) {
        std::printf("MISMATCH against the enumeration oracle\n");
        return 1;
    }
    return 0;
}

int cmd_table(const std::string& preset_s, const std::string& format, int jobs)
{
    table_preset preset;
    if (preset_s == "angell1972")
        preset = table_preset::angell1972;
    else if (preset_s == "angell1975")
        preset = table_preset::angell1975;
    else
        throw validation_error("unknown preset " + preset_s + " (angell1972 | angell1975)");

    i64 bound = preset_bound(preset);
    disc_sign sign = preset_sign(preset);
    auto strata = preset == table_preset::angell1972
                      ? std::pair{census_stratum::non_pure, census_stratum::pure}
                      : std::pair{census_stratum::non_cyclic_real, census_stratum::cyclic};
    std::vector<census_row> omitted;
    auto a = build_census(bound, sign, strata.first, &omitted, jobs);
    auto b = build_census(bound, sign, strata.second, &omitted, jobs);
    std::vector<census_row> all = a;
    all.insert(all.end(), b.begin(), b.end());

    if (format == "csv") {
        std::cout << census_to_csv(all);
    } else if (format == "json") {
        std::cout << census_to_json(all);
    } else {
        std::printf("%s stratum:\n%s\n",
                    preset == table_preset::angell1972 ? "simply real" : "totally real",
                    census_to_text(a).c_str());
        std::printf("%s stratum:\n%s\n",
                    preset == table_preset::angell1972 ? "pure cubic" : "cyclic",
                    census_to_text(b).c_str());
        for (auto& r : omitted)
            std::printf(
                "note: field-free row %s rho=%d (%lld pairs) omitted per the reference accounting\n",
                r.shape.pattern.c_str(), r.shape.rho, (long long)r.total);
    }
    auto rep = diff_against_expected(all, preset);
    if (rep.empty()) {
        std::printf("diff against %s: empty\n", preset_s.c_str());
        return 0;
    }
    for (auto& msg : rep.mismatches) std::printf("diff: %s\n", msg.c_str());
    return 1;
}

int cmd_verify(int jobs)
{
    auto results = run_acceptance(jobs);
    bool all = true;
    for (auto& r : results) {
        std::printf("[%s] %s%s%s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.empty() ? "" : ": ", r.detail.c_str());
        all &= r.passed;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "cubic fields as members of 3-ring class fields: enumeration, multiplicity prediction, census"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker threads for enumeration and census");

    i64 bound = 1000;
    std::string sign = "negative", format = "text";
    auto* enumerate = app.add_subcommand("enumerate", "enumerate cubic fields by |discriminant|");
    enumerate->add_option("--bound,-b", bound, "bound on |dL|")->required();
    enumerate->add_option("--sign,-s", sign, "negative | positive");
    enumerate->add_option("--format", format, "text | csv | json");

    i64 rank_d = 0;
    auto* rank =
        app.add_subcommand("rank", "class number, 3-class rank and Selmer rank of Q(sqrt d)");
    rank->add_option("-d", rank_d, "fundamental discriminant")->required();

    i64 sd = 0, sf = 1;
    auto* selmer = app.add_subcommand("selmer", "Selmer basis and ring spaces for (d, f)");
    selmer->add_option("-d", sd, "fundamental discriminant")->required();
    selmer->add_option("-f", sf, "admissible conductor")->required();

    i64 md = 0, mf = 1;
    auto* mult =
        app.add_subcommand("multiplicity", "predicted multiplicities vs the enumeration oracle");
    mult->add_option("-d", md, "fundamental discriminant")->required();
    mult->add_option("-f", mf, "admissible conductor")->required();

    std::string preset = "angell1972", tformat = "text";
    auto* table = app.add_subcommand("table", "census of a reference range with diff");
    table->add_option("--preset", preset, "angell1972 | angell1975")->required();
    table->add_option("--format", tformat, "text | csv | json");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(bound, sign, format, jobs);
        if (rank->parsed()) return cmd_rank(rank_d);
        if (selmer->parsed()) return cmd_selmer(sd, sf);
        if (mult->parsed()) return cmd_multiplicity(md, mf, jobs);
        if (table->parsed()) return cmd_table(preset, tformat, jobs);
        if (verify->parsed()) return cmd_verify(jobs);
    } catch (const resource_error& e) {
        std::fprintf(stderr, "resource error: %s\n", e.what());
        return 3;
    } catch (const validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
