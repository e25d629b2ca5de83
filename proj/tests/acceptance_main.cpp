// Acceptance gate: one PASS/FAIL line per criterion, exit code = failures.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quintic/corpus.hpp"
#include "quintic/densities.hpp"
#include "quintic/padic_roots.hpp"

using namespace quintic;

namespace {

int failures = 0;

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error("violated: " + what);
}

template <typename F>
void criterion(const std::string& name, double budget_seconds, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && dt > budget_seconds) {
        ok = false;
        detail += " (exceeded time budget of " + std::to_string(budget_seconds) + "s)";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(22) << name << "  ["
              << std::fixed << std::setprecision(2) << std::setw(7) << dt << "s]  " << detail
              << std::endl;
}

std::string criterion_local_classes() {
    const auto& classes = wild_quintics_q5();
    expect(classes.size() == 25, "25 totally ramified quintic classes over Q5");

    std::map<long, int> hist;
    std::set<std::string> keys;
    Rat mass(0);
    int galois = 0;
    for (const auto& c : classes) {
        expect(c.e == 5 && c.f == 1 && c.wild, "class shape e=5 f=1 wild");
        expect(c.star == c.galois, "congruence flag equals galois flag on " + c.key());
        expect(c.aut == (c.galois ? 5 : 1), "automorphism count on " + c.key());
        expect(is_eisenstein_at(c.rep, 5), "representative eisenstein on " + c.key());
        expect(star_condition(c.rep) == c.star, "representative congruence on " + c.key());
        hist[c.disc_exp]++;
        keys.insert(c.key());
        mass += Rat(1, pow_int(5, static_cast<unsigned long>(c.disc_exp)) * c.aut);
        if (c.galois) {
            ++galois;
            expect(c.disc_exp == 8, "galois classes have discriminant exponent 8");
        }
    }
    expect(keys.size() == 25, "class keys are distinct");
    expect(galois == 5, "exactly 5 galois classes");
    std::map<long, int> want{{5, 4}, {6, 4}, {7, 4}, {8, 8}, {9, 5}};
    expect(hist == want, "discriminant exponent histogram (4,4,4,8,5)");
    expect(mass == Rat(1, 625), "total wild mass 1/625");

    // each field contains exactly aut roots of its own generator, and the
    // count is stable under re-generating from a shifted defining polynomial
    std::vector<IntPoly> galois_reps;
    for (const auto& c : classes) {
        long n = count_roots_in_extension(c.rep, c.rep);
        expect(n == c.aut, "self root count equals aut on " + c.key());
        if (c.galois) {
            galois_reps.push_back(c.rep);
            expect(count_roots_in_extension(c.rep.shift(5), c.rep) == 5,
                   "shifted generator keeps 5 roots on " + c.key());
        }
    }
    for (size_t i = 0; i < galois_reps.size(); ++i)
        for (size_t j = 0; j < galois_reps.size(); ++j)
            if (i != j)
                expect(count_roots_in_extension(galois_reps[i], galois_reps[j]) == 0,
                       "distinct galois classes share no roots");
    return "25 classes, 5 galois, histogram (4,4,4,8,5), mass 1/625, root counts consistent";
}

std::string criterion_masses() {
    for (long pl : {5, 7, 11, 13, 19, 29, 31}) {
        Int p(pl);
        expect(mass_subset(LocalConditionSet::all(p)) == mass_all_closed(p),
               "enumerated mass equals closed form at p = " + p.str());
    }
    expect(mass_subset(LocalConditionSet::not_totally_ramified(11)) ==
               mass_all_closed(11) - Rat(1, 14641),
           "complement identity at p = 11");
    expect(mass_subset(LocalConditionSet::totally_ramified(5)) == Rat(1, 625),
           "totally ramified mass at 5");
    expect(mass_subset(LocalConditionSet::totally_ramified_galois()) == Rat(1, 390625),
           "galois totally ramified mass 5^-8");
    expect(mass_subset(LocalConditionSet::totally_ramified(2)) == Rat(1, 16),
           "tame totally ramified mass at 2");
    expect(local_density_factor(LocalConditionSet::inert(2)) == Rat(16, 185),
           "inert density factor at 2");
    expect(local_density_factor(LocalConditionSet::inert(5)) == Rat(125, 811),
           "inert density factor at 5");
    expect(local_density_factor(LocalConditionSet::totally_ramified(7)) == Rat(1, 2857),
           "totally ramified density factor at 7");
    return "closed-form masses, subset masses, and density factors all exact";
}

std::string criterion_density_constants() {
    expect(Rat(1) - local_density_factor(LocalConditionSet::totally_ramified_star()) ==
               Rat(506874, 506875),
           "congruence-class complement 506874/506875");

    auto g1 = genus_one_density(695);
    expect(g1.width() < Rat(1, Int(1000000000)), "genus-one interval width below 1e-9");
    expect(g1.rounded(6) == Rat(999935, 1000000), "genus-one density 0.999935 to 6 digits");

    auto avg = average_genus_number_digits(5);
    expect(avg.lo() > 1, "average genus number exceeds 1");
    expect(avg.rounded(5) == Rat(100026, 100000), "average genus number 1.00026 to 5 digits");

    // closed form of the local mass against full enumeration at the primes
    // where all five tame ramified classes appear
    int checked = 0;
    for (std::uint32_t pl : primes_up_to(2000)) {
        if (pl % 5 != 1) continue;
        Int p(pl);
        Int scale = pow_int(p, 4) + pow_int(p, 3) + 2 * pow_int(p, 2) + 2 * p + 1;
        expect(mass_subset(LocalConditionSet::all(p)) == Rat(scale, pow_int(p, 4)),
               "mass scale identity at p = " + p.str());
        if (++checked == 50) break;
    }
    expect(checked == 50, "verified 50 primes = 1 mod 5");
    return "exact complement, 0.999935 @6, 1.00026 @5, mass identity at 50 primes";
}

std::string criterion_genus_oracles() {
    struct Case {
        const char* poly;
        long genus;
        long t;
    };
    for (const Case& c : std::initializer_list<Case>{
             {"x^5 - x - 1", 1, 0},
             {"x^5 - 11", 5, 1},
             {"x^5 - 341", 25, 2},
             {"x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1", 1, 1},
         }) {
        auto cert = genus_number(parse_poly(c.poly));
        expect(cert.genus == c.genus,
               std::string(c.poly) + " has genus " + std::to_string(c.genus));
        expect(cert.t == c.t, std::string(c.poly) + " has t = " + std::to_string(c.t));
    }
    expect(genus_number(parse_poly("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1")).cyclicity.cyclic,
           "conductor 11 field is cyclic");

    auto star = genus_number(parse_poly("x^5 + 5*x^4 - 5"));
    expect(star.genus == 5 && star.ram.counted_primes == std::vector<Int>{5},
           "eisenstein congruence at 5 contributes to t");

    for (Int c = -2; c <= 2; ++c) {
        expect(genus_number(parse_poly("x^5 - 11").shift(c)).genus == 5,
               "genus invariant under shift by " + c.str());
        expect(genus_number(parse_poly("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1").shift(c)).genus == 1,
               "cyclic genus invariant under shift by " + c.str());
    }
    return "4 oracle fields, congruence case, and 10 shifted variants agree";
}

std::string criterion_sieve() {
    auto s2 = truncated_sieve_sum(100);
    auto s3 = truncated_sieve_sum(1000);
    auto s4 = truncated_sieve_sum(10000);
    Rat c3 = (s3.lo() + s3.hi()) / 2;
    Rat c4 = (s4.lo() + s4.hi()) / 2;
    expect(s2.lo() <= c3 && c3 <= s2.hi(), "depth 1000 value inside depth 100 interval");
    expect(s3.lo() <= c4 && c4 <= s3.hi(), "depth 10000 value inside depth 1000 interval");
    expect(s3.width() < s2.width() && s4.width() < s3.width(), "widths shrink with depth");

    auto euler = genus_one_density(3220);
    expect(std::max(euler.lo(), s4.lo()) <= std::min(euler.hi(), s4.hi()),
           "sieve and euler-product intervals overlap");
    return "sieve intervals nest across depths and meet the euler product";
}

std::string criterion_screen() {
    IntPoly witness = parse_poly("x^5 + 35*x^2 + 14*x + 399");
    auto rep = norm_euclidean_screen(witness);
    expect(rep.passes, "witness passes all four stages");
    expect(genus_number(witness).genus == 1, "witness has genus 1");

    auto dens = screen_density(500);
    expect(dens.lo() > 0, "screen density strictly positive");
    expect(dens.lo() > Rat(4, 1000000) && dens.hi() < Rat(5, 1000000),
           "screen density within (4e-6, 5e-6)");
    return "witness passes, screen density positive near 4.7e-6";
}

std::string criterion_corpus() {
    std::vector<IntPoly> polys = {
        parse_poly("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1"),
        parse_poly("x^5 - x - 1"),
        parse_poly("x^5 - 11"),
        parse_poly("x^5 - 11").shift(1),
        parse_poly("x^5 - 341"),
        parse_poly("x^5 - x^4 - x + 1"),
        parse_poly("x^5 - 2"),
        parse_poly("x^5 + 5*x^4 - 5"),
    };
    std::string first;
    for (int workers : {1, 2, 5}) {
        CorpusOptions opts;
        opts.workers = workers;
        auto recs = run_pipeline(polys, opts);
        std::ostringstream out;
        write_records_jsonl(recs, out);
        if (first.empty())
            first = out.str();
        else
            expect(out.str() == first,
                   "serialized corpus identical with " + std::to_string(workers) + " workers");
    }
    std::istringstream in(first);
    auto recs = read_records_jsonl(in);
    expect(recs.size() == 8, "eight records");
    expect(recs[2].duplicate_suspect && recs[3].duplicate_suspect,
           "shifted pair flagged as duplicate suspects");
    expect(recs[5].status == "error", "reducible input becomes an error record");

    for (const auto& c : wild_quintics_q5())
        expect(c.star == c.galois, "congruence flag equals galois flag on " + c.key());
    return "pipeline deterministic across 1/2/5 workers, duplicates and errors classified";
}

} // namespace

int main() {
    std::cout << "acceptance suite\n";
    criterion("local-classes-q5", 120.0, criterion_local_classes);
    criterion("local-masses", 120.0, criterion_masses);
    criterion("density-constants", 120.0, criterion_density_constants);
    criterion("genus-oracles", 300.0, criterion_genus_oracles);
    criterion("sieve-consistency", 180.0, criterion_sieve);
    criterion("screen-positivity", 120.0, criterion_screen);
    criterion("corpus-determinism", 300.0, criterion_corpus);
    std::cout << "acceptance: " << (7 - failures) << "/7 passed" << std::endl;
    return failures;
}
