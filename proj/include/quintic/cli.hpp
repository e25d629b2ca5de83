#pragma once

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "quintic/corpus.hpp"
#include "quintic/densities.hpp"
#include "quintic/padic_roots.hpp"

namespace quintic {

namespace detail {

inline void print_local_class(const LocalFieldClass& c, bool records, std::ostream& out) {
    if (records) {
        Json j;
        j["e"] = c.e;
        j["f"] = c.f;
        j["disc_exp"] = c.disc_exp;
        j["aut"] = c.aut;
        j["galois"] = c.galois;
        if (c.wild) {
            j["star"] = c.star;
            j["eisenstein"] = poly_to_csv(c.rep);
        } else {
            j["tame_u"] = c.tame_u;
        }
        out << j.dump() << '\n';
    } else {
        out << "e=" << c.e << " f=" << c.f << " d=" << c.disc_exp << " aut=" << c.aut
            << (c.galois ? " galois" : "       ");
        if (c.wild) out << (c.star ? " star  " : "       ") << ' ' << poly_to_string(c.rep);
        if (!c.wild && c.e > 1) out << " u=" << c.tame_u;
        out << '\n';
    }
}

inline void print_certified(const CertifiedValue& v, int digits, bool records, std::ostream& out) {
    if (records) {
        Json j;
        j["method"] = v.method;
        j["cutoff"] = v.cutoff;
        j["lo"] = decimal_string(v.lo(), digits + 6);
        j["hi"] = decimal_string(v.hi(), digits + 6);
        j["lo_exact"] = v.lo().str();
        j["hi_exact"] = v.hi().str();
        j["digits"] = digits;
        if (v.rounds_unambiguously(digits))
            j["rounded"] = decimal_string(v.rounded(digits), digits);
        else
            j["rounded"] = nullptr;
        out << j.dump() << '\n';
    } else {
        out << v.method << ", cutoff " << v.cutoff << '\n';
        out << "interval [" << decimal_string(v.lo(), digits + 6) << ", "
            << decimal_string(v.hi(), digits + 6) << "]\n";
        if (v.rounds_unambiguously(digits))
            out << "certified to " << digits << " digits: "
                << decimal_string(v.rounded(digits), digits) << '\n';
        else
            out << "rounding at " << digits << " digits is not settled at this cutoff\n";
    }
}

inline void print_genus_text(const FieldRecord& rec, std::ostream& out) {
    const GenusCertificate& c = rec.cert;
    out << "poly: " << poly_to_string(c.poly) << '\n';
    out << "disc: " << c.ram.disc;
    if (!c.ram.disc_factors.empty()) {
        out << " =";
        bool first = true;
        Int sign = c.ram.disc < 0 ? -1 : 1;
        if (sign < 0) out << " -1 *";
        for (const auto& [p, e] : c.ram.disc_factors) {
            if (!first) out << " *";
            out << ' ' << p;
            if (e > 1) out << '^' << e;
            first = false;
        }
        if (c.ram.unfactored_cofactor != 1) out << " * " << c.ram.unfactored_cofactor;
    }
    out << '\n';
    out << "irreducible: " << c.irreducibility << '\n';
    out << "signature: (" << (5 - 2 * c.complex_places) << ", " << c.complex_places << ")\n";
    out << "cyclic: " << (c.cyclicity.cyclic ? "yes" : "no");
    if (!c.cyclicity.cyclic) {
        out << " (witness p=" << c.cyclicity.witness_prime << ", shape";
        for (long d : c.cyclicity.witness_shape) out << ' ' << d;
        out << ')';
    } else {
        out << " (all " << c.cyclicity.sample_bound << " sampled good primes have pure shape)";
    }
    out << '\n';
    out << "5 totally ramified: " << (c.ram.five_totally_ramified ? "yes" : "no");
    if (c.ram.star_at_5.has_value()) out << ", congruence condition " << (*c.ram.star_at_5 ? "holds" : "fails");
    out << '\n';
    out << "counted primes:";
    if (c.ram.counted_primes.empty()) out << " none";
    for (const Int& p : c.ram.counted_primes) out << ' ' << p;
    out << '\n';
    out << "t = " << c.t << '\n';
    out << "genus number: " << c.genus << '\n';
}

inline std::vector<IntPoly> ingest_file(const std::string& path, IngestResult* info = nullptr) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input file: " + path);
    IngestResult r = ingest_corpus(in);
    if (info) *info = r;
    return r.polys;
}

} // namespace detail

// All commands funnel through here so tests can drive the CLI in-process.
// Exit codes: 0 ok, 1 usage, 2 computation failed, 3 io failed.
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"genus numbers of quintic fields and their local statistics"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or records")
        ->check(CLI::IsMember({"text", "records"}));

    GenusOptions gopts;
    long trial_bound = static_cast<long>(gopts.factor_budget.trial_bound);
    long rho_steps = gopts.factor_budget.rho_steps;
    std::uint64_t seed = gopts.seed;
    app.add_option("--trial-bound", trial_bound, "trial division bound for factoring");
    app.add_option("--rho-steps", rho_steps, "iteration budget per rho attempt");
    app.add_option("--sample-bound", gopts.cyclic_sample_bound, "good primes sampled for the cyclicity test");
    app.add_option("--seed", seed, "seed for randomized subroutines");

    // genus
    auto* genus_cmd = app.add_subcommand("genus", "genus number of the field defined by a monic quintic");
    std::string genus_poly;
    genus_cmd->add_option("--poly", genus_poly, "polynomial, csv coefficients (constant first) or expression")
        ->required();

    // local
    auto* local_cmd = app.add_subcommand("local", "local field and etale algebra computations");
    local_cmd->require_subcommand(1);
    auto* enum_cmd = local_cmd->add_subcommand("enumerate-q5", "the 25 totally ramified quintic extensions of Q5");
    auto* mass_cmd = local_cmd->add_subcommand("mass", "mass of quintic etale algebras under a local condition");
    std::string mass_prime = "5";
    std::string mass_condition = "all";
    mass_cmd->add_option("-p,--prime", mass_prime, "residue prime")->required();
    mass_cmd->add_option("--condition", mass_condition, "all, inert, totally-ramified, not-totally-ramified, totally-ramified-galois, totally-ramified-star")
        ->check(CLI::IsMember({"all", "inert", "totally-ramified", "not-totally-ramified",
                               "totally-ramified-galois", "totally-ramified-star"}));
    auto* split_cmd = local_cmd->add_subcommand("split", "splitting type of a squarefree monic polynomial at p");
    std::string split_poly, split_prime;
    split_cmd->add_option("--poly", split_poly, "polynomial")->required();
    split_cmd->add_option("-p,--prime", split_prime, "prime")->required();

    // density
    auto* density_cmd = app.add_subcommand("density", "certified density and moment constants");
    density_cmd->require_subcommand(1);
    int digits = 6;
    long cutoff = 0;
    density_cmd->add_option("--digits", digits, "decimal digits to certify");
    density_cmd->add_option("--cutoff", cutoff, "explicit euler product cutoff (overrides --digits)");
    auto* den_genus_one = density_cmd->add_subcommand("genus-one", "density of fields with genus number one");
    auto* den_average = density_cmd->add_subcommand("average", "average genus number by discriminant order");
    auto* den_lower = density_cmd->add_subcommand("lower-bound", "lower bound for density of genus number 5^k");
    long lower_k = 1;
    den_lower->add_option("--k", lower_k, "exponent k")->required();
    auto* den_sieve = density_cmd->add_subcommand("sieve", "truncated inclusion-exclusion sum with remainder bound");
    long sieve_y = 1000;
    den_sieve->add_option("--Y", sieve_y, "truncation bound")->required();
    auto* den_screen = density_cmd->add_subcommand("screen", "density of fields passing the arithmetic screen");
    auto* den_count = density_cmd->add_subcommand("count-constant", "leading constant of the field count by signature");
    int count_i = 0;
    den_count->add_option("--i", count_i, "number of complex places (0, 1, 2)")->required();

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "batch processing of polynomial lists");
    corpus_cmd->require_subcommand(1);
    auto* run_cmd = corpus_cmd->add_subcommand("run", "compute field records for every input polynomial");
    std::string run_input, run_output = "-";
    int workers = 1;
    run_cmd->add_option("--input", run_input, "input file, one polynomial per line")->required();
    run_cmd->add_option("--output", run_output, "output jsonl file, - for stdout");
    run_cmd->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 64));
    auto* stats_cmd = corpus_cmd->add_subcommand("stats", "aggregate statistics over a record file");
    std::string stats_records;
    stats_cmd->add_option("--records", stats_records, "jsonl record file")->required();
    auto* screen_cmd = corpus_cmd->add_subcommand("screen", "run the arithmetic screen over input polynomials");
    std::string screen_input;
    screen_cmd->add_option("--input", screen_input, "input file, one polynomial per line")->required();

    for (auto* sub : {genus_cmd, local_cmd, enum_cmd, mass_cmd, split_cmd, density_cmd,
                      den_genus_one, den_average, den_lower, den_sieve, den_screen, den_count,
                      corpus_cmd, run_cmd, stats_cmd, screen_cmd})
        sub->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    gopts.factor_budget.trial_bound = static_cast<std::uint32_t>(trial_bound);
    gopts.factor_budget.rho_steps = rho_steps;
    gopts.factor_budget.seed = seed;
    gopts.seed = seed;
    bool records = format == "records";

    try {
        if (genus_cmd->parsed()) {
            IntPoly f = parse_poly(genus_poly);
            CorpusOptions copts;
            copts.genus = gopts;
            FieldRecord rec = process_record(f, 0, copts);
            if (rec.status != "ok")
                throw InvalidInputError(rec.message.empty() ? "genus computation failed" : rec.message);
            if (records)
                out << record_to_json(rec).dump() << '\n';
            else
                detail::print_genus_text(rec, out);
            return 0;
        }

        if (enum_cmd->parsed()) {
            const auto& classes = wild_quintics_q5();
            Rat mass(0);
            long galois = 0;
            for (const auto& c : classes) {
                detail::print_local_class(c, records, out);
                mass += Rat(1, pow_int(Int(5), static_cast<unsigned long>(c.disc_exp)) * c.aut);
                if (c.galois) ++galois;
            }
            if (!records)
                out << classes.size() << " classes, " << galois << " galois, mass " << mass
                    << " (target 1/625)\n";
            return 0;
        }

        if (mass_cmd->parsed()) {
            Int p(mass_prime);
            LocalConditionSet cond = LocalConditionSet::all(p);
            if (mass_condition == "inert") cond = LocalConditionSet::inert(p);
            if (mass_condition == "totally-ramified") cond = LocalConditionSet::totally_ramified(p);
            if (mass_condition == "not-totally-ramified") cond = LocalConditionSet::not_totally_ramified(p);
            if (mass_condition == "totally-ramified-galois" || mass_condition == "totally-ramified-star") {
                if (p != 5)
                    throw InvalidInputError("condition " + mass_condition + " is only defined at p = 5");
                cond = mass_condition == "totally-ramified-galois"
                           ? LocalConditionSet::totally_ramified_galois()
                           : LocalConditionSet::totally_ramified_star();
            }
            Rat m = mass_subset(cond);
            Rat total = mass_all_closed(p);
            if (records) {
                Json j;
                j["p"] = p.str();
                j["condition"] = mass_condition;
                j["mass"] = m.str();
                j["total_mass"] = total.str();
                j["density_factor"] = Rat(m / total).str();
                out << j.dump() << '\n';
            } else {
                out << "p = " << p << ", condition " << mass_condition << '\n';
                out << "mass " << m << " of total " << total << ", density factor " << Rat(m / total)
                    << '\n';
            }
            return 0;
        }

        if (split_cmd->parsed()) {
            IntPoly f = parse_poly(split_poly);
            Int p(split_prime);
            SplittingType st = splitting_type(f, p, seed);
            if (records) {
                Json j;
                j["poly"] = poly_to_csv(f);
                j["p"] = p.str();
                Json parts = Json::array();
                for (const auto& part : st) parts.push_back(Json::array({part.e, part.f}));
                j["splitting"] = parts;
                out << j.dump() << '\n';
            } else {
                out << splitting_to_string(st) << '\n';
            }
            return 0;
        }

        if (den_genus_one->parsed() || den_average->parsed() || den_lower->parsed() ||
            den_screen->parsed() || den_count->parsed() || den_sieve->parsed()) {
            CertifiedValue v;
            if (den_genus_one->parsed())
                v = cutoff > 0 ? genus_one_density(cutoff) : genus_one_density_digits(digits);
            else if (den_average->parsed())
                v = cutoff > 0 ? average_genus_number(cutoff) : average_genus_number_digits(digits);
            else if (den_lower->parsed())
                v = cutoff > 0 ? genus_power_lower_bound(lower_k, cutoff)
                               : genus_power_lower_bound_digits(lower_k, digits);
            else if (den_screen->parsed())
                v = cutoff > 0 ? screen_density(cutoff) : screen_density_digits(digits);
            else if (den_count->parsed())
                v = cutoff > 0 ? field_count_constant(count_i, cutoff)
                               : field_count_constant_digits(count_i, digits);
            else
                v = truncated_sieve_sum(sieve_y);
            if (den_sieve->parsed() && !records) {
                Rat center = (v.lo() + v.hi()) / 2;
                out << "truncated sum " << center << " = " << decimal_string(center, digits + 6)
                    << ", remainder bound " << decimal_string(v.hi() - center, digits + 6) << '\n';
            }
            detail::print_certified(v, digits, records, out);
            return 0;
        }

        if (run_cmd->parsed()) {
            IngestResult info;
            std::vector<IntPoly> polys = detail::ingest_file(run_input, &info);
            CorpusOptions copts;
            copts.genus = gopts;
            copts.workers = workers;
            std::vector<FieldRecord> recs = run_pipeline(polys, copts);
            if (run_output == "-") {
                write_records_jsonl(recs, out);
            } else {
                std::ofstream fout(run_output);
                if (!fout) throw IoError("cannot open output file: " + run_output);
                write_records_jsonl(recs, fout);
                if (!fout.good()) throw IoError("write failed: " + run_output);
            }
            CorpusStats s = corpus_stats(recs);
            err << "processed " << s.total << " records (ok " << s.ok << ", errored " << s.errored
                << "), dropped " << info.duplicates_dropped << " duplicate lines\n";
            return 0;
        }

        if (stats_cmd->parsed()) {
            std::ifstream in(stats_records);
            if (!in) throw IoError("cannot open record file: " + stats_records);
            std::vector<FieldRecord> recs = read_records_jsonl(in);
            CorpusStats s = corpus_stats(recs);
            if (records)
                out << stats_to_json(s).dump() << '\n';
            else
                out << stats_to_text(s);
            return 0;
        }

        if (screen_cmd->parsed()) {
            std::vector<IntPoly> polys = detail::ingest_file(screen_input);
            ScreenSummary s = screen_corpus(polys, gopts);
            if (records) {
                Json j;
                j["total"] = s.total;
                j["passed"] = s.passed;
                j["errored"] = s.errored;
                Json stages = Json::object();
                for (const auto& [k, n] : s.stage_failures) stages[k] = n;
                j["stage_failures"] = stages;
                j["passing_indices"] = s.passing_indices;
                out << j.dump() << '\n';
            } else {
                out << "screened " << s.total << ": " << s.passed << " passed, " << s.errored
                    << " errored\n";
                for (const auto& [k, n] : s.stage_failures) out << "  " << k << ": " << n << '\n';
                for (long i : s.passing_indices)
                    out << "  pass: " << poly_to_string(polys[static_cast<size_t>(i)]) << '\n';
            }
            return 0;
        }

        err << "error: no command executed\n";
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace quintic
