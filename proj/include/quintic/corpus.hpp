#pragma once

#include <atomic>
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "quintic/genus.hpp"

namespace quintic {

using Json = nlohmann::ordered_json;

struct CorpusOptions {
    int workers = 1;
    GenusOptions genus{};
    int fingerprint_primes = 10;
};

struct FieldRecord {
    long index = -1;
    IntPoly poly;
    std::string status;     // "ok" or "error"
    std::string error_kind; // set when status == "error"
    std::string message;
    Int disc = 0;
    bool has_certificate = false;
    GenusCertificate cert;
    std::vector<Int> fingerprint_primes;           // smallest primes not dividing disc
    std::vector<std::vector<long>> fingerprint;    // factor degree shapes at those primes
    bool duplicate_suspect = false;
};

struct IngestResult {
    std::vector<IntPoly> polys;
    long duplicates_dropped = 0;
    long lines_skipped = 0; // comments and blanks
};

// One polynomial per line, either comma-separated coefficients (constant
// first) or expression form; '#' starts a comment.  Exact repeats are
// dropped, first occurrence wins.
inline IngestResult ingest_corpus(std::istream& in) {
    IngestResult out;
    std::set<std::vector<Int>> seen;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) {
            ++out.lines_skipped;
            continue;
        }
        IntPoly f;
        try {
            f = parse_poly(line);
        } catch (const InvalidInputError& e) {
            throw InvalidInputError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (f.degree() != 5 || !f.monic())
            throw InvalidInputError("line " + std::to_string(line_no) +
                                    ": expected a monic quintic, got " + poly_to_string(f));
        if (!seen.insert(f.c).second) {
            ++out.duplicates_dropped;
            continue;
        }
        out.polys.push_back(f);
    }
    return out;
}

namespace detail {

inline std::string error_kind_of(const Error& e) {
    if (dynamic_cast<const FactorizationTimeoutError*>(&e)) return "factorization-timeout";
    if (dynamic_cast<const IrregularSplittingError*>(&e)) return "irregular-splitting";
    if (dynamic_cast<const PrecisionError*>(&e)) return "precision";
    if (dynamic_cast<const LiftingObstructionError*>(&e)) return "lifting-obstruction";
    if (dynamic_cast<const UnsupportedPrimeError*>(&e)) return "unsupported-prime";
    if (dynamic_cast<const SearchExhaustedError*>(&e)) return "search-exhausted";
    if (dynamic_cast<const InvalidInputError*>(&e)) return "invalid-input";
    if (dynamic_cast<const IoError*>(&e)) return "io";
    return "internal";
}

} // namespace detail

// Record computation is a pure function of (polynomial, index, options), so
// results never depend on the worker count or scheduling.
inline FieldRecord process_record(const IntPoly& f, long index, const CorpusOptions& opts = {}) {
    FieldRecord rec;
    rec.index = index;
    rec.poly = f;
    GenusOptions gopts = opts.genus;
    gopts.seed = opts.genus.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index + 1);
    try {
        rec.disc = discriminant(f);
        rec.cert = genus_number(f, gopts);
        rec.has_certificate = true;
        rec.status = "ok";
        Int ad = abs_int(rec.disc);
        std::uint32_t limit = 1 << 10;
        while (rec.fingerprint_primes.size() < static_cast<size_t>(opts.fingerprint_primes)) {
            rec.fingerprint_primes.clear();
            for (std::uint32_t p : primes_up_to(limit)) {
                if (ad % p == 0) continue;
                rec.fingerprint_primes.push_back(p);
                if (rec.fingerprint_primes.size() == static_cast<size_t>(opts.fingerprint_primes)) break;
            }
            limit *= 2;
        }
        for (const Int& p : rec.fingerprint_primes)
            rec.fingerprint.push_back(factor_degree_shape(f, p, gopts.seed));
    } catch (const Error& e) {
        rec.status = "error";
        rec.error_kind = detail::error_kind_of(e);
        rec.message = e.what();
    } catch (const std::exception& e) {
        rec.status = "error";
        rec.error_kind = "internal";
        rec.message = e.what();
    }
    return rec;
}

namespace detail {

// Two records with equal discriminant and identical splitting shapes at the
// fingerprint primes plausibly present the same field twice.
inline void mark_duplicate_suspects(std::vector<FieldRecord>& recs) {
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < recs.size(); ++i) {
        if (recs[i].status != "ok") continue;
        std::ostringstream key;
        key << recs[i].disc;
        for (const auto& shape : recs[i].fingerprint) {
            key << '|';
            for (long d : shape) key << d << ',';
        }
        groups[key.str()].push_back(i);
    }
    for (const auto& [key, members] : groups) {
        (void)key;
        if (members.size() < 2) continue;
        for (size_t i : members) recs[i].duplicate_suspect = true;
    }
}

} // namespace detail

inline std::vector<FieldRecord> run_pipeline(const std::vector<IntPoly>& polys,
                                             const CorpusOptions& opts = {}) {
    size_t n = polys.size();
    std::vector<FieldRecord> records(n);
    int workers = std::max(1, std::min(opts.workers, 64));
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            records[i] = process_record(polys[i], static_cast<long>(i), opts);
        }
    };
    if (workers == 1 || n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    detail::mark_duplicate_suspects(records);
    return records;
}

// ---- jsonl ------------------------------------------------------------------

inline Json record_to_json(const FieldRecord& r) {
    Json j;
    j["index"] = r.index;
    j["poly"] = poly_to_csv(r.poly);
    j["poly_pretty"] = poly_to_string(r.poly);
    j["status"] = r.status;
    if (r.status != "ok") {
        j["error"] = r.error_kind;
        j["message"] = r.message;
    }
    j["disc"] = r.disc.str();
    if (r.has_certificate) {
        Json factors = Json::array();
        for (const auto& [p, e] : r.cert.ram.disc_factors)
            factors.push_back(Json::array({p.str(), e}));
        j["disc_factors"] = factors;
        j["unfactored_cofactor"] = r.cert.ram.unfactored_cofactor.str();
        j["irreducibility"] = r.cert.irreducibility;
        j["signature"] = Json::array({5 - 2 * r.cert.complex_places, r.cert.complex_places});
        j["cyclic"] = r.cert.cyclicity.cyclic;
        j["five_totally_ramified"] = r.cert.ram.five_totally_ramified;
        if (r.cert.ram.star_at_5.has_value())
            j["star_at_5"] = *r.cert.ram.star_at_5;
        else
            j["star_at_5"] = nullptr;
        Json counted = Json::array();
        for (const Int& p : r.cert.ram.counted_primes) counted.push_back(p.str());
        j["counted_primes"] = counted;
        j["t"] = r.cert.t;
        j["genus"] = r.cert.genus.str();
        Json fps = Json::array();
        for (const Int& p : r.fingerprint_primes) fps.push_back(p.str());
        j["fingerprint_primes"] = fps;
        Json shapes = Json::array();
        for (const auto& shape : r.fingerprint) shapes.push_back(shape);
        j["fingerprint"] = shapes;
        j["duplicate_suspect"] = r.duplicate_suspect;
    }
    return j;
}

inline void write_records_jsonl(const std::vector<FieldRecord>& recs, std::ostream& out) {
    for (const auto& r : recs) out << record_to_json(r).dump() << '\n';
}

// Inverse of record_to_json for the fields the stats need.
inline FieldRecord record_from_json(const Json& j) {
    FieldRecord r;
    r.index = j.at("index").get<long>();
    r.poly = parse_poly(j.at("poly").get<std::string>());
    r.status = j.at("status").get<std::string>();
    if (j.contains("error")) r.error_kind = j["error"].get<std::string>();
    if (j.contains("message")) r.message = j["message"].get<std::string>();
    r.disc = Int(j.at("disc").get<std::string>());
    if (r.status == "ok" && j.contains("genus")) {
        r.has_certificate = true;
        r.cert.poly = r.poly;
        r.cert.ram.disc = r.disc;
        r.cert.complex_places = j.at("signature").at(1).get<int>();
        r.cert.cyclicity.cyclic = j.at("cyclic").get<bool>();
        r.cert.ram.five_totally_ramified = j.at("five_totally_ramified").get<bool>();
        if (!j.at("star_at_5").is_null()) r.cert.ram.star_at_5 = j["star_at_5"].get<bool>();
        for (const auto& ps : j.at("counted_primes"))
            r.cert.ram.counted_primes.push_back(Int(ps.get<std::string>()));
        r.cert.t = j.at("t").get<long>();
        r.cert.genus = Int(j.at("genus").get<std::string>());
        if (j.contains("fingerprint_primes"))
            for (const auto& ps : j["fingerprint_primes"])
                r.fingerprint_primes.push_back(Int(ps.get<std::string>()));
        if (j.contains("fingerprint"))
            for (const auto& shape : j["fingerprint"])
                r.fingerprint.push_back(shape.get<std::vector<long>>());
        if (j.contains("duplicate_suspect")) r.duplicate_suspect = j["duplicate_suspect"].get<bool>();
    }
    return r;
}

inline std::vector<FieldRecord> read_records_jsonl(std::istream& in) {
    std::vector<FieldRecord> recs;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw IoError("record line " + std::to_string(line_no) + ": malformed json");
        try {
            recs.push_back(record_from_json(j));
        } catch (const std::exception& e) {
            throw IoError("record line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return recs;
}

// ---- stats ------------------------------------------------------------------

struct SignatureStats {
    int complex_places = 0;
    long count = 0;
    std::map<Int, long> genus_histogram;
    Rat genus_mean = 0;
};

struct CorpusStats {
    long total = 0;
    long ok = 0;
    long errored = 0;
    long duplicate_suspects = 0;
    std::map<std::string, long> error_kinds;
    std::map<Int, long> genus_histogram; // over ok records
    Rat genus_mean = 0;                  // over ok records
    long genus_one = 0;
    std::vector<SignatureStats> by_signature;
};

inline CorpusStats corpus_stats(const std::vector<FieldRecord>& recs) {
    CorpusStats s;
    s.total = static_cast<long>(recs.size());
    std::map<int, SignatureStats> sig;
    Int genus_sum = 0;
    std::map<int, Int> sig_sum;
    for (const auto& r : recs) {
        if (r.status != "ok") {
            ++s.errored;
            ++s.error_kinds[r.error_kind];
            continue;
        }
        ++s.ok;
        if (r.duplicate_suspect) ++s.duplicate_suspects;
        const Int& g = r.cert.genus;
        ++s.genus_histogram[g];
        genus_sum += g;
        if (g == 1) ++s.genus_one;
        auto& bucket = sig[r.cert.complex_places];
        bucket.complex_places = r.cert.complex_places;
        ++bucket.count;
        ++bucket.genus_histogram[g];
        sig_sum[r.cert.complex_places] += g;
    }
    if (s.ok > 0) s.genus_mean = Rat(genus_sum, s.ok);
    for (auto& [i, bucket] : sig) {
        if (bucket.count > 0) bucket.genus_mean = Rat(sig_sum[i], bucket.count);
        s.by_signature.push_back(bucket);
    }
    return s;
}

inline Json stats_to_json(const CorpusStats& s) {
    Json j;
    j["total"] = s.total;
    j["ok"] = s.ok;
    j["errored"] = s.errored;
    j["duplicate_suspects"] = s.duplicate_suspects;
    Json kinds = Json::object();
    for (const auto& [k, n] : s.error_kinds) kinds[k] = n;
    j["error_kinds"] = kinds;
    Json hist = Json::object();
    for (const auto& [g, n] : s.genus_histogram) hist[g.str()] = n;
    j["genus_histogram"] = hist;
    j["genus_one"] = s.genus_one;
    if (s.ok > 0) {
        j["genus_mean"] = s.genus_mean.str();
        j["genus_mean_decimal"] = decimal_string(s.genus_mean, 6);
    }
    Json sigs = Json::array();
    for (const auto& b : s.by_signature) {
        Json sj;
        sj["signature"] = Json::array({5 - 2 * b.complex_places, b.complex_places});
        sj["count"] = b.count;
        Json sh = Json::object();
        for (const auto& [g, n] : b.genus_histogram) sh[g.str()] = n;
        sj["genus_histogram"] = sh;
        sj["genus_mean"] = b.genus_mean.str();
        sj["genus_mean_decimal"] = decimal_string(b.genus_mean, 6);
        sigs.push_back(sj);
    }
    j["by_signature"] = sigs;
    return j;
}

inline std::string stats_to_text(const CorpusStats& s) {
    std::ostringstream out;
    out << "records: " << s.total << " (ok " << s.ok << ", errored " << s.errored << ")\n";
    if (!s.error_kinds.empty()) {
        out << "errors:";
        for (const auto& [k, n] : s.error_kinds) out << ' ' << k << '=' << n;
        out << '\n';
    }
    out << "duplicate suspects: " << s.duplicate_suspects << '\n';
    out << "genus histogram:";
    for (const auto& [g, n] : s.genus_histogram) out << ' ' << g << ':' << n;
    out << '\n';
    if (s.ok > 0)
        out << "mean genus: " << s.genus_mean << " = " << decimal_string(s.genus_mean, 6) << '\n';
    for (const auto& b : s.by_signature) {
        out << "signature (" << (5 - 2 * b.complex_places) << ',' << b.complex_places << "): "
            << b.count << " fields, mean genus " << decimal_string(b.genus_mean, 6) << '\n';
    }
    return out.str();
}

// ---- screen -----------------------------------------------------------------

struct ScreenSummary {
    long total = 0;
    long passed = 0;
    long errored = 0;
    std::map<std::string, long> stage_failures;
    std::vector<long> passing_indices;
};

inline ScreenSummary screen_corpus(const std::vector<IntPoly>& polys, const GenusOptions& opts = {}) {
    ScreenSummary s;
    s.total = static_cast<long>(polys.size());
    for (size_t i = 0; i < polys.size(); ++i) {
        try {
            ScreenReport rep = norm_euclidean_screen(polys[i], opts);
            if (rep.passes) {
                ++s.passed;
                s.passing_indices.push_back(static_cast<long>(i));
            } else if (!rep.inert_at_2) {
                ++s.stage_failures["not-inert-at-2"];
            } else if (!rep.inert_at_5) {
                ++s.stage_failures["not-inert-at-5"];
            } else if (!rep.totally_ramified_at_7) {
                ++s.stage_failures["not-totally-ramified-at-7"];
            } else {
                ++s.stage_failures["totally-ramified-prime-1-mod-5"];
            }
        } catch (const Error&) {
            ++s.errored;
        }
    }
    return s;
}

} // namespace quintic
