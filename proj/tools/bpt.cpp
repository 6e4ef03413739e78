#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpt/correlation.hpp"
#include "bpt/primes.hpp"
#include "bpt/reference_codes.hpp"
#include "bpt/sequence.hpp"
#include "bpt/tableau.hpp"

namespace {

using bpt::BipolarSequence;
using bpt::BitSequence;
using bpt::Tableau;
using bpt::TerminationKind;

TerminationKind kind_of(int k) {
    return k == 2 ? TerminationKind::KindTwo : TerminationKind::KindOne;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

int cmd_generate(uint64_t p, int kind, bool dual, const std::string& format) {
    Tableau t = bpt::build_tableau(p, kind_of(kind));
    BitSequence s = dual ? bpt::dt_sequence(t) : bpt::bpt_sequence(t);
    bpt::BalanceReport bal = bpt::balance(s);
    bpt::ChunkSize chunk = bpt::chunk_size(t);

    if (format == "bits") {
        std::printf("%s\n", s.to_string().c_str());
    } else if (format == "csv") {
        std::printf("p,kind,n_max,chunk_size,rows,length,ones,zeros,ones_ratio,zeros_ratio,bits\n");
        std::printf("%llu,%d,%llu,%s,%llu,%zu,%llu,%llu,%s,%s,%s\n",
                    static_cast<unsigned long long>(t.p), kind,
                    static_cast<unsigned long long>(t.n_max), fmt6(chunk.value()).c_str(),
                    static_cast<unsigned long long>(t.rows), s.length(),
                    static_cast<unsigned long long>(bal.ones),
                    static_cast<unsigned long long>(bal.zeros),
                    fmt6(bal.ones_ratio).c_str(), fmt6(bal.zeros_ratio).c_str(),
                    s.to_string().c_str());
    } else {  // json
        nlohmann::ordered_json j{
            {"p", t.p},
            {"kind", kind},
            {"dual", dual},
            {"n_max", t.n_max},
            {"chunk_size", chunk.value()},
            {"rows", t.rows},
            {"length", s.length()},
            {"bits", s.to_string()},
            {"balance",
             {{"ones", bal.ones},
              {"zeros", bal.zeros},
              {"ones_ratio", bal.ones_ratio},
              {"zeros_ratio", bal.zeros_ratio}}},
        };
        std::printf("%s\n", j.dump(2).c_str());
    }
    return 0;
}

int cmd_stats(uint64_t p_min, uint64_t p_max, bool primes_only, int kind) {
    if (p_min < 2 || p_min > p_max)
        throw std::invalid_argument("need 2 <= p-min <= p-max");
    bpt::PrimalityTable table = bpt::sieve_up_to(p_max);
    std::printf("p,n_max,chunk_size,rows,bpt_ones_ratio,bpt_zeros_ratio,dt_ones_ratio,dt_zeros_ratio\n");
    for (uint64_t p = p_min; p <= p_max; ++p) {
        if (primes_only && !table.is_prime(p)) continue;
        Tableau t = bpt::build_tableau(p, kind_of(kind));
        bpt::BalanceReport b = bpt::balance(bpt::bpt_sequence(t));
        bpt::BalanceReport d = bpt::balance(bpt::dt_sequence(t));
        std::printf("%llu,%llu,%s,%llu,%s,%s,%s,%s\n",
                    static_cast<unsigned long long>(p),
                    static_cast<unsigned long long>(t.n_max),
                    fmt6(bpt::chunk_size(t).value()).c_str(),
                    static_cast<unsigned long long>(t.rows),
                    fmt6(b.ones_ratio).c_str(), fmt6(b.zeros_ratio).c_str(),
                    fmt6(d.ones_ratio).c_str(), fmt6(d.zeros_ratio).c_str());
    }
    return 0;
}

// Sequence specs: bpt:p=13,kind=1  dt:p=7,kind=2  mseq:degree=3  file:PATH
BitSequence resolve_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad sequence spec '" + spec +
                                    "' (want bpt:.., dt:.., mseq:.., or file:PATH)");
    const std::string head = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    if (head == "file") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open file '" + rest + "'");
        BitSequence s;
        char c;
        while (in.get(c)) {
            if (c == '0' || c == '1')
                s.bits.push_back(static_cast<uint8_t>(c - '0'));
            else if (!std::isspace(static_cast<unsigned char>(c)))
                throw std::invalid_argument("file '" + rest +
                                            "' contains a character other than 0/1");
        }
        if (s.bits.empty()) throw std::invalid_argument("file '" + rest + "' is empty");
        return s;
    }

    std::map<std::string, uint64_t> kv;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad key=value '" + item + "' in spec");
        kv[item.substr(0, eq)] = std::stoull(item.substr(eq + 1));
    }

    if (head == "bpt" || head == "dt") {
        if (!kv.count("p")) throw std::invalid_argument(head + " spec needs p=..");
        const int kind = kv.count("kind") ? static_cast<int>(kv["kind"]) : 1;
        Tableau t = bpt::build_tableau(kv["p"], kind_of(kind));
        return head == "bpt" ? bpt::bpt_sequence(t) : bpt::dt_sequence(t);
    }
    if (head == "mseq") {
        if (!kv.count("degree")) throw std::invalid_argument("mseq spec needs degree=..");
        const auto& e = bpt::polynomial_for_degree(static_cast<unsigned>(kv["degree"]));
        return bpt::m_sequence(bpt::LfsrSpec{e.degree, e.taps, 1});
    }
    throw std::invalid_argument("unknown sequence source '" + head + "'");
}

int cmd_correlate(const std::string& spec_a, const std::string& spec_b, bool summary) {
    BipolarSequence a = bpt::to_bipolar(resolve_spec(spec_a));
    const bool cross = !spec_b.empty();
    BipolarSequence b = cross ? bpt::to_bipolar(resolve_spec(spec_b)) : a;

    bpt::CorrelationProfile r = bpt::periodic_correlation(a, b);
    std::printf("tau,r\n");
    for (size_t tau = 0; tau < r.n; ++tau)
        std::printf("%zu,%s\n", tau, fmt6(r.values[tau]).c_str());

    if (summary) {
        if (cross) {
            std::printf("# mspcc=%s\n", fmt6(bpt::mspcc({a, b})).c_str());
            std::printf("# peak=%s\n", fmt6(bpt::peak_offpeak(r, false)).c_str());
        } else {
            std::printf("# mspac=%s\n", fmt6(bpt::mspac({a})).c_str());
            std::printf("# peak=%s\n", fmt6(bpt::peak_offpeak(r, true)).c_str());
        }
    }
    return 0;
}

// Largest supported degree whose native length fits inside the target, so
// reference codes are cyclically extended rather than heavily truncated.
unsigned pick_degree(const std::vector<unsigned>& degrees, uint64_t target) {
    unsigned best = degrees.front();
    for (unsigned n : degrees)
        if (((uint64_t{1} << n) - 1) <= target) best = n;
    return best;
}

int cmd_compare(uint64_t length, const std::string& families_csv, int kind) {
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    std::vector<std::string> labels;
    std::stringstream ss(families_csv);
    std::string item;
    while (std::getline(ss, item, ',')) labels.push_back(item);
    if (labels.empty()) throw std::invalid_argument("no families requested");

    std::printf("family,native_length,fitted_length,members,mspac,mspcc,peak_auto,peak_cross\n");
    for (const std::string& label : labels) {
        bpt::CodeFamily fam;
        if (label == "bpt") {
            bpt::PrimalityTable t = bpt::sieve_up_to(length);
            if (!t.is_prime(length))
                throw std::invalid_argument(
                    "BPT requires a prime length (got " + std::to_string(length) + ")");
            fam.name = "bpt";
            fam.native_length = length;
            fam.members.push_back(bpt::bpt_sequence(bpt::build_tableau(length, kind_of(kind))));
        } else if (label == "gold") {
            fam = bpt::gold_family(pick_degree({5, 6, 7, 9, 10, 11}, length));
        } else if (label == "kasami-small") {
            fam = bpt::kasami_small(pick_degree({4, 6, 8, 10}, length));
        } else if (label == "kasami-large") {
            fam = bpt::kasami_large(pick_degree({6, 10}, length));
        } else {
            throw std::invalid_argument(
                "unknown family '" + label +
                "' (want bpt, gold, kasami-small, kasami-large)");
        }

        std::vector<BipolarSequence> fitted;
        fitted.reserve(fam.members.size());
        for (const auto& m : fam.members)
            fitted.push_back(bpt::to_bipolar(bpt::fit_to_length(m, length)));

        bpt::FamilyReport rep = bpt::evaluate_family(fam.name, fitted);
        std::printf("%s,%zu,%llu,%zu,%s,%s,%s,%s\n", rep.family_name.c_str(),
                    fam.native_length, static_cast<unsigned long long>(length), rep.m,
                    fmt6(rep.mspac).c_str(),
                    rep.mspcc ? fmt6(*rep.mspcc).c_str() : "",
                    fmt6(rep.peak_auto).c_str(),
                    rep.peak_cross ? fmt6(*rep.peak_cross).c_str() : "");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary primes tableau sequence toolkit"};
    app.require_subcommand(1);

    // generate
    uint64_t gen_p = 0;
    int gen_kind = 1;
    bool gen_dual = false;
    std::string gen_format = "bits";
    auto* gen = app.add_subcommand("generate", "Emit a BPT or DT sequence");
    gen->add_option("--p", gen_p, "Number of tableau columns")->required();
    gen->add_option("--kind", gen_kind, "Termination kind")->check(CLI::IsMember({1, 2}));
    gen->add_flag("--dual", gen_dual, "Emit the dual (row-parity) sequence");
    gen->add_option("--format", gen_format, "Output format")
        ->check(CLI::IsMember({"bits", "csv", "json"}));

    // stats
    uint64_t st_min = 2, st_max = 2;
    bool st_primes_only = true;
    int st_kind = 1;
    auto* st = app.add_subcommand("stats", "Emit n_max/chunk/balance series as CSV");
    st->add_option("--p-min", st_min, "Smallest p")->required();
    st->add_option("--p-max", st_max, "Largest p")->required();
    st->add_flag("--primes-only,!--no-primes-only", st_primes_only,
                 "Restrict to prime p (default on)");
    st->add_option("--kind", st_kind, "Termination kind")->check(CLI::IsMember({1, 2}));

    // correlate
    std::string co_a, co_b;
    bool co_summary = false;
    auto* co = app.add_subcommand("correlate", "Emit a periodic correlation profile as CSV");
    co->add_option("--a", co_a, "Sequence spec (bpt:p=.., dt:p=.., mseq:degree=.., file:PATH)")
        ->required();
    co->add_option("--b", co_b, "Second sequence spec for crosscorrelation");
    co->add_flag("--summary", co_summary, "Append # mspac/mspcc and # peak footer lines");

    // compare
    uint64_t cm_length = 199;
    std::string cm_families = "bpt,gold,kasami-small";
    int cm_kind = 1;
    auto* cm = app.add_subcommand("compare", "Family metric table at a common length");
    cm->add_option("--length", cm_length, "Evaluation length")->required();
    cm->add_option("--families", cm_families,
                   "Comma list of bpt,gold,kasami-small,kasami-large");
    cm->add_option("--kind", cm_kind, "Termination kind for BPT")->check(CLI::IsMember({1, 2}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(gen_p, gen_kind, gen_dual, gen_format);
        if (st->parsed()) return cmd_stats(st_min, st_max, st_primes_only, st_kind);
        if (co->parsed()) return cmd_correlate(co_a, co_b, co_summary);
        if (cm->parsed()) return cmd_compare(cm_length, cm_families, cm_kind);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
