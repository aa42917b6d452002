#pragma once

/**
 * @file report.hpp
 * @brief Byte-stable TSV and JSON renderings of traces, searches,
 * verification reports and the reproduced tables.
 */

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqfree/constructions.hpp"
#include "sqfree/nonchalant.hpp"
#include "sqfree/potential.hpp"
#include "sqfree/search.hpp"

namespace sqfree {

using Json = nlohmann::ordered_json;

Json potential_json(const Word& w, const PotentialReport& r, const AvoidanceProperty& q);
Json verification_json(const VerificationReport& r);
Json max_potential_json(const MaxPotentialRow& r);
Json extremal_json(const ExtremalResult& r);
Json shortest_extremal_json(const ShortestExtremalResult& r, std::size_t k_max);

std::string status_name(SearchStatus s);

/// iter, backstep, letter, length[, ae]; one row per step.
std::string trace_tsv(const NonchalantTrace& trace);
std::string histogram_tsv(const std::map<std::size_t, std::size_t>& h, const std::string& key_name);
std::string events_tsv(const std::vector<std::pair<std::size_t, std::size_t>>& events, const std::string& key_name,
                       const std::string& value_name);

// Reproduced tables. Each starts with a "# <name>: ..." comment line.

/// Initial words of the published back-step experiments.
inline const std::vector<std::string> kTableInits = {"1",      "2",        "3",         "13",         "23",
                                                     "32",     "3213",     "2313",      "32132",      "2313213",
                                                     "231323", "32132313", "321323132", "32132313213"};

struct Table1Options {
    std::vector<std::string> inits = kTableInits;
    std::size_t iterations = 10000;
    unsigned workers = 1;
};

/// Back-step histograms of ternary runs, one row per initial word.
std::string table1_tsv(const Table1Options& options);
std::string table2_tsv(std::size_t k_min, std::size_t k_max, const SearchOptions& options = {});
/// ae(N_i) of the ternary run from 1 for 2 <= i <= max_i.
std::string table3_tsv(std::size_t max_i = 39);
/// New maxima of ae(N_i) for i < limit, skipping the initial value 0.
std::string table4_tsv(std::size_t limit = 1000);
/// Non-zero back steps of the ternary run from 1.
std::string table56_tsv(std::size_t iterations = 10000);

struct Table7Options {
    std::vector<std::string> inits = kTableInits;
    std::size_t iterations = 10000;
    std::size_t back_step = 4;
    GapOrigin origin = GapOrigin::FromStart;
    unsigned workers = 1;
};

std::string table7_tsv(const Table7Options& options);
std::string zimin_seq_tsv(unsigned max_m);

/// Ternary full-mode square-free trace of `iterations` steps from `init`.
NonchalantTrace ternary_run(const std::string& init, std::size_t iterations, bool record_ae = false);

}  // namespace sqfree
