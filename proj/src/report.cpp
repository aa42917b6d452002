#include "sqfree/report.hpp"

#include <future>
#include <set>
#include <sstream>

namespace sqfree {

Json potential_json(const Word& w, const PotentialReport& r, const AvoidanceProperty& q) {
    Json j;
    j["word"] = format_word(w);
    j["n"] = w.alphabet_size();
    j["property"] = q.to_string();
    j["AE"] = r.AE_value;
    j["ae"] = r.ae_value;
    j["extremal"] = r.is_extremal;
    j["almost_extremal"] = r.is_almost_extremal;
    j["maximal"] = r.is_maximal;
    j["internal_positions"] = r.internal_positions(w.size());
    Json ext = Json::array();
    for (const Extension& e : r.extensions) ext.push_back({e.position, e.letter});
    j["extensions"] = std::move(ext);
    return j;
}

Json verification_json(const VerificationReport& r) {
    Json j;
    j["passed"] = r.all_passed();
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string status_name(SearchStatus s) { return s == SearchStatus::Complete ? "complete" : "budget-exhausted"; }

Json max_potential_json(const MaxPotentialRow& r) {
    Json j;
    j["k"] = r.k;
    j["ae"] = r.ae_max;
    j["AE"] = r.AE_max;
    j["ae_witness"] = format_word(r.ae_witness);
    j["AE_witness"] = format_word(r.AE_witness);
    j["words"] = r.words;
    j["status"] = status_name(r.status);
    return j;
}

Json extremal_json(const ExtremalResult& r) {
    Json j;
    j["k"] = r.k;
    j["words"] = r.words;
    j["count"] = r.witnesses.size();
    Json w = Json::array();
    for (const Word& x : r.witnesses) w.push_back(format_word(x));
    j["witnesses"] = std::move(w);
    j["status"] = status_name(r.status);
    return j;
}

Json shortest_extremal_json(const ShortestExtremalResult& r, std::size_t k_max) {
    Json j;
    j["k_max"] = k_max;
    j["found"] = r.k.has_value();
    if (r.k) j["k"] = *r.k;
    j["none_below"] = r.none_below;
    j["count"] = r.witnesses.size();
    Json w = Json::array();
    for (const Word& x : r.witnesses) w.push_back(format_word(x));
    j["witnesses"] = std::move(w);
    j["status"] = status_name(r.status);
    return j;
}

std::string trace_tsv(const NonchalantTrace& trace) {
    const bool with_ae = !trace.steps.empty() && trace.steps.front().ae.has_value();
    std::ostringstream out;
    out << "iter\tbackstep\tletter\tlength" << (with_ae ? "\tae" : "") << '\n';
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& s = trace.steps[i];
        out << i + 1 << '\t' << s.back_step << '\t' << s.letter << '\t' << s.length;
        if (with_ae) out << '\t' << *s.ae;
        out << '\n';
    }
    return out.str();
}

std::string histogram_tsv(const std::map<std::size_t, std::size_t>& h, const std::string& key_name) {
    std::ostringstream out;
    out << key_name << "\tcount\n";
    for (const auto& [k, v] : h) out << k << '\t' << v << '\n';
    return out.str();
}

std::string events_tsv(const std::vector<std::pair<std::size_t, std::size_t>>& events, const std::string& key_name,
                       const std::string& value_name) {
    std::ostringstream out;
    out << key_name << '\t' << value_name << '\n';
    for (const auto& [k, v] : events) out << k << '\t' << v << '\n';
    return out.str();
}

NonchalantTrace ternary_run(const std::string& init, std::size_t iterations, bool record_ae) {
    RunOptions run;
    run.max_iterations = iterations;
    run.record_ae = record_ae;
    return nonchalant_run(parse_word(init, 3), 3, AvoidanceProperty::square_free(), ExtensionMode::Full, run);
}

namespace {

/// Runs f(init) for every initial word, concurrently when workers > 1, keeping input order.
template <class F>
auto per_init(const std::vector<std::string>& inits, unsigned workers, F f) {
    using R = decltype(f(inits.front()));
    std::vector<R> out;
    if (workers <= 1) {
        for (const auto& s : inits) out.push_back(f(s));
        return out;
    }
    std::vector<std::future<R>> futures;
    for (const auto& s : inits) futures.push_back(std::async(std::launch::async, f, s));
    for (auto& fu : futures) out.push_back(fu.get());
    return out;
}

std::string keyed_rows(const std::string& first_column, const std::vector<std::string>& inits,
                       const std::vector<std::map<std::size_t, std::size_t>>& rows) {
    std::set<std::size_t> keys;
    for (const auto& row : rows) {
        for (const auto& [k, v] : row) keys.insert(k);
    }
    std::ostringstream out;
    out << first_column;
    for (std::size_t k : keys) out << '\t' << k;
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << inits[i];
        for (std::size_t k : keys) {
            const auto it = rows[i].find(k);
            out << '\t' << (it == rows[i].end() ? 0 : it->second);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string table1_tsv(const Table1Options& options) {
    const auto rows = per_init(options.inits, options.workers, [&](const std::string& init) {
        return backstep_histogram(ternary_run(init, options.iterations));
    });
    std::ostringstream out;
    out << "# table1: back-step histogram of ternary square-free nonchalant runs, " << options.iterations
        << " iterations\n";
    out << keyed_rows("init", options.inits, rows);
    return out.str();
}

std::string table2_tsv(std::size_t k_min, std::size_t k_max, const SearchOptions& options) {
    std::ostringstream out;
    out << "# table2: maximal ae and AE over ternary square-free words of length k\n";
    out << "k\tae\tAE\n";
    for (std::size_t k = k_min; k <= k_max; ++k) {
        const MaxPotentialRow r = max_potentials(3, k, options);
        out << k << '\t' << r.ae_max << '\t' << r.AE_max << '\n';
    }
    return out.str();
}

std::string table3_tsv(std::size_t max_i) {
    const auto seq = potential_trace(ternary_run("1", max_i > 0 ? max_i - 1 : 0, true));
    std::ostringstream out;
    out << "# table3: ae of the ternary nonchalant words N_i started from 1\n";
    out << "i\tae\n";
    for (std::size_t i = 2; i <= seq.size(); ++i) out << i << '\t' << seq[i - 1] << '\n';
    return out.str();
}

std::string table4_tsv(std::size_t limit) {
    const auto seq = potential_trace(ternary_run("1", limit > 1 ? limit - 2 : 0, true));
    std::ostringstream out;
    out << "# table4: indexes i < " << limit << " where ae(N_i) reaches a new maximum\n";
    out << "i\tae\n";
    for (const auto& [i, v] : new_max_indexes(seq)) {
        if (v > 0) out << i << '\t' << v << '\n';
    }
    return out.str();
}

std::string table56_tsv(std::size_t iterations) {
    std::ostringstream out;
    out << "# table5-6: non-zero back steps of the ternary nonchalant run from 1, " << iterations << " iterations\n";
    out << events_tsv(nonzero_backstep_events(ternary_run("1", iterations)), "i", "p");
    return out.str();
}

std::string table7_tsv(const Table7Options& options) {
    const auto rows = per_init(options.inits, options.workers, [&](const std::string& init) {
        return gap_table(ternary_run(init, options.iterations), options.back_step, options.origin);
    });
    std::ostringstream out;
    out << "# table7: distances between consecutive back steps of exactly " << options.back_step << ", "
        << options.iterations << " iterations"
        << (options.origin == GapOrigin::FromStart ? ", first distance measured from iteration 0" : "") << '\n';
    out << keyed_rows("init", options.inits, rows);
    return out.str();
}

std::string zimin_seq_tsv(unsigned max_m) {
    std::ostringstream out;
    out << "# zimin-seq: AE(Z_m) over A_m\n";
    out << "m\tAE\n";
    for (unsigned m = 1; m <= max_m; ++m) out << m << '\t' << zimin_potential_closed(m) << '\n';
    return out.str();
}

}  // namespace sqfree
