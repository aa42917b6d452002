#include "sqfree/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "sqfree/nonchalant.hpp"
#include "sqfree/potential.hpp"

namespace sqfree {

AvoidingWords::AvoidingWords(unsigned alphabet_size, std::size_t length, AvoidanceProperty q)
    : n_(alphabet_size), k_(length), q_(std::move(q)) {
    if (n_ == 0) throw std::invalid_argument("alphabet size must be at least 1");
    cur_.reserve(k_);
}

std::optional<Word> AvoidingWords::next() {
    if (done_) return std::nullopt;
    Letter candidate = 1;
    if (!started_) {
        started_ = true;
        if (k_ == 0) {
            done_ = true;
            return Word(n_);
        }
    } else {
        candidate = static_cast<Letter>(cur_.back() + 1);
        cur_.pop_back();
    }
    while (true) {
        if (candidate > n_) {
            if (cur_.empty()) {
                done_ = true;
                return std::nullopt;
            }
            candidate = static_cast<Letter>(cur_.back() + 1);
            cur_.pop_back();
            continue;
        }
        if (insertion_avoids_unchecked(cur_, cur_.size(), candidate, q_)) {
            cur_.push_back(candidate);
            if (cur_.size() == k_) return Word(cur_, n_);
            candidate = 1;
        } else {
            ++candidate;
        }
    }
}

namespace {

class Budget {
public:
    explicit Budget(std::uint64_t max_nodes) : max_(max_nodes) {}

    bool spend() {
        if (max_ == 0) return true;
        if (used_.fetch_add(1, std::memory_order_relaxed) >= max_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

private:
    std::uint64_t max_;
    std::atomic<std::uint64_t> used_{0};
    std::atomic<bool> exhausted_{false};
};

template <class Visit>
class Dfs {
public:
    Dfs(unsigned n, std::size_t k, const AvoidanceProperty& q, bool canonical, Budget& budget, Visit& visit)
        : n_(n), k_(k), q_(q), canonical_(canonical), budget_(budget), visit_(visit) {}

    /// Assumes prefix avoids q.
    void run(LetterSpan prefix) {
        cur_.assign(prefix.begin(), prefix.end());
        cur_.reserve(k_);
        Letter max_letter = 0;
        for (Letter l : cur_) max_letter = std::max(max_letter, l);
        go(max_letter);
    }

private:
    void go(Letter max_letter) {
        if (cur_.size() == k_) {
            visit_(LetterSpan(cur_));
            return;
        }
        const unsigned limit = canonical_ ? std::min<unsigned>(n_, max_letter + 1u) : n_;
        for (Letter x = 1; x <= limit; ++x) {
            if (!budget_.spend()) return;
            if (!insertion_avoids_unchecked(cur_, cur_.size(), x, q_)) continue;
            cur_.push_back(x);
            go(std::max(max_letter, x));
            cur_.pop_back();
            if (budget_.exhausted()) return;
        }
    }

    unsigned n_;
    std::size_t k_;
    const AvoidanceProperty& q_;
    bool canonical_;
    Budget& budget_;
    Visit& visit_;
    std::vector<Letter> cur_;
};

template <class Visit>
void dfs(unsigned n, std::size_t k, const AvoidanceProperty& q, bool canonical, Budget& budget, LetterSpan prefix,
         Visit& visit) {
    Dfs<Visit>(n, k, q, canonical, budget, visit).run(prefix);
}

/// Admissible prefixes of length min(depth, k) in lexicographic order.
std::vector<std::vector<Letter>> split_prefixes(unsigned n, std::size_t k, const AvoidanceProperty& q, bool canonical,
                                                unsigned depth, Budget& budget) {
    std::vector<std::vector<Letter>> out;
    auto collect = [&](LetterSpan w) { out.emplace_back(w.begin(), w.end()); };
    dfs(n, std::min<std::size_t>(depth, k), q, canonical, budget, {}, collect);
    return out;
}

/// Runs task(i) for i in [0, count) on up to `workers` threads.
template <class Task>
void run_tasks(std::size_t count, unsigned workers, Task task) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i);
        });
    }
}

void check_alphabet(unsigned n) {
    if (n == 0) throw std::invalid_argument("alphabet size must be at least 1");
}

bool has_avoiding_extension(LetterSpan w, unsigned n, const AvoidanceProperty& q) {
    if (q.is_square_free()) return has_square_free_extension_unchecked(w, n);
    for (std::size_t p = w.size() + 1; p-- > 0;) {
        for (Letter x = 1; x <= n; ++x) {
            if (insertion_avoids_unchecked(w, p, x, q)) return true;
        }
    }
    return false;
}

}  // namespace

bool for_each_avoiding(unsigned alphabet_size, std::size_t length, const AvoidanceProperty& q, LetterSpan prefix,
                       const std::function<void(LetterSpan)>& visit, bool canonical, std::uint64_t max_nodes) {
    check_alphabet(alphabet_size);
    if (prefix.size() > length) return true;
    for (Letter l : prefix) {
        if (l < 1 || l > alphabet_size) throw std::invalid_argument("prefix uses a letter outside the alphabet");
    }
    if (!avoids(prefix, q)) return true;
    Budget budget(max_nodes);
    auto call = [&](LetterSpan w) { visit(w); };
    dfs(alphabet_size, length, q, canonical, budget, prefix, call);
    return !budget.exhausted();
}

CountResult count_avoiding(unsigned alphabet_size, std::size_t length, const AvoidanceProperty& q,
                           const SearchOptions& options) {
    check_alphabet(alphabet_size);
    Budget budget(options.max_nodes);
    const auto prefixes = split_prefixes(alphabet_size, length, q, false, options.split_depth, budget);
    std::vector<std::uint64_t> counts(prefixes.size(), 0);
    run_tasks(prefixes.size(), options.workers, [&](std::size_t i) {
        std::uint64_t c = 0;
        auto visit = [&](LetterSpan) { ++c; };
        dfs(alphabet_size, length, q, false, budget, prefixes[i], visit);
        counts[i] = c;
    });
    CountResult r;
    for (std::uint64_t c : counts) r.count += c;
    r.status = budget.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::Complete;
    return r;
}

MaxPotentialRow max_potentials(unsigned alphabet_size, std::size_t length, const SearchOptions& options) {
    check_alphabet(alphabet_size);
    if (length == 0) throw std::invalid_argument("max_potentials needs k >= 1");
    const AvoidanceProperty q = AvoidanceProperty::square_free();
    const unsigned n = alphabet_size;

    struct Local {
        std::size_t ae = 0, AE = 0;
        std::vector<Letter> ae_w, AE_w;
        std::uint64_t words = 0;
        bool seen = false;
    };

    Budget budget(options.max_nodes);
    const auto prefixes = split_prefixes(n, length, q, options.canonical, options.split_depth, budget);
    std::vector<Local> locals(prefixes.size());
    run_tasks(prefixes.size(), options.workers, [&](std::size_t i) {
        Local& loc = locals[i];
        auto visit = [&](LetterSpan w) {
            const std::size_t ae = internal_potential_unchecked(w, n);
            std::size_t AE = ae;
            for (Letter x = 1; x <= n; ++x) {
                AE += insertion_is_square_free_unchecked(w, 0, x) ? 1 : 0;
                AE += insertion_is_square_free_unchecked(w, w.size(), x) ? 1 : 0;
            }
            if (!loc.seen || ae > loc.ae) {
                loc.ae = ae;
                loc.ae_w.assign(w.begin(), w.end());
            }
            if (!loc.seen || AE > loc.AE) {
                loc.AE = AE;
                loc.AE_w.assign(w.begin(), w.end());
            }
            loc.seen = true;
            ++loc.words;
        };
        dfs(n, length, q, options.canonical, budget, prefixes[i], visit);
    });

    MaxPotentialRow row;
    row.k = length;
    bool seen = false;
    for (const Local& loc : locals) {
        row.words += loc.words;
        if (!loc.seen) continue;
        if (!seen || loc.ae > row.ae_max) {
            row.ae_max = loc.ae;
            row.ae_witness = Word(loc.ae_w, n);
        }
        if (!seen || loc.AE > row.AE_max) {
            row.AE_max = loc.AE;
            row.AE_witness = Word(loc.AE_w, n);
        }
        seen = true;
    }
    if (!seen) {
        row.ae_witness = Word(n);
        row.AE_witness = Word(n);
    }
    row.status = budget.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::Complete;
    return row;
}

ExtremalResult find_extremal(unsigned alphabet_size, std::size_t length, const AvoidanceProperty& q,
                             const SearchOptions& options) {
    check_alphabet(alphabet_size);
    const unsigned n = alphabet_size;
    Budget budget(options.max_nodes);
    const auto prefixes = split_prefixes(n, length, q, false, options.split_depth, budget);
    std::vector<std::vector<Word>> found(prefixes.size());
    std::vector<std::uint64_t> words(prefixes.size(), 0);
    run_tasks(prefixes.size(), options.workers, [&](std::size_t i) {
        auto visit = [&](LetterSpan w) {
            ++words[i];
            if (!has_avoiding_extension(w, n, q)) found[i].emplace_back(std::vector<Letter>(w.begin(), w.end()), n);
        };
        dfs(n, length, q, false, budget, prefixes[i], visit);
    });

    ExtremalResult r;
    r.k = length;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        r.words += words[i];
        for (Word& w : found[i]) r.witnesses.push_back(std::move(w));
    }
    r.status = budget.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::Complete;
    return r;
}

ShortestExtremalResult shortest_extremal(unsigned alphabet_size, const AvoidanceProperty& q, std::size_t k_max,
                                         const SearchOptions& options) {
    ShortestExtremalResult r;
    for (std::size_t k = 0; k <= k_max; ++k) {
        ExtremalResult e = find_extremal(alphabet_size, k, q, options);
        if (e.status == SearchStatus::BudgetExhausted) {
            r.status = SearchStatus::BudgetExhausted;
            return r;
        }
        if (!e.witnesses.empty()) {
            r.k = k;
            r.witnesses = std::move(e.witnesses);
            return r;
        }
        r.none_below = k + 1;
    }
    return r;
}

HaltResult abelian_nonchalant_halt(unsigned alphabet_size, const Word& initial, std::size_t iteration_cap) {
    RunOptions run;
    run.max_iterations = iteration_cap;
    const NonchalantTrace trace = nonchalant_run(initial, alphabet_size, AvoidanceProperty::abelian_square_free(),
                                                 ExtensionMode::Full, run);
    HaltResult r;
    r.halted = trace.halted;
    r.iterations = trace.steps.size();
    r.halt_length = trace.final_word.size();
    r.final_word = trace.final_word;
    return r;
}

std::optional<std::size_t> five_sevenths_bound_from(const std::vector<MaxPotentialRow>& rows) {
    std::vector<const MaxPotentialRow*> sorted;
    for (const auto& r : rows) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->k < b->k; });
    std::optional<std::size_t> from;
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        const std::size_t k = (*it)->k;
        if (7 * (*it)->AE_max > 5 * k + 6) break;  // AE > ceil(5k/7)
        from = k;
    }
    return from;
}

}  // namespace sqfree
