#include "sqfree/nonchalant.hpp"

#include <stdexcept>

namespace sqfree {

std::optional<Extension> nonchalant_choice(LetterSpan w, unsigned alphabet_size, const AvoidanceProperty& q,
                                           ExtensionMode mode) {
    const std::size_t L = w.size();
    std::size_t first = 0, last = L;
    if (mode == ExtensionMode::InternalOnly) {
        if (L < 2) return std::nullopt;
        first = 1;
        last = L - 1;
    }
    for (std::size_t s = first; s <= last; ++s) {
        const std::size_t position = L - s;
        for (Letter x = 1; x <= alphabet_size; ++x) {
            if (insertion_avoids_unchecked(w, position, x, q)) return Extension{position, x};
        }
    }
    return std::nullopt;
}

namespace {

void check_start(const Word& w, unsigned alphabet_size, const AvoidanceProperty& q, ExtensionMode mode) {
    if (alphabet_size == 0) throw std::invalid_argument("alphabet size must be at least 1");
    for (Letter l : w) {
        if (l > alphabet_size) throw std::invalid_argument("word uses a letter outside the alphabet");
    }
    if (mode == ExtensionMode::InternalOnly && w.size() < 2) {
        throw std::invalid_argument("internal-only extension needs a word of length at least 2");
    }
    if (!avoids(w, q)) throw std::invalid_argument("word does not avoid " + q.to_string());
}

}  // namespace

StepResult nonchalant_step(const Word& w, unsigned alphabet_size, const AvoidanceProperty& q, ExtensionMode mode) {
    check_start(w, alphabet_size, q, mode);
    StepResult r;
    const auto choice = nonchalant_choice(w.span(), alphabet_size, q, mode);
    if (!choice) {
        r.halted = true;
        r.word_after = w.over(alphabet_size);
        return r;
    }
    r.back_step = w.size() - choice->position;
    r.letter = choice->letter;
    r.word_after = w.over(alphabet_size).inserted(choice->position, choice->letter);
    return r;
}

std::size_t internal_count_unchecked(LetterSpan w, unsigned alphabet_size, const AvoidanceProperty& q) {
    std::size_t count = 0;
    for (std::size_t p = 1; p < w.size(); ++p) {
        for (Letter x = 1; x <= alphabet_size; ++x) count += insertion_avoids_unchecked(w, p, x, q) ? 1 : 0;
    }
    return count;
}

NonchalantTrace nonchalant_run(const Word& initial, unsigned alphabet_size, const AvoidanceProperty& q,
                               ExtensionMode mode, const RunOptions& options) {
    check_start(initial, alphabet_size, q, mode);
    NonchalantTrace trace;
    trace.initial = initial.over(alphabet_size);
    trace.alphabet_size = alphabet_size;
    trace.mode = mode;
    trace.property = q;
    trace.steps.reserve(options.max_iterations);

    std::vector<Letter> word(initial.begin(), initial.end());
    word.reserve(word.size() + options.max_iterations);
    if (options.record_ae) trace.initial_ae = internal_count_unchecked(word, alphabet_size, q);

    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        const auto choice = nonchalant_choice(word, alphabet_size, q, mode);
        if (!choice) {
            trace.halted = true;
            break;
        }
        StepRecord rec;
        rec.back_step = word.size() - choice->position;
        rec.letter = choice->letter;
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(choice->position), choice->letter);
        rec.length = word.size();
        if (options.verify_each_step && !avoids(LetterSpan(word), q)) {
            throw std::logic_error("nonchalant step produced a word violating " + q.to_string());
        }
        if (options.record_ae) rec.ae = internal_count_unchecked(word, alphabet_size, q);
        trace.steps.push_back(rec);
    }
    trace.final_word = Word(std::move(word), alphabet_size);
    return trace;
}

std::map<std::size_t, std::size_t> backstep_histogram(const NonchalantTrace& trace) {
    std::map<std::size_t, std::size_t> h;
    for (const StepRecord& s : trace.steps) ++h[s.back_step];
    return h;
}

std::vector<std::pair<std::size_t, std::size_t>> nonzero_backstep_events(const NonchalantTrace& trace) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (trace.steps[i].back_step > 0) out.emplace_back(i + 1, trace.steps[i].back_step);
    }
    return out;
}

std::map<std::size_t, std::size_t> gap_table(const NonchalantTrace& trace, std::size_t back_step, GapOrigin origin) {
    std::map<std::size_t, std::size_t> gaps;
    std::optional<std::size_t> previous;
    if (origin == GapOrigin::FromStart) previous = 0;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (trace.steps[i].back_step != back_step) continue;
        if (previous) ++gaps[i + 1 - *previous];
        previous = i + 1;
    }
    return gaps;
}

std::vector<std::size_t> potential_trace(const NonchalantTrace& trace) {
    if (!trace.initial_ae) throw std::invalid_argument("trace was recorded without ae values");
    std::vector<std::size_t> out;
    out.reserve(trace.steps.size() + 1);
    out.push_back(*trace.initial_ae);
    for (const StepRecord& s : trace.steps) out.push_back(s.ae.value());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> new_max_indexes(const std::vector<std::size_t>& seq) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (out.empty() || seq[i] > out.back().second) out.emplace_back(i + 1, seq[i]);
    }
    return out;
}

}  // namespace sqfree
