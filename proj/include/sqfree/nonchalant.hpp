#pragma once

/**
 * @file nonchalant.hpp
 * @brief Greedy rightmost extension ("nonchalant" words).
 *
 * Each step replaces N = N'N'' by N'xN'' where the skipped suffix N'' is as
 * short as possible and, for that suffix, x is the smallest letter keeping
 * the word inside the avoidance property. back_step = |N''|; 0 is an
 * insertion at the very end.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sqfree/properties.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

enum class ExtensionMode {
    Full,          // back steps 0..|N|
    InternalOnly,  // back steps 1..|N|-1
};

struct StepResult {
    bool halted = false;  // no admissible extension: N is extremal for the mode
    std::size_t back_step = 0;
    Letter letter = 0;
    Word word_after;
};

struct StepRecord {
    std::size_t back_step = 0;
    Letter letter = 0;
    std::size_t length = 0;           // length after the step
    std::optional<std::size_t> ae;    // ae of the word after the step
    auto operator<=>(const StepRecord&) const = default;
};

struct NonchalantTrace {
    Word initial;
    unsigned alphabet_size = 0;
    ExtensionMode mode = ExtensionMode::Full;
    AvoidanceProperty property = AvoidanceProperty::square_free();
    std::vector<StepRecord> steps;
    bool halted = false;  // false: stopped at max_iterations
    Word final_word;
    std::optional<std::size_t> initial_ae;
};

struct RunOptions {
    std::size_t max_iterations = 0;
    bool record_ae = false;
    bool verify_each_step = false;  // re-check the whole word after every step
};

/// First admissible (back_step, letter) for w, or nullopt when none exists.
std::optional<Extension> nonchalant_choice(LetterSpan w, unsigned alphabet_size, const AvoidanceProperty& q,
                                           ExtensionMode mode);

StepResult nonchalant_step(const Word& w, unsigned alphabet_size, const AvoidanceProperty& q, ExtensionMode mode);

NonchalantTrace nonchalant_run(const Word& initial, unsigned alphabet_size, const AvoidanceProperty& q,
                               ExtensionMode mode, const RunOptions& options);

/// Count of internal extensions of w keeping it inside q; w assumed to avoid q.
std::size_t internal_count_unchecked(LetterSpan w, unsigned alphabet_size, const AvoidanceProperty& q);

std::map<std::size_t, std::size_t> backstep_histogram(const NonchalantTrace& trace);

/// (1-based iteration, back_step) of every step with back_step > 0.
std::vector<std::pair<std::size_t, std::size_t>> nonzero_backstep_events(const NonchalantTrace& trace);

enum class GapOrigin {
    BetweenEvents,  // differences of consecutive event indexes only
    FromStart,      // the first event also contributes its own index
};

std::map<std::size_t, std::size_t> gap_table(const NonchalantTrace& trace, std::size_t back_step,
                                             GapOrigin origin = GapOrigin::BetweenEvents);

/// ae(N_1), ae(N_2), ... ; requires a trace recorded with record_ae.
std::vector<std::size_t> potential_trace(const NonchalantTrace& trace);

/// (1-based index, value) wherever the sequence reaches a strictly new maximum.
std::vector<std::pair<std::size_t, std::size_t>> new_max_indexes(const std::vector<std::size_t>& seq);

}  // namespace sqfree
