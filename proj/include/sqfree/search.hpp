#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive depth-first enumeration of words avoiding a property,
 * and the searches built on it: maximal potentials, extremal words, the
 * shortest extremal length.
 *
 * Prefixes are extended one letter at a time and only violations ending at
 * the new last letter are tested. Work is split into the subtrees below all
 * admissible prefixes of a fixed depth; results are merged in prefix order so
 * output never depends on the worker count.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sqfree/properties.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

enum class SearchStatus { Complete, BudgetExhausted };

struct SearchOptions {
    unsigned workers = 1;
    unsigned split_depth = 8;      // subtree roots are the admissible prefixes of this length
    std::uint64_t max_nodes = 0;   // 0 = unlimited; counts visited prefixes
    bool canonical = true;         // max_potentials: letters introduced in increasing order only
};

/// Lexicographic generator of all length-k words over A_n avoiding q.
class AvoidingWords {
public:
    AvoidingWords(unsigned alphabet_size, std::size_t length, AvoidanceProperty q);

    std::optional<Word> next();

private:
    unsigned n_;
    std::size_t k_;
    AvoidanceProperty q_;
    std::vector<Letter> cur_;
    bool started_ = false;
    bool done_ = false;
};

/// Calls visit for every length-k word avoiding q that extends prefix, in lexicographic order.
/// Returns false if the node budget ran out.
bool for_each_avoiding(unsigned alphabet_size, std::size_t length, const AvoidanceProperty& q, LetterSpan prefix,
                       const std::function<void(LetterSpan)>& visit, bool canonical = false,
                       std::uint64_t max_nodes = 0);

struct CountResult {
    std::uint64_t count = 0;
    SearchStatus status = SearchStatus::Complete;
};

CountResult count_avoiding(unsigned alphabet_size, std::size_t length, const AvoidanceProperty& q,
                           const SearchOptions& options = {});

struct MaxPotentialRow {
    std::size_t k = 0;
    std::size_t ae_max = 0;
    std::size_t AE_max = 0;
    Word ae_witness;  // lexicographically smallest word attaining ae_max
    Word AE_witness;  // lexicographically smallest word attaining AE_max
    std::uint64_t words = 0;  // square-free words examined
    SearchStatus status = SearchStatus::Complete;
};

/// Exact maxima of ae and AE over square-free words of length k over A_n.
MaxPotentialRow max_potentials(unsigned alphabet_size, std::size_t length, const SearchOptions& options = {});

struct ExtremalResult {
    std::size_t k = 0;
    std::vector<Word> witnesses;  // lexicographic order
    std::uint64_t words = 0;
    SearchStatus status = SearchStatus::Complete;
};

/// All length-k words over A_n avoiding q with no extension avoiding q.
ExtremalResult find_extremal(unsigned alphabet_size, std::size_t length, const AvoidanceProperty& q,
                             const SearchOptions& options = {});

struct ShortestExtremalResult {
    std::optional<std::size_t> k;   // smallest length with an extremal word
    std::vector<Word> witnesses;
    std::size_t none_below = 0;     // every length < none_below was fully searched without success
    SearchStatus status = SearchStatus::Complete;
};

ShortestExtremalResult shortest_extremal(unsigned alphabet_size, const AvoidanceProperty& q, std::size_t k_max,
                                         const SearchOptions& options = {});

struct HaltResult {
    bool halted = false;
    std::size_t iterations = 0;
    std::size_t halt_length = 0;
    Word final_word;
};

/// Runs the nonchalant procedure for abelian-square-freeness until it halts or
/// the safety cap is reached.
HaltResult abelian_nonchalant_halt(unsigned alphabet_size, const Word& initial, std::size_t iteration_cap = 1'000'000);

/// Smallest k0 among the rows' lengths such that AE <= ceil(5k/7) for every row with k >= k0.
std::optional<std::size_t> five_sevenths_bound_from(const std::vector<MaxPotentialRow>& rows);

}  // namespace sqfree
