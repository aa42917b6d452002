#pragma once

#include <cstddef>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

/// Square-free potential of a word: AE counts all square-free single-letter
/// extensions, ae only the internal ones.
struct PotentialReport {
    std::size_t ae_value = 0;
    std::size_t AE_value = 0;
    std::vector<Extension> extensions;  // sorted by (position, letter)
    bool is_extremal = false;           // AE == 0
    bool is_almost_extremal = false;    // ae == 0
    bool is_maximal = false;            // AE == ae

    /// Distinct internal positions admitting at least one extension.
    std::vector<std::size_t> internal_positions(std::size_t word_length) const;

    static PotentialReport from_extensions(std::vector<Extension> extensions, std::size_t word_length);
};

/// All square-free extensions of w, sorted. Throws if w is not square-free.
std::vector<Extension> square_free_extensions(const Word& w);

PotentialReport potential(const Word& w);

/// ae(w) without building the extension list; w assumed square-free.
std::size_t internal_potential_unchecked(LetterSpan w, unsigned alphabet_size);

/// AE(w); w assumed square-free.
std::size_t full_potential_unchecked(LetterSpan w, unsigned alphabet_size);

/// True iff w has at least one square-free extension; w assumed square-free.
bool has_square_free_extension_unchecked(LetterSpan w, unsigned alphabet_size);

}  // namespace sqfree
