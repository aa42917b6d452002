#pragma once

/**
 * @file squares.hpp
 * @brief Square detection.
 *
 * A square is a nonempty factor XX. Everything here rests on one primitive:
 * deciding whether some square of u covers a given position q. For a square
 * of period p covering q, either q lies in the left copy (then u[q..] and
 * u[q+p..] agree for a while, and so do the letters just before them) or in
 * the right copy (same with q-p). The longest common extensions in both
 * directions decide each period in O(1), so the whole test is linear once the
 * extension arrays are known.
 */

#include <cstddef>
#include <optional>

#include "sqfree/word.hpp"

namespace sqfree {

/// Offset/length of a factor inside a word.
struct FactorRef {
    std::size_t offset = 0;
    std::size_t length = 0;
    auto operator<=>(const FactorRef&) const = default;
};

/// Z-array of s: z[i] = lcp(s, s[i..]), z[0] = |s|.
void z_array(LetterSpan s, std::vector<std::size_t>& z);

/// True iff some square of u contains position q. Linear in |u| (LCE arrays).
bool has_square_through(LetterSpan u, std::size_t q);

/// Same answer as has_square_through, computing extensions lazily per period
/// with early exit. Faster on short words and square-free neighbourhoods.
bool has_square_through_scan(LetterSpan u, std::size_t q);

/// True iff w·x ends with a square.
bool has_square_suffix_after(LetterSpan w, Letter x);

/// O(|u| log |u|) divide and conquer over the crossing test.
bool is_square_free(LetterSpan u);
inline bool is_square_free(const Word& w) { return is_square_free(w.span()); }

/// The square with the smallest end position (shortest among those), if any.
std::optional<FactorRef> find_square(LetterSpan u);

/// Assumes w square-free; decides whether W'xW'' (|W'| = position) is square-free.
bool insertion_is_square_free_unchecked(LetterSpan w, std::size_t position, Letter x);

/// Checked variant. Throws std::invalid_argument if w is not square-free or
/// the extension is out of range.
bool insertion_is_square_free(const Word& w, std::size_t position, Letter x);

}  // namespace sqfree
