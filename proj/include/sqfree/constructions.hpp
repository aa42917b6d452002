#pragma once

/**
 * @file constructions.hpp
 * @brief Explicit witness words: Zimin words and their potentials, the
 * quaternary word blocked at its last two positions, the Zimin-homomorphism
 * word blocked at its leftmost inner positions, the five-letter word blocked
 * at its rightmost inner positions, and the 35-letter word M.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

/// Index-addressed word that may be far too long to materialize.
class LazyWord {
public:
    using Accessor = std::function<Letter(std::uint64_t)>;

    LazyWord(std::uint64_t total_length, unsigned alphabet_size, Accessor accessor)
        : total_length_(total_length), alphabet_size_(alphabet_size), accessor_(std::move(accessor)) {}

    std::uint64_t total_length() const noexcept { return total_length_; }
    unsigned alphabet_size() const noexcept { return alphabet_size_; }

    /// 0-based. Throws std::out_of_range past the end.
    Letter letter_at(std::uint64_t index) const;

    /// Throws std::length_error above max_length.
    Word materialize(std::uint64_t max_length = 1u << 26) const;

private:
    std::uint64_t total_length_;
    unsigned alphabet_size_;
    Accessor accessor_;
};

// ---- Zimin words ----

inline constexpr unsigned kMaxMaterializedZimin = 25;

/// Z_1 = 1, Z_m = Z_{m-1} m Z_{m-1}, over the alphabet A_m.
Word zimin(unsigned m);

/// Symbol at 1-based position q of any Zimin word long enough: 2-adic valuation of q, plus one.
unsigned zimin_letter(std::uint64_t q);

LazyWord zimin_lazy(unsigned m);

/// AE(Z_m) over A_m from the recursion 2^m - 2m + 2 AE(Z_{m-1}).
std::uint64_t zimin_potential_closed(unsigned m);

/// Number of square-free insertions of the letter m into Z_m: (2^m - 2) - 2(m - 1).
std::uint64_t zimin_insertion_count(unsigned m);

/// Replaces variable i of w (1-based) by blocks[i-1].
Word substitute(const Word& w, const std::vector<Word>& blocks);

// ---- verification reports ----

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {});
    bool all_passed() const;
    const Check* find(const std::string& name) const;
};

// ---- quaternary word without extension at its two last positions ----

struct PropositionSParts {
    Word A, B, Y, Z;
    Word constructed;  // Z Y A 4 Y A
    Word displayed;    // the word as printed next to the recipe
};

PropositionSParts proposition_s_words();

/// (a) square-free, (b) S x squared for every x, (c) every insertion before the
/// last letter squared.
VerificationReport verify_proposition_s(const Word& s);

/// The two string identities used when inserting 4 or 3 before the last
/// letter, plus S4 = Z (YA4)(YA4) and A x squared for x in {1,2,3}.
VerificationReport verify_proposition_s_identities(const PropositionSParts& parts);

// ---- Zimin homomorphism word, blocked at its leftmost inner positions ----

struct Theorem5Word {
    unsigned n = 0;
    std::vector<Word> images;  // phi(1), ..., phi(N), N = (n-1)(n-2)
    Word word;                 // A phi(Z_N), A = 12...n
};

/// Feasible for 4 <= n <= 5.
Theorem5Word theorem5_word(unsigned n);

/// Images distinct, square-free, of length n+1; the word square-free; every
/// insertion at inner positions 1..t squared.
VerificationReport verify_theorem5(const Theorem5Word& w, unsigned t);

// ---- five-letter word blocked at its t inner rightmost positions ----

/// A shortest ternary extremal word.
inline constexpr std::string_view kExtremalTernary = "1231213231232123121323123";

struct Prop6Construction {
    Word A;                   // extremal ternary word, t = |A|
    Word S;                   // 4 A 5
    std::vector<Word> blocks; // A_1..A_{2t-2}, then A_{2t-1} = 4 A 4 5
    LazyWord P;               // blocks substituted into Z_{2t-1}, followed by S
};

/// Throws if A is not a square-free word over {1,2,3} of length >= 2.
Prop6Construction prop6_construction(const Word& A);

struct Prop6Budget {
    unsigned substitution_depth = 12;  // check substitutions of Z_m, m <= this
    unsigned symbolic_depth = 15;      // check suffix squares for x_i, i <= this
};

VerificationReport verify_prop6(const Prop6Construction& c, const Prop6Budget& budget = {});

// ---- the 35-letter word M ----

struct MWord {
    Word word;
    std::vector<std::size_t> marked_positions;
};

MWord m_word();

}  // namespace sqfree
