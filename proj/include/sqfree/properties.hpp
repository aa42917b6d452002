#pragma once

/**
 * @file properties.hpp
 * @brief Avoidance properties beyond squares: k-powers, overlaps, abelian
 * squares and general patterns, plus property-parameterized extensions.
 *
 * All properties here are closed under taking factors, so when w avoids Q any
 * violation in W'xW'' must cover the inserted letter. The *_through
 * predicates test exactly that.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/potential.hpp"
#include "sqfree/squares.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

/// A pattern p1...pr over variables (positive integers).
struct Pattern {
    std::vector<unsigned> symbols;

    static Pattern parse(std::string_view text);
    std::string to_string() const;
    bool operator==(const Pattern&) const = default;
};

enum class RealizationMode {
    Biconditional,  // Wi = Wj iff pi = pj
    Relaxed,        // pi = pj implies Wi = Wj
};

class AvoidanceProperty {
public:
    enum class Kind { SquareFree, KPowerFree, OverlapFree, AbelianSquareFree, PatternFree };

    static AvoidanceProperty square_free() { return AvoidanceProperty(Kind::SquareFree, 2); }
    static AvoidanceProperty k_power_free(unsigned k);
    static AvoidanceProperty overlap_free() { return AvoidanceProperty(Kind::OverlapFree, 0); }
    static AvoidanceProperty abelian_square_free() { return AvoidanceProperty(Kind::AbelianSquareFree, 0); }
    static AvoidanceProperty pattern_free(Pattern p, RealizationMode mode = RealizationMode::Biconditional);

    /// "square", "cube", "power:k", "overlap", "abelian", "pattern:121[:relaxed]".
    static AvoidanceProperty parse(std::string_view spec);

    Kind kind() const noexcept { return kind_; }
    unsigned power() const noexcept { return k_; }
    const Pattern& pattern() const noexcept { return pattern_; }
    RealizationMode realization() const noexcept { return mode_; }

    /// SquareFree and KPowerFree(2) are the same property.
    bool is_square_free() const noexcept {
        return kind_ == Kind::SquareFree || (kind_ == Kind::KPowerFree && k_ == 2);
    }

    std::string to_string() const;

    bool operator==(const AvoidanceProperty& o) const {
        if (is_square_free() || o.is_square_free()) return is_square_free() == o.is_square_free();
        return kind_ == o.kind_ && k_ == o.k_ && pattern_ == o.pattern_ && mode_ == o.mode_;
    }

private:
    AvoidanceProperty(Kind kind, unsigned k) : kind_(kind), k_(k) {}

    Kind kind_;
    unsigned k_ = 0;
    Pattern pattern_;
    RealizationMode mode_ = RealizationMode::Biconditional;
};

bool contains_k_power(LetterSpan w, unsigned k);
bool contains_overlap(LetterSpan w);
bool contains_abelian_square(LetterSpan w);
bool realizes_pattern(LetterSpan w, const Pattern& p, RealizationMode mode = RealizationMode::Biconditional);
bool contains_pattern(LetterSpan w, const Pattern& p, RealizationMode mode = RealizationMode::Biconditional);

inline bool contains_k_power(const Word& w, unsigned k) { return contains_k_power(w.span(), k); }
inline bool contains_overlap(const Word& w) { return contains_overlap(w.span()); }
inline bool contains_abelian_square(const Word& w) { return contains_abelian_square(w.span()); }
inline bool realizes_pattern(const Word& w, const Pattern& p, RealizationMode mode = RealizationMode::Biconditional) {
    return realizes_pattern(w.span(), p, mode);
}

bool avoids(LetterSpan w, const AvoidanceProperty& q);
inline bool avoids(const Word& w, const AvoidanceProperty& q) { return avoids(w.span(), q); }

/// True iff the whole of f is a violation (a square, a k-power, ...).
bool is_violation(LetterSpan f, const AvoidanceProperty& q);

/// True iff some violating factor of u covers position q.
bool violation_through(LetterSpan u, std::size_t pos, const AvoidanceProperty& q);

/// Violating factor with the smallest end, shortest among those.
std::optional<FactorRef> find_violation(LetterSpan w, const AvoidanceProperty& q);

/// Assumes w avoids q.
bool insertion_avoids_unchecked(LetterSpan w, std::size_t position, Letter x, const AvoidanceProperty& q);

/// Generalized potential over A_n. Throws if w does not avoid q or uses a
/// letter outside 1..n.
PotentialReport property_extensions(const Word& w, const AvoidanceProperty& q, unsigned alphabet_size);

}  // namespace sqfree
