#pragma once

/**
 * @file word.hpp
 * @brief Finite words over the ordered alphabet {1, ..., n}.
 *
 * Letters are positive integers. A Word carries its alphabet size so that
 * extension enumeration knows which letters may be inserted.
 *
 * Two text formats are understood:
 *   digits  "1213121"  (alphabets of size <= 9)
 *   dotted  "10.2.11"  (any alphabet; always used when n > 9)
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqfree {

using Letter = std::uint16_t;
using LetterSpan = std::span<const Letter>;

class Word {
public:
    Word() = default;
    explicit Word(unsigned alphabet_size) : alphabet_size_(checked_alphabet(alphabet_size)) {}
    Word(std::vector<Letter> letters, unsigned alphabet_size);
    Word(std::initializer_list<Letter> letters, unsigned alphabet_size)
        : Word(std::vector<Letter>(letters), alphabet_size) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    unsigned alphabet_size() const noexcept { return alphabet_size_; }

    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    LetterSpan span() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// W'xW'' where |W'| = position.
    Word inserted(std::size_t position, Letter letter) const;
    Word factor(std::size_t offset, std::size_t length) const;
    Word reversed() const;
    /// Same letters viewed over a (larger or equal) alphabet.
    Word over(unsigned alphabet_size) const;

    Word& append(Letter letter);
    Word& append(const Word& other);

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word& other) const {
        if (auto c = letters_ <=> other.letters_; c != 0) return c;
        return alphabet_size_ <=> other.alphabet_size_;
    }

private:
    static unsigned checked_alphabet(unsigned n) {
        if (n == 0) throw std::invalid_argument("alphabet size must be at least 1");
        return n;
    }

    std::vector<Letter> letters_;
    unsigned alphabet_size_ = 1;
};

Word operator+(Word lhs, const Word& rhs);

/// Single-letter extension W'xW''; position is |W'|, 0 = front, |W| = end.
struct Extension {
    std::size_t position = 0;
    Letter letter = 1;

    bool internal(std::size_t word_length) const noexcept {
        return position > 0 && position < word_length;
    }
    auto operator<=>(const Extension&) const = default;
};

enum class WordFormat { Auto, Digits, Dotted };

Word parse_word(std::string_view text, unsigned alphabet_size);
std::string format_word(LetterSpan letters, unsigned alphabet_size, WordFormat format = WordFormat::Auto);
std::string format_word(const Word& w, WordFormat format = WordFormat::Auto);

/// Parses a comma separated list of words ("1,2,13").
std::vector<Word> parse_word_list(std::string_view text, unsigned alphabet_size);

}  // namespace sqfree
