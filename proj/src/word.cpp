#include "sqfree/word.hpp"

#include <algorithm>
#include <charconv>

namespace sqfree {

Word::Word(std::vector<Letter> letters, unsigned alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(checked_alphabet(alphabet_size)) {
    for (Letter l : letters_) {
        if (l < 1 || l > alphabet_size_) {
            throw std::invalid_argument("letter " + std::to_string(l) + " outside alphabet 1.." +
                                        std::to_string(alphabet_size_));
        }
    }
}

Word Word::inserted(std::size_t position, Letter letter) const {
    if (position > letters_.size()) throw std::out_of_range("insertion position past end of word");
    if (letter < 1 || letter > alphabet_size_) throw std::invalid_argument("inserted letter outside alphabet");
    Word out(alphabet_size_);
    out.letters_.reserve(letters_.size() + 1);
    out.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(position));
    out.letters_.push_back(letter);
    out.letters_.insert(out.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(position), letters_.end());
    return out;
}

Word Word::factor(std::size_t offset, std::size_t length) const {
    if (offset > letters_.size() || length > letters_.size() - offset) throw std::out_of_range("factor out of range");
    Word out(alphabet_size_);
    auto first = letters_.begin() + static_cast<std::ptrdiff_t>(offset);
    out.letters_.assign(first, first + static_cast<std::ptrdiff_t>(length));
    return out;
}

Word Word::reversed() const {
    Word out(*this);
    std::reverse(out.letters_.begin(), out.letters_.end());
    return out;
}

Word Word::over(unsigned alphabet_size) const { return Word(letters_, alphabet_size); }

Word& Word::append(Letter letter) {
    if (letter < 1 || letter > alphabet_size_) throw std::invalid_argument("appended letter outside alphabet");
    letters_.push_back(letter);
    return *this;
}

Word& Word::append(const Word& other) {
    for (Letter l : other.letters_) append(l);
    return *this;
}

Word operator+(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
}

Word parse_word(std::string_view text, unsigned alphabet_size) {
    std::vector<Letter> letters;
    const bool dotted = alphabet_size > 9 || text.find('.') != std::string_view::npos;
    if (!dotted) {
        letters.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument(std::string("malformed word: unexpected character '") + c + "'");
            letters.push_back(static_cast<Letter>(c - '0'));
        }
        return Word(std::move(letters), alphabet_size);
    }
    if (text.empty()) return Word(alphabet_size);
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = text.find('.', start);
        const std::string_view token = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value > 0xFFFF) {
            throw std::invalid_argument("malformed word: bad letter token '" + std::string(token) + "'");
        }
        letters.push_back(static_cast<Letter>(value));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return Word(std::move(letters), alphabet_size);
}

std::string format_word(LetterSpan letters, unsigned alphabet_size, WordFormat format) {
    if (format == WordFormat::Auto) format = alphabet_size <= 9 ? WordFormat::Digits : WordFormat::Dotted;
    std::string out;
    if (format == WordFormat::Digits) {
        out.reserve(letters.size());
        for (Letter l : letters) {
            if (l > 9) throw std::invalid_argument("letter too large for digit format");
            out.push_back(static_cast<char>('0' + l));
        }
        return out;
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out.push_back('.');
        out += std::to_string(letters[i]);
    }
    return out;
}

std::string format_word(const Word& w, WordFormat format) { return format_word(w.span(), w.alphabet_size(), format); }

std::vector<Word> parse_word_list(std::string_view text, unsigned alphabet_size) {
    std::vector<Word> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_word(text.substr(start, end - start), alphabet_size));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace sqfree
